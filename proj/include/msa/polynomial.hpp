#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "msa/scalar.hpp"

namespace msa {

/// Sparse multivariate polynomial over the rationals in a fixed number of
/// variables. Terms are keyed by exponent vector, largest first in
/// lexicographic order, so printing follows the variable order.
class Polynomial {
 public:
  using Exponents = std::vector<unsigned>;
  using TermMap = std::map<Exponents, Scalar, std::greater<>>;

  explicit Polynomial(std::size_t num_vars = 0) : num_vars_(num_vars) {}

  static Polynomial variable(std::size_t num_vars, std::size_t index);
  static Polynomial constant(std::size_t num_vars, const Scalar& c);

  std::size_t num_vars() const noexcept { return num_vars_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const Exponents& exponents, const Scalar& coeff);

  /// Degree shared by every term; nullopt for zero or mixed degrees.
  std::optional<unsigned> homogeneous_degree() const;

  /// Indices of variables occurring with a positive exponent.
  std::vector<std::size_t> support() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Scalar& c, Polynomial a);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Scalar evaluate(std::span<const Scalar> point) const;

  /// Evaluation over F_q; coefficient denominators must be invertible mod q.
  std::uint32_t evaluate_mod(std::span<const std::uint32_t> point, std::uint32_t q) const;

  /// Replaces variable `index` by `value` everywhere.
  Polynomial substitute(std::size_t index, const Polynomial& value) const;

  /// True when this = c * other for some nonzero rational c.
  bool proportional_to(const Polynomial& other) const;

  /// Human-readable form such as "a1*b - a2*g" using the given labels.
  std::string to_string(std::span<const std::string> labels) const;

 private:
  std::size_t num_vars_;
  TermMap terms_;
};

}  // namespace msa
