#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "msa/matrix.hpp"
#include "msa/scalar.hpp"

namespace msa {

using Fq = std::uint32_t;
using FqMatrix = Matrix<Fq>;

bool is_prime(std::uint32_t n);

/// Arithmetic in F_q for a prime q small enough that products fit in 64 bits.
class PrimeField {
 public:
  /// Throws DomainError unless q is prime.
  explicit PrimeField(std::uint32_t q);

  std::uint32_t order() const noexcept { return q_; }
  Fq add(Fq a, Fq b) const noexcept { return static_cast<Fq>((std::uint64_t{a} + b) % q_); }
  Fq sub(Fq a, Fq b) const noexcept { return static_cast<Fq>((std::uint64_t{a} + q_ - b) % q_); }
  Fq mul(Fq a, Fq b) const noexcept { return static_cast<Fq>(std::uint64_t{a} * b % q_); }
  Fq neg(Fq a) const noexcept { return a == 0 ? 0 : q_ - a; }
  Fq pow(Fq a, std::uint64_t e) const noexcept;
  /// a must be nonzero.
  Fq inv(Fq a) const noexcept { return pow(a, q_ - 2); }

  Fq from_int(std::int64_t v) const noexcept;
  /// Throws DomainError when the denominator vanishes mod q.
  Fq reduce(const Scalar& v) const;

  /// Determinant by Gaussian elimination.
  Fq determinant(FqMatrix m) const;
  std::size_t rank(FqMatrix m) const;

  /// Scales so the first nonzero entry is 1; returns false for the zero vector.
  bool normalize(std::vector<Fq>& v) const;

 private:
  std::uint32_t q_;
};

/// Number of points of P^d(F_q), i.e. (q^{d+1} - 1) / (q - 1); 0 for d = -1.
std::uint64_t projective_point_count(std::uint32_t q, std::int64_t d);

}  // namespace msa
