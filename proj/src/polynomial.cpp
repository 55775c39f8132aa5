#include "msa/polynomial.hpp"

#include <numeric>

#include "msa/error.hpp"

namespace msa {

namespace {

std::uint32_t mod_reduce(const mpz_class& value, std::uint32_t q) {
  mpz_class r = value % q;
  if (r < 0) r += q;
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t mod_pow(std::uint64_t base, unsigned exp, std::uint32_t q) {
  std::uint64_t result = 1 % q;
  base %= q;
  while (exp) {
    if (exp & 1U) result = result * base % q;
    base = base * base % q;
    exp >>= 1U;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

Polynomial Polynomial::variable(std::size_t num_vars, std::size_t index) {
  if (index >= num_vars) throw DomainError("variable index out of range");
  Polynomial p(num_vars);
  Exponents e(num_vars, 0);
  e[index] = 1;
  p.add_term(e, 1);
  return p;
}

Polynomial Polynomial::constant(std::size_t num_vars, const Scalar& c) {
  Polynomial p(num_vars);
  p.add_term(Exponents(num_vars, 0), c);
  return p;
}

void Polynomial::add_term(const Exponents& exponents, const Scalar& coeff) {
  if (exponents.size() != num_vars_) throw DomainError("exponent vector has the wrong length");
  if (sgn(coeff) == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponents, coeff);
  if (!inserted) {
    it->second += coeff;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

std::optional<unsigned> Polynomial::homogeneous_degree() const {
  std::optional<unsigned> degree;
  for (const auto& [e, c] : terms_) {
    const unsigned d = std::accumulate(e.begin(), e.end(), 0U);
    if (degree && *degree != d) return std::nullopt;
    degree = d;
  }
  return degree;
}

std::vector<std::size_t> Polynomial::support() const {
  std::vector<bool> used(num_vars_, false);
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < num_vars_; ++i)
      if (e[i]) used[i] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < num_vars_; ++i)
    if (used[i]) out.push_back(i);
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.num_vars_ != num_vars_) throw DomainError("polynomials live in different rings");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.num_vars_ != num_vars_) throw DomainError("polynomials live in different rings");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.num_vars_ != b.num_vars_) throw DomainError("polynomials live in different rings");
  Polynomial out(a.num_vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Polynomial::Exponents e(ea);
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial operator*(const Scalar& c, Polynomial a) {
  if (sgn(c) == 0) return Polynomial(a.num_vars_);
  for (auto& [e, coeff] : a.terms_) coeff *= c;
  return a;
}

Scalar Polynomial::evaluate(std::span<const Scalar> point) const {
  if (point.size() != num_vars_) throw DomainError("point has the wrong number of coordinates");
  Scalar total = 0;
  for (const auto& [e, c] : terms_) {
    Scalar term = c;
    for (std::size_t i = 0; i < num_vars_ && sgn(term) != 0; ++i) {
      for (unsigned k = 0; k < e[i]; ++k) term *= point[i];
    }
    total += term;
  }
  return total;
}

std::uint32_t Polynomial::evaluate_mod(std::span<const std::uint32_t> point, std::uint32_t q) const {
  if (point.size() != num_vars_) throw DomainError("point has the wrong number of coordinates");
  std::uint64_t total = 0;
  for (const auto& [e, c] : terms_) {
    const std::uint32_t den = mod_reduce(c.get_den(), q);
    if (den == 0) throw DomainError("coefficient denominator vanishes mod " + std::to_string(q));
    std::uint64_t term = static_cast<std::uint64_t>(mod_reduce(c.get_num(), q)) * mod_pow(den, q - 2, q) % q;
    for (std::size_t i = 0; i < num_vars_ && term; ++i) {
      if (e[i]) term = term * mod_pow(point[i], e[i], q) % q;
    }
    total = (total + term) % q;
  }
  return static_cast<std::uint32_t>(total);
}

Polynomial Polynomial::substitute(std::size_t index, const Polynomial& value) const {
  if (index >= num_vars_ || value.num_vars_ != num_vars_) throw DomainError("bad substitution");
  Polynomial out(num_vars_);
  for (const auto& [e, c] : terms_) {
    Exponents rest(e);
    const unsigned power = rest[index];
    rest[index] = 0;
    Polynomial term(num_vars_);
    term.add_term(rest, c);
    for (unsigned k = 0; k < power; ++k) term = term * value;
    out += term;
  }
  return out;
}

bool Polynomial::proportional_to(const Polynomial& other) const {
  if (is_zero() || other.is_zero() || terms_.size() != other.terms_.size()) return false;
  const Scalar ratio = terms_.begin()->second / other.terms_.begin()->second;
  auto it = other.terms_.begin();
  for (const auto& [e, c] : terms_) {
    if (it->first != e || c != ratio * it->second) return false;
    ++it;
  }
  return true;
}

std::string Polynomial::to_string(std::span<const std::string> labels) const {
  if (labels.size() != num_vars_) throw DomainError("label count does not match the ring");
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const Scalar magnitude = abs(c);
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    std::string monomial;
    for (std::size_t i = 0; i < num_vars_; ++i) {
      if (!e[i]) continue;
      if (!monomial.empty()) monomial += "*";
      monomial += labels[i];
      if (e[i] > 1) monomial += "^" + std::to_string(e[i]);
    }
    if (monomial.empty()) {
      out += magnitude.get_str();
    } else {
      if (magnitude != 1) out += magnitude.get_str() + "*";
      out += monomial;
    }
  }
  return out;
}

}  // namespace msa
