#include "msa/prime_field.hpp"

#include <string>

#include "msa/error.hpp"

namespace msa {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; std::uint64_t{d} * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t q) : q_(q) {
  if (!is_prime(q)) throw DomainError(std::to_string(q) + " is not prime");
}

Fq PrimeField::pow(Fq a, std::uint64_t e) const noexcept {
  Fq result = 1 % q_;
  Fq base = a % q_;
  while (e) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

Fq PrimeField::from_int(std::int64_t v) const noexcept {
  const std::int64_t r = v % static_cast<std::int64_t>(q_);
  return static_cast<Fq>(r < 0 ? r + q_ : r);
}

Fq PrimeField::reduce(const Scalar& v) const {
  auto residue = [&](const mpz_class& z) {
    mpz_class r = z % q_;
    if (r < 0) r += q_;
    return static_cast<Fq>(r.get_ui());
  };
  const Fq den = residue(v.get_den());
  if (den == 0) throw DomainError("denominator of " + v.get_str() + " vanishes mod " + std::to_string(q_));
  return mul(residue(v.get_num()), inv(den));
}

Fq PrimeField::determinant(FqMatrix m) const {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw DomainError("determinant of a non-square matrix");
  Fq det = 1 % q_;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m(pivot, k) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      m.swap_rows(k, pivot);
      det = neg(det);
    }
    det = mul(det, m(k, k));
    const Fq inv_pivot = inv(m(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      const Fq factor = mul(m(i, k), inv_pivot);
      for (std::size_t j = k; j < n; ++j) m(i, j) = sub(m(i, j), mul(factor, m(k, j)));
    }
  }
  return det;
}

std::size_t PrimeField::rank(FqMatrix m) const {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && m(pivot, c) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(r, pivot);
    const Fq inv_pivot = inv(m(r, c));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c) == 0) continue;
      const Fq factor = mul(m(i, c), inv_pivot);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = sub(m(i, j), mul(factor, m(r, j)));
    }
    ++r;
  }
  return r;
}

bool PrimeField::normalize(std::vector<Fq>& v) const {
  for (const Fq x : v) {
    if (x == 0) continue;
    const Fq scale = inv(x);
    for (auto& y : v) y = mul(y, scale);
    return true;
  }
  return false;
}

std::uint64_t projective_point_count(std::uint32_t q, std::int64_t d) {
  std::uint64_t total = 0;
  std::uint64_t power = 1;
  for (std::int64_t i = 0; i <= d; ++i) {
    total += power;
    power *= q;
  }
  return total;
}

}  // namespace msa
