#include <algorithm>
#include <numeric>

#include "msa/matrix.hpp"

namespace msa {

std::vector<std::size_t> row_reduce(ScalarMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && is_zero(m(p, col))) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(row, p);
    const Scalar inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero(m(r, col))) continue;
      const Scalar factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(ScalarMatrix m) { return row_reduce(m).size(); }

std::vector<std::vector<Scalar>> nullspace(ScalarMatrix m) {
  const auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(m.cols(), Scalar(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Scalar> characteristic_polynomial(const ScalarMatrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw DomainError("characteristic polynomial of a non-square matrix");
  std::vector<Scalar> coeffs(n + 1, Scalar(0));
  coeffs[n] = 1;
  ScalarMatrix mk(n, n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    ScalarMatrix next = m * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += coeffs[n - k + 1];
    mk = next;
    ScalarMatrix am = m * mk;
    Scalar trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
    coeffs[n - k] = -trace / Scalar(static_cast<long>(k));
  }
  return coeffs;
}

namespace {

std::vector<mpz_class> divisors(mpz_class value) {
  value = abs(value);
  std::vector<mpz_class> out;
  // Trial division; characteristic polynomials here have small coefficients.
  if (value == 0 || value > mpz_class("1000000000000")) return out;
  for (mpz_class d = 1; d * d <= value; ++d) {
    if (value % d == 0) {
      out.push_back(d);
      if (d * d != value) out.push_back(value / d);
    }
  }
  return out;
}

Scalar evaluate(const std::vector<Scalar>& coeffs, const Scalar& x) {
  Scalar acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace

std::vector<Scalar> rational_roots(const std::vector<Scalar>& coeffs) {
  std::vector<Scalar> c = coeffs;
  while (!c.empty() && is_zero(c.back())) c.pop_back();
  std::vector<Scalar> roots;
  if (c.size() <= 1) return roots;
  // Zero roots first, then deflate by x.
  if (is_zero(c.front())) roots.push_back(Scalar(0));
  while (!c.empty() && is_zero(c.front())) c.erase(c.begin());
  if (c.size() <= 1) return roots;
  mpz_class lcm = 1;
  for (const auto& v : c) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
  std::vector<mpz_class> ints;
  for (const auto& v : c) ints.push_back(mpz_class(v * lcm));
  for (const auto& p : divisors(ints.front())) {
    for (const auto& q : divisors(ints.back())) {
      for (int s : {1, -1}) {
        Scalar candidate(s * p, q);
        candidate.canonicalize();
        if (is_zero(evaluate(c, candidate)) &&
            std::find(roots.begin(), roots.end(), candidate) == roots.end()) {
          roots.push_back(candidate);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

bool rational_sqrt(const Scalar& value, Scalar& root) {
  if (sgn(value) < 0) return false;
  mpz_class n = value.get_num();
  mpz_class d = value.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  mpz_class rn = sqrt(n);
  mpz_class rd = sqrt(d);
  root = Scalar(rn, rd);
  root.canonicalize();
  return true;
}

}  // namespace msa
