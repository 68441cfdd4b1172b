#include "cbirk/exact.hpp"

#include <utility>

namespace cbirk {

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

std::size_t rank(IntMatrix m) {
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    std::size_t p = r;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      for (std::size_t j = col + 1; j < m.cols(); ++j) {
        Integer t = m(r, col) * m(i, j) - m(i, col) * m(r, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = std::move(t);
      }
      m(i, col) = 0;
    }
    prev = m(r, col);
    ++r;
  }
  return r;
}

std::size_t rank(const RatMatrix& m) {
  IntMatrix scaled(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Rational t = m(i, j) * l;
      scaled(i, j) = t.get_num();
    }
  }
  return rank(std::move(scaled));
}

SolveResult solve(RatMatrix a, std::vector<Rational> b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: shape mismatch");
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t p = r;
    while (p < rows && a(p, col) == 0) ++p;
    if (p == rows) continue;
    a.swap_rows(p, r);
    std::swap(b[p], b[r]);
    Rational inv = 1 / a(r, col);
    for (std::size_t j = col; j < cols; ++j) a(r, j) *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, col) == 0) continue;
      Rational f = a(i, col);
      for (std::size_t j = col; j < cols; ++j) a(i, j) -= f * a(r, j);
      b[i] -= f * b[r];
    }
    pivot_col.push_back(col);
    ++r;
  }
  SolveResult out;
  for (std::size_t i = r; i < rows; ++i)
    if (b[i] != 0) return out;
  if (r < cols) {
    out.status = SolveStatus::underdetermined;
    return out;
  }
  out.status = SolveStatus::unique;
  out.x.assign(cols, Rational(0));
  for (std::size_t i = 0; i < r; ++i) out.x[pivot_col[i]] = b[i];
  return out;
}

RatMatrix inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::domain_error("inverse: not square");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && a(p, col) == 0) ++p;
    if (p == n) throw std::domain_error("inverse: singular matrix");
    a.swap_rows(p, col);
    inv.swap_rows(p, col);
    Rational s = 1 / a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) *= s;
      inv(col, j) *= s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col) == 0) continue;
      Rational f = a(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace cbirk
