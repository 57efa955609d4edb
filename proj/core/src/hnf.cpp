#include "latc/hnf.hpp"

#include <algorithm>

namespace latc {
namespace {

// Extended gcd: g = s*a + t*b with g >= 0.
void xgcd(const Integer& a, const Integer& b, Integer& g, Integer& s, Integer& t) {
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
}

// row_a <- s*row_a + t*row_b ; row_b <- -q*row_a + p*row_b
void combine_rows(IntegerMatrix& m, std::size_t a, std::size_t b, const Integer& s,
                  const Integer& t, const Integer& q, const Integer& p) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Integer ra = m(a, j);
    Integer rb = m(b, j);
    m(a, j) = s * ra + t * rb;
    m(b, j) = p * rb - q * ra;
  }
}

void add_row_multiple(IntegerMatrix& m, std::size_t target, std::size_t source,
                      const Integer& f) {
  if (f == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) m(target, j) -= f * m(source, j);
}

void negate_row(IntegerMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

// Classic upper row echelon Hermite form: pivots move right going down,
// entries above a pivot are reduced into [0, pivot). Zero rows end up last.
void upper_hnf(IntegerMatrix& a, IntegerMatrix& u) {
  const std::size_t m = a.rows();
  std::size_t r = 0;
  Integer g, s, t, p, q;
  for (std::size_t col = 0; col < a.cols() && r < m; ++col) {
    for (std::size_t i = r + 1; i < m; ++i) {
      if (a(i, col) == 0) continue;
      if (a(r, col) == 0) {
        a.swap_rows(r, i);
        u.swap_rows(r, i);
        continue;
      }
      xgcd(a(r, col), a(i, col), g, s, t);
      p = a(r, col) / g;
      q = a(i, col) / g;
      // [s t; -q p] has determinant s*p + t*q = 1.
      combine_rows(a, r, i, s, t, q, p);
      combine_rows(u, r, i, s, t, q, p);
    }
    if (a(r, col) == 0) continue;
    if (a(r, col) < 0) {
      negate_row(a, r);
      negate_row(u, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer f;
      mpz_fdiv_q(f.get_mpz_t(), a(i, col).get_mpz_t(), a(r, col).get_mpz_t());
      add_row_multiple(a, i, r, f);
      add_row_multiple(u, i, r, f);
    }
    ++r;
  }
}

IntegerMatrix reverse_columns(const IntegerMatrix& m) {
  IntegerMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, m.cols() - 1 - j) = m(i, j);
  return out;
}

IntegerMatrix reverse_rows(const IntegerMatrix& m) {
  IntegerMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(m.rows() - 1 - i, j) = m(i, j);
  return out;
}

}  // namespace

HermiteResult hnf(const IntegerMatrix& m) {
  // Reversing columns and rows maps the classic form onto the lower-left one.
  IntegerMatrix a = reverse_columns(m);
  IntegerMatrix u = IntegerMatrix::identity(m.rows());
  upper_hnf(a, u);
  return {reverse_rows(reverse_columns(a)), reverse_rows(u)};
}

IntegerMatrix integer_kernel(const IntegerMatrix& m) {
  const std::size_t n = m.cols();
  HermiteResult r = hnf(m.transpose());
  // Zero rows of H lead; the matching rows of U span the kernel.
  std::size_t zeros = 0;
  while (zeros < n && is_zero(r.h.row(zeros))) ++zeros;
  IntegerMatrix k(zeros, n);
  for (std::size_t i = 0; i < zeros; ++i)
    for (std::size_t j = 0; j < n; ++j) k(i, j) = r.u(i, j);
  if (zeros == 0) return k;
  return row_lattice_basis(k);
}

IntegerMatrix row_lattice_basis(const IntegerMatrix& m) {
  HermiteResult r = hnf(m);
  std::size_t zeros = 0;
  while (zeros < r.h.rows() && is_zero(r.h.row(zeros))) ++zeros;
  IntegerMatrix b(r.h.rows() - zeros, m.cols());
  for (std::size_t i = zeros; i < r.h.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) b(i - zeros, j) = r.h(i, j);
  return b;
}

bool is_primitive_system(const IntegerMatrix& m) {
  if (m.rows() > m.cols()) return false;
  // Saturated and independent iff the Hermite form of m^T carries a unit
  // block: the gcd of the maximal minors of m is then 1.
  HermiteResult r = hnf(m.transpose());
  const std::size_t n = m.cols();
  const std::size_t k = m.rows();
  // H = U m^T; the last k rows of H hold the pivots.
  for (std::size_t i = n - k; i < n; ++i) {
    const auto row = r.h.row(i);
    if (is_zero(row)) return false;
    std::size_t last = row.size();
    while (row[last - 1] == 0) --last;
    if (row[last - 1] != 1) return false;
  }
  return true;
}

IntVector bezout_vector(std::span<const Integer> v) {
  IntegerMatrix col(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) col(i, 0) = v[i];
  HermiteResult r = hnf(col);
  // The single nonzero row of H is the last one and equals gcd(v).
  return r.u.row_vector(v.size() - 1);
}

}  // namespace latc
