#include "latc/matrix.hpp"

namespace latc {

RationalMatrix to_rational(const IntegerMatrix& m) {
  RationalMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
  return r;
}

bool is_integral(const RationalMatrix& m) {
  for (const Rational& x : m.entries()) {
    if (x.get_den() != 1) return false;
  }
  return true;
}

IntegerMatrix to_integer(const RationalMatrix& m) {
  IntegerMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).get_den() != 1) throw InvalidArgument("matrix is not integral");
      r(i, j) = m(i, j).get_num();
    }
  return r;
}

RatVector multiply(const RationalMatrix& a, std::span<const Integer> x) {
  if (a.cols() != x.size()) throw InvalidArgument("multiply: shape mismatch");
  RatVector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Rational acc = 0;
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (x[k] != 0) acc += a(i, k) * x[k];
    }
    y[i] = acc;
  }
  return y;
}

RatVector multiply(const RationalMatrix& a, std::span<const Rational> x) {
  if (a.cols() != x.size()) throw InvalidArgument("multiply: shape mismatch");
  RatVector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Rational acc = 0;
    for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * x[k];
    y[i] = acc;
  }
  return y;
}

IntVector multiply(const IntegerMatrix& a, std::span<const Integer> x) {
  if (a.cols() != x.size()) throw InvalidArgument("multiply: shape mismatch");
  IntVector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Integer acc = 0;
    for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * x[k];
    y[i] = acc;
  }
  return y;
}

IntVector left_multiply(std::span<const Integer> x, const IntegerMatrix& a) {
  if (a.rows() != x.size()) throw InvalidArgument("left_multiply: shape mismatch");
  IntVector y(a.cols(), Integer(0));
  for (std::size_t k = 0; k < a.rows(); ++k) {
    if (x[k] == 0) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) y[j] += x[k] * a(k, j);
  }
  return y;
}

Rational bilinear(const RationalMatrix& g, std::span<const Integer> x,
                  std::span<const Integer> y) {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (y[j] != 0) row += g(i, j) * y[j];
    }
    s += row * x[i];
  }
  return s;
}

Rational bilinear(const RationalMatrix& g, std::span<const Rational> x,
                  std::span<const Rational> y) {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < y.size(); ++j) row += g(i, j) * y[j];
    s += row * x[i];
  }
  return s;
}

Rational det(const RationalMatrix& m) {
  if (!m.is_square()) throw InvalidArgument("det of a non-square matrix");
  RationalMatrix a = m;
  const std::size_t n = a.rows();
  Rational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      a.swap_rows(p, c);
      d = -d;
    }
    d *= a(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a(r, c) == 0) continue;
      Rational f = a(r, c) / a(c, c);
      for (std::size_t k = c; k < n; ++k) a(r, k) -= f * a(c, k);
    }
  }
  return d;
}

Integer det(const IntegerMatrix& m) {
  if (!m.is_square()) throw InvalidArgument("det of a non-square matrix");
  IntegerMatrix a = m;
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(p, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = t;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::size_t rank(const RationalMatrix& m) {
  RationalMatrix a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(p, r);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      Rational f = a(i, c) / a(r, c);
      for (std::size_t k = c; k < a.cols(); ++k) a(i, k) -= f * a(r, k);
    }
    ++r;
  }
  return r;
}

std::size_t rank(const IntegerMatrix& m) { return rank(to_rational(m)); }

RationalMatrix inverse(const RationalMatrix& m) {
  if (!m.is_square()) throw InvalidArgument("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix a = m;
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) throw SingularMatrixError("matrix is singular");
    a.swap_rows(p, c);
    inv.swap_rows(p, c);
    Rational piv = a(c, c);
    for (std::size_t k = 0; k < n; ++k) {
      a(c, k) /= piv;
      inv(c, k) /= piv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a(r, c) == 0) continue;
      Rational f = a(r, c);
      for (std::size_t k = 0; k < n; ++k) {
        a(r, k) -= f * a(c, k);
        inv(r, k) -= f * inv(c, k);
      }
    }
  }
  return inv;
}

IntegerMatrix unimodular_inverse(const IntegerMatrix& m) {
  if (!m.is_square()) throw NonUnimodularError("matrix is not square");
  Integer d = det(m);
  if (abs(d) != 1) throw NonUnimodularError("matrix is not unimodular");
  return to_integer(inverse(to_rational(m)));
}

RatVector solve(const RationalMatrix& m, std::span<const Rational> b) {
  if (!m.is_square() || m.rows() != b.size()) {
    throw InvalidArgument("solve: shape mismatch");
  }
  const std::size_t n = m.rows();
  RationalMatrix a = m;
  RatVector x(b.begin(), b.end());
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) throw SingularMatrixError("matrix is singular");
    if (p != c) {
      a.swap_rows(p, c);
      std::swap(x[p], x[c]);
    }
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a(r, c) == 0) continue;
      Rational f = a(r, c) / a(c, c);
      for (std::size_t k = c; k < n; ++k) a(r, k) -= f * a(c, k);
      x[r] -= f * x[c];
    }
  }
  for (std::size_t i = n; i-- > 0;) {
    Rational s = x[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= a(i, k) * x[k];
    x[i] = s / a(i, i);
  }
  return x;
}

bool is_symmetric(const RationalMatrix& m) {
  if (!m.is_square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != m(j, i)) return false;
  return true;
}

}  // namespace latc
