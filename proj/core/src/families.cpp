#include "latc/families.hpp"

#include <algorithm>
#include <bit>

#include "latc/errors.hpp"

namespace latc {

long FamilySpec::modulus() const {
  return a.value_or(static_cast<long>((n + 1) / 2));
}

std::string family_name(Family f) {
  switch (f) {
    case Family::Zn: return "Zn";
    case Family::Dn: return "Dn";
    case Family::AnStar: return "AnStar";
    case Family::LambdaNA: return "LambdaNA";
    case Family::A2: return "A2";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  for (Family f : {Family::Zn, Family::Dn, Family::AnStar, Family::LambdaNA, Family::A2}) {
    if (family_name(f) == name) return f;
  }
  throw InvalidArgument("unknown lattice family '" + name + "'");
}

std::string describe(const FamilySpec& spec) {
  std::string s = family_name(spec.family) + " n=" + std::to_string(spec.n);
  if (spec.family == Family::LambdaNA) s += " a=" + std::to_string(spec.modulus());
  return s;
}

namespace {

Lattice integral_basis_lattice(const IntegerMatrix& columns) {
  return Lattice::from_basis(to_rational(columns));
}

}  // namespace

Lattice generate(const FamilySpec& spec) {
  const std::size_t n = spec.n;
  if (n == 0) throw InvalidArgument("rank must be positive");
  switch (spec.family) {
    case Family::Zn:
      return integral_basis_lattice(IntegerMatrix::identity(n));
    case Family::Dn: {
      if (n < 2) throw InvalidArgument("D_n needs n >= 2");
      IntegerMatrix b(n, n);
      b(0, 0) = 1;
      b(n - 1, 0) = 1;
      for (std::size_t i = 1; i < n; ++i) {
        b(i, i) = 1;
        b(i - 1, i) = -1;
      }
      return integral_basis_lattice(b);
    }
    case Family::AnStar: {
      RationalMatrix an(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        an(i, i) = 2;
        if (i + 1 < n) {
          an(i, i + 1) = -1;
          an(i + 1, i) = -1;
        }
      }
      return Lattice(inverse(an));
    }
    case Family::LambdaNA: {
      const long a = spec.modulus();
      if (a < 2) throw InvalidArgument("Λ_n(a) needs a >= 2");
      IntegerMatrix b(n, n);
      for (std::size_t i = 0; i < n; ++i) b(i, 0) = 1;
      for (std::size_t i = 1; i < n; ++i) b(i, i) = a;
      return integral_basis_lattice(b);
    }
    case Family::A2:
      if (n != 2) throw InvalidArgument("A2 has rank 2");
      return Lattice(RationalMatrix{{2, -1}, {-1, 2}});
  }
  throw InvalidArgument("unknown family");
}

std::vector<IntVector> lambda_n_relevant_closed_form(std::size_t n, long a) {
  if (n < 4) throw HypothesisError("closed form needs n >= 4");
  if (a != static_cast<long>((n + 1) / 2)) {
    throw HypothesisError("closed form needs a = ceil(n/2)");
  }
  if (n >= 63) throw ResourceLimitError("rank too large for subset enumeration");
  std::vector<IntVector> out;
  out.push_back(IntVector(n, Integer(1)));
  out.push_back(IntVector(n, Integer(-1)));
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t s = 1; s < full; ++s) {
    const long k = std::popcount(s);
    // l ranges over floor and ceil of a|S|/n; they coincide when n | a|S|.
    const long lo = (a * k) / static_cast<long>(n);
    const long hi = (a * k + static_cast<long>(n) - 1) / static_cast<long>(n);
    for (long l = lo; l <= hi; ++l) {
      IntVector v(n);
      for (std::size_t i = 0; i < n; ++i) {
        v[i] = (s >> i) & 1U ? a - l : -l;
      }
      out.push_back(std::move(v));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool dual_lambda_n_membership(std::size_t n, long a, std::span<const Rational> y) {
  if (y.size() != n) throw InvalidArgument("length mismatch");
  Rational sum = 0;
  for (const Rational& c : y) {
    Rational scaled = c * a;
    if (scaled.get_den() != 1) return false;
    sum += c;
  }
  return sum.get_den() == 1;
}

}  // namespace latc
