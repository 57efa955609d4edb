#include "latc/rational.hpp"

#include <charconv>

#include "latc/errors.hpp"

namespace latc {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw InvalidArgument("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Integer floor(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Integer ceil(const Rational& x) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Integer round_half_up(const Rational& x) {
  return floor(x + Rational(1, 2));
}

Integer isqrt(const Integer& x) {
  if (x < 0) throw InvalidArgument("isqrt of a negative number");
  Integer s;
  mpz_sqrt(s.get_mpz_t(), x.get_mpz_t());
  return s;
}

Integer gcd(std::span<const Integer> v) {
  Integer g = 0;
  for (const Integer& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  return g;
}

Integer lcm_of_denominators(std::span<const Rational> v) {
  Integer l = 1;
  for (const Rational& x : v) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  }
  return l;
}

std::string to_string(const Rational& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string to_string(const Integer& x) { return x.get_str(); }

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    digits.remove_prefix(1);
  }
  if (digits.empty()) {
    throw ParseError("malformed rational '" + std::string(whole) + "'");
  }
  for (char c : digits) {
    if (c < '0' || c > '9') {
      throw ParseError("malformed rational '" + std::string(whole) + "'");
    }
  }
  std::string s(text.front() == '+' ? text.substr(1) : text);
  return Integer(s, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text, text));
  }
  Integer num = parse_integer(text.substr(0, slash), text);
  Integer den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return make_rational(num, den);
}

RatVector to_rational(std::span<const Integer> v) {
  return RatVector(v.begin(), v.end());
}

bool is_integral(std::span<const Rational> v) {
  for (const Rational& x : v) {
    if (x.get_den() != 1) return false;
  }
  return true;
}

IntVector to_integer(std::span<const Rational> v) {
  IntVector out;
  out.reserve(v.size());
  for (const Rational& x : v) {
    if (x.get_den() != 1) throw InvalidArgument("vector is not integral");
    out.push_back(x.get_num());
  }
  return out;
}

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
  if (a.size() != b.size()) throw InvalidArgument("dot: length mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(std::span<const Rational> a, std::span<const Integer> b) {
  if (a.size() != b.size()) throw InvalidArgument("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw InvalidArgument("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(std::span<const Integer> v) {
  for (const Integer& x : v) {
    if (x != 0) return false;
  }
  return true;
}

IntVector negated(std::span<const Integer> v) {
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

bool first_nonzero_positive(std::span<const Integer> v) {
  for (const Integer& x : v) {
    if (x != 0) return x > 0;
  }
  return false;
}

IntVector canonical_sign(std::span<const Integer> v) {
  for (const Integer& x : v) {
    if (x != 0) {
      return x > 0 ? IntVector(v.begin(), v.end()) : negated(v);
    }
  }
  return IntVector(v.begin(), v.end());
}

Integer max_abs(std::span<const Integer> v) {
  Integer m = 0;
  for (const Integer& x : v) {
    if (abs(x) > m) m = abs(x);
  }
  return m;
}

}  // namespace latc
