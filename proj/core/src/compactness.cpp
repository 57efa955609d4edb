#include "latc/compactness.hpp"

#include <algorithm>
#include <set>

#include "latc/families.hpp"
#include "latc/hnf.hpp"

namespace latc {

std::string kind_name(RelevantKind k) { return k == RelevantKind::Strict ? "strict" : "weak"; }

RelevantKind parse_kind(const std::string& s) {
  if (s == "strict") return RelevantKind::Strict;
  if (s == "weak") return RelevantKind::Weak;
  throw InvalidArgument("unknown kind '" + s + "' (expected strict or weak)");
}

const std::vector<LatticeVector>& relevant_set(const VoronoiData& vd, RelevantKind k) {
  return k == RelevantKind::Strict ? vd.strict : vd.weak;
}

WidthResult coefficient_width(const Lattice& l, const IntegerMatrix& transform,
                              const std::vector<LatticeVector>& targets) {
  if (transform.rows() != l.rank() || !transform.is_square()) {
    throw InvalidArgument("transform must be n x n");
  }
  const IntegerMatrix inv = unimodular_inverse(transform);
  WidthResult out;
  Integer widest = 0;
  out.witnesses.reserve(targets.size());
  for (const LatticeVector& t : targets) {
    IntVector w = multiply(inv, t);
    Integer m = max_abs(w);
    if (m > widest) widest = m;
    out.witnesses.push_back(std::move(w));
  }
  out.width = widest.get_si();
  return out;
}

CompactnessCertificate make_certificate(const Lattice& l, const IntegerMatrix& transform,
                                        RelevantKind kind,
                                        const std::vector<LatticeVector>& targets) {
  WidthResult w = coefficient_width(l, transform, targets);
  return {transform, w.width, kind, targets, std::move(w.witnesses)};
}

void verify_certificate(const Lattice& l, const CompactnessCertificate& cert,
                        const std::vector<LatticeVector>* expected_targets) {
  const std::size_t n = l.rank();
  if (cert.transform.rows() != n || cert.transform.cols() != n) {
    throw CertificateUnsoundError("transform has the wrong shape");
  }
  const Integer d = det(cert.transform);
  if (d != 1 && d != -1) throw CertificateUnsoundError("transform is not unimodular");
  if (cert.witnesses.size() != cert.targets.size()) {
    throw CertificateUnsoundError("witness count differs from target count");
  }
  Integer widest = 0;
  for (std::size_t i = 0; i < cert.targets.size(); ++i) {
    if (cert.witnesses[i].size() != n || cert.targets[i].size() != n) {
      throw CertificateUnsoundError("witness has the wrong length");
    }
    if (multiply(cert.transform, cert.witnesses[i]) != cert.targets[i]) {
      throw CertificateUnsoundError("witness " + std::to_string(i) +
                                    " does not rebuild its target");
    }
    Integer m = max_abs(cert.witnesses[i]);
    if (m > widest) widest = m;
  }
  if (widest != cert.width) {
    throw CertificateUnsoundError("recorded width " + std::to_string(cert.width) +
                                  " but witnesses need " + widest.get_str());
  }
  if (expected_targets) {
    std::set<LatticeVector> a(cert.targets.begin(), cert.targets.end());
    std::set<LatticeVector> b(expected_targets->begin(), expected_targets->end());
    if (a != b) throw CertificateUnsoundError("targets are not the relevant vectors");
  }
}

Integer gauge_over(const std::vector<LatticeVector>& targets, std::span<const Integer> y) {
  Integer g = 0;
  Integer p;
  for (const LatticeVector& v : targets) {
    p = dot(y, v);
    if (p < 0) p = -p;
    if (p > g) g = p;
  }
  return g;
}

namespace {

// Gauge into g unless it exceeds cap, in which case false.
bool gauge_at_most(const std::vector<LatticeVector>& targets, std::span<const Integer> y,
                   const Integer& cap, Integer& g) {
  g = 0;
  Integer p;
  for (const LatticeVector& v : targets) {
    p = dot(y, v);
    if (p < 0) p = -p;
    if (p > cap) return false;
    if (p > g) g = p;
  }
  return true;
}

// n independent targets, shortest first in the plain coefficient norm; the
// pairings y -> W y give a box that holds the whole gauge body.
IntegerMatrix independent_targets(std::size_t n, const std::vector<LatticeVector>& targets) {
  std::vector<const LatticeVector*> order;
  for (const LatticeVector& v : targets) {
    if (first_nonzero_positive(v)) order.push_back(&v);
  }
  auto sq = [](const LatticeVector& v) {
    Integer s = 0;
    for (const Integer& x : v) s += x * x;
    return s;
  };
  std::stable_sort(order.begin(), order.end(), [&](const LatticeVector* a, const LatticeVector* b) {
    Integer na = sq(*a);
    Integer nb = sq(*b);
    if (na != nb) return na < nb;
    return *a < *b;
  });
  std::vector<IntVector> rows;
  for (const LatticeVector* v : order) {
    rows.push_back(*v);
    if (rank(IntegerMatrix::from_rows(rows, n)) < rows.size()) rows.pop_back();
    if (rows.size() == n) break;
  }
  if (rows.size() < n) throw InvalidArgument("targets do not span the lattice");
  return IntegerMatrix::from_rows(rows, n);
}

}  // namespace

std::vector<GaugePoint> dual_points_with_gauge_at_most(std::size_t n,
                                                       const std::vector<LatticeVector>& targets,
                                                       long c, const EnumerationLimits& limits) {
  const IntegerMatrix w = independent_targets(n, targets);
  // |W y|_inf <= c implies |W y|^2 <= n c^2: a ball for the Gram W^T W.
  const Lattice box(to_rational(w.transpose() * w));
  Rational bound(Integer(static_cast<long>(n)) * Integer(c) * Integer(c));
  RatVector origin(n, Rational(0));
  const Integer cap(c);
  std::vector<GaugePoint> out;
  enumerate_ball(
      box, origin, bound,
      [&](const LatticeVector& y, const Rational&) {
        if (!first_nonzero_positive(y)) return;
        IntVector p = multiply(w, y);
        if (max_abs(p) > cap) return;
        Integer g;
        if (gauge_at_most(targets, y, cap, g)) out.push_back({std::move(g), y});
      },
      limits);
  std::sort(out.begin(), out.end(), [](const GaugePoint& a, const GaugePoint& b) {
    if (a.gauge != b.gauge) return a.gauge < b.gauge;
    return a.y < b.y;
  });
  return out;
}

namespace {

// Depth-first search for n candidates forming a basis of Z^n. `v` is a
// unimodular column transform with chosen * v = [lower triangular | 0], so a
// new row extends the prefix to a primitive system iff the gcd of its tail
// beyond column k is 1.
class BasisSearch {
 public:
  BasisSearch(std::size_t n, const std::vector<GaugePoint>& cand, std::uint64_t cap)
      : n_(n), cand_(cand), cap_(cap) {}

  bool run() { return descend(0, 0, IntegerMatrix::identity(n_)); }
  const std::vector<std::size_t>& chosen() const { return chosen_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  bool descend(std::size_t k, std::size_t start, const IntegerMatrix& v) {
    if (k == n_) return true;
    for (std::size_t i = start; i + (n_ - k) <= cand_.size(); ++i) {
      if (++nodes_ > cap_) throw ResourceLimitError("basis search exceeded the candidate cap");
      IntVector row = left_multiply(cand_[i].y, v);
      std::span<const Integer> tail(row.data() + k, n_ - k);
      if (gcd(tail) != 1) continue;
      IntegerMatrix next = v;
      reduce_tail(next, row, k);
      chosen_.push_back(i);
      if (descend(k + 1, i + 1, next)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  // Column operations clearing row[k+1..] into row[k].
  void reduce_tail(IntegerMatrix& v, IntVector& row, std::size_t k) const {
    Integer g, s, t, a, b;
    for (std::size_t j = k + 1; j < n_; ++j) {
      if (row[j] == 0) continue;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), row[k].get_mpz_t(),
                 row[j].get_mpz_t());
      a = row[k] / g;
      b = row[j] / g;
      for (std::size_t r = 0; r < n_; ++r) {
        Integer ck = v(r, k);
        Integer cj = v(r, j);
        v(r, k) = s * ck + t * cj;
        v(r, j) = a * cj - b * ck;
      }
      row[k] = g;
      row[j] = 0;
    }
  }

  std::size_t n_;
  const std::vector<GaugePoint>& cand_;
  std::uint64_t cap_;
  std::uint64_t nodes_ = 0;
  std::vector<std::size_t> chosen_;
};

bool generates_everything(std::size_t n, const std::vector<GaugePoint>& cand) {
  if (cand.size() < n) return false;
  std::vector<IntVector> rows;
  rows.reserve(cand.size());
  for (const GaugePoint& p : cand) rows.push_back(p.y);
  IntegerMatrix h = row_lattice_basis(IntegerMatrix::from_rows(rows, n));
  return h == IntegerMatrix::identity(n);
}

}  // namespace

CompactnessResult search_compact_basis(const Lattice& l, const std::vector<LatticeVector>& targets,
                                       RelevantKind kind, long c_max,
                                       const EnumerationLimits& limits) {
  const std::size_t n = l.rank();
  CompactnessResult result;
  result.c_max = c_max;
  for (long c = 1; c <= c_max; ++c) {
    std::vector<GaugePoint> cand = dual_points_with_gauge_at_most(n, targets, c, limits);
    if (!generates_everything(n, cand)) continue;
    BasisSearch search(n, cand, limits.candidate_cap);
    const bool ok = search.run();
    result.search_nodes += search.nodes();
    if (!ok) continue;
    std::vector<IntVector> rows;
    for (std::size_t i : search.chosen()) rows.push_back(cand[i].y);
    IntegerMatrix transform = unimodular_inverse(IntegerMatrix::from_rows(rows, n));
    result.certificate = make_certificate(l, transform, kind, targets);
    if (result.certificate->width > c) {
      throw CertificateUnsoundError("basis search produced a wider basis than requested");
    }
    return result;
  }
  return result;
}

CompactnessResult compute_c(const Lattice& l, const VoronoiData& vd, RelevantKind kind,
                            long c_max, const EnumerationLimits& limits) {
  return search_compact_basis(l, relevant_set(vd, kind), kind, c_max, limits);
}

RelaxedCertificate compute_cbar(const Lattice& l, const VoronoiData& vd, long c_max,
                                const EnumerationLimits& limits) {
  const std::size_t n = l.rank();
  const std::vector<LatticeVector>& f = vd.strict;
  // Every dual vector of gauge at most c is enumerated exactly, so the first
  // c with n independent ones among them is ceil(lambda_n).
  for (long c = 1; c <= c_max; ++c) {
    std::vector<GaugePoint> pts = dual_points_with_gauge_at_most(n, f, c, limits);
    std::vector<LatticeVector> ys;
    ys.reserve(pts.size());
    for (const GaugePoint& p : pts) ys.push_back(p.y);
    std::vector<std::size_t> picked = greedy_independent(ys, n);
    if (picked.size() < n) continue;
    RelaxedCertificate out;
    for (std::size_t idx : picked) {
      out.gauges.push_back(Rational(pts[idx].gauge));
      out.generators.push_back(pts[idx].y);
    }
    out.lambda_n = out.gauges.back();
    out.width = ceil(out.lambda_n).get_si();
    return out;
  }
  throw BoundTooSmallError("relaxed constant exceeds " + std::to_string(c_max));
}

LambdaNCertificate cbar3_certificate_lambda_n(std::size_t n, const EnumerationLimits&) {
  if (n < 4) throw HypothesisError("the width-3 certificate needs n >= 4");
  const long a = (static_cast<long>(n) + 1) / 2;
  FamilySpec spec{Family::LambdaNA, n, a};
  Lattice l = generate(spec);
  const RationalMatrix& basis = *l.ambient_basis();
  const Rational inv_a(1, a);

  std::vector<RatVector> ys;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    RatVector y(n, Rational(0));
    y[i] = inv_a;
    y[n - 1] = -inv_a;
    ys.push_back(std::move(y));
  }
  RatVector last(n, inv_a);
  if (n % 2 == 1) last[n - 1] = 2 * inv_a;
  ys.push_back(std::move(last));

  std::vector<IntVector> f_amb = lambda_n_relevant_closed_form(n, a);
  LambdaNCertificate out{l, ys, {}};
  Rational widest = 0;
  for (const RatVector& y : ys) {
    if (!dual_lambda_n_membership(n, a, y)) {
      throw CertificateUnsoundError("certificate vector is not in the dual lattice");
    }
    // Dual coordinates are the pairings with the basis.
    RatVector eta(n);
    for (std::size_t j = 0; j < n; ++j) {
      Rational s = 0;
      for (std::size_t i = 0; i < n; ++i) s += basis(i, j) * y[i];
      eta[j] = s;
    }
    Rational g = 0;
    for (const IntVector& v : f_amb) {
      Rational q = dot(y, v);
      if (q < 0) q = -q;
      if (q > g) g = q;
    }
    out.certificate.generators.push_back(to_integer(eta));
    out.certificate.gauges.push_back(g);
    if (g > widest) widest = g;
  }
  if (rank(IntegerMatrix::from_rows(out.certificate.generators, n)) != n) {
    throw CertificateUnsoundError("certificate vectors are dependent");
  }
  out.certificate.lambda_n = widest;
  out.certificate.width = ceil(widest).get_si();
  if (out.certificate.width > 3) {
    throw CertificateUnsoundError("certificate gauge exceeds 3");
  }
  return out;
}

namespace {

// Coefficients a with sum a_i rows_i = x; throws DependenceError when x is off
// the span.
RatVector coordinates_in(const std::vector<IntVector>& rows, std::span<const Rational> x) {
  const std::size_t k = rows.size();
  const std::size_t n = x.size();
  RationalMatrix r = to_rational(IntegerMatrix::from_rows(rows, n));
  RationalMatrix rrt = r * r.transpose();
  RatVector rx = r * x;
  RatVector a = solve(rrt, rx);
  for (std::size_t j = 0; j < n; ++j) {
    Rational s = 0;
    for (std::size_t i = 0; i < k; ++i) s += a[i] * r(i, j);
    if (s != x[j]) throw DependenceError("vector is outside the span");
  }
  return a;
}

}  // namespace

LiftedBasis lift_independent_to_basis(const Lattice& lattice, const std::vector<IntVector>& v) {
  const std::size_t n = lattice.rank();
  if (v.size() != n) throw InvalidArgument("lift needs exactly n vectors");
  for (const IntVector& x : v) {
    if (x.size() != n) throw InvalidArgument("lift: length mismatch");
  }
  if (rank(IntegerMatrix::from_rows(v, n)) != n) throw DependenceError("input vectors are dependent");

  LiftedBasis out;
  {
    Integer g = gcd(v[0]);
    IntVector u(n);
    for (std::size_t i = 0; i < n; ++i) u[i] = v[0][i] / g;
    out.basis.push_back(std::move(u));
  }
  for (std::size_t k = 1; k < n; ++k) {
    std::vector<IntVector> prefix(v.begin(), v.begin() + k + 1);
    // Saturation of span{v_0..v_k} in Z^n, as rows.
    IntegerMatrix sat = k + 1 == n
                            ? IntegerMatrix::identity(n)
                            : integer_kernel(integer_kernel(IntegerMatrix::from_rows(prefix, n)));
    std::vector<IntVector> sat_rows;
    for (std::size_t i = 0; i < sat.rows(); ++i) sat_rows.push_back(sat.row_vector(i));

    // The previous u's in saturated coordinates, and the functional y on the
    // saturation vanishing on them.
    std::vector<IntVector> u_sat;
    for (const IntVector& u : out.basis) u_sat.push_back(to_integer(coordinates_in(sat_rows, to_rational(u))));
    IntegerMatrix y_row = integer_kernel(IntegerMatrix::from_rows(u_sat, k + 1));
    IntVector y = y_row.row_vector(0);
    IntVector vk_sat = to_integer(coordinates_in(sat_rows, to_rational(v[k])));
    Integer yv = dot(y, vk_sat);
    if (yv == 0) throw DependenceError("input vectors are dependent");

    IntVector uk;
    if (yv == 1 || yv == -1) {
      uk = v[k];
    } else {
      // x0 with y . x0 = 1, then round t - x0 = sum a_i v_i, t = v_k / (y . v_k).
      IntVector x0_sat = bezout_vector(y);
      IntVector x0 = left_multiply(x0_sat, sat);
      RatVector diff(n);
      for (std::size_t j = 0; j < n; ++j) diff[j] = Rational(v[k][j]) / yv - x0[j];
      std::vector<IntVector> earlier(v.begin(), v.begin() + k);
      RatVector a = coordinates_in(earlier, diff);
      uk = x0;
      for (std::size_t i = 0; i < k; ++i) {
        Integer m = round_half_up(a[i]);
        for (std::size_t j = 0; j < n; ++j) uk[j] += m * v[i][j];
      }
    }
    out.basis.push_back(std::move(uk));
  }

  // u_k has a unique expansion over the independent v_0..v_k, so membership
  // in the dilated crosspolytope is a sum of absolute coefficients.
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<IntVector> prefix(v.begin(), v.begin() + k + 1);
    RatVector a = coordinates_in(prefix, to_rational(out.basis[k]));
    Rational s = 0;
    for (const Rational& x : a) s += x < 0 ? Rational(-x) : x;
    Rational allowed = k == 0 ? Rational(1) : std::max(Rational(static_cast<long>(k + 1), 2), Rational(1));
    if (s > allowed) throw CertificateUnsoundError("lifted vector leaves the crosspolytope");
    out.crosspolytope_norms.push_back(s);
  }
  Integer d = det(IntegerMatrix::from_rows(out.basis, n));
  if (d != 1 && d != -1) throw CertificateUnsoundError("lifted vectors are not a basis");
  return out;
}

namespace {

std::vector<IntVector> n2_dual_rows(const Lattice& l, const EnumerationLimits& limits) {
  const std::size_t n = l.rank();
  if (n == 1) return {IntVector{Integer(1)}};
  VoronoiOptions opts;
  opts.limits = limits;
  const VoronoiData vd = relevant_vectors(l, opts);
  Rational lambda1_sq = vd.strict_norms.front();
  for (const Rational& x : vd.strict_norms) lambda1_sq = std::min(lambda1_sq, x);

  // h(y) <= (7/10) n and h(y) >= (lambda_1 / 2) |y| bound the minimizer.
  const Rational seven_tenths_n(static_cast<long>(7 * n), 10);
  Rational r2 = seven_tenths_n * seven_tenths_n * 4 / lambda1_sq;
  const Lattice ldual = dual(l);
  std::vector<LatticeVector> ball = points_in_ball(ldual, RatVector(n, Rational(0)), r2, limits);

  struct Cand {
    Rational lower;
    IntVector y;
  };
  std::vector<Cand> cands;
  for (LatticeVector& y : ball) {
    if (is_zero(y) || !first_nonzero_positive(y)) continue;
    Rational lb = Rational(gauge_over(vd.strict, y)) / 2;
    cands.push_back({lb, std::move(y)});
  }
  std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
    if (a.lower != b.lower) return a.lower < b.lower;
    return a.y < b.y;
  });
  std::optional<Rational> best;
  IntVector y1;
  for (const Cand& c : cands) {
    if (best && c.lower > *best) break;
    Rational h = support_function(vd, l, c.y);
    if (!best || h < *best || (h == *best && c.y < y1)) {
      best = h;
      y1 = c.y;
    }
  }
  if (!best) throw BoundTooSmallError("no dual vector found in the support-function ball");
  if (gcd(y1) != 1) throw CertificateUnsoundError("support-function minimizer is not primitive");

  DualProjection proj(l, to_rational(y1));
  std::vector<IntVector> rest = n2_dual_rows(proj.section().lattice, limits);
  std::vector<IntVector> rows{y1};
  for (const IntVector& r : rest) rows.push_back(proj.lift(r));
  return rows;
}

}  // namespace

N2Basis n2_compact_basis(const Lattice& l, const EnumerationLimits& limits) {
  const std::size_t n = l.rank();
  N2Basis out;
  out.dual_basis = n2_dual_rows(l, limits);
  out.transform = unimodular_inverse(IntegerMatrix::from_rows(out.dual_basis, n));
  VoronoiOptions opts;
  opts.limits = limits;
  const VoronoiData vd = relevant_vectors(l, opts);
  out.width = coefficient_width(l, out.transform, vd.strict).width;
  if (out.width > static_cast<long>(n * n)) {
    throw CertificateUnsoundError("constructed basis is wider than n^2");
  }
  return out;
}

GeneratingSet binary_generating_set(const Lattice& l, const IntegerMatrix& transform, long c,
                                    const std::vector<LatticeVector>& targets) {
  if (c < 1) throw InvalidArgument("width must be positive");
  const std::size_t n = l.rank();
  std::size_t levels = 0;
  while ((1L << levels) <= c) ++levels;  // floor(log2 c) + 1

  GeneratingSet out;
  out.levels = levels;
  out.targets = targets;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector b = transform.column(i);
    for (std::size_t j = 0; j < levels; ++j) {
      out.vectors.push_back(b);
      for (Integer& x : b) x *= 2;
    }
  }
  const WidthResult w = coefficient_width(l, transform, targets);
  if (w.width > c) throw InvalidArgument("basis is wider than the stated width");
  for (std::size_t t = 0; t < targets.size(); ++t) {
    IntVector coeff(n * levels, Integer(0));
    for (std::size_t i = 0; i < n; ++i) {
      const Integer& a = w.witnesses[t][i];
      const int sign = sgn(a);
      Integer mag = abs(a);
      for (std::size_t j = 0; j < levels; ++j) {
        if (mpz_tstbit(mag.get_mpz_t(), j)) coeff[i * levels + j] = sign;
      }
    }
    IntVector rebuilt(n, Integer(0));
    for (std::size_t s = 0; s < out.vectors.size(); ++s) {
      if (coeff[s] == 0) continue;
      for (std::size_t k = 0; k < n; ++k) rebuilt[k] += coeff[s] * out.vectors[s][k];
    }
    if (rebuilt != targets[t]) throw CertificateUnsoundError("binary expansion does not rebuild");
    out.witnesses.push_back(std::move(coeff));
  }
  return out;
}

std::string reject_name(SuperbasisReject r) {
  switch (r) {
    case SuperbasisReject::None: return "none";
    case SuperbasisReject::Count: return "count";
    case SuperbasisReject::Sum: return "sum";
    case SuperbasisReject::Obtuse: return "obtuseness";
    case SuperbasisReject::Rank: return "rank";
  }
  return "unknown";
}

SuperbasisResult obtuse_superbasis(const std::vector<LatticeVector>& b, const Lattice& l,
                                   const VoronoiData& vd) {
  const std::size_t n = l.rank();
  SuperbasisResult out;
  if (b.size() != n + 1) {
    out.reason = SuperbasisReject::Count;
    return out;
  }
  for (const LatticeVector& x : b) {
    if (x.size() != n) throw InvalidArgument("superbasis vector length mismatch");
  }
  IntVector sum(n, Integer(0));
  for (const LatticeVector& x : b)
    for (std::size_t i = 0; i < n; ++i) sum[i] += x[i];
  if (!is_zero(sum)) {
    out.reason = SuperbasisReject::Sum;
    return out;
  }
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (inner(l, b[i], b[j]) > 0) {
        out.reason = SuperbasisReject::Obtuse;
        return out;
      }
  IntegerMatrix t = IntegerMatrix::from_columns(std::vector<IntVector>(b.begin() + 1, b.end()), n);
  Integer d = det(t);
  if (d != 1 && d != -1) {
    out.reason = SuperbasisReject::Rank;
    return out;
  }
  out.certificate = make_certificate(l, t, RelevantKind::Strict, vd.strict);
  return out;
}

PuncturedBasis d4_punctured_basis(const Lattice& d4, const VoronoiData& vd,
                                  std::span<const Integer> y_ambient) {
  if (d4.rank() != 4 || !d4.ambient_basis() || d4.ambient_basis()->rows() != 4) {
    throw InvalidArgument("expected D4 with a 4-dimensional ambient basis");
  }
  std::optional<RatVector> coeff = d4.from_ambient(to_rational(y_ambient));
  if (!coeff || !is_integral(*coeff)) throw InvalidArgument("input not in C\\F");
  const IntVector y = to_integer(*coeff);
  const bool weak = std::find(vd.weak.begin(), vd.weak.end(), y) != vd.weak.end();
  const bool strict = std::find(vd.strict.begin(), vd.strict.end(), y) != vd.strict.end();
  if (!weak || strict) throw InvalidArgument("input not in C\\F");

  // Dual basis {y/2, e1, e2, e3} in ambient coordinates; the dual coordinates
  // of an ambient vector x are B^T x.
  const RationalMatrix& basis = *d4.ambient_basis();
  std::vector<RatVector> amb;
  RatVector half(4);
  for (std::size_t i = 0; i < 4; ++i) half[i] = Rational(y_ambient[i]) / 2;
  amb.push_back(half);
  for (std::size_t e = 0; e < 3; ++e) {
    RatVector u(4, Rational(0));
    u[e] = 1;
    amb.push_back(u);
  }
  std::vector<IntVector> rows;
  for (const RatVector& x : amb) rows.push_back(to_integer(multiply(basis.transpose(), x)));
  PuncturedBasis out;
  out.transform = unimodular_inverse(IntegerMatrix::from_rows(rows, 4));

  IntVector ny = negated(y);
  std::vector<LatticeVector> others;
  for (const LatticeVector& v : vd.weak)
    if (v != y && v != ny) others.push_back(v);
  out.width_without_y = coefficient_width(d4, out.transform, others).width;
  out.width_on_y = coefficient_width(d4, out.transform, {y, ny}).width;
  return out;
}

}  // namespace latc
