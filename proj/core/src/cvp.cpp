#include "latc/cvp.hpp"

#include <optional>

namespace latc {

IntegerMatrix scaled_gram(const Lattice& l) {
  const RationalMatrix& g = l.gram();
  Integer s = lcm_of_denominators(g.entries());
  IntegerMatrix out(g.rows(), g.cols());
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) {
      Rational x = g(i, j) * s;
      out(i, j) = x.get_num();
    }
  return out;
}

MaterializedCandidates::MaterializedCandidates(const Lattice& l,
                                               std::vector<LatticeVector> vectors)
    : vectors_(std::move(vectors)) {
  const IntegerMatrix g = scaled_gram(l);
  for (const LatticeVector& v : vectors_) {
    if (v.size() != l.rank()) throw InvalidArgument("candidate length mismatch");
    images_.push_back(multiply(g, v));
    norms_.push_back(dot(v, images_.back()));
  }
}

void MaterializedCandidates::scan(const CandidateVisitor& visit) {
  for (std::size_t i = 0; i < vectors_.size(); ++i) visit(vectors_[i], images_[i], norms_[i]);
}

CandidateStream::CandidateStream(const Lattice& l, const IntegerMatrix& transform, long c)
    : transform_(transform), gram_image_(scaled_gram(l) * transform), c_(c) {
  if (transform.rows() != l.rank() || !transform.is_square()) {
    throw InvalidArgument("stream transform must be n x n");
  }
  if (c < 1) throw InvalidArgument("stream width must be positive");
  reset();
}

void CandidateStream::step_column(std::size_t i, const Integer& times) {
  const std::size_t n = z_.size();
  for (std::size_t r = 0; r < n; ++r) {
    v_[r] += times * transform_(r, i);
    gv_[r] += times * gram_image_(r, i);
  }
}

void CandidateStream::reset() {
  const std::size_t n = transform_.rows();
  z_.assign(n, Integer(-c_));
  IntVector z = z_;
  v_ = multiply(transform_, z);
  gv_ = multiply(gram_image_, z);
  started_ = false;
}

bool CandidateStream::next() {
  const std::size_t n = z_.size();
  do {
    if (!started_) {
      started_ = true;
    } else {
      std::size_t i = n;
      while (i > 0) {
        --i;
        if (z_[i] < c_) {
          z_[i] += 1;
          step_column(i, Integer(1));
          break;
        }
        z_[i] = -c_;
        step_column(i, Integer(-2 * c_));
        if (i == 0) return false;
      }
    }
  } while (is_zero(z_));
  return true;
}

void CandidateStream::scan(const CandidateVisitor& visit) {
  reset();
  Integer q;
  while (next()) {
    q = dot(v_, gv_);
    visit(v_, gv_, q);
  }
}

std::uint64_t CandidateStream::size() const {
  std::uint64_t side = 2 * static_cast<std::uint64_t>(c_) + 1;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < z_.size(); ++i) total *= side;
  return total - 1;
}

CandidateStream candidate_stream(const Lattice& l, const CompactnessCertificate& cert) {
  return CandidateStream(l, cert.transform, cert.width);
}

namespace {

// Largest violation ratio 2<t, v> / |v|^2 as num/den; ties to the lex
// smallest v. With t = tn / d and the Gram scaled by s, the ratio is
// 2 (tn . gv) / (d q).
struct Best {
  bool found = false;
  Integer num;
  Integer den;
  IntVector v;
};

Best scan_best(CandidateSource& source, const IntVector& tn, const Integer& d,
               std::uint64_t& scanned) {
  Best best;
  Integer p, lhs, rhs;
  source.scan([&](const IntVector& v, const IntVector& gv, const Integer& q) {
    ++scanned;
    p = dot(tn, gv);
    if (p <= 0) return;
    p *= 2;
    if (best.found) {
      lhs = p * best.den;
      rhs = best.num * d * q;
      if (lhs < rhs) return;
      if (lhs == rhs && !(v < best.v)) return;
    }
    best.found = true;
    best.num = p;
    best.den = d * q;
    best.v = v;
  });
  return best;
}

}  // namespace

CvpSolution mv_walk(const Lattice& l, CandidateSource& source, std::span<const Rational> t,
                    const VoronoiData* audit) {
  const std::size_t n = l.rank();
  if (t.size() != n) throw InvalidArgument("target length mismatch");
  Integer d = lcm_of_denominators(t);
  IntVector tn(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational x = t[i] * d;
    tn[i] = x.get_num();
  }

  CvpSolution sol;
  sol.closest.assign(n, Integer(0));
  sol.peak_live_vectors = source.live_vectors();

  Best first = scan_best(source, tn, d, sol.candidates_scanned);
  std::size_t k = 0;
  if (first.found) {
    Integer scale = 1;
    while (first.num > scale * first.den) {
      scale *= 2;
      ++k;
    }
  }
  sol.scale_k = k;

  for (std::size_t level = k; level-- > 0;) {
    Integer step = 1;
    mpz_mul_2exp(step.get_mpz_t(), step.get_mpz_t(), level);
    std::uint64_t here = 0;
    for (;;) {
      Best b = scan_best(source, tn, d, sol.candidates_scanned);
      if (!b.found || b.num <= step * b.den) break;
      for (std::size_t i = 0; i < n; ++i) {
        sol.closest[i] += step * b.v[i];
        tn[i] -= step * d * b.v[i];
      }
      ++here;
    }
    sol.iterations += here;
    if (here > sol.max_level_iterations) sol.max_level_iterations = here;
  }

  RatVector residual(n);
  for (std::size_t i = 0; i < n; ++i) residual[i] = Rational(tn[i], d);
  for (Rational& x : residual) x.canonicalize();
  sol.dist2 = norm2(l, residual);
  if (audit && !in_dilated_cell(*audit, l, residual, Rational(1))) {
    throw CertificateUnsoundError("candidate source misses a violated facet");
  }
  return sol;
}

CvpSolution cvp_compact(const Lattice& l, const CompactnessCertificate& cert,
                        std::span<const Rational> t, const VoronoiData* audit) {
  CandidateStream stream(l, cert.transform, cert.width);
  return mv_walk(l, stream, t, audit);
}

CvpSolution cvp_materialized(const Lattice& l, const VoronoiData& vd,
                             std::span<const Rational> t, bool audit) {
  MaterializedCandidates list(l, vd.strict);
  return mv_walk(l, list, t, audit ? &vd : nullptr);
}

}  // namespace latc
