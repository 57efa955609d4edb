#include "latc/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include "latc/certificate_io.hpp"
#include "latc/compactness.hpp"
#include "latc/cvp.hpp"
#include "latc/families.hpp"
#include "latc/lattice_io.hpp"
#include "latc/voronoi.hpp"

namespace latc::cli {
namespace {

struct Globals {
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  std::uint64_t candidate_cap = 0;  // 0: environment or default
};

struct LatticeArgs {
  std::string file;
  std::string family;
  std::size_t n = 0;
  long a = 0;
};

void add_lattice_args(CLI::App* sc, LatticeArgs& a) {
  sc->add_option("lattice", a.file, "latgram v1 file");
  sc->add_option("--family", a.family, "Zn, Dn, AnStar, LambdaNA or A2 instead of a file");
  sc->add_option("--n", a.n, "rank for --family");
  sc->add_option("--a", a.a, "modulus for LambdaNA (default ceil(n/2))");
}

struct LoadedLattice {
  Lattice lattice;
  std::optional<FamilySpec> spec;
};

FamilySpec family_spec(const LatticeArgs& a) {
  FamilySpec spec;
  spec.family = parse_family(a.family);
  if (spec.family == Family::A2) {
    spec.n = 2;
  } else {
    if (a.n == 0) throw InvalidArgument("--family needs --n");
    spec.n = a.n;
  }
  if (a.a != 0) spec.a = a.a;
  return spec;
}

LoadedLattice load(const LatticeArgs& a) {
  if (!a.file.empty() && !a.family.empty()) {
    throw InvalidArgument("give either a lattice file or --family, not both");
  }
  if (!a.family.empty()) {
    FamilySpec spec = family_spec(a);
    return {generate(spec), spec};
  }
  if (a.file.empty()) throw InvalidArgument("no lattice given (file or --family)");
  return {load_latgram(a.file), std::nullopt};
}

EnumerationLimits limits_from(const Globals& g) {
  EnumerationLimits lim;
  if (g.candidate_cap != 0) {
    lim.candidate_cap = g.candidate_cap;
  } else if (const char* env = std::getenv("LATC_CANDIDATE_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) {
      throw InvalidArgument("LATC_CANDIDATE_CAP must be a positive integer");
    }
    lim.candidate_cap = v;
  }
  return lim;
}

VoronoiData voronoi(const Lattice& l, const Globals& g) {
  VoronoiOptions o;
  o.limits = limits_from(g);
  o.jobs = g.jobs;
  return relevant_vectors(l, o);
}

std::string join(std::span<const Integer> v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += v[i].get_str();
  }
  return s;
}

std::string join(std::span<const Rational> v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += to_string(v[i]);
  }
  return s;
}

RatVector parse_target(const std::string& text, std::size_t n) {
  RatVector t;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) t.push_back(parse_rational(tok));
  if (t.size() != n) {
    throw InvalidArgument("target has " + std::to_string(t.size()) + " entries, expected " +
                          std::to_string(n));
  }
  return t;
}

// Seeded rational targets p/q with q in [1, 12] and |p/q| <= 4. Only raw
// engine output is used so the sequence is the same on every platform.
std::vector<RatVector> random_targets(std::size_t count, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<RatVector> out;
  for (std::size_t k = 0; k < count; ++k) {
    RatVector t(n);
    for (std::size_t i = 0; i < n; ++i) {
      long q = static_cast<long>(rng() % 12) + 1;
      long p = static_cast<long>(rng() % static_cast<std::uint64_t>(8 * q + 1)) - 4 * q;
      t[i] = Rational(p, q);
      t[i].canonicalize();
    }
    out.push_back(std::move(t));
  }
  return out;
}

void print_matrix(std::ostream& out, const IntegerMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) out << format_row(m.row(i)) << '\n';
}

std::string width_label(RelevantKind k) { return k == RelevantKind::Strict ? "c" : "chi"; }

// Certificate from --cert or, failing that, from the compactness search.
CompactnessCertificate obtain_certificate(const Lattice& l, const VoronoiData& vd,
                                          const std::string& cert_path, long max_c,
                                          const EnumerationLimits& lim) {
  if (!cert_path.empty()) {
    CompactnessCertificate cert = load_latcert(cert_path);
    verify_certificate(l, cert, &relevant_set(vd, cert.kind));
    return cert;
  }
  const long cap = max_c > 0 ? max_c : static_cast<long>(l.rank() * l.rank());
  CompactnessResult r = compute_c(l, vd, RelevantKind::Strict, cap, lim);
  if (!r.found()) {
    N2Basis b = n2_compact_basis(l, lim);
    return make_certificate(l, b.transform, RelevantKind::Strict, vd.strict);
  }
  return *r.certificate;
}

void print_solution(std::ostream& out, const CvpSolution& s) {
  out << "closest=" << join(s.closest, ",") << " dist2=" << to_string(s.dist2)
      << " k=" << s.scale_k << " iters=" << s.iterations << " scanned=" << s.candidates_scanned
      << " peak=" << s.peak_live_vectors << '\n';
}

struct App {
  Globals g;

  CLI::App* gen = nullptr;
  std::string gen_family;
  std::size_t gen_n = 0;
  long gen_a = 0;
  std::string gen_out;

  CLI::App* relvec = nullptr;
  LatticeArgs relvec_l;

  CLI::App* certify = nullptr;
  LatticeArgs certify_l;
  std::string certify_basis, certify_cert, certify_kind = "strict", certify_out;

  CLI::App* compactness = nullptr;
  LatticeArgs compact_l;
  std::string compact_kind = "strict", compact_out;
  long compact_max = 0;

  CLI::App* relaxed = nullptr;
  LatticeArgs relaxed_l;
  long relaxed_max = 0;

  CLI::App* n2basis = nullptr;
  LatticeArgs n2_l;
  std::string n2_out;

  CLI::App* gens = nullptr;
  LatticeArgs gens_l;
  std::string gens_cert;
  long gens_max = 0;

  CLI::App* superbasis = nullptr;
  LatticeArgs super_l;
  std::string super_vectors, super_out;

  CLI::App* cvp = nullptr;
  LatticeArgs cvp_l;
  std::string cvp_cert, cvp_target, cvp_mode = "stream";
  std::size_t cvp_targets = 0;
  long cvp_max = 0;
  bool cvp_audit = false;

  CLI::App* oracle = nullptr;
  LatticeArgs oracle_l;
  std::string oracle_cert, oracle_target;
  std::size_t oracle_targets = 0;
  long oracle_max = 0;

  CLI::App* bench = nullptr;
  LatticeArgs bench_l;
  std::size_t bench_targets = 25;
  long bench_max = 0;

  void configure(CLI::App& app) {
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--seed", g.seed, "seed for generated targets")->capture_default_str();
    app.add_option("--jobs", g.jobs, "worker threads for coset sweeps")->check(CLI::PositiveNumber);
    app.add_option("--candidate-cap", g.candidate_cap,
                   "per-enumeration node cap (overrides LATC_CANDIDATE_CAP)");

    gen = app.add_subcommand("gen", "write a family lattice as latgram v1");
    gen->add_option("--family", gen_family, "Zn, Dn, AnStar, LambdaNA or A2")->required();
    gen->add_option("--n", gen_n, "rank");
    gen->add_option("--a", gen_a, "modulus for LambdaNA");
    gen->add_option("-o,--output", gen_out, "output file (default stdout)");

    relvec = app.add_subcommand("relvec", "strict and weak Voronoi relevant vectors");
    add_lattice_args(relvec, relvec_l);

    certify = app.add_subcommand("certify", "width of a basis or re-verification of a certificate");
    add_lattice_args(certify, certify_l);
    auto* b = certify->add_option("--basis", certify_basis, "transform file, columns are the basis");
    auto* c = certify->add_option("--cert", certify_cert, "latcert v1 file");
    b->excludes(c);
    certify->add_option("--kind", certify_kind, "strict or weak")->check(CLI::IsMember({"strict", "weak"}));
    certify->add_option("-o,--output", certify_out, "write a latcert for --basis");

    compactness = app.add_subcommand("compactness", "exact c (strict) or chi (weak)");
    add_lattice_args(compactness, compact_l);
    compactness->add_option("--kind", compact_kind, "strict or weak")->check(CLI::IsMember({"strict", "weak"}));
    compactness->add_option("--max-c", compact_max, "largest width tried (default n^2)");
    compactness->add_option("-o,--output", compact_out, "write the certificate");

    relaxed = app.add_subcommand("relaxed", "relaxed constant through the polar successive minima");
    add_lattice_args(relaxed, relaxed_l);
    relaxed->add_option("--max-c", relaxed_max, "largest width tried (default n^2)");

    n2basis = app.add_subcommand("n2basis", "recursive basis of width at most n^2");
    add_lattice_args(n2basis, n2_l);
    n2basis->add_option("-o,--output", n2_out, "write the certificate");

    gens = app.add_subcommand("gens", "binary generating set of a compact basis");
    add_lattice_args(gens, gens_l);
    gens->add_option("--cert", gens_cert, "latcert v1 file (default: compute)");
    gens->add_option("--max-c", gens_max, "search cap when computing");

    superbasis = app.add_subcommand("superbasis", "check an obtuse superbasis");
    add_lattice_args(superbasis, super_l);
    superbasis->add_option("--vectors", super_vectors, "n+1 lines of integer coefficients")->required();
    superbasis->add_option("-o,--output", super_out, "write the certificate on acceptance");

    cvp = app.add_subcommand("cvp", "closest vectors by the Voronoi walk");
    add_lattice_args(cvp, cvp_l);
    cvp->add_option("--cert", cvp_cert, "latcert v1 file (default: compute)");
    cvp->add_option("--target", cvp_target, "comma separated rationals");
    cvp->add_option("--targets", cvp_targets, "number of seeded random targets");
    cvp->add_option("--mode", cvp_mode, "stream or materialized")->check(CLI::IsMember({"stream", "materialized"}));
    cvp->add_option("--max-c", cvp_max, "search cap when computing the certificate");
    cvp->add_flag("--audit", cvp_audit, "check every result against the facet description");

    oracle = app.add_subcommand("oracle", "walk against brute force enumeration");
    add_lattice_args(oracle, oracle_l);
    oracle->add_option("--cert", oracle_cert, "latcert v1 file (default: compute)");
    oracle->add_option("--target", oracle_target, "comma separated rationals");
    oracle->add_option("--targets", oracle_targets, "number of seeded random targets");
    oracle->add_option("--max-c", oracle_max, "search cap when computing the certificate");

    bench = app.add_subcommand("bench", "materialized versus streaming candidate counters");
    add_lattice_args(bench, bench_l);
    bench->add_option("--targets", bench_targets, "number of seeded random targets")->capture_default_str();
    bench->add_option("--max-c", bench_max, "search cap when computing the certificate");
  }

  int run_gen(std::ostream& out) {
    LatticeArgs a;
    a.family = gen_family;
    a.n = gen_n;
    a.a = gen_a;
    FamilySpec spec = family_spec(a);
    Lattice l = generate(spec);
    if (gen_out.empty()) {
      write_latgram(out, l);
    } else {
      save_latgram(gen_out, l);
      out << "wrote " << describe(spec) << " to " << gen_out << '\n';
    }
    return kOk;
  }

  int run_relvec(std::ostream& out) {
    LoadedLattice in = load(relvec_l);
    VoronoiData vd = voronoi(in.lattice, g);
    out << "|F|=" << vd.strict.size() << " |C|=" << vd.weak.size() << '\n';
    for (std::size_t i = 0; i < vd.strict.size(); ++i) {
      out << "F " << join(vd.strict[i], " ") << " norm2=" << to_string(vd.strict_norms[i]) << '\n';
    }
    for (std::size_t i = 0; i < vd.weak.size(); ++i) {
      out << "C " << join(vd.weak[i], " ") << " norm2=" << to_string(vd.weak_norms[i]) << '\n';
    }
    return kOk;
  }

  int run_certify(std::ostream& out) {
    LoadedLattice in = load(certify_l);
    const Lattice& l = in.lattice;
    VoronoiData vd = voronoi(l, g);
    if (!certify_cert.empty()) {
      CompactnessCertificate cert = load_latcert(certify_cert);
      verify_certificate(l, cert, &relevant_set(vd, cert.kind));
      out << "verified " << width_label(cert.kind) << "<=" << cert.width << " kind=" << kind_name(cert.kind)
          << " targets=" << cert.targets.size() << '\n';
      return kOk;
    }
    if (certify_basis.empty()) throw InvalidArgument("certify needs --basis or --cert");
    IntegerMatrix t = load_integer_matrix(certify_basis);
    RelevantKind kind = parse_kind(certify_kind);
    CompactnessCertificate cert = make_certificate(l, t, kind, relevant_set(vd, kind));
    out << "width=" << cert.width << " kind=" << kind_name(kind) << " targets=" << cert.targets.size()
        << '\n';
    if (!certify_out.empty()) save_latcert(certify_out, cert);
    return kOk;
  }

  int run_compactness(std::ostream& out) {
    LoadedLattice in = load(compact_l);
    const Lattice& l = in.lattice;
    EnumerationLimits lim = limits_from(g);
    VoronoiData vd = voronoi(l, g);
    RelevantKind kind = parse_kind(compact_kind);
    long cap = compact_max > 0 ? compact_max : static_cast<long>(l.rank() * l.rank());
    CompactnessResult r = compute_c(l, vd, kind, cap, lim);
    if (!r.found()) {
      out << width_label(kind) << ">" << cap << " search_nodes=" << r.search_nodes << '\n';
      return kOk;
    }
    out << width_label(kind) << "=" << r.certificate->width << " search_nodes=" << r.search_nodes << '\n';
    out << "transform\n";
    print_matrix(out, r.certificate->transform);
    if (!compact_out.empty()) save_latcert(compact_out, *r.certificate);
    return kOk;
  }

  int run_relaxed(std::ostream& out) {
    LoadedLattice in = load(relaxed_l);
    const Lattice& l = in.lattice;
    VoronoiData vd = voronoi(l, g);
    long cap = relaxed_max > 0 ? relaxed_max : static_cast<long>(l.rank() * l.rank());
    RelaxedCertificate rc = compute_cbar(l, vd, cap, limits_from(g));
    out << "cbar=" << rc.width << " lambda_n=" << to_string(rc.lambda_n) << '\n';
    for (std::size_t i = 0; i < rc.generators.size(); ++i) {
      out << "y " << join(rc.generators[i], " ") << " gauge=" << to_string(rc.gauges[i]) << '\n';
    }
    if (in.spec && in.spec->family == Family::LambdaNA && in.spec->n >= 4 &&
        in.spec->modulus() == static_cast<long>((in.spec->n + 1) / 2)) {
      LambdaNCertificate lc = cbar3_certificate_lambda_n(in.spec->n, limits_from(g));
      out << "explicit certificate width=" << lc.certificate.width << " max_gauge="
          << to_string(lc.certificate.lambda_n) << '\n';
      for (std::size_t i = 0; i < lc.ambient.size(); ++i) {
        out << "e " << join(lc.ambient[i], " ") << " gauge=" << to_string(lc.certificate.gauges[i])
            << '\n';
      }
    }
    return kOk;
  }

  int run_n2basis(std::ostream& out) {
    LoadedLattice in = load(n2_l);
    const Lattice& l = in.lattice;
    N2Basis b = n2_compact_basis(l, limits_from(g));
    out << "width=" << b.width << " bound=" << l.rank() * l.rank() << '\n';
    out << "transform\n";
    print_matrix(out, b.transform);
    if (!n2_out.empty()) {
      VoronoiData vd = voronoi(l, g);
      save_latcert(n2_out, make_certificate(l, b.transform, RelevantKind::Strict, vd.strict));
    }
    return kOk;
  }

  int run_gens(std::ostream& out) {
    LoadedLattice in = load(gens_l);
    const Lattice& l = in.lattice;
    VoronoiData vd = voronoi(l, g);
    EnumerationLimits lim = limits_from(g);
    CompactnessCertificate cert = obtain_certificate(l, vd, gens_cert, gens_max, lim);
    GeneratingSet s = binary_generating_set(l, cert.transform, cert.width, vd.strict);
    out << "|S|=" << s.vectors.size() << " c=" << cert.width << " levels=" << s.levels << '\n';
    for (std::size_t k = 0; k < s.vectors.size(); ++k) {
      out << "s " << k / s.levels << ' ' << k % s.levels << ' ' << join(s.vectors[k], " ") << '\n';
    }
    for (std::size_t k = 0; k < s.targets.size(); ++k) {
      out << "w " << join(s.targets[k], " ") << " | " << join(s.witnesses[k], " ") << '\n';
    }
    return kOk;
  }

  int run_superbasis(std::ostream& out) {
    LoadedLattice in = load(super_l);
    const Lattice& l = in.lattice;
    std::ifstream f(super_vectors);
    if (!f) throw ParseError("cannot open " + super_vectors);
    std::vector<LatticeVector> b;
    std::string line;
    while (std::getline(f, line)) {
      auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      RatVector r = parse_rational_row(line);
      if (!is_integral(r)) throw ParseError("superbasis entries must be integers");
      if (r.size() != l.rank()) throw ParseError("superbasis vector has the wrong length");
      b.push_back(to_integer(r));
    }
    VoronoiData vd = voronoi(l, g);
    SuperbasisResult r = obtuse_superbasis(b, l, vd);
    if (!r.accepted()) {
      out << "reject reason=" << reject_name(r.reason) << '\n';
      return kOk;
    }
    out << "accept width=" << r.certificate->width << '\n';
    out << "transform\n";
    print_matrix(out, r.certificate->transform);
    if (!super_out.empty()) save_latcert(super_out, *r.certificate);
    return kOk;
  }

  std::vector<RatVector> targets_for(const std::string& one, std::size_t count, std::size_t n) {
    std::vector<RatVector> ts;
    if (!one.empty()) ts.push_back(parse_target(one, n));
    if (count > 0) {
      std::vector<RatVector> r = random_targets(count, n, g.seed);
      ts.insert(ts.end(), r.begin(), r.end());
    }
    if (ts.empty()) throw InvalidArgument("give --target or --targets");
    return ts;
  }

  int run_cvp(std::ostream& out) {
    LoadedLattice in = load(cvp_l);
    const Lattice& l = in.lattice;
    VoronoiData vd = voronoi(l, g);
    std::vector<RatVector> ts = targets_for(cvp_target, cvp_targets, l.rank());
    if (cvp_mode == "materialized") {
      for (const RatVector& t : ts) print_solution(out, cvp_materialized(l, vd, t, cvp_audit));
      return kOk;
    }
    CompactnessCertificate cert = obtain_certificate(l, vd, cvp_cert, cvp_max, limits_from(g));
    for (const RatVector& t : ts) print_solution(out, cvp_compact(l, cert, t, cvp_audit ? &vd : nullptr));
    return kOk;
  }

  int run_oracle(std::ostream& out) {
    LoadedLattice in = load(oracle_l);
    const Lattice& l = in.lattice;
    EnumerationLimits lim = limits_from(g);
    VoronoiData vd = voronoi(l, g);
    std::vector<RatVector> ts = targets_for(oracle_target, oracle_targets, l.rank());
    CompactnessCertificate cert = obtain_certificate(l, vd, oracle_cert, oracle_max, lim);
    std::size_t matches = 0;
    for (const RatVector& t : ts) {
      CvpSolution s = cvp_compact(l, cert, t, &vd);
      ClosestVectors b = cvp_bruteforce(l, t, lim);
      const bool ok = s.dist2 == b.dist2;
      matches += ok;
      out << "target=" << join(t, ",") << " walk=" << to_string(s.dist2) << " brute="
          << to_string(b.dist2) << " ties=" << b.closest.size() << (ok ? " match" : " MISMATCH") << '\n';
    }
    out << "matched " << matches << "/" << ts.size() << '\n';
    return matches == ts.size() ? kOk : kCertificateUnsound;
  }

  int run_bench(std::ostream& out) {
    LoadedLattice in = load(bench_l);
    const Lattice& l = in.lattice;
    VoronoiData vd = voronoi(l, g);
    CompactnessCertificate cert = obtain_certificate(l, vd, "", bench_max, limits_from(g));
    std::vector<RatVector> ts = random_targets(bench_targets, l.rank(), g.seed);

    struct Row {
      std::string mode;
      std::uint64_t candidates = 0, peak = 0, scanned = 0, iters = 0, max_level = 0;
    };
    Row mat{"materialized"}, str{"streaming"};
    MaterializedCandidates list(l, vd.strict);
    CandidateStream stream(l, cert.transform, cert.width);
    mat.candidates = vd.strict.size();
    str.candidates = stream.size();
    for (const RatVector& t : ts) {
      CvpSolution a = mv_walk(l, list, t, &vd);
      CvpSolution b = mv_walk(l, stream, t, &vd);
      if (a.dist2 != b.dist2) throw CertificateUnsoundError("modes disagree on a target");
      for (auto [row, s] : {std::pair<Row*, CvpSolution*>{&mat, &a}, {&str, &b}}) {
        row->peak = std::max(row->peak, s->peak_live_vectors);
        row->scanned += s->candidates_scanned;
        row->iters += s->iterations;
        row->max_level = std::max(row->max_level, s->max_level_iterations);
      }
    }
    out << "n=" << l.rank() << " c=" << cert.width << " targets=" << ts.size() << '\n';
    out << std::left << std::setw(14) << "mode" << std::right << std::setw(12) << "candidates"
        << std::setw(8) << "peak" << std::setw(14) << "scanned" << std::setw(8) << "iters"
        << std::setw(10) << "maxlevel" << '\n';
    for (const Row& r : {mat, str}) {
      out << std::left << std::setw(14) << r.mode << std::right << std::setw(12) << r.candidates
          << std::setw(8) << r.peak << std::setw(14) << r.scanned << std::setw(8) << r.iters
          << std::setw(10) << r.max_level << '\n';
    }
    return kOk;
  }

  int dispatch(std::ostream& out) {
    if (gen->parsed()) return run_gen(out);
    if (relvec->parsed()) return run_relvec(out);
    if (certify->parsed()) return run_certify(out);
    if (compactness->parsed()) return run_compactness(out);
    if (relaxed->parsed()) return run_relaxed(out);
    if (n2basis->parsed()) return run_n2basis(out);
    if (gens->parsed()) return run_gens(out);
    if (superbasis->parsed()) return run_superbasis(out);
    if (cvp->parsed()) return run_cvp(out);
    if (oracle->parsed()) return run_oracle(out);
    if (bench->parsed()) return run_bench(out);
    return kUsage;
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Voronoi-relevant vectors, compact bases and polynomial-space CVP", "latc"};
  App cmd;
  cmd.configure(app);

  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.push_back("latc");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    return cmd.dispatch(out);
  } catch (const latc::ParseError& e) {
    err << "error: malformed input: " << e.what() << '\n';
    return kMalformedInput;
  } catch (const ResourceLimitError& e) {
    err << "error: resource limit: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const CertificateUnsoundError& e) {
    err << "error: certificate unsound: " << e.what() << '\n';
    return kCertificateUnsound;
  } catch (const NonUnimodularError& e) {
    err << "error: " << e.what() << '\n';
    return kCertificateUnsound;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace latc::cli
