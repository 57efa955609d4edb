#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "latc/cli.hpp"

namespace latc::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("latc_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
    return path(name);
  }
  std::string d4() const {
    Result r = call({"gen", "--family", "Dn", "--n", "4", "-o", path("d4.lat")});
    EXPECT_EQ(r.code, kOk) << r.err;
    return path("d4.lat");
  }
  fs::path dir_;
};

TEST_F(Cli, GenAndRelvec) {
  Result g = call({"gen", "--family", "Dn", "--n", "4", "-o", path("d4.lat")});
  EXPECT_EQ(g.code, kOk);
  EXPECT_EQ(first_line(g.out).rfind("wrote ", 0), 0u);
  Result r = call({"relvec", path("d4.lat")});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(first_line(r.out), "|F|=24 |C|=48");
  std::size_t f_lines = 0, c_lines = 0;
  std::istringstream ss(r.out);
  std::string line;
  while (std::getline(ss, line)) {
    if (line.rfind("F ", 0) == 0) ++f_lines;
    if (line.rfind("C ", 0) == 0) ++c_lines;
    if (line.rfind("F ", 0) == 0 || line.rfind("C ", 0) == 0) {
      EXPECT_NE(line.find(" norm2="), std::string::npos);
      EXPECT_NE(line.find('/'), std::string::npos);
    }
  }
  EXPECT_EQ(f_lines, 24u);
  EXPECT_EQ(c_lines, 48u);
  EXPECT_EQ(call({"relvec", "--family", "Dn", "--n", "4"}).out, r.out);
}

TEST_F(Cli, GenToStdoutIsLatgram) {
  Result r = call({"gen", "--family", "A2"});
  EXPECT_EQ(r.out, "latgram 1 n=2\n2/1 -1/1\n-1/1 2/1\n");
}

TEST_F(Cli, CompactnessAndCertifyRoundTrip) {
  std::string lat = d4();
  Result weak = call({"compactness", lat, "--kind", "weak", "--max-c", "4", "-o", path("w.cert")});
  ASSERT_EQ(weak.code, kOk) << weak.err;
  EXPECT_EQ(first_line(weak.out).rfind("chi=2 ", 0), 0u);
  Result again = call({"certify", lat, "--cert", path("w.cert")});
  EXPECT_EQ(again.code, kOk) << again.err;
  EXPECT_EQ(first_line(again.out), "verified chi<=2 kind=weak targets=48");

  Result strict = call({"compactness", lat, "-o", path("s.cert")});
  EXPECT_EQ(first_line(strict.out).rfind("c=1 ", 0), 0u);
  EXPECT_EQ(first_line(call({"certify", lat, "--cert", path("s.cert")}).out),
            "verified c<=1 kind=strict targets=24");

  std::string id = write("id.mat", "1 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n");
  EXPECT_EQ(first_line(call({"certify", lat, "--basis", id}).out), "width=1 kind=strict targets=24");
  EXPECT_EQ(first_line(call({"certify", lat, "--basis", id, "--kind", "weak"}).out),
            "width=2 kind=weak targets=48");

  Result capped = call({"compactness", "--family", "LambdaNA", "--n", "5", "--a", "3", "--max-c", "1"});
  EXPECT_EQ(first_line(capped.out).rfind("c>1 ", 0), 0u);
}

TEST_F(Cli, TamperedCertificateExitsFour) {
  std::string lat = d4();
  ASSERT_EQ(call({"compactness", lat, "-o", path("s.cert")}).code, kOk);
  std::ifstream in(path("s.cert"));
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  std::size_t at = text.find("width 1");
  ASSERT_NE(at, std::string::npos);
  text.replace(at, 7, "width 3");
  write("bad.cert", text);
  EXPECT_EQ(call({"certify", lat, "--cert", path("bad.cert")}).code, kCertificateUnsound);
  std::string singular = write("sing.mat", "2 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n");
  EXPECT_EQ(call({"certify", lat, "--basis", singular}).code, kCertificateUnsound);
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(call({}).code, kUsage);
  EXPECT_EQ(call({"frobnicate"}).code, kUsage);
  EXPECT_EQ(call({"relvec", "--bogus"}).code, kUsage);
  EXPECT_EQ(call({"relvec"}).code, kUsage);
  EXPECT_EQ(call({"--help"}).code, kOk);
  EXPECT_EQ(call({"relvec", write("bad.lat", "latgram 1 n=2\n1 0\n")}).code, kMalformedInput);
  EXPECT_EQ(call({"relvec", write("ns.lat", "latgram 1 n=2\n1 1\n0 1\n")}).code, kMalformedInput);
  EXPECT_EQ(call({"relvec", path("missing.lat")}).code, kMalformedInput);
  EXPECT_EQ(call({"--candidate-cap", "5", "relvec", "--family", "Zn", "--n", "3"}).code, kResourceLimit);
  EXPECT_EQ(call({"certify", d4(), "--cert", write("junk.cert", "latcert 1 n=4\nkind nope\n")}).code,
            kMalformedInput);
}

TEST_F(Cli, RelaxedPrintsExplicitCertificate) {
  Result r = call({"relaxed", "--family", "LambdaNA", "--n", "5"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(first_line(r.out), "cbar=2 lambda_n=2/1");
  EXPECT_NE(r.out.find("explicit certificate width="), std::string::npos);
  EXPECT_NE(r.out.find("e 1/3 0/1 0/1 0/1 -1/3 gauge="), std::string::npos);
}

TEST_F(Cli, N2BasisGensSuperbasis) {
  Result n2 = call({"n2basis", "--family", "Zn", "--n", "3"});
  EXPECT_EQ(first_line(n2.out), "width=1 bound=9");
  Result gens = call({"gens", "--family", "LambdaNA", "--n", "5"});
  ASSERT_EQ(gens.code, kOk) << gens.err;
  EXPECT_EQ(first_line(gens.out), "|S|=10 c=2 levels=2");

  std::string z2 = write("z2.lat", "latgram 1 n=2\n1 0\n0 1\n");
  std::string ok = write("ok.vec", "1 0\n0 1\n-1 -1\n");
  EXPECT_EQ(first_line(call({"superbasis", z2, "--vectors", ok}).out), "accept width=1");
  std::string sum = write("sum.vec", "1 0\n0 1\n-1 0\n");
  EXPECT_EQ(first_line(call({"superbasis", z2, "--vectors", sum}).out), "reject reason=sum");
  std::string frac = write("frac.vec", "1/2 0\n0 1\n-1 -1\n");
  EXPECT_EQ(call({"superbasis", z2, "--vectors", frac}).code, kMalformedInput);
}

TEST_F(Cli, CvpAndOracle) {
  Result one = call({"cvp", "--family", "Zn", "--n", "2", "--target", "3/5,1/5"});
  ASSERT_EQ(one.code, kOk) << one.err;
  EXPECT_EQ(first_line(one.out).rfind("closest=1,0 dist2=1/5 k=", 0), 0u);
  EXPECT_NE(one.out.find("peak=2"), std::string::npos);
  Result mat = call({"cvp", "--family", "Zn", "--n", "2", "--target", "3/5,1/5", "--mode", "materialized"});
  EXPECT_NE(mat.out.find("peak=4"), std::string::npos);
  EXPECT_EQ(call({"cvp", "--family", "Zn", "--n", "2", "--target", "1,2,3"}).code, kUsage);
  EXPECT_EQ(call({"cvp", "--family", "Zn", "--n", "2", "--target", "1/0,2"}).code, kMalformedInput);

  Result o = call({"--seed", "7", "oracle", "--family", "LambdaNA", "--n", "5", "--targets", "20"});
  ASSERT_EQ(o.code, kOk) << o.err;
  EXPECT_NE(o.out.find("matched 20/20"), std::string::npos);
}

TEST_F(Cli, ByteStableOutputs) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"--seed", "3", "cvp", "--family", "Dn", "--n", "4", "--targets", "10"},
        std::vector<std::string>{"--seed", "3", "bench", "--family", "LambdaNA", "--n", "4", "--targets", "5"},
        std::vector<std::string>{"--jobs", "3", "relvec", "--family", "AnStar", "--n", "4"}}) {
    Result a = call(args);
    Result b = call(args);
    ASSERT_EQ(a.code, kOk) << a.err;
    EXPECT_EQ(a.out, b.out);
  }
  std::vector<std::string> serial{"relvec", "--family", "AnStar", "--n", "4"};
  std::vector<std::string> parallel{"--jobs", "4", "relvec", "--family", "AnStar", "--n", "4"};
  EXPECT_EQ(call(serial).out, call(parallel).out);
  EXPECT_NE(call({"--seed", "1", "cvp", "--family", "Zn", "--n", "2", "--targets", "3"}).out,
            call({"--seed", "2", "cvp", "--family", "Zn", "--n", "2", "--targets", "3"}).out);
}

TEST_F(Cli, BenchTable) {
  Result r = call({"bench", "--family", "LambdaNA", "--n", "5", "--a", "3", "--targets", "5"});
  ASSERT_EQ(r.code, kOk) << r.err;
  std::istringstream ss(r.out);
  std::string header, cols, mat, str;
  std::getline(ss, header);
  std::getline(ss, cols);
  std::getline(ss, mat);
  std::getline(ss, str);
  EXPECT_EQ(header, "n=5 c=2 targets=5");
  EXPECT_EQ(mat.rfind("materialized", 0), 0u);
  EXPECT_EQ(str.rfind("streaming", 0), 0u);
  EXPECT_EQ(mat.size(), cols.size());
  EXPECT_EQ(str.size(), cols.size());
  std::istringstream ms(mat), st(str);
  std::string mode;
  std::uint64_t mc, mp, sc, sp;
  ms >> mode >> mc >> mp;
  st >> mode >> sc >> sp;
  EXPECT_EQ(mc, 62u);
  EXPECT_EQ(mp, 62u);
  EXPECT_EQ(sc, 3124u);
  EXPECT_EQ(sp, 2u);
}

}  // namespace
}  // namespace latc::cli
