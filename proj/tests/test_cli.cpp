#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "injgen/builders.hpp"
#include "injgen/corpus.hpp"
#include "injgen/serialize.hpp"

using namespace injgen;
namespace fs = std::filesystem;

namespace {

const Field F3 = Field::prime(3);

struct Result {
  int code;
  std::string out;
  std::string err;
  Json json() const { return parse_json(out); }
};

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("injgen-cli-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  Result run(std::vector<std::string> args) {
    args.insert(args.begin(), {"--registry", (dir_ / "reg").string()});
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
  }

  std::string file(const std::string& name, const Json& j) {
    fs::path p = dir_ / name;
    write_json_file(p, j);
    return p.string();
  }

  std::string register_file(const std::string& name, const Json& j) {
    auto r = run({"register", file(name, j), "--label", name});
    EXPECT_EQ(r.code, 0) << r.err;
    return r.json().at("hash");
  }

  std::string arrows() {
    auto k2 = vertex_algebra(F3, 2);
    return register_file("m.json", bimodule_to_json(arrow_bimodule(F3, linear_quiver(2), k2)));
  }

  static Json dual_numbers_json(const std::string& role = "ungraded") {
    const Corpus corpus = bundled_corpus();
    return corpus.at("dual-numbers").objects.at(role);
  }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, CheckAcceptsAndRejects) {
  Json good = dual_numbers_json();
  EXPECT_EQ(run({"check", file("good.json", good)}).code, 0);

  Json bad = good;
  bad["mult"][0][1] = Json::array({Json::array({0, 1})});
  auto r = run({"check", file("bad.json", bad)});
  EXPECT_EQ(r.code, 1);
  EXPECT_FALSE(r.json().at("violations").empty());
}

TEST_F(CliTest, InputErrors) {
  EXPECT_EQ(run({"check", (dir_ / "missing.json").string()}).code, 2);
  std::ofstream(dir_ / "junk.json") << "{not json";
  EXPECT_EQ(run({"check", (dir_ / "junk.json").string()}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"build", "no-such-construction"}).code, 2);
  EXPECT_EQ(run({"--field", "fp:5", "register", file("d.json", dual_numbers_json())}).code, 2);
  EXPECT_EQ(run({"derive", "--target", "deadbeef"}).code, 2);
}

TEST_F(CliTest, PreconditionFailureExitsOne) {
  Json regular = bimodule_to_json(Bimodule::regular(vertex_algebra(F3, 1)));
  auto r = run({"build", "tensor-ring", file("k.json", regular)});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("precondition"), std::string::npos);
}

TEST_F(CliTest, ThetaZeroIsTrivialExtension) {
  std::string m = arrows();
  auto theta = run({"build", "theta", m, "--theta", "zero"});
  auto triv = run({"build", "trivial-ext", m});
  ASSERT_EQ(theta.code, 0) << theta.err;
  ASSERT_EQ(triv.code, 0) << triv.err;
  EXPECT_EQ(theta.json().at("hash"), triv.json().at("hash"));
  EXPECT_EQ(triv.json().at("dim"), 3);
}

TEST_F(CliTest, TrivialTwistIsTensor) {
  std::string d = register_file("d.json", dual_numbers_json("graded"));
  auto twisted = run({"build", "twisted", d, d, "--t", "one"});
  auto plain = run({"build", "tensor", "--in", "a=" + d, "--in", "b=" + d});
  ASSERT_EQ(twisted.code, 0) << twisted.err;
  ASSERT_EQ(plain.code, 0) << plain.err;
  EXPECT_EQ(twisted.json().at("hash"), plain.json().at("hash"));
  EXPECT_EQ(plain.json().at("dim"), 4);
}

TEST_F(CliTest, StrictTurnsInconclusiveIntoThree) {
  std::string d = file("d.json", dual_numbers_json());
  EXPECT_EQ(run({"--pd-cutoff", "3", "pd", d, "--side", "right"}).code, 0);
  EXPECT_EQ(run({"--pd-cutoff", "3", "--strict", "pd", d, "--side", "right"}).code, 0);

  Json simple = module_to_json(Module(algebra_from_json(dual_numbers_json()), Side::Right, 1,
                                      {Matrix::identity(F3, 1), Matrix(F3, 1, 1)}, {GroupElem{}}));
  std::string s = file("s.json", simple);
  auto lax = run({"--pd-cutoff", "3", "pd", s});
  EXPECT_EQ(lax.code, 0);
  EXPECT_TRUE(lax.json().at("pd").contains("atLeast"));
  EXPECT_EQ(run({"--pd-cutoff", "3", "--strict", "pd", s}).code, 3);
}

TEST_F(CliTest, NilpotencyAndPerfectness) {
  std::string m = arrows();
  auto nil = run({"nilpotency", m});
  ASSERT_EQ(nil.code, 0) << nil.err;
  EXPECT_EQ(nil.json().at("nilpotency").at("finite"), 2);
  EXPECT_EQ(run({"perfect", m}).code, 0);

  std::string d = file("d.json", dual_numbers_json());
  EXPECT_EQ(run({"--nil-cutoff", "3", "--strict", "nilpotency", d}).code, 3);
}

TEST_F(CliTest, TorSidesAgree) {
  std::string d = file("d.json", dual_numbers_json());
  auto r = run({"tor", d, d, "--max", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.json().at("agree").get<bool>());
}

TEST_F(CliTest, DeriveAndValidate) {
  std::string m = arrows();
  auto built = run({"build", "tensor-ring", m, "--label", "T"});
  ASSERT_EQ(built.code, 0) << built.err;
  fs::path cert = dir_ / "cert.json";
  auto d = run({"--out", cert.string(), "--pd-cutoff", "6", "--nil-cutoff", "6", "derive", "--target", "T"});
  ASSERT_EQ(d.code, 0) << d.err;
  EXPECT_EQ(read_json_file(cert).at("status"), "Established");

  auto ok = run({"validate-cert", cert.string()});
  EXPECT_EQ(ok.code, 0);
  EXPECT_TRUE(ok.json().at("ok").get<bool>());

  Json tampered = read_json_file(cert);
  tampered["steps"][0]["hypotheses"][0]["status"] = "refuted";
  EXPECT_EQ(run({"validate-cert", file("tampered.json", tampered)}).code, 1);
}

TEST_F(CliTest, ListShowsProvenance) {
  std::string m = arrows();
  ASSERT_EQ(run({"build", "trivial-ext", m}).code, 0);
  auto r = run({"list"});
  ASSERT_EQ(r.code, 0);
  bool found = false;
  const Json listing = r.json();
  for (const auto& o : listing.at("objects"))
    for (const auto& p : o.at("provenance")) found = found || p.at("construction") == "trivial-ext";
  EXPECT_TRUE(found);
}

TEST_F(CliTest, VerifySuiteIsDeterministic) {
  std::vector<std::string> args{"--seed", "7", "verify-paper", "--only", "block-power,degeneracy", "--samples", "3"};
  auto a = run(args);
  auto b = run(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.json().at("checks").size(), 2u);
  EXPECT_EQ(run({"verify-paper", "--only", "no-such-check"}).code, 2);
}

TEST_F(CliTest, CorpusWriteRoundTrips) {
  fs::path out = dir_ / "corpus";
  ASSERT_EQ(run({"corpus", "write", out.string()}).code, 0);
  EXPECT_TRUE(fs::exists(out / "manifest.json"));
  auto r = run({"verify-paper", "--corpus", out.string(), "--only", "zero-context", "--samples", "2"});
  EXPECT_EQ(r.code, 0) << r.err;
}
