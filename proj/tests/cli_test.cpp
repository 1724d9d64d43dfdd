#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "support.hpp"
#include "xsect/cli.hpp"

using namespace xsect;
using namespace xsect::testing;

namespace {

namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out, err;
  Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("xsect_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) {
    auto p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  fs::path dir_;
};

const char* kCurve = R"({"field":"QQ","nvars":2,"gens":["x2 - x1^2"]})";

}  // namespace

TEST_F(Cli, MemberExitCodes) {
  auto I = file("i.json", R"({"field":"QQ","nvars":2,"gens":["x1"]})");
  auto in = run({"member", "--ideal", I, "--poly", "x1^2*x2 + x1"});
  EXPECT_EQ(in.code, cli::kIn);
  EXPECT_EQ(in.json()["verdict"], "In");
  EXPECT_EQ(in.json()["certificate"]["cofactors"][0], "x1*x2 + 1");

  auto out = run({"member", "--ideal", I, "--poly", "x1 + 1"});
  EXPECT_EQ(out.code, cli::kNotIn);
  EXPECT_EQ(out.json()["verdict"], "NotIn");

  auto capped = run({"member", "--ideal", I, "--poly", "x2", "--bound", "3"});
  EXPECT_EQ(capped.code, cli::kInconclusive);
  EXPECT_EQ(capped.json()["verdict"], "NotFoundWithinBound");

  auto plain = run({"--plain", "member", "--ideal", I, "--poly", "x1*x2"});
  EXPECT_EQ(plain.out, "In\nx2\n");
}

TEST_F(Cli, RadicalMember) {
  auto I = file("i.json", R"({"field":"QQ","nvars":2,"gens":["x1*x2"]})");
  EXPECT_EQ(run({"radical-member", "--ideal", I, "--poly", "x1"}).code, cli::kNotIn);
  auto J = file("j.json", R"({"field":"QQ","nvars":1,"gens":["x1^2"]})");
  auto k = run({"radical-member", "--ideal", J, "--poly", "x1", "--engine", "kollar"});
  EXPECT_EQ(k.code, cli::kIn);
  EXPECT_EQ(k.json()["verdict"], "InRadical");
  EXPECT_EQ(run({"radical-member", "--ideal", J, "--poly", "x1", "--engine", "magic"}).code, cli::kUsage);
}

TEST_F(Cli, Sliced) {
  auto I = file("i.json", R"({"field":"fp:65537","nvars":2,"gens":["x2 - x1^2"]})");
  auto no = run({"member-sliced", "--ideal", I, "--poly", "x2", "--points", "0,3,1,2"});
  EXPECT_EQ(no.code, cli::kNotIn);
  EXPECT_EQ(no.json()["failed_at"], "1");
  auto few = run({"member-sliced", "--ideal", I, "--poly", "x1*x2 - x1^3", "--count", "5", "--seed", "9"});
  EXPECT_EQ(few.code, cli::kInconclusive);
  EXPECT_EQ(few.json()["verdict"], "SampleTooSmall");
  EXPECT_EQ(few.json()["passed"], 5);
  EXPECT_EQ(few.json()["required"], "367");
  auto rad = run({"--jobs", "2", "radical-member-sliced", "--ideal", I, "--poly", "x2 - x1^2", "--count", "7", "--degV", "2"});
  EXPECT_EQ(rad.code, cli::kIn);
  EXPECT_EQ(run({"member-sliced", "--ideal", I, "--poly", "x2", "--points", "1,1"}).code, cli::kMath);
}

TEST_F(Cli, SliceAndDataset) {
  auto I = file("i.json", R"({"field":"QQ","nvars":2,"gens":["x1^2*x2"]})");
  auto s = run({"slice", "--ideal", I, "--at", "5"});
  EXPECT_EQ(s.code, 0);
  EXPECT_EQ(s.out, R"({"field":"QQ","nvars":1,"gens":["25*x1"]})"
                   "\n");

  auto J = file("j.json", R"({"field":"QQ","nvars":2,"gens":["x1*x2 + 1"]})");
  auto ds = run({"dataset", "--ideal", J, "--points", "1,2,3,4"});
  ASSERT_EQ(ds.code, 0);
  EXPECT_EQ(ds.json()["mode"], "sectional");
  EXPECT_EQ(ds.json()["slices"][1]["g"], "x1 + 1/2");

  // dataset -> reconstruct
  auto path = file("ds.json", ds.out);
  auto rec = run({"reconstruct", "--slices", path, "--degree", "2"});
  EXPECT_EQ(rec.code, 0);
  EXPECT_EQ(rec.json()["gens"][0], "x1*x2 + 1");
  EXPECT_EQ(run({"--plain", "reconstruct", "--slices", path, "--degree", "2"}).out, "x1*x2 + 1\n");

  auto full = run({"dataset", "--ideal", file("c.json", kCurve), "--mode", "full", "--points", "1,2,3,4,5,6"});
  ASSERT_EQ(full.code, 0);
  auto rg = run({"recover-gens", "--slices", file("full.json", full.out), "--degree", "2"});
  EXPECT_EQ(rg.code, 0);
  EXPECT_EQ(rg.json()["gens"], Json::array({"x1^2 - x2"}));
}

TEST_F(Cli, BoundsAndSharpness) {
  auto b = run({"bounds", "--which", "hermann", "--d", "3", "--delta", "2", "--r", "2", "--n", "3"});
  EXPECT_EQ(b.code, 0);
  EXPECT_EQ(b.json()["value"], "515");
  EXPECT_EQ(run({"--plain", "bounds", "--which", "algebraic", "--d", "2", "--delta", "2", "--r", "2", "--n", "2"}).out,
            "2315\n");
  EXPECT_EQ(run({"bounds", "--which", "nope"}).code, cli::kUsage);
  EXPECT_EQ(run({"bounds", "--which", "hermann", "--r", "0", "--n", "1"}).code, cli::kMath);

  auto s = run({"sharpness", "--degree", "2", "--field", "fp:13"});
  ASSERT_EQ(s.code, 0);
  EXPECT_EQ(s.json()["points"], Json::array({"6", "5", "2"}));
  EXPECT_EQ(s.json()["slices_equal_at_all_points"], true);
  EXPECT_EQ(s.json()["ideals_distinct"], true);
  auto p = run({"sharpness", "--degree", "2", "--field", "fp:13", "--variant", "printed"});
  EXPECT_EQ(p.json()["slices_equal_at_all_points"], false);
  auto q = run({"sharpness", "--degree", "2", "--field", "QQ"});
  EXPECT_EQ(q.code, cli::kMath);
  EXPECT_EQ(q.json()["error"]["kind"], "NoRootExists");
}

TEST_F(Cli, GroebnerAndLinchange) {
  auto I = file("i.json", R"({"field":"QQ","nvars":3,"gens":["x2 - x1^2","x3 - x1^3"]})");
  auto g = run({"groebner", "--ideal", I, "--order", "elim:1"});
  ASSERT_EQ(g.code, 0);
  bool cusp = false;
  const Json gj = g.json();
  for (const auto& s : gj["gens"]) cusp = cusp || s == "x2^3 - x3^2" || s == "-x2^3 + x3^2";
  EXPECT_TRUE(cusp) << g.out;
  EXPECT_EQ(run({"groebner", "--ideal", I, "--order", "lex"}).code, cli::kUsage);

  auto J = file("j.json", R"({"field":"QQ","nvars":2,"gens":["x1 + x2"]})");
  auto l = run({"linchange", "--ideal", J, "--matrix", "1,1;0,1"});
  EXPECT_EQ(l.json()["gens"][0], "x1 + 2*x2");
  auto sing = run({"linchange", "--ideal", J, "--matrix", "1,1;1,1"});
  EXPECT_EQ(sing.code, cli::kMath);
  EXPECT_EQ(sing.json()["error"]["kind"], "SingularMatrix");
}

TEST_F(Cli, UsageAndMathErrors) {
  EXPECT_EQ(run({}).code, cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kUsage);
  EXPECT_EQ(run({"member", "--poly", "x1"}).code, cli::kUsage);
  EXPECT_EQ(run({"member", "--ideal", (dir_ / "missing.json").string(), "--poly", "x1"}).code, cli::kUsage);
  EXPECT_EQ(run({"--jobs", "0", "bounds", "--which", "kollar"}).code, cli::kUsage);

  auto I = file("i.json", kCurve);
  auto bad = run({"member", "--ideal", I, "--poly", "x1 + * x2"});
  EXPECT_EQ(bad.code, cli::kMath);
  EXPECT_EQ(bad.json()["error"]["kind"], "SyntaxError");
  EXPECT_EQ(bad.json()["error"]["position"], 5);

  auto plain = run({"--plain", "member", "--ideal", I, "--poly", "x3"});
  EXPECT_EQ(plain.code, cli::kMath);
  EXPECT_TRUE(plain.out.empty());
  EXPECT_NE(plain.err.find("UnknownVariable"), std::string::npos);

  auto big = file("big.json", R"({"field":"QQ","nvars":3,"gens":["x1^3 - x2","x2^3 - x3","x3^3 - x1"]})");
  auto cap = run({"member", "--ideal", big, "--poly", "x3"});
  EXPECT_EQ(cap.code, cli::kMath);
  EXPECT_EQ(cap.json()["error"]["kind"], "FeasibilityCapExceeded");
  EXPECT_EQ(cap.json()["error"]["bound"], "13123");

  EXPECT_EQ(run({"member", "--ideal", file("junk.json", "{nope"), "--poly", "x1"}).code, cli::kMath);
  EXPECT_EQ(run({"member", "--ideal", file("f.json", R"({"field":"fp:12","nvars":1,"gens":["x1"]})"), "--poly", "x1"})
                .code,
            cli::kMath);
}

TEST(Io, IdealRoundTripIsExact) {
  std::mt19937_64 rng(81);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 1 + rng() % 3;
    auto run_one = [&](const auto& field) {
      std::vector<std::decay_t<decltype(random_poly(field, n, 1, 1, rng))>> gens;
      for (int k = 0, r = 1 + rng() % 3; k < r; ++k) gens.push_back(random_poly(field, n, rng() % 4, 1 + rng() % 4, rng));
      const std::string text = ideal_to_json(field, n, gens).dump();
      auto back = ideal_from_json(field, Json::parse(text));
      // dropping zero generators is the only normalisation
      if (std::none_of(gens.begin(), gens.end(), [](const auto& g) { return g.is_zero(); })) {
        EXPECT_EQ(ideal_to_json(back).dump(), text);
      }
      auto again = ideal_from_json(field, Json::parse(ideal_to_json(back).dump()));
      EXPECT_EQ(ideal_to_json(again).dump(), ideal_to_json(back).dump());
      EXPECT_EQ(again.gens(), back.gens());
    };
    if (i % 2) {
      run_one(RationalField{});
    } else {
      run_one(kF65537);
    }
  }
  const std::string fixed = R"({"field":"QQ","nvars":2,"gens":["-1/2*x1^3 + x2","x1 + 1"]})";
  EXPECT_EQ(ideal_to_json(ideal_from_json(RationalField{}, Json::parse(fixed))).dump(), fixed);
}

TEST(Io, DatasetRoundTripIsExact) {
  std::mt19937_64 rng(82);
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = 2 + rng() % 2;
    std::vector<MultiPoly<PrimeField>> gens{random_poly(kF65537, n, 1 + rng() % 3, 1 + rng() % 4, rng)};
    const bool full = rng() % 2;
    if (full) gens.push_back(random_poly(kF65537, n, 2, 2, rng));
    Ideal<PrimeField> I(kF65537, n, gens);
    auto pts = distinct_points(kF65537, 1 + rng() % 6, rng);
    auto ds = build_dataset<PrimeField>(I, std::span<const Residue>(pts),
                                        full ? SliceMode::FullSlices : SliceMode::SectionalGenerators);
    const std::string text = dataset_to_json(ds).dump();
    EXPECT_EQ(dataset_to_json(dataset_from_json(kF65537, Json::parse(text))).dump(), text);
  }
}

TEST(Io, RejectsMalformedFiles) {
  RationalField Q;
  auto kind = [&](const char* text, bool dataset) {
    try {
      if (dataset) {
        dataset_from_json(Q, Json::parse(text));
      } else {
        ideal_from_json(Q, Json::parse(text));
      }
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Internal;
  };
  EXPECT_EQ(kind(R"({"field":"fp:5","nvars":1,"gens":["x1"]})", false), ErrorKind::FieldMismatch);
  EXPECT_EQ(kind(R"({"field":"QQ","nvars":1})", false), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind(R"({"field":"QQ","nvars":1,"gens":["x2"]})", false), ErrorKind::UnknownVariable);
  EXPECT_EQ(kind(R"({"field":"QQ","nvars":2,"mode":"half","slices":[]})", true), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind(R"({"field":"QQ","nvars":2,"mode":"sectional","slices":[{"alpha":"1","g":"x1"},{"alpha":"1","g":"x1"}]})",
                 true),
            ErrorKind::DuplicatePoints);
}
