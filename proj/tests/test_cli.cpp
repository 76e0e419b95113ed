// File formats, expressions and the command-line driver.
#include "commands.hpp"
#include "spec_io.hpp"

#include <gtest/gtest.h>
#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace tauslice;
using namespace tauslice::cli;
using Q = Rational;
using json = nlohmann::json;

namespace {

std::string fixture(const std::string& name) { return std::string(TAUSLICE_FIXTURES) + "/" + name; }

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

json report(const Run& r) { return json::parse(r.out); }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST(AlgebraFile, PrintThenParseGivesTheSameAlgebra) {
  for (const char* name : {"a3.alg", "loop2.alg", "kc.alg", "kc-tight.alg"}) {
    const auto spec = parse_algebra_file(fixture(name));
    const auto again = parse_algebra_text(print_algebra(spec));
    EXPECT_EQ(print_algebra(again), print_algebra(spec)) << name;
    const auto a = build_algebra<Q>(spec);
    const auto b = build_algebra<Q>(again);
    ASSERT_EQ(a->dim(), b->dim()) << name;
    for (int i = 0; i < a->dim(); ++i) {
      EXPECT_EQ(a->basis_path(i).arrows, b->basis_path(i).arrows);
      for (int j = 0; j < a->dim(); ++j) EXPECT_EQ(a->product(i, j), b->product(i, j));
    }
  }
}

TEST(AlgebraFile, KroneckerCycleDimensions) {
  EXPECT_EQ(build_algebra<Q>(parse_algebra_file(fixture("kc.alg")))->dim(), 18);
  EXPECT_EQ(build_algebra<Q>(parse_algebra_file(fixture("kc-tight.alg")))->dim(), 16);
}

TEST(AlgebraFile, AliasesAndComments) {
  const auto spec = parse_algebra_file(fixture("kc.alg"));
  const auto& arrows = spec.quiver.arrows;
  ASSERT_EQ(arrows.size(), 9u);
  EXPECT_EQ(arrows[4].id, "ga");
  EXPECT_EQ(arrows[4].alias, "γ");
}

TEST(AlgebraFile, ErrorsArePositioned) {
  const std::string head = "name: t\nfield: Q\nvertices: 1 2 3\narrow a1: 1 -> 2\narrow ga: 3 -> 1\n";
  try {
    parse_algebra_text(head + "relation: ga*\n", "bad.alg");
    FAIL() << "expected a parse error";
  } catch (const SpecError& e) {
    EXPECT_EQ(e.line(), 6);
    EXPECT_GT(e.column(), 11);
    EXPECT_NE(std::string(e.what()).find("bad.alg:6:"), std::string::npos);
  }
  try {
    build_algebra<Q>(parse_algebra_text(head + "relation: a1*ga\n", "bad.alg"), "bad.alg");
    FAIL() << "expected a composition error";
  } catch (const SpecError& e) {
    EXPECT_EQ(e.line(), 6);
  }
  EXPECT_THROW(parse_algebra_text(head + "arrow b: 1 -> 9\n"), SpecError);
  EXPECT_THROW(parse_algebra_text("field: GF(4)\nvertices: 1\n"), SpecError);
}

TEST(AlgebraFile, PositiveCharacteristic) {
  auto spec = parse_algebra_file(fixture("a3.alg"));
  spec.field = FieldSpec{FieldKind::prime_field, 3};
  const auto again = parse_algebra_text(print_algebra(spec));
  EXPECT_EQ(again.field.kind, FieldKind::prime_field);
  EXPECT_EQ(again.field.characteristic, 3);
  ModulusScope scope(3);
  EXPECT_EQ(build_algebra<ModInt>(again)->dim(), 6);
}

TEST(ModuleExpressions, StandardModules) {
  const auto a = build_algebra<Q>(parse_algebra_file(fixture("kc.alg")));
  EXPECT_EQ(evaluate_expression<Q>("P(3)", a).dims(), (std::vector<int>{1, 1, 1, 0, 0}));
  EXPECT_EQ(evaluate_expression<Q>("S(1) (+) S(2)", a).dims(), (std::vector<int>{1, 1, 0, 0, 0}));
  EXPECT_EQ(evaluate_expression<Q>("S(4)^2 (+) P(3)", a).dims(), (std::vector<int>{1, 1, 1, 2, 0}));
  EXPECT_EQ(evaluate_expression<Q>("tau_minus(tau(S(1)))", a).dims(), (std::vector<int>{1, 0, 0, 0, 0}));
  EXPECT_EQ(evaluate_expression<Q>("A", a).total_dim(), a->dim());
  EXPECT_EQ(evaluate_expression<Q>("DA", a).total_dim(), a->dim());
  EXPECT_THROW(evaluate_expression<Q>("S(7)", a), SpecError);
  EXPECT_THROW(evaluate_expression<Q>("S(1) (+)", a), SpecError);
}

TEST(ModuleFile, ExplicitModulesAreCheckedAgainstTheRelations) {
  const auto a = build_algebra<Q>(parse_algebra_file(fixture("kc.alg")));
  const auto t1 = evaluate_modules<Q>(parse_module_file(fixture("t1.mods")), a);
  ASSERT_EQ(t1.size(), 5u);
  EXPECT_EQ(t1[0].dims(), (std::vector<int>{2, 0, 0, 1, 0}));
  EXPECT_EQ(t1[2].dims(), (std::vector<int>{1, 1, 1, 0, 0}));

  const std::string bad = "module: bad\ndims: 0 1 1 0 1\nga: 1\nal1: 1\n";
  try {
    evaluate_modules<Q>(parse_module_text(bad, "bad.mods"), a);
    FAIL() << "expected a relation violation";
  } catch (const SpecError& e) {
    EXPECT_NE(std::string(e.what()).find("ga*al1"), std::string::npos) << e.what();
  }
  EXPECT_THROW(evaluate_modules<Q>(parse_module_text("dims: 1 0 0 0 0\nga: 1\n"), a), SpecError);
  EXPECT_THROW(parse_module_text("module: lonely\n"), SpecError);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"check-tau-slice", fixture("kc-tight.alg"), "--slice", fixture("t1.mods")}).code, exit_true);
  EXPECT_EQ(run({"check-tau-slice", fixture("kc-tight.alg"), "--slice", "P(3)"}).code, exit_false);
  EXPECT_EQ(run({"check-tau-slice", fixture("a2.alg"), "--slice", "A"}).code, exit_true);
  EXPECT_EQ(run({"tau", fixture("a2.alg"), "--module", "S(9)"}).code, exit_input_error);
  EXPECT_EQ(run({"tau", fixture("a2.alg")}).code, exit_input_error);
  EXPECT_EQ(run({"build", fixture("missing.alg")}).code, exit_input_error);
  EXPECT_EQ(run({"frobnicate"}).code, exit_input_error);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, CertifyOnA2) {
  const auto r = run({"certify-repdim3", fixture("a2.alg"), "--t-slices", fixture("reg.mods")});
  ASSERT_EQ(r.code, exit_true) << r.err;
  const auto j = report(r);
  EXPECT_EQ(j["verdict"], "certified-le-3");
  EXPECT_EQ(j["result"]["endo"]["gldim"], 2);
  EXPECT_EQ(j["schema"], kReportSchema);
  EXPECT_FALSE(j.contains("timings"));
}

TEST(Cli, CertifyNeedsDeterminedFamily) {
  const auto r = run({"certify-repdim3", fixture("loop2.alg")});
  EXPECT_EQ(r.code, exit_inconclusive);
  EXPECT_EQ(run({"certify-repdim3", fixture("loop2.alg"), "--override", "--route", "endo"}).code, exit_true);
}

TEST(Cli, KnitLoop) {
  const auto r = run({"knit", fixture("loop2.alg"), "--seed", "P(1)", "--max-nodes", "5"});
  ASSERT_EQ(r.code, exit_true) << r.err;
  EXPECT_EQ(report(r)["result"]["nodes"].size(), 2u);
}

TEST(Cli, ReportsAreDeterministic) {
  const auto dir = std::filesystem::temp_directory_path() / "tauslice_cli_test";
  std::filesystem::create_directories(dir);
  std::vector<std::string> outputs, dots;
  for (int i = 0; i < 2; ++i) {
    const auto dot = (dir / "k.dot").string();
    const auto r = run({"knit", fixture("kc-tight.alg"), "--seed", "P(3)", "--max-nodes", "20", "--dot", dot});
    outputs.push_back(r.out);
    dots.push_back(slurp(dot));
  }
  EXPECT_EQ(outputs[0], outputs[1]);
  EXPECT_EQ(dots[0], dots[1]);
  EXPECT_NE(dots[0].find("digraph"), std::string::npos);
  const auto text1 = run({"tau", fixture("kc.alg"), "--module", "S(1)", "--format", "text"});
  const auto text2 = run({"tau", fixture("kc.alg"), "--module", "S(1)", "--format", "text"});
  EXPECT_EQ(text1.out, text2.out);
  EXPECT_NE(text1.out.find("verdict: computed"), std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST(Cli, KroneckerCycleIsDeterminedOnTheKnittedWindow) {
  const auto r = run({"check-determined", fixture("kc-tight.alg"), "--t-slices", fixture("t1.mods"), fixture("t2.mods"),
                      fixture("t3.mods"), "--max-nodes", "20"});
  ASSERT_EQ(r.code, exit_inconclusive) << r.err;
  const auto j = report(r);
  EXPECT_EQ(j["verdict"], "determined-on-inventory");
  EXPECT_EQ(j["result"]["scope"], "relative-to-inventory");
  EXPECT_EQ(j["inputs"]["t_slices"].size(), 3u);
}
