#include "support/algebras.hpp"
#include "support/modules.hpp"

#include "tauslice/ar.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

using namespace tauslice;
using namespace tauslice::testing;
using Q = Rational;
using Mod = Module<Q>;

namespace {

std::vector<Mod> kc_window(bool tight) {
  static std::map<bool, std::vector<Mod>> cache;
  auto it = cache.find(tight);
  if (it != cache.end()) return it->second;
  const auto mods = [tight] {
    const auto a = tight ? kronecker_cycle_tight<Q>() : kronecker_cycle<Q>();
    const auto c = knit_component<Q>({projective_module<Q>(a, 2)}, {15, 64});
    std::vector<Mod> out;
    for (const auto& n : c.nodes) out.push_back(n.module);
    return out;
  }();
  cache[tight] = mods;
  return mods;
}

std::set<std::string> labels(const ARComponent<Q>& c) {
  std::set<std::string> out;
  for (const auto& n : c.nodes) out.insert(n.label);
  return out;
}

}  // namespace

TEST(AR, TauOnA2) {
  const auto a = linear_a<Q>(2);
  EXPECT_EQ(is_isomorphic(tau(simple_module<Q>(a, 0)), simple_module<Q>(a, 1)), Tri::yes);
  EXPECT_TRUE(tau(projective_module<Q>(a, 0)).is_zero());
  EXPECT_EQ(ext1_dim(simple_module<Q>(a, 0), simple_module<Q>(a, 1)), 1);
  EXPECT_EQ(ext1_dim(simple_module<Q>(a, 1), simple_module<Q>(a, 0)), 0);
  const auto out = ar_neighbors(projective_module<Q>(a, 1), Direction::out);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].multiplicity, 1);
  EXPECT_EQ(is_isomorphic(out[0].module, projective_module<Q>(a, 0)), Tri::yes);
}

TEST(AR, TauOfSimpleThreeIsP3) {
  const auto a = kronecker_cycle_tight<Q>();
  const auto s3 = simple_module<Q>(a, 2);
  const auto p3 = projective_module<Q>(a, 2);
  EXPECT_EQ(is_isomorphic(tau(s3), p3), Tri::yes);
  const auto seq = almost_split_sequence(s3);
  EXPECT_TRUE(is_exact_nonsplit(seq));
  std::set<std::string> middle;
  for (const auto& c : seq.middle_summands) {
    EXPECT_EQ(c.multiplicity, 1);
    middle.insert(loewy_series(c.module));
  }
  EXPECT_EQ(middle, (std::set<std::string>{"3/1", "3/2"}));
}

TEST(AR, TauOfSimpleThreeWithoutExtraZeroRelations) {
  const auto a = kronecker_cycle<Q>();
  const auto t = tau(simple_module<Q>(a, 2));
  EXPECT_EQ(t.dims(), (std::vector<int>{1, 1, 1, 1, 1}));
  EXPECT_EQ(loewy_series(t), "54/3/21");
  EXPECT_EQ(hom_dim(t, t), 1);
  const auto seq = almost_split_sequence(simple_module<Q>(a, 2));
  EXPECT_TRUE(is_exact_nonsplit(seq));
  ASSERT_EQ(seq.middle_summands.size(), 1u);
  EXPECT_EQ(loewy_series(seq.middle_summands[0].module), "543/3/21");
}

TEST(AR, TranslatesAreMutuallyInverse) {
  for (const auto& a : {linear_a<Q>(3), kronecker_cycle<Q>()}) {
    const int n = a->num_vertices();
    for (int v = 0; v < n; ++v) {
      EXPECT_TRUE(tau(projective_module<Q>(a, v)).is_zero());
      EXPECT_TRUE(tau_minus(injective_module<Q>(a, v)).is_zero());
    }
  }
  for (bool tight : {false, true})
  for (const auto& m : kc_window(tight)) {
    if (!is_projective(m)) EXPECT_EQ(is_isomorphic(tau_minus(tau(m)), m), Tri::yes) << loewy_series(m);
    if (!is_injective(m)) EXPECT_EQ(is_isomorphic(tau(tau_minus(m)), m), Tri::yes) << loewy_series(m);
  }
}

TEST(AR, AuslanderReitenFormulaOnA3) {
  const auto a = linear_a<Q>(3);
  const auto inv = linear_inventory<Q>(a);
  for (const auto& m : inv)
    for (const auto& n : inv) {
      const int e = ext1_dim(m, n);
      EXPECT_EQ(e, stable_hom_dim_injective(n, tau(m)));
      EXPECT_EQ(e, stable_hom_dim_projective(tau_minus(n), m));
    }
}

TEST(AR, AuslanderReitenFormulaOnKroneckerCycle) {
  int pairs = 0;
  for (bool tight : {false, true})
  for (const auto& m : kc_window(tight))
    for (const auto& n : kc_window(tight)) {
      const int e = ext1_dim(m, n);
      ASSERT_EQ(e, stable_hom_dim_injective(n, tau(m))) << loewy_series(m) << " " << loewy_series(n);
      ++pairs;
    }
  EXPECT_GE(pairs, 100);
}

TEST(AR, AuslanderReitenFormulaDualForm) {
  const auto mods = kc_window(true);
  for (const auto& m : mods)
    for (const auto& n : mods) {
      ASSERT_EQ(ext1_dim(m, n), stable_hom_dim_projective(tau_minus(n), m)) << loewy_series(m) << " " << loewy_series(n);
    }
}

TEST(AR, AlmostSplitOnA3) {
  const auto a = linear_a<Q>(3);
  const auto inv = linear_inventory<Q>(a);
  for (const auto& x : inv) {
    if (is_projective(x)) {
      EXPECT_THROW(almost_split_sequence(x), std::invalid_argument);
      continue;
    }
    const auto seq = almost_split_sequence(x);
    EXPECT_TRUE(is_exact_nonsplit(seq));
    EXPECT_TRUE(is_right_almost_split_on(seq, inv));
    EXPECT_EQ(is_isomorphic(seq.left, tau(x)), Tri::yes);
  }
  EXPECT_THROW(almost_split_sequence(direct_sum(inv[1], inv[2])), std::invalid_argument);
}

TEST(AR, KnitA2Golden) {
  const auto a = linear_a<Q>(2);
  const auto c = knit_component<Q>({simple_module<Q>(a, 0)}, {});
  EXPECT_EQ(c.nodes.size(), 3u);
  EXPECT_EQ(c.arrows.size(), 2u);
  EXPECT_EQ(c.tau_links.size(), 1u);
  EXPECT_TRUE(c.complete());
  EXPECT_EQ(emit_dot(c),
            "digraph AR {\n"
            "  n0 [label=\"1\"];\n"
            "  n1 [label=\"2\"];\n"
            "  n2 [label=\"1/2\"];\n"
            "  n1 -> n2;\n"
            "  n2 -> n0;\n"
            "  n0 -> n1 [style=dashed];\n"
            "}\n");
}

TEST(AR, KnitA3IsCompleteAndSeedIndependent) {
  const auto a = linear_a<Q>(3);
  const auto inv = linear_inventory<Q>(a);
  std::set<std::string> expected;
  for (const auto& m : inv) expected.insert(loewy_series(m));
  for (std::size_t s = 0; s < inv.size(); ++s) {
    const auto c = knit_component<Q>({inv[s]}, {});
    EXPECT_EQ(c.nodes.size(), 6u);
    EXPECT_TRUE(c.complete());
    EXPECT_EQ(labels(c), expected);
    EXPECT_EQ(c.arrows.size(), 6u);
    EXPECT_EQ(c.tau_links.size(), 3u);
  }
  const auto c1 = knit_component<Q>({inv[0], inv[5]}, {});
  const auto c2 = knit_component<Q>({inv[5], inv[0]}, {});
  EXPECT_EQ(labels(c1), labels(c2));
  EXPECT_EQ(emit_dot(c1), emit_dot(knit_component<Q>({inv[0], inv[5]}, {})));
}

TEST(AR, KnitFromP3OnKroneckerCycle) {
  const auto a = kronecker_cycle_tight<Q>();
  const auto c = knit_component<Q>({projective_module<Q>(a, 2)}, {15, 64});
  EXPECT_LE(c.nodes.size(), 15u);
  const auto got = labels(c);
  for (const char* l : {"3/21", "3/2", "3/1", "3", "4/3", "5/3", "5", "4"}) EXPECT_TRUE(got.count(l)) << l;
  EXPECT_TRUE(c.diagnostics.empty());
  const int p3 = c.find(projective_module<Q>(a, 2));
  const int s3 = c.find(simple_module<Q>(a, 2));
  ASSERT_GE(p3, 0);
  ASSERT_GE(s3, 0);
  EXPECT_EQ(c.tau_links.at(s3), p3);
  const int tri = c.find(projective_module<Q>(a, 1));
  const int s5 = c.find(simple_module<Q>(a, 4));
  ASSERT_GE(tri, 0);
  ASSERT_GE(s5, 0);
  EXPECT_EQ(c.arrows.at({s5, tri}), 3);
}

TEST(AR, KnitCapsMustBePositive) {
  const auto a = linear_a<Q>(2);
  EXPECT_THROW(knit_component<Q>({simple_module<Q>(a, 0)}, {0, 5}), std::invalid_argument);
  const auto c = knit_component<Q>({simple_module<Q>(a, 0)}, {1, 5});
  EXPECT_EQ(c.nodes.size(), 1u);
  EXPECT_TRUE(c.cap_hit);
  EXPECT_EQ(c.frontier, std::vector<int>{0});
}

TEST(AR, TauRigidity) {
  const auto a = kronecker_cycle<Q>();
  for (int v = 0; v < a->num_vertices(); ++v) EXPECT_TRUE(is_tau_rigid(projective_module<Q>(a, v)));
  const auto ld = dual_numbers<Q>();
  EXPECT_FALSE(is_tau_rigid(simple_module<Q>(ld, 0)));
}
