#include "support/algebras.hpp"
#include "support/modules.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace tauslice;
using namespace tauslice::testing;
using Q = Rational;
using Mod = Module<Q>;

namespace {

// D(A e_i) written directly on the dual path basis, independent of the opposite algebra.
Mod injective_by_dual_paths(const BoundQuiverAlgebra<Q>::Ptr& a, int i) {
  const auto& q = a->quiver();
  std::vector<std::vector<int>> at(static_cast<std::size_t>(a->num_vertices()));
  for (int p : a->paths_to(i)) at[static_cast<std::size_t>(a->source(p))].push_back(p);
  std::vector<int> dims;
  for (const auto& s : at) dims.push_back(static_cast<int>(s.size()));
  std::vector<Matrix<Q>> action;
  for (int x = 0; x < q.num_arrows(); ++x) {
    const auto& arr = q.arrows[static_cast<std::size_t>(x)];
    const auto& rows = at[static_cast<std::size_t>(arr.source)];
    const auto& cols = at[static_cast<std::size_t>(arr.target)];
    Matrix<Q> m = zero_matrix<Q>(static_cast<Index>(rows.size()), static_cast<Index>(cols.size()));
    const auto ax = a->basis_element(a->basis_index(Path{arr.source, {x}}));
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const auto prod = a->multiply(ax, a->basis_element(cols[c]));
      for (std::size_t r = 0; r < rows.size(); ++r) m(static_cast<Index>(r), static_cast<Index>(c)) = prod(rows[r]);
    }
    action.push_back(m);
  }
  return Mod(a, dims, action);
}

std::vector<Mod> standard_modules(const BoundQuiverAlgebra<Q>::Ptr& a) {
  std::vector<Mod> out;
  for (int v = 0; v < a->num_vertices(); ++v) {
    out.push_back(simple_module<Q>(a, v));
    out.push_back(projective_module<Q>(a, v));
    out.push_back(injective_module<Q>(a, v));
  }
  return out;
}

std::vector<BoundQuiverAlgebra<Q>::Ptr> test_algebras() {
  return {linear_a<Q>(2), linear_a<Q>(3), dual_numbers<Q>(), kronecker_cycle<Q>()};
}

}  // namespace

TEST(Module, RejectsRelationViolation) {
  const auto a = dual_numbers<Q>();
  EXPECT_THROW(rep<Q>(a, {1}, {{"x", mat<Q>(1, 1, {1})}}), std::invalid_argument);
  EXPECT_NO_THROW(rep<Q>(a, {2}, {{"x", mat<Q>(2, 2, {0, 1, 0, 0})}}));
  EXPECT_THROW(rep<Q>(a, {2}, {{"x", mat<Q>(1, 2, {0, 1})}}), std::invalid_argument);
}

TEST(Module, StandardModulesA2) {
  const auto a = linear_a<Q>(2);
  const auto p1 = projective_module<Q>(a, 0);
  EXPECT_EQ(p1.dims(), (std::vector<int>{1, 1}));
  EXPECT_EQ(is_isomorphic(injective_module<Q>(a, 1), p1), Tri::yes);
  EXPECT_EQ(hom_dim(simple_module<Q>(a, 0), simple_module<Q>(a, 1)), 0);
  // Kernel of P(1) -> S(1) is S(2).
  const auto pi = projective_cover(simple_module<Q>(a, 0));
  EXPECT_EQ(pi.cover.dims(), p1.dims());
  EXPECT_EQ(is_isomorphic(map_kernel(pi.map).module, simple_module<Q>(a, 1)), Tri::yes);
  EXPECT_EQ(is_isomorphic(socle(p1).module, simple_module<Q>(a, 1)), Tri::yes);
  const auto env = injective_envelope(simple_module<Q>(a, 1));
  EXPECT_EQ(is_isomorphic(env.envelope, p1), Tri::yes);
  EXPECT_TRUE(env.map.is_injective());
  EXPECT_TRUE(env.map.is_homomorphism());
  const auto pres = min_proj_presentation(simple_module<Q>(a, 0));
  EXPECT_EQ(is_isomorphic(pres.p1.cover, projective_module<Q>(a, 1)), Tri::yes);
  EXPECT_TRUE(pres.map.is_homomorphism());
}

TEST(Module, ProjectivesAndInjectivesEvaluate) {
  for (const auto& a : test_algebras()) {
    const auto mods = standard_modules(a);
    for (const auto& m : mods) {
      ASSERT_FALSE(m.relation_violation().has_value());
      for (int v = 0; v < a->num_vertices(); ++v) {
        EXPECT_EQ(hom_dim(projective_module<Q>(a, v), m), m.dim(v));
        EXPECT_EQ(hom_dim(m, injective_module<Q>(a, v)), m.dim(v));
      }
    }
    for (int v = 0; v < a->num_vertices(); ++v)
      EXPECT_EQ(is_isomorphic(injective_by_dual_paths(a, v), injective_module<Q>(a, v)), Tri::yes);
  }
}

TEST(Module, HomBasisIntertwines) {
  for (const auto& a : test_algebras()) {
    const auto mods = standard_modules(a);
    for (const auto& m : mods)
      for (const auto& n : mods)
        for (const auto& f : hom_basis(m, n).basis) ASSERT_TRUE(f.is_homomorphism());
  }
}

TEST(Module, KernelImageBookkeeping) {
  const auto a = kronecker_cycle<Q>();
  const auto mods = standard_modules(a);
  for (const auto& m : mods) {
    for (const auto& n : mods) {
      for (const auto& f : hom_basis(m, n).basis) {
        const auto k = map_kernel(f);
        const auto im = map_image(f);
        const auto c = map_cokernel(f);
        ASSERT_TRUE(k.inclusion.is_homomorphism());
        ASSERT_TRUE(im.onto.is_homomorphism() && im.inclusion.is_homomorphism());
        ASSERT_TRUE(c.projection.is_homomorphism());
        ASSERT_TRUE(compose(f, k.inclusion).is_zero());
        ASSERT_TRUE(compose(c.projection, f).is_zero());
        for (int v = 0; v < a->num_vertices(); ++v) {
          ASSERT_EQ(k.module.dim(v) + im.module.dim(v), m.dim(v));
          ASSERT_EQ(im.module.dim(v) + c.module.dim(v), n.dim(v));
        }
      }
    }
  }
}

TEST(Module, KroneckerCycleProjective) {
  const auto a = kronecker_cycle<Q>();
  const auto p3 = projective_module<Q>(a, 2);
  EXPECT_EQ(p3.dims(), (std::vector<int>{1, 1, 1, 0, 0}));
  EXPECT_EQ(loewy_series(p3), "3/21");
  const auto s12 = direct_sum(simple_module<Q>(a, 0), simple_module<Q>(a, 1));
  EXPECT_EQ(is_isomorphic(radical(p3).module, s12), Tri::yes);
  const auto pres = min_proj_presentation(simple_module<Q>(a, 2));
  const auto p12 = direct_sum(projective_module<Q>(a, 0), projective_module<Q>(a, 1));
  EXPECT_EQ(is_isomorphic(pres.p1.cover, p12), Tri::yes);
}

TEST(Module, LoewySeries) {
  const auto a = kronecker_cycle<Q>();
  EXPECT_EQ(loewy_series(simple_module<Q>(a, 3)), "4");
  EXPECT_EQ(loewy_series(projective_module<Q>(a, 0)), "1/44");
  EXPECT_EQ(loewy_series(Mod::zero(a)), "0");
  EXPECT_TRUE(is_sincere(regular_module<Q>(a)));
  EXPECT_FALSE(is_sincere(projective_module<Q>(a, 2)));
}

TEST(Module, DecomposeRegular) {
  const auto a2 = linear_a<Q>(2);
  const auto parts = decompose(regular_module<Q>(a2));
  ASSERT_EQ(parts.summands.size(), 2u);
  EXPECT_TRUE(parts.certified);
  EXPECT_EQ(is_isomorphic(parts.summands[0], projective_module<Q>(a2, 1)), Tri::yes);
  EXPECT_EQ(is_isomorphic(parts.summands[1], projective_module<Q>(a2, 0)), Tri::yes);

  const auto s1 = simple_module<Q>(a2, 0);
  const auto grouped = decompose_grouped(direct_sum(s1, s1));
  ASSERT_EQ(grouped.size(), 1u);
  EXPECT_EQ(grouped[0].multiplicity, 2);
  EXPECT_EQ(decompose(s1).summands.size(), 1u);

  const auto kc = kronecker_cycle<Q>();
  const auto reg = regular_module<Q>(kc);
  const auto d = decompose(reg);
  EXPECT_EQ(d.summands.size(), 5u);
  EXPECT_EQ(is_isomorphic(direct_sum(d.summands), reg), Tri::yes);
}

TEST(Module, DecomposeReassemblesRandomSums) {
  const auto a = linear_a<Q>(3);
  const auto inv = linear_inventory<Q>(a);
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Mod> parts;
    const int k = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < k; ++i) parts.push_back(inv[rng() % inv.size()]);
    const auto m = direct_sum(parts);
    const auto d = decompose(m);
    ASSERT_TRUE(d.certified);
    ASSERT_EQ(static_cast<int>(d.summands.size()), k);
    ASSERT_EQ(is_isomorphic(direct_sum(d.summands), m), Tri::yes);
  }
}

TEST(Module, IsomorphismOfRealizations) {
  const auto a = linear_a<Q>(2);
  const auto p1 = projective_module<Q>(a, 0);
  const auto other = rep<Q>(a, {1, 1}, {{"a1", mat<Q>(1, 1, {7})}});
  EXPECT_EQ(is_isomorphic(p1, other), Tri::yes);
  EXPECT_EQ(is_isomorphic(simple_module<Q>(a, 0), simple_module<Q>(a, 1)), Tri::no);
  const auto s = direct_sum(simple_module<Q>(a, 0), simple_module<Q>(a, 1));
  EXPECT_EQ(is_isomorphic(s, p1), Tri::no);
}

TEST(Module, AddMembership) {
  const auto a = linear_a<Q>(2);
  const auto s1 = simple_module<Q>(a, 0), s2 = simple_module<Q>(a, 1);
  const auto p1 = projective_module<Q>(a, 0), p2 = projective_module<Q>(a, 1);
  EXPECT_TRUE(add_membership(p1, p1));
  EXPECT_FALSE(add_membership(s1, p1));
  EXPECT_FALSE(add_membership(s2, p1));
  EXPECT_TRUE(add_membership(s2, p2));
  EXPECT_TRUE(add_membership(Mod::zero(a), s1));
}

TEST(Module, AddAgreesWithDecompositionOnA3) {
  const auto a = linear_a<Q>(3);
  const auto inv = linear_inventory<Q>(a);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Mod> parts;
    const int k = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < k; ++i) parts.push_back(inv[rng() % inv.size()]);
    const auto l = direct_sum(parts);
    const auto classes = decompose_grouped(l);
    for (const auto& x : inv) {
      bool summand = false;
      for (const auto& c : classes) summand = summand || iso_indecomposables(c.module, x);
      ASSERT_EQ(add_membership(x, l), summand);
    }
  }
}

TEST(Module, GenCogenPerp) {
  const auto a = linear_a<Q>(2);
  const auto s1 = simple_module<Q>(a, 0), s2 = simple_module<Q>(a, 1);
  const auto p1 = projective_module<Q>(a, 0);
  EXPECT_TRUE(gen_membership(p1, p1));
  // P(1) = e1 A has top S(1) and socle S(2).
  EXPECT_TRUE(gen_membership(s1, p1));
  EXPECT_FALSE(gen_membership(s2, p1));
  EXPECT_TRUE(cogen_membership(s2, p1));
  EXPECT_FALSE(cogen_membership(s1, s2));
  EXPECT_FALSE(perp_vanishing(s1, p1, PerpSide::right));
  EXPECT_TRUE(perp_vanishing(s2, s1, PerpSide::right));
  EXPECT_TRUE(perp_vanishing(s1, Mod::zero(a), PerpSide::left));
  // Monotone in the generator.
  EXPECT_TRUE(gen_membership(s1, direct_sum(p1, s2)));
}

TEST(Module, ProjectiveDimension) {
  const auto a = linear_a<Q>(2);
  EXPECT_TRUE(pd_le(projective_module<Q>(a, 0), 0));
  EXPECT_TRUE(pd_le(simple_module<Q>(a, 0), 1));
  EXPECT_FALSE(pd_le(simple_module<Q>(a, 0), 0));
  const auto d = dual_numbers<Q>();
  const auto s = simple_module<Q>(d, 0);
  for (int k = 0; k < 4; ++k) EXPECT_FALSE(pd_le(s, k));
  const auto rep_dim = projective_dimension(s, 6);
  EXPECT_FALSE(rep_dim.value.has_value());
  EXPECT_TRUE(rep_dim.periodic);
  EXPECT_EQ(is_isomorphic(syzygy(s), s), Tri::yes);
}

TEST(Module, DualityExchangesPdAndId) {
  for (const auto& a : test_algebras()) {
    for (const auto& m : standard_modules(a)) {
      const auto dm = dualize(m);
      EXPECT_EQ(dualize(dm), m);
      for (int n = 0; n <= 2; ++n) EXPECT_EQ(pd_le(m, n), id_le(dm, n));
    }
  }
}

TEST(Module, PrimeFieldDecomposition) {
  ModulusScope scope(3);
  const auto a = kronecker_cycle<ModInt>();
  const auto d = decompose(regular_module<ModInt>(a));
  EXPECT_EQ(d.summands.size(), 5u);
  EXPECT_TRUE(d.certified);
  const auto dd = decompose(dual_regular_module<ModInt>(a));
  EXPECT_EQ(dd.summands.size(), 5u);
}
