#include "support/algebras.hpp"
#include "support/kc_modules.hpp"
#include "support/modules.hpp"

#include "tauslice/repdim.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace tauslice;
using namespace tauslice::testing;
using Q = Rational;
using Mod = Module<Q>;
using Alg = BoundQuiverAlgebra<Q>::Ptr;

namespace {

Inventory<Q> full_inventory(const Alg& a) {
  return inventory_from_component(knit_component<Q>({projective_module<Q>(a, 0)}, {64, 64}));
}

SliceFamily<Q> regular_family(const Alg& a) {
  SliceFamily<Q> f;
  f.t_side.push_back(slice_candidate(regular_module<Q>(a)));
  return f;
}

Alg a3_radical_square_zero() {
  return make_algebra<Q>({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}}, {mono({"a", "b"})});
}

Alg commutative_square() {
  return make_algebra<Q>({"1", "2", "3", "4"}, {{"a", "1", "2"}, {"b", "2", "4"}, {"c", "1", "3"}, {"d", "3", "4"}},
                         {RelSpec{{{1, {"a", "b"}}, {-1, {"c", "d"}}}}});
}

int max_pd(const Alg& e, int cap) {
  int worst = 0;
  for (int v = 0; v < e->num_vertices(); ++v) {
    const auto d = projective_dimension(simple_module<Q>(e, v), cap);
    if (!d.value) return -1;
    worst = std::max(worst, *d.value);
  }
  return worst;
}

}  // namespace

TEST(RepDim, GeneratorOnA2) {
  const auto a = linear_a<Q>(2);
  const auto l = assemble_auslander_generator<Q>(regular_family(a), {}, a);
  ASSERT_EQ(l.size(), 3);
  EXPECT_EQ(l.labels, (std::vector<std::string>{"1/2", "2", "1"}));
  EXPECT_EQ(l.origins[0], (std::vector<std::string>{"A", "DA", "T1"}));
  EXPECT_EQ(l.origins[2], (std::vector<std::string>{"DA"}));
  EXPECT_TRUE(is_generator_cogenerator(l));
}

TEST(RepDim, GeneratorOnA3OmitsTheMiddleSimple) {
  const auto a = linear_a<Q>(3);
  const auto l = assemble_auslander_generator<Q>(regular_family(a), {}, a);
  EXPECT_EQ(l.size(), 5);
  for (const auto& m : l.summands) EXPECT_FALSE(m.dims() == simple_module<Q>(a, 1).dims());
  EXPECT_TRUE(is_generator_cogenerator(l));
  const auto partial = assemble_auslander_generator<Q>({}, {projective_module<Q>(a, 0)}, a);
  EXPECT_TRUE(is_generator_cogenerator(partial));
  EXPECT_THROW(assemble_auslander_generator<Q>({}, {regular_module<Q>(a)}, a), std::invalid_argument);
}

TEST(RepDim, EndoAlgebraAxioms) {
  std::mt19937 rng(4242);
  for (const auto& a : {linear_a<Q>(2), linear_a<Q>(3), commutative_square()}) {
    const auto l = assemble_auslander_generator<Q>(regular_family(a), {}, a);
    const auto e = endo_algebra(l.summands);
    int expected = 0;
    for (const auto& x : l.summands)
      for (const auto& y : l.summands) expected += hom_dim(x, y);
    EXPECT_EQ(e.dim(), expected);
    EXPECT_EQ(e.presentation->dim(), e.dim());
    EXPECT_EQ(e.presentation->num_vertices(), l.size());

    const RowVector<Q> one = e.unit();
    for (int a1 = 0; a1 < e.num_summands(); ++a1)
      for (int b1 = 0; b1 < e.num_summands(); ++b1) {
        const RowVector<Q> p = e.multiply(e.idempotent(a1), e.idempotent(b1));
        EXPECT_EQ(p, a1 == b1 ? e.idempotent(a1) : RowVector<Q>(RowVector<Q>::Constant(e.dim(), Q(0))));
      }
    std::uniform_int_distribution<int> pick(0, e.dim() - 1);
    auto basis = [&](int i) {
      RowVector<Q> x = RowVector<Q>::Constant(e.dim(), Q(0));
      x(i) = 1;
      return x;
    };
    for (int t = 0; t < 30; ++t) {
      const auto x = basis(pick(rng)), y = basis(pick(rng)), z = basis(pick(rng));
      EXPECT_EQ(e.multiply(e.multiply(x, y), z), e.multiply(x, e.multiply(y, z)));
      EXPECT_EQ(e.multiply(one, x), x);
      EXPECT_EQ(e.multiply(x, one), x);
    }
  }
}

TEST(RepDim, AuslanderAlgebraOfA2HasGlobalDimensionTwo) {
  const auto a = linear_a<Q>(2);
  const auto e = endo_algebra(assemble_auslander_generator<Q>(regular_family(a), {}, a).summands);
  EXPECT_EQ(e.dim(), 5);
  const auto g = gldim_at_most(e, 3);
  EXPECT_EQ(g.verdict, Tri::yes);
  ASSERT_TRUE(g.gldim.has_value());
  EXPECT_EQ(*g.gldim, 2);
  EXPECT_EQ(gldim_at_most(e, 1, 4).verdict, Tri::no);
}

TEST(RepDim, DualNumbersAreRefutedByPeriodicity) {
  const auto e = endo_algebra<Q>({regular_module<Q>(dual_numbers<Q>())});
  EXPECT_EQ(e.dim(), 2);
  const auto g = gldim_at_most(e, 3);
  EXPECT_EQ(g.verdict, Tri::no);
  EXPECT_EQ(g.witness, 0);
  EXPECT_TRUE(g.per_simple[0].periodic);
  EXPECT_FALSE(g.gldim.has_value());
  EXPECT_THROW(gldim_at_most(e, 3, 3), std::invalid_argument);
}

// gl.dim of End(L) read off the presentation agrees with its opposite and is monotone in the bound.
TEST(RepDim, GlobalDimensionChecks) {
  for (const auto& a : {linear_a<Q>(3), a3_radical_square_zero(), commutative_square()}) {
    const auto e = endo_algebra(assemble_auslander_generator<Q>(regular_family(a), {}, a).summands);
    const auto g = gldim_at_most(e, 3);
    ASSERT_TRUE(g.gldim.has_value());
    EXPECT_EQ(max_pd(e.presentation->opposite(), 8), *g.gldim);
    bool seen_yes = false;
    for (int n = 0; n <= 5; ++n) {
      const bool yes = gldim_at_most(e, n, 8).verdict == Tri::yes;
      if (seen_yes) EXPECT_TRUE(yes) << n;
      seen_yes = seen_yes || yes;
      EXPECT_EQ(yes, n >= *g.gldim);
    }
  }
}

TEST(RepDim, ApproximationsOnA3) {
  const auto a = linear_a<Q>(3);
  const auto l = assemble_auslander_generator<Q>(regular_family(a), {}, a);
  const auto s2 = approximation_certificate(simple_module<Q>(a, 1), l);
  EXPECT_TRUE(s2.surjective);
  EXPECT_EQ(loewy_series(s2.kernel), "3");
  EXPECT_TRUE(s2.kernel_in_add);
  const auto p1 = approximation_certificate(projective_module<Q>(a, 0), l);
  EXPECT_TRUE(p1.kernel.is_zero());
  EXPECT_EQ(p1.approximation.summand_of.size(), 1u);
}

// Removing any summand of the shrunk approximation loses the approximation property.
TEST(RepDim, ApproximationsAreMinimal) {
  for (const auto& a : {linear_a<Q>(3), commutative_square()}) {
    const auto l = assemble_auslander_generator<Q>(regular_family(a), {}, a);
    for (const auto& x : full_inventory(a).modules) {
      const auto r = right_approximation(x, l);
      ASSERT_TRUE(is_right_approximation(r.map, l));
      const std::size_t k = r.summand_of.size();
      std::vector<Mod> parts;
      for (int s : r.summand_of) parts.push_back(l.summands[static_cast<std::size_t>(s)]);
      for (std::size_t drop = 0; drop < k && k > 1; ++drop) {
        std::vector<ModuleMap<Q>> maps;
        std::vector<Mod> rest;
        for (std::size_t i = 0; i < k; ++i)
          if (i != drop) {
            maps.push_back(compose(r.map, sum_injection(parts, static_cast<int>(i))));
            rest.push_back(parts[i]);
          }
        EXPECT_FALSE(is_right_approximation(map_from_sum(maps, direct_sum(rest)), l));
      }
    }
  }
}

// Both routes give the same answer for L = A + DA on exhaustive inventories.
TEST(RepDim, RoutesAgree) {
  const std::vector<std::pair<Alg, bool>> cases{{linear_a<Q>(2), true},           {linear_a<Q>(3), true},
                                                {a3_radical_square_zero(), true}, {commutative_square(), true},
                                                {linear_a<Q>(4), true},           {dual_numbers<Q>(), false}};
  for (const auto& [a, expected] : cases) {
    const auto inv = full_inventory(a);
    ASSERT_EQ(inv.provenance, Provenance::exhaustive);
    const auto l = assemble_auslander_generator<Q>({}, {}, a);
    const bool endo = gldim_at_most(endo_algebra(l.summands), 3).verdict == Tri::yes;
    bool approx = true;
    for (const auto& x : inv.modules) {
      const auto c = approximation_certificate(x, l);
      approx = approx && c.surjective && c.kernel_in_add;
    }
    EXPECT_EQ(endo, approx);
    EXPECT_EQ(endo, expected);
  }
}

TEST(RepDim, CertifyOnPathAlgebras) {
  for (const auto& a : {linear_a<Q>(2), linear_a<Q>(3)}) {
    const auto c = certify_repdim3(regular_family(a), full_inventory(a), a);
    EXPECT_EQ(c.verdict, RepDimVerdict::certified_le_3);
    EXPECT_EQ(c.scope, Scope::exhaustive);
    ASSERT_TRUE(c.endo.has_value());
    EXPECT_EQ(c.endo->verdict, Tri::yes);
    ASSERT_TRUE(c.approximations_ok.has_value());
    EXPECT_TRUE(*c.approximations_ok);
    EXPECT_TRUE(c.hypothesis.holds);
    EXPECT_TRUE(c.wrepdim_le_3);
    EXPECT_TRUE(c.findim_finite);
  }
  const auto a2 = linear_a<Q>(2);
  EXPECT_EQ(*certify_repdim3(regular_family(a2), full_inventory(a2), a2).endo->gldim, 2);
}

TEST(RepDim, CertifyRequiresDeterminedFamily) {
  const auto a = linear_a<Q>(2);
  SliceFamily<Q> broken;
  broken.t_side.push_back(slice_candidate(direct_sum(projective_module<Q>(a, 0), simple_module<Q>(a, 0))));
  EXPECT_THROW(certify_repdim3(broken, full_inventory(a), a), std::invalid_argument);
  RepDimOptions o;
  o.override_determined = true;
  const auto c = certify_repdim3(broken, full_inventory(a), a, o);
  ASSERT_FALSE(c.warnings.empty());
  EXPECT_EQ(c.verdict, RepDimVerdict::certified_le_3);
}

TEST(RepDim, KroneckerCycleTight) {
  const auto a = kronecker_cycle_tight<Q>();
  const auto inv = inventory_from_component(knit_component<Q>({projective_module<Q>(a, 2)}, {20, 64}));
  SliceFamily<Q> f;
  for (const auto& t : {kc_t1<Q>(a), kc_t2<Q>(a), kc_t3<Q>(a)}) f.t_side.push_back(slice_candidate<Q>(t));

  RepDimOptions approx;
  approx.route = RepDimRoute::approximation;
  const auto c = certify_repdim3(f, inv, a, approx);
  EXPECT_EQ(c.generator.size(), 14);
  EXPECT_TRUE(is_generator_cogenerator(c.generator));
  EXPECT_TRUE(*c.approximations_ok);
  EXPECT_EQ(c.scope, Scope::relative_to_inventory);
  EXPECT_EQ(c.verdict, RepDimVerdict::inconclusive);
  EXPECT_TRUE(c.hypothesis.cogen_in_left);

  // Y is empty here, so L does not depend on the window and the endo route is global.
  RepDimOptions endo;
  endo.route = RepDimRoute::endo;
  const auto g = certify_repdim3(f, inv, a, endo);
  ASSERT_TRUE(g.endo.has_value());
  EXPECT_EQ(g.endo->gldim, std::optional<int>(3));
  EXPECT_EQ(g.verdict, RepDimVerdict::certified_le_3);
}
