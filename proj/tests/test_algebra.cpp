#include "support/algebras.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace tauslice;
using namespace tauslice::testing;
using Alg = BoundQuiverAlgebra<Rational>;

namespace {

void expect_algebra_axioms(const Alg& a) {
  const int n = a.dim();
  // Orthogonal idempotents summing to 1.
  for (int i = 0; i < a.num_vertices(); ++i) {
    for (int j = 0; j < a.num_vertices(); ++j) {
      const auto p = a.multiply(a.basis_element(a.idempotent(i)), a.basis_element(a.idempotent(j)));
      EXPECT_EQ(p, i == j ? a.basis_element(a.idempotent(i)) : RowVector<Rational>(a.unit() * Rational(0)));
    }
  }
  for (int i = 0; i < n; ++i) {
    EXPECT_EQ(a.multiply(a.unit(), a.basis_element(i)), a.basis_element(i));
    EXPECT_EQ(a.multiply(a.basis_element(i), a.unit()), a.basis_element(i));
  }
  // Associativity on all basis triples.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const auto ij = a.multiply(a.basis_element(i), a.basis_element(j));
        const auto jk = a.multiply(a.basis_element(j), a.basis_element(k));
        ASSERT_EQ(a.multiply(ij, a.basis_element(k)), a.multiply(a.basis_element(i), jk));
      }
  int blocks = 0;
  for (int s = 0; s < a.num_vertices(); ++s)
    for (int t = 0; t < a.num_vertices(); ++t) blocks += static_cast<int>(a.paths_between(s, t).size());
  EXPECT_EQ(blocks, n);
}

// Independent count for monomial relations: paths avoiding every relation as a subword.
int count_monomial_basis(const Alg& a) {
  const auto& q = a.quiver();
  std::set<std::vector<int>> forbidden;
  for (const auto& r : a.relations()) forbidden.insert(r.terms.front().second.arrows);
  int count = q.num_vertices();
  std::vector<std::vector<int>> frontier;
  for (int x = 0; x < q.num_arrows(); ++x) frontier.push_back({x});
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& p : frontier) {
      bool dead = false;
      for (std::size_t i = 0; i < p.size() && !dead; ++i)
        for (std::size_t j = i + 2; j <= p.size() && !dead; ++j)
          dead = forbidden.count(std::vector<int>(p.begin() + static_cast<long>(i), p.begin() + static_cast<long>(j))) > 0;
      if (dead) continue;
      ++count;
      const int t = q.arrows[static_cast<std::size_t>(p.back())].target;
      for (int x = 0; x < q.num_arrows(); ++x) {
        if (q.arrows[static_cast<std::size_t>(x)].source != t) continue;
        auto longer = p;
        longer.push_back(x);
        next.push_back(longer);
      }
    }
    frontier = std::move(next);
  }
  return count;
}

}  // namespace

TEST(Algebra, LinearA2) {
  const auto a = linear_a<Rational>(2);
  EXPECT_EQ(a->dim(), 3);
  EXPECT_EQ(a->radical_degree(), 2);
  expect_algebra_axioms(*a);
}

TEST(Algebra, AcyclicPathCount) {
  EXPECT_EQ(linear_a<Rational>(3)->dim(), 6);
  EXPECT_EQ(linear_a<Rational>(5)->dim(), 15);
  const auto kron = make_algebra<Rational>({"1", "2"}, {{"a", "1", "2"}, {"b", "1", "2"}}, {});
  EXPECT_EQ(kron->dim(), 4);
  expect_algebra_axioms(*linear_a<Rational>(4));
}

TEST(Algebra, DualNumbers) {
  const auto a = dual_numbers<Rational>();
  EXPECT_EQ(a->dim(), 2);
  const auto x = a->basis_element(1);
  EXPECT_TRUE(is_zero_matrix<Rational>(a->multiply(x, x)));
  expect_algebra_axioms(*a);
}

TEST(Algebra, FreeLoopIsRejected) {
  EXPECT_THROW(make_algebra<Rational>({"1"}, {{"x", "1", "1"}}, {}, 10), NotFiniteDimensional);
  Quiver q;
  q.vertices = {"1"};
  q.arrows = {{"x", "", 0, 0}};
  const auto report = validate_admissible<Rational>(q, {}, 10);
  EXPECT_FALSE(report.admissible);
  ASSERT_EQ(report.failures.size(), 1u);
  EXPECT_NE(report.failures[0].find("not finite-dimensional within cap"), std::string::npos);
}

TEST(Algebra, ShortRelationIsRejected) {
  EXPECT_THROW(make_algebra<Rational>({"1", "2"}, {{"a", "1", "2"}}, {mono({"a"})}), std::invalid_argument);
  EXPECT_THROW(make_algebra<Rational>({"1", "2"}, {{"a", "1", "2"}, {"b", "2", "1"}},
                                      {RelSpec{{{1, {"a", "b"}}, {1, {"b", "a"}}}}}),
               std::invalid_argument);
}

TEST(Algebra, KroneckerCycle) {
  const auto a = kronecker_cycle<Rational>();
  EXPECT_EQ(a->dim(), 18);
  EXPECT_EQ(count_monomial_basis(*a), 18);
  EXPECT_EQ(a->radical_degree(), 3);
  expect_algebra_axioms(*a);
  const auto op = a->opposite();
  EXPECT_EQ(op->dim(), 18);
  EXPECT_EQ(op->opposite().get(), a.get());
  expect_algebra_axioms(*op);
}

TEST(Algebra, OppositeOfA2) {
  const auto a = linear_a<Rational>(2);
  const auto op = a->opposite();
  EXPECT_EQ(op->dim(), 3);
  EXPECT_EQ(op->quiver().arrows[0].source, 1);
  EXPECT_EQ(op->quiver().arrows[0].target, 0);
  EXPECT_EQ(op->opposite(), a);
}

TEST(Algebra, CommutativeSquare) {
  const auto a = make_algebra<Rational>({"1", "2", "3", "4"},
                                        {{"a", "1", "2"}, {"b", "2", "4"}, {"c", "1", "3"}, {"d", "3", "4"}},
                                        {RelSpec{{{1, {"a", "b"}}, {-1, {"c", "d"}}}}});
  EXPECT_EQ(a->dim(), 9);
  expect_algebra_axioms(*a);
}

TEST(Algebra, NonHomogeneousRelation) {
  const auto a = make_algebra<Rational>(
      {"1", "2", "3", "4", "5"}, {{"a", "1", "2"}, {"b", "2", "3"}, {"c", "1", "4"}, {"d", "4", "5"}, {"e", "5", "3"}},
      {RelSpec{{{1, {"a", "b"}}, {-1, {"c", "d", "e"}}}}});
  EXPECT_EQ(a->dim(), 13);
  Path cde{0, {2, 3, 4}};
  Path ab{0, {0, 1}};
  EXPECT_EQ(a->basis_index(cde), -1);
  EXPECT_EQ(a->normal_form(cde), a->basis_element(a->basis_index(ab)));
  expect_algebra_axioms(*a);
}

TEST(Algebra, PrimeField) {
  ModulusScope scope(5);
  const auto a = kronecker_cycle<ModInt>();
  EXPECT_EQ(a->dim(), 18);
}
