// Small algebras shared by the test suites.
#pragma once

#include "tauslice/algebra.hpp"

#include <string>
#include <utility>
#include <vector>

namespace tauslice::testing {

struct ArrowSpec {
  std::string id;
  std::string source;
  std::string target;
};

/// Monomial or binomial relations written as arrow-id sequences.
struct RelSpec {
  std::vector<std::pair<long long, std::vector<std::string>>> terms;
};

template <class S>
typename BoundQuiverAlgebra<S>::Ptr make_algebra(const std::vector<std::string>& vertices,
                                                 const std::vector<ArrowSpec>& arrows,
                                                 const std::vector<RelSpec>& rels, int cap = 16,
                                                 const std::string& name = "") {
  Quiver q;
  q.vertices = vertices;
  for (const auto& a : arrows) q.arrows.push_back({a.id, "", q.vertex_index(a.source), q.vertex_index(a.target)});
  std::vector<Relation<S>> relations;
  for (const auto& r : rels) {
    Relation<S> rel;
    for (const auto& [c, ids] : r.terms) {
      Path p;
      p.source = q.arrows[static_cast<std::size_t>(q.arrow_index(ids.front()))].source;
      for (const auto& id : ids) p.arrows.push_back(q.arrow_index(id));
      rel.terms.emplace_back(S(c), p);
    }
    relations.push_back(rel);
  }
  return BoundQuiverAlgebra<S>::build(q, relations, cap, name);
}

inline RelSpec mono(std::vector<std::string> ids) { return RelSpec{{{1, std::move(ids)}}}; }

/// 1 -> 2 -> ... -> n, no relations.
template <class S>
typename BoundQuiverAlgebra<S>::Ptr linear_a(int n) {
  std::vector<std::string> v;
  std::vector<ArrowSpec> a;
  for (int i = 1; i <= n; ++i) v.push_back(std::to_string(i));
  for (int i = 1; i < n; ++i) a.push_back({"a" + std::to_string(i), std::to_string(i), std::to_string(i + 1)});
  return make_algebra<S>(v, a, {}, 16, "A" + std::to_string(n));
}

/// k[x]/(x^2).
template <class S>
typename BoundQuiverAlgebra<S>::Ptr dual_numbers() {
  return make_algebra<S>({"1"}, {{"x", "1", "1"}}, {mono({"x", "x"})}, 16, "loop2");
}

/// Vertices 1..5; three arrows 2 -> 5, two arrows 1 -> 4, and 5 -> 3, 3 -> 2,
/// 3 -> 1, 4 -> 3, with every path through 2 -> 5 -> ... or 1 -> 4 -> ...
/// and every path ... -> 2 -> 5, ... -> 1 -> 4 killed.
template <class S>
typename BoundQuiverAlgebra<S>::Ptr kronecker_cycle() {
  std::vector<ArrowSpec> arrows{{"al1", "2", "5"}, {"al2", "2", "5"}, {"al3", "2", "5"}, {"th", "5", "3"},
                                {"ga", "3", "2"},  {"ep", "3", "1"},  {"be1", "1", "4"}, {"be2", "1", "4"},
                                {"de", "4", "3"}};
  std::vector<RelSpec> rels;
  for (const char* al : {"al1", "al2", "al3"}) {
    rels.push_back(mono({"ga", al}));
    rels.push_back(mono({al, "th"}));
  }
  for (const char* be : {"be1", "be2"}) {
    rels.push_back(mono({"ep", be}));
    rels.push_back(mono({be, "de"}));
  }
  return make_algebra<S>({"1", "2", "3", "4", "5"}, arrows, rels, 16, "kc");
}

/// kronecker_cycle with the two further zero relations 5 -> 3 -> 2 and 4 -> 3 -> 1.
template <class S>
typename BoundQuiverAlgebra<S>::Ptr kronecker_cycle_tight() {
  const auto base = kronecker_cycle<S>();
  auto rels = base->relations();
  for (const auto& [x, y] : {std::pair{"th", "ga"}, std::pair{"de", "ep"}}) {
    const auto& q = base->quiver();
    const int ix = q.arrow_index(x);
    rels.push_back({std::string(x) + y, {{S(1), Path{q.arrows[static_cast<std::size_t>(ix)].source, {ix, q.arrow_index(y)}}}}});
  }
  return BoundQuiverAlgebra<S>::build(base->quiver(), rels, 16, "kc-tight");
}

}  // namespace tauslice::testing
