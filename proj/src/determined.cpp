#include "tauslice/determined.hpp"

#include <algorithm>
#include <numeric>

namespace tauslice {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::knitted: return "knitted";
    case Provenance::user_supplied: return "user-supplied";
    case Provenance::exhaustive: return "exhaustive";
  }
  return "?";
}

std::string to_string(Scope s) { return s == Scope::exhaustive ? "exhaustive" : "relative-to-inventory"; }

bool quiver_connected(const Quiver& q) {
  const int n = q.num_vertices();
  if (n == 0) return false;
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)];
    return v;
  };
  int components = n;
  for (const auto& a : q.arrows) {
    const int x = root(a.source), y = root(a.target);
    if (x != y) {
      parent[static_cast<std::size_t>(x)] = y;
      --components;
    }
  }
  return components == 1;
}

template <class S>
Inventory<S> make_inventory(const std::vector<Module<S>>& modules, Provenance provenance) {
  Inventory<S> inv;
  inv.provenance = provenance;
  for (const auto& m : modules) {
    if (!is_indecomposable(m)) throw std::invalid_argument("make_inventory: " + loewy_series(m) + " is not indecomposable");
    const bool seen = std::any_of(inv.modules.begin(), inv.modules.end(),
                                  [&](const Module<S>& x) { return x.dims() == m.dims() && iso_indecomposables(x, m); });
    if (!seen) inv.modules.push_back(m);
  }
  return inv;
}

template <class S>
Inventory<S> inventory_from_component(const ARComponent<S>& c) {
  Inventory<S> inv;
  for (const auto& n : c.nodes) inv.modules.push_back(n.module);
  const bool connected = !c.nodes.empty() && quiver_connected(c.nodes.front().module.algebra()->quiver());
  inv.provenance = c.complete() && connected ? Provenance::exhaustive : Provenance::knitted;
  return inv;
}

namespace {

template <class S>
bool in_union_gen(const Module<S>& x, const std::vector<SliceCandidate<S>>& side) {
  return std::any_of(side.begin(), side.end(), [&](const SliceCandidate<S>& t) { return t.size() > 0 && gen_membership(x, t.sum()); });
}

template <class S>
bool in_union_cogen(const Module<S>& x, const std::vector<SliceCandidate<S>>& side) {
  return std::any_of(side.begin(), side.end(), [&](const SliceCandidate<S>& s) { return s.size() > 0 && cogen_membership(x, s.sum()); });
}

template <class S>
int span_dim(const std::vector<ModuleMap<S>>& maps) {
  if (maps.empty()) return 0;
  std::vector<RowVector<S>> rows;
  for (const auto& f : maps) rows.push_back(f.flatten());
  return static_cast<int>(rank(rows_to_matrix(rows, rows.front().cols())));
}

template <class S>
void push_unique(std::vector<Module<S>>& out, const Module<S>& m) {
  for (const auto& x : out)
    if (x.dims() == m.dims() && iso_indecomposables(x, m)) return;
  out.push_back(m);
}

// Indecomposable summands of A and DA.
template <class S>
std::vector<Module<S>> projectives_and_injectives(const typename Module<S>::AlgebraPtr& a) {
  std::vector<Module<S>> out;
  for (int v = 0; v < a->num_vertices(); ++v) push_unique(out, projective_module<S>(a, v));
  for (int v = 0; v < a->num_vertices(); ++v) push_unique(out, injective_module<S>(a, v));
  return out;
}

}  // namespace

template <class S>
bool factors_through(const Module<S>& l, const Module<S>& x, const std::vector<Module<S>>& u) {
  const int target = hom_dim(l, x);
  if (target == 0) return true;
  std::vector<ModuleMap<S>> comps;
  for (const auto& m : u) {
    const auto h = hom_basis(l, m);
    if (h.dim() == 0) continue;
    const auto g = hom_basis(m, x);
    for (const auto& gi : g.basis)
      for (const auto& hi : h.basis) comps.push_back(compose(gi, hi));
  }
  return span_dim(comps) == target;
}

template <class S>
bool factors_through_from(const Module<S>& x, const Module<S>& n, const std::vector<Module<S>>& u) {
  return factors_through(x, n, u);
}

template <class S>
YResult<S> compute_Y(const SliceFamily<S>& f, const Inventory<S>& inv) {
  YResult<S> y;
  for (int i = 0; i < inv.size(); ++i) {
    const auto& x = inv.modules[static_cast<std::size_t>(i)];
    const bool gen = in_union_gen(x, f.t_side);
    const bool cogen = !gen && in_union_cogen(x, f.s_side);
    const bool right_perp = std::any_of(f.t_side.begin(), f.t_side.end(), [&](const SliceCandidate<S>& t) {
      return perp_vanishing(x, t.sum(), PerpSide::right);
    });
    const bool left_perp = right_perp && std::any_of(f.s_side.begin(), f.s_side.end(), [&](const SliceCandidate<S>& s) {
      return perp_vanishing(x, s.sum(), PerpSide::left);
    });
    const bool in_complement = !gen && !cogen;
    if (in_complement) y.complement.push_back(i);
    if (left_perp) y.perp.push_back(i);
    if (in_complement != left_perp) y.mismatches.push_back(i);
  }
  y.equal = y.mismatches.empty();
  return y;
}

template <class S>
Cond1Result check_cond1(const SliceFamily<S>& f) {
  Cond1Result r;
  for (std::size_t i = 0; i < f.t_side.size(); ++i)
    for (std::size_t j = 0; j < f.s_side.size(); ++j)
      if (hom_dim(f.t_side[i].sum(), f.s_side[j].sum()) != 0) r.failing.emplace_back(static_cast<int>(i), static_cast<int>(j));
  r.ok = r.failing.empty();
  return r;
}

template <class S>
FactorizationResult check_factorization(const SliceFamily<S>& f, const Module<S>& x, FactorDirection direction) {
  const bool gen = direction == FactorDirection::gen;
  const auto& side = gen ? f.t_side : f.s_side;
  if (gen ? !in_union_gen(x, side) : !in_union_cogen(x, side))
    throw std::invalid_argument(std::string("check_factorization: module is not in the union of ") + (gen ? "Gen T_i" : "Cogen S_j"));
  const auto base = projectives_and_injectives<S>(x.algebra());
  FactorizationResult r;
  for (std::size_t k = 0; k < side.size(); ++k) {
    const Module<S> tk = side[k].sum();
    std::vector<Module<S>> candidates = base;
    for (std::size_t i = 0; i < side.size(); ++i)
      if (i != k)
        for (const auto& m : side[i].summands) push_unique(candidates, m);
    std::vector<Module<S>> permitted;
    for (const auto& l : candidates) {
      const bool excluded = gen ? (is_injective(l) && gen_membership(l, tk)) : (is_projective(l) && cogen_membership(l, tk));
      if (!excluded) permitted.push_back(l);
    }
    bool ok = true;
    for (const auto& l : permitted) {
      const bool fac = gen ? factors_through(l, x, side[k].summands) : factors_through_from(x, l, side[k].summands);
      if (!fac) {
        ok = false;
        r.failing.push_back("k=" + std::to_string(k + 1) + ": " + loewy_series(l));
        break;
      }
    }
    if (ok) {
      r.satisfying_k.push_back(static_cast<int>(k));
      if (r.chosen_k < 0) {
        r.chosen_k = static_cast<int>(k);
        for (const auto& l : permitted) r.permitted.push_back(loewy_series(l));
      }
    }
  }
  r.ok = r.chosen_k >= 0;
  return r;
}

template <class S>
DeterminedReport<S> check_determined(const SliceFamily<S>& f, const Inventory<S>& inv) {
  DeterminedReport<S> r;
  r.slices_ok = true;
  for (const auto& t : f.t_side) {
    r.t_certificates.push_back(is_tau_slice(t));
    r.slices_ok = r.slices_ok && r.t_certificates.back().verdict != SliceVerdict::not_slice;
  }
  for (const auto& s : f.s_side) {
    r.s_certificates.push_back(is_tau_slice(s));
    r.slices_ok = r.slices_ok && r.s_certificates.back().verdict != SliceVerdict::not_slice;
  }
  r.empty_family_convention = f.t_side.empty() || f.s_side.empty();
  r.cond1 = check_cond1(f);
  r.y = compute_Y(f, inv);
  r.cond2 = r.y.equal;

  for (int i = 0; i < inv.size(); ++i) {
    const auto& x = inv.modules[static_cast<std::size_t>(i)];
    if (in_union_gen(x, f.t_side)) {
      r.in_gen.push_back(i);
      r.cond3.emplace_back(i, check_factorization(f, x, FactorDirection::gen));
      r.cond3_ok = r.cond3_ok && r.cond3.back().second.ok;
    }
    if (in_union_cogen(x, f.s_side)) {
      r.in_cogen.push_back(i);
      r.cond3op.emplace_back(i, check_factorization(f, x, FactorDirection::cogen));
      r.cond3op_ok = r.cond3op_ok && r.cond3op.back().second.ok;
    }
  }

  for (int m : r.in_gen)
    for (int n : r.y.perp)
      if (hom_dim(inv.modules[static_cast<std::size_t>(m)], inv.modules[static_cast<std::size_t>(n)]) != 0)
        r.closure_violations.emplace_back(m, n);
  r.closure_ok = r.closure_violations.empty();

  r.scope = inv.provenance == Provenance::exhaustive ? Scope::exhaustive : Scope::relative_to_inventory;
  r.overall = r.slices_ok && r.cond1.ok && r.cond2 && r.cond3_ok && r.cond3op_ok;
  return r;
}

#define TAUSLICE_INSTANTIATE_DETERMINED(S)                                                                      \
  template Inventory<S> make_inventory<S>(const std::vector<Module<S>>&, Provenance);                           \
  template Inventory<S> inventory_from_component<S>(const ARComponent<S>&);                                     \
  template YResult<S> compute_Y<S>(const SliceFamily<S>&, const Inventory<S>&);                                 \
  template Cond1Result check_cond1<S>(const SliceFamily<S>&);                                                   \
  template FactorizationResult check_factorization<S>(const SliceFamily<S>&, const Module<S>&, FactorDirection); \
  template bool factors_through<S>(const Module<S>&, const Module<S>&, const std::vector<Module<S>>&);          \
  template bool factors_through_from<S>(const Module<S>&, const Module<S>&, const std::vector<Module<S>>&);     \
  template DeterminedReport<S> check_determined<S>(const SliceFamily<S>&, const Inventory<S>&);

TAUSLICE_INSTANTIATE_DETERMINED(Rational)
TAUSLICE_INSTANTIATE_DETERMINED(ModInt)

}  // namespace tauslice
