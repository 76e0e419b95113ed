#include "tauslice/repdim.hpp"

#include <algorithm>
#include <stdexcept>

namespace tauslice {

namespace {

template <class S>
RowVector<S> flat(const Matrix<S>& m) {
  RowVector<S> r(m.size());
  Index k = 0;
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) r(k++) = m(i, j);
  return r;
}

template <class S>
Index stacked_rank(const std::vector<RowVector<S>>& rows, Index width) {
  if (rows.empty() || width == 0) return 0;
  return rank(rows_to_matrix(rows, width));
}

template <class S>
int find_iso(const std::vector<Module<S>>& list, const Module<S>& m) {
  for (std::size_t i = 0; i < list.size(); ++i)
    if (list[i].dims() == m.dims() && iso_indecomposables(list[i], m)) return static_cast<int>(i);
  return -1;
}

}  // namespace

template <class S>
AuslanderGenerator<S> assemble_auslander_generator(const SliceFamily<S>& f, const std::vector<Module<S>>& y,
                                                   const typename Module<S>::AlgebraPtr& a) {
  AuslanderGenerator<S> l;
  auto add = [&](const Module<S>& m, const std::string& tag) {
    const int i = find_iso(l.summands, m);
    if (i >= 0) {
      auto& tags = l.origins[static_cast<std::size_t>(i)];
      if (std::find(tags.begin(), tags.end(), tag) == tags.end()) tags.push_back(tag);
      return;
    }
    l.summands.push_back(m);
    l.origins.push_back({tag});
    l.labels.push_back(loewy_series(m));
  };
  for (int v = 0; v < a->num_vertices(); ++v) add(projective_module<S>(a, v), "A");
  for (int v = 0; v < a->num_vertices(); ++v) add(injective_module<S>(a, v), "DA");
  for (std::size_t i = 0; i < f.t_side.size(); ++i)
    for (const auto& m : f.t_side[i].summands) add(m, "T" + std::to_string(i + 1));
  for (std::size_t j = 0; j < f.s_side.size(); ++j)
    for (const auto& m : f.s_side[j].summands) add(m, "S" + std::to_string(j + 1));
  for (const auto& m : y) {
    if (!is_indecomposable(m)) throw std::invalid_argument("assemble_auslander_generator: " + loewy_series(m) + " is decomposable");
    add(m, "Y");
  }
  return l;
}

template <class S>
bool is_generator_cogenerator(const AuslanderGenerator<S>& l) {
  if (l.summands.empty()) return false;
  const auto& a = l.summands.front().algebra();
  for (int v = 0; v < a->num_vertices(); ++v)
    if (find_iso(l.summands, projective_module<S>(a, v)) < 0 || find_iso(l.summands, injective_module<S>(a, v)) < 0) return false;
  return true;
}

// ---- End(L) -------------------------------------------------------------------

template <class S>
int EndoAlgebra<S>::dim() const {
  int n = 0;
  for (const auto& row : blocks)
    for (const auto& h : row) n += h.dim();
  return n;
}

template <class S>
RowVector<S> EndoAlgebra<S>::idempotent(int a) const {
  RowVector<S> x = RowVector<S>::Constant(dim(), S(0));
  const auto& h = blocks[static_cast<std::size_t>(a)][static_cast<std::size_t>(a)];
  Matrix<S> basis(h.dim(), summands[static_cast<std::size_t>(a)].total_dim() * summands[static_cast<std::size_t>(a)].total_dim());
  for (int k = 0; k < h.dim(); ++k) basis.row(k) = flat<S>(h.basis[static_cast<std::size_t>(k)].total());
  const auto c = solve_left<S>(basis, Matrix<S>(flat<S>(identity_map(summands[static_cast<std::size_t>(a)]).total())));
  if (!c) throw std::logic_error("EndoAlgebra: identity outside the End block");
  x.segment(offsets[static_cast<std::size_t>(a)][static_cast<std::size_t>(a)], h.dim()) = c->row(0);
  return x;
}

template <class S>
RowVector<S> EndoAlgebra<S>::unit() const {
  RowVector<S> x = RowVector<S>::Constant(dim(), S(0));
  for (int a = 0; a < num_summands(); ++a) x += idempotent(a);
  return x;
}

template <class S>
RowVector<S> EndoAlgebra<S>::multiply(const RowVector<S>& x, const RowVector<S>& y) const {
  const int n = num_summands();
  RowVector<S> out = RowVector<S>::Constant(dim(), S(0));
  auto total_of = [&](const RowVector<S>& v, int a, int b) {
    const auto& h = blocks[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    Matrix<S> m = zero_matrix<S>(summands[static_cast<std::size_t>(a)].total_dim(), summands[static_cast<std::size_t>(b)].total_dim());
    const int off = offsets[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    for (int k = 0; k < h.dim(); ++k)
      if (!is_zero(v(off + k))) m += h.basis[static_cast<std::size_t>(k)].total() * v(off + k);
    return m;
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const Matrix<S> xa = total_of(x, a, b);
      if (is_zero_matrix(xa)) continue;
      for (int c = 0; c < n; ++c) {
        const auto& h = blocks[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)];
        if (h.dim() == 0) continue;
        const Matrix<S> prod = xa * total_of(y, b, c);
        if (is_zero_matrix(prod)) continue;
        Matrix<S> basis(h.dim(), prod.size());
        for (int k = 0; k < h.dim(); ++k) basis.row(k) = flat<S>(h.basis[static_cast<std::size_t>(k)].total());
        const auto coords = solve_left<S>(basis, Matrix<S>(flat<S>(prod)));
        if (!coords) throw std::logic_error("EndoAlgebra: product outside the Hom block");
        out.segment(offsets[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)], h.dim()) += coords->row(0);
      }
    }
  return out;
}

namespace {

template <class S>
struct PathValue {
  Path path;
  int target = 0;
  Matrix<S> value;  // total matrix L_source -> L_target
};

constexpr std::size_t kMaxEndoPaths = 20000;

}  // namespace

template <class S>
EndoAlgebra<S> endo_algebra(const std::vector<Module<S>>& summands) {
  if (summands.empty()) throw std::invalid_argument("endo_algebra: no summands");
  EndoAlgebra<S> e;
  e.summands = summands;
  const int n = static_cast<int>(summands.size());
  const auto sz = [](int i) { return static_cast<std::size_t>(i); };
  e.blocks.resize(sz(n));
  e.offsets.assign(sz(n), std::vector<int>(sz(n), 0));
  int off = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      e.blocks[sz(a)].push_back(hom_basis(summands[sz(a)], summands[sz(b)]));
      e.offsets[sz(a)][sz(b)] = off;
      off += e.blocks[sz(a)][sz(b)].dim();
    }

  // rad E block by block, as total matrices.
  std::vector<std::vector<std::vector<Matrix<S>>>> rad(sz(n), std::vector<std::vector<Matrix<S>>>(sz(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a != b) {
        for (const auto& f : e.blocks[sz(a)][sz(b)].basis) rad[sz(a)][sz(b)].push_back(f.total());
        continue;
      }
      const auto cert = local_certificate(summands[sz(a)]);
      if (!cert.local) throw std::invalid_argument("endo_algebra: summand " + loewy_series(summands[sz(a)]) + " is decomposable");
      if (static_cast<int>(cert.radical.size()) + 1 != e.blocks[sz(a)][sz(a)].dim())
        throw std::domain_error("endo_algebra: End(" + loewy_series(summands[sz(a)]) + ") / rad is not the ground field");
      rad[sz(a)][sz(a)] = cert.radical;
    }

  // Arrows a -> c: elements of rad extending a basis of rad^2.
  Quiver q;
  for (int a = 0; a < n; ++a) q.vertices.push_back("L" + std::to_string(a + 1));
  std::vector<Matrix<S>> arrow_value;
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c) {
      const Index width = static_cast<Index>(summands[sz(a)].total_dim()) * summands[sz(c)].total_dim();
      std::vector<RowVector<S>> rows;
      for (int b = 0; b < n; ++b)
        for (const auto& x : rad[sz(a)][sz(b)])
          for (const auto& y : rad[sz(b)][sz(c)]) rows.push_back(flat<S>(x * y));
      Index r = stacked_rank(rows, width);
      int k = 0;
      for (const auto& x : rad[sz(a)][sz(c)]) {
        rows.push_back(flat<S>(x));
        const Index r2 = stacked_rank(rows, width);
        if (r2 == r) {
          rows.pop_back();
          continue;
        }
        r = r2;
        q.arrows.push_back(Arrow{"f" + std::to_string(a + 1) + "_" + std::to_string(c + 1) + (k > 0 ? "_" + std::to_string(k + 1) : ""), "", a, c});
        arrow_value.push_back(x);
        ++k;
      }
    }

  // Paths of length >= 2 until all of one length vanish; their linear dependencies are the relations.
  std::vector<PathValue<S>> layer, all_long;
  for (int i = 0; i < q.num_arrows(); ++i)
    layer.push_back({Path{q.arrows[sz(i)].source, {i}}, q.arrows[sz(i)].target, arrow_value[sz(i)]});
  int d = 1;
  while (true) {
    const bool vanished = std::all_of(layer.begin(), layer.end(), [](const PathValue<S>& p) { return is_zero_matrix(p.value); });
    if (vanished) break;
    std::vector<PathValue<S>> next;
    for (const auto& p : layer)
      for (int i = 0; i < q.num_arrows(); ++i) {
        if (q.arrows[sz(i)].source != p.target) continue;
        PathValue<S> ext{p.path, q.arrows[sz(i)].target, p.value * arrow_value[sz(i)]};
        ext.path.arrows.push_back(i);
        next.push_back(std::move(ext));
      }
    ++d;
    all_long.insert(all_long.end(), next.begin(), next.end());
    if (all_long.size() > kMaxEndoPaths) throw std::domain_error("endo_algebra: too many paths in the presentation");
    layer = std::move(next);
  }
  e.rad_nilpotency = d;

  std::vector<Relation<S>> relations;
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c) {
      std::vector<const PathValue<S>*> paths;
      for (const auto& p : all_long)
        if (p.path.source == a && p.target == c) paths.push_back(&p);
      if (paths.empty()) continue;
      const Index width = static_cast<Index>(summands[sz(a)].total_dim()) * summands[sz(c)].total_dim();
      std::vector<RowVector<S>> rows;
      for (const auto* p : paths) rows.push_back(flat<S>(p->value));
      const Matrix<S> ker = left_kernel_basis<S>(rows_to_matrix(rows, width));
      for (Index r = 0; r < ker.rows(); ++r) {
        Relation<S> rel;
        rel.name = "r" + std::to_string(relations.size() + 1);
        for (Index j = 0; j < ker.cols(); ++j)
          if (!is_zero(ker(r, j))) rel.terms.emplace_back(ker(r, j), paths[static_cast<std::size_t>(j)]->path);
        relations.push_back(std::move(rel));
      }
    }
  e.presentation = BoundQuiverAlgebra<S>::build(q, relations, d + 2, "End(L)");
  if (e.presentation->dim() != e.dim())
    throw std::logic_error("endo_algebra: presentation has dimension " + std::to_string(e.presentation->dim()) + ", expected " +
                           std::to_string(e.dim()));
  return e;
}

template <class S>
GldimReport gldim_at_most(const EndoAlgebra<S>& e, int bound, int cap) {
  if (bound < 0 || cap < bound + 1) throw std::invalid_argument("gldim_at_most: resolution cap must be at least bound + 1");
  GldimReport r;
  r.bound = bound;
  r.cap = cap;
  int worst = 0;
  bool all_finite = true;
  for (int v = 0; v < e.presentation->num_vertices(); ++v) {
    r.per_simple.push_back(projective_dimension(simple_module<S>(e.presentation, v), cap));
    const auto& d = r.per_simple.back();
    // Minimal resolutions: a nonprojective syzygy at step bound already refutes pd <= bound.
    const bool within = d.value && *d.value <= bound;
    if (!within && r.witness < 0) r.witness = v;
    if (d.value) worst = std::max(worst, *d.value);
    else all_finite = false;
  }
  r.verdict = r.witness < 0 ? Tri::yes : Tri::no;
  if (all_finite) r.gldim = worst;
  return r;
}

// ---- Approximations -------------------------------------------------------------

namespace {

// dim span{ m_i o g : g in Hom(L_b, part_i) } over the kept parts, compared with dim Hom(L_b, x) for every b.
template <class S>
bool evaluation_is_onto(const std::vector<ModuleMap<S>>& maps, const std::vector<int>& part_of, const std::vector<bool>& keep,
                        const std::vector<std::vector<HomSpace<S>>>& hom_ll, const std::vector<int>& hom_lx) {
  const std::size_t n = hom_lx.size();
  for (std::size_t b = 0; b < n; ++b) {
    if (hom_lx[b] == 0) continue;
    std::vector<RowVector<S>> rows;
    for (std::size_t i = 0; i < maps.size(); ++i) {
      if (!keep[i]) continue;
      for (const auto& g : hom_ll[b][static_cast<std::size_t>(part_of[i])].basis) rows.push_back(compose(maps[i], g).flatten());
    }
    if (rows.empty() || rank(rows_to_matrix(rows, rows.front().cols())) != hom_lx[b]) return false;
  }
  return true;
}

}  // namespace

template <class S>
RightApproximation<S> right_approximation(const Module<S>& x, const AuslanderGenerator<S>& l) {
  const std::size_t n = l.summands.size();
  std::vector<std::vector<HomSpace<S>>> hom_ll(n);
  std::vector<int> hom_lx(n);
  std::vector<ModuleMap<S>> maps;
  std::vector<int> part_of;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) hom_ll[a].push_back(hom_basis(l.summands[a], l.summands[b]));
    const auto h = hom_basis(l.summands[a], x);
    hom_lx[a] = h.dim();
    for (const auto& f : h.basis) {
      maps.push_back(f);
      part_of.push_back(static_cast<int>(a));
    }
  }
  std::vector<bool> keep(maps.size(), true);
  for (std::size_t i = maps.size(); i-- > 0;) {
    keep[i] = false;
    if (!evaluation_is_onto(maps, part_of, keep, hom_ll, hom_lx)) keep[i] = true;
  }
  RightApproximation<S> r;
  std::vector<Module<S>> parts;
  std::vector<ModuleMap<S>> kept;
  for (std::size_t i = 0; i < maps.size(); ++i)
    if (keep[i]) {
      parts.push_back(maps[i].source);
      kept.push_back(maps[i]);
      r.summand_of.push_back(part_of[i]);
    }
  if (parts.empty()) {
    r.map = zero_map(Module<S>::zero(x.algebra()), x);
    return r;
  }
  r.map = map_from_sum(kept, direct_sum(parts));
  return r;
}

template <class S>
bool is_right_approximation(const ModuleMap<S>& f, const AuslanderGenerator<S>& l) {
  for (const auto& lb : l.summands) {
    const int target = hom_dim(lb, f.target);
    if (target == 0) continue;
    std::vector<RowVector<S>> rows;
    for (const auto& g : hom_basis(lb, f.source).basis) rows.push_back(compose(f, g).flatten());
    if (rows.empty() || rank(rows_to_matrix(rows, rows.front().cols())) != target) return false;
  }
  return true;
}

template <class S>
ApproximationCertificate<S> approximation_certificate(const Module<S>& x, const AuslanderGenerator<S>& l) {
  ApproximationCertificate<S> c;
  c.label = loewy_series(x);
  c.approximation = right_approximation(x, l);
  c.surjective = c.approximation.map.is_surjective();
  c.kernel = map_kernel(c.approximation.map).module;
  c.kernel_in_add = c.kernel.is_zero() || add_membership(c.kernel, l.sum());
  return c;
}

// ---- Certification --------------------------------------------------------------

std::string to_string(RepDimRoute r) {
  switch (r) {
    case RepDimRoute::endo: return "endo";
    case RepDimRoute::approximation: return "approx";
    case RepDimRoute::both: return "both";
  }
  return "?";
}

std::string to_string(RepDimVerdict v) {
  switch (v) {
    case RepDimVerdict::certified_le_3: return "certified-le-3";
    case RepDimVerdict::refuted_at_witness: return "refuted-at-witness";
    case RepDimVerdict::inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

// reach[i][j]: a chain of nonzero maps between inventory members from i to j (i = j included).
template <class S>
std::vector<std::vector<bool>> inventory_reach(const Inventory<S>& inv) {
  const std::size_t n = inv.modules.size();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) reach[i][j] = i == j || hom_dim(inv.modules[i], inv.modules[j]) != 0;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (reach[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (reach[k][j]) reach[i][j] = true;
  return reach;
}

template <class S>
HypothesisCheck check_hypothesis(const DeterminedReport<S>& det, const Inventory<S>& inv) {
  HypothesisCheck h;
  const auto reach = inventory_reach(inv);
  const std::size_t n = inv.modules.size();
  std::vector<bool> pred(n, false), succ(n, false);
  for (int x : det.in_cogen)
    for (std::size_t i = 0; i < n; ++i)
      if (reach[i][static_cast<std::size_t>(x)]) pred[i] = true;
  for (int x : det.in_gen)
    for (std::size_t i = 0; i < n; ++i)
      if (reach[static_cast<std::size_t>(x)][i]) succ[i] = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (pred[i] && !pd_le(inv.modules[i], 1)) h.cogen_failures.push_back(loewy_series(inv.modules[i]));
    if (succ[i] && !id_le(inv.modules[i], 1)) h.gen_failures.push_back(loewy_series(inv.modules[i]));
  }
  h.cogen_in_left = h.cogen_failures.empty();
  h.gen_in_right = h.gen_failures.empty();
  h.holds = h.cogen_in_left || h.gen_in_right;
  return h;
}

}  // namespace

template <class S>
RepDimCertificate<S> certify_repdim3(const SliceFamily<S>& f, const Inventory<S>& inv, const typename Module<S>::AlgebraPtr& a,
                                     const RepDimOptions& options) {
  RepDimCertificate<S> c;
  c.determined = check_determined(f, inv);
  if (!c.determined.overall) {
    if (!options.override_determined) throw std::invalid_argument("certify_repdim3: the family fails the determined check");
    c.warnings.push_back("determined check failed; continuing by override");
  }
  c.scope = c.determined.scope;
  std::vector<Module<S>> y;
  for (int i : c.determined.y.complement) y.push_back(inv.modules[static_cast<std::size_t>(i)]);
  c.generator = assemble_auslander_generator(f, y, a);
  c.hypothesis = check_hypothesis(c.determined, inv);

  bool certified = false, refuted = false;
  if (options.route != RepDimRoute::approximation) {
    try {
      const auto e = endo_algebra(c.generator.summands);
      c.endo = gldim_at_most(e, 3, options.resolution_cap);
      if (c.endo->verdict == Tri::yes) certified = true;
      if (c.endo->verdict == Tri::no) {
        refuted = true;
        c.witness = "simple of End(L) at " + c.generator.labels[static_cast<std::size_t>(c.endo->witness)];
      }
    } catch (const std::domain_error& err) {
      c.warnings.push_back(std::string("endo route skipped: ") + err.what());
    }
  }
  if (options.route != RepDimRoute::endo) {
    bool ok = true;
    for (const auto& m : inv.modules) {
      c.approximations.push_back(approximation_certificate(m, c.generator));
      const auto& ac = c.approximations.back();
      if (ok && !(ac.surjective && ac.kernel_in_add)) {
        ok = false;
        if (c.witness.empty()) c.witness = "approximation kernel of " + ac.label;
      }
    }
    c.approximations_ok = ok;
    if (!ok) refuted = true;
    if (ok && c.scope == Scope::exhaustive) certified = true;
  }
  if (certified && refuted) {
    c.warnings.push_back("routes disagree");
    c.verdict = RepDimVerdict::inconclusive;
  } else if (refuted) {
    c.verdict = RepDimVerdict::refuted_at_witness;
  } else if (certified) {
    c.verdict = RepDimVerdict::certified_le_3;
  }
  c.wrepdim_le_3 = c.findim_finite = c.verdict == RepDimVerdict::certified_le_3;
  return c;
}

#define TAUSLICE_INSTANTIATE_REPDIM(S)                                                                                       \
  template AuslanderGenerator<S> assemble_auslander_generator<S>(const SliceFamily<S>&, const std::vector<Module<S>>&,        \
                                                                 const Module<S>::AlgebraPtr&);                               \
  template bool is_generator_cogenerator<S>(const AuslanderGenerator<S>&);                                                   \
  template struct EndoAlgebra<S>;                                                                                            \
  template EndoAlgebra<S> endo_algebra<S>(const std::vector<Module<S>>&);                                                    \
  template GldimReport gldim_at_most<S>(const EndoAlgebra<S>&, int, int);                                                    \
  template RightApproximation<S> right_approximation<S>(const Module<S>&, const AuslanderGenerator<S>&);                     \
  template bool is_right_approximation<S>(const ModuleMap<S>&, const AuslanderGenerator<S>&);                                \
  template ApproximationCertificate<S> approximation_certificate<S>(const Module<S>&, const AuslanderGenerator<S>&);         \
  template RepDimCertificate<S> certify_repdim3<S>(const SliceFamily<S>&, const Inventory<S>&, const Module<S>::AlgebraPtr&, \
                                                   const RepDimOptions&);

TAUSLICE_INSTANTIATE_REPDIM(Rational)
TAUSLICE_INSTANTIATE_REPDIM(ModInt)

}  // namespace tauslice
