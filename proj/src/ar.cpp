#include "tauslice/ar.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <tuple>

namespace tauslice {

namespace {

template <class S>
int span_rank(const std::vector<ModuleMap<S>>& maps) {
  if (maps.empty()) return 0;
  std::vector<RowVector<S>> rows;
  for (const auto& f : maps) rows.push_back(f.flatten());
  return static_cast<int>(rank(rows_to_matrix(rows, rows.front().cols())));
}

// D(A e_i) on the duals of the paths ending at i: arrow a: s -> t sends q* to sum_y coeff_q(a y) y*.
template <class S>
Module<S> nakayama_injective(const typename Module<S>::AlgebraPtr& a, int i) {
  const auto& q = a->quiver();
  std::vector<int> dims;
  for (int v = 0; v < a->num_vertices(); ++v) dims.push_back(static_cast<int>(a->paths_between(v, i).size()));
  std::vector<Matrix<S>> action;
  for (int x = 0; x < q.num_arrows(); ++x) {
    const auto& arr = q.arrows[static_cast<std::size_t>(x)];
    const auto rows = a->paths_between(arr.source, i);
    const auto cols = a->paths_between(arr.target, i);
    Matrix<S> m = zero_matrix<S>(static_cast<Index>(rows.size()), static_cast<Index>(cols.size()));
    const int xi = a->basis_index(Path{arr.source, {x}});
    if (xi >= 0) {
      for (std::size_t c = 0; c < cols.size(); ++c)
        for (const auto& [k, coeff] : a->product(xi, cols[c])) {
          auto it = std::find(rows.begin(), rows.end(), k);
          if (it != rows.end()) m(static_cast<Index>(it - rows.begin()), static_cast<Index>(c)) += coeff;
        }
    }
    action.push_back(std::move(m));
  }
  return Module<S>::unchecked(a, dims, action);
}

// Offset of summand k of a sum of projectives at vertex v.
int summand_offset(const std::vector<std::vector<int>>& dims_of_parts, std::size_t k, int v) {
  int off = 0;
  for (std::size_t j = 0; j < k; ++j) off += dims_of_parts[j][static_cast<std::size_t>(v)];
  return off;
}

template <class S>
std::vector<std::vector<int>> projective_dims(const typename Module<S>::AlgebraPtr& a, const std::vector<int>& tops) {
  std::vector<std::vector<int>> out;
  for (int t : tops) {
    std::vector<int> d;
    for (int v = 0; v < a->num_vertices(); ++v) d.push_back(static_cast<int>(a->paths_between(t, v).size()));
    out.push_back(std::move(d));
  }
  return out;
}

// nu(f) for f: sum_l P(j_l) -> sum_k P(i_k); the component l -> k is left multiplication by x in e_i A e_j,
// and nu of it sends phi to phi(- x).
template <class S>
ModuleMap<S> nakayama_map(const Presentation<S>& pres) {
  const auto& a = pres.p0.cover.algebra();
  const auto& tops0 = pres.p0.top_vertices;
  const auto& tops1 = pres.p1.top_vertices;
  const auto d0 = projective_dims<S>(a, tops0);
  const auto d1 = projective_dims<S>(a, tops1);

  std::vector<Module<S>> inj0, inj1;
  for (int i : tops0) inj0.push_back(nakayama_injective<S>(a, i));
  for (int j : tops1) inj1.push_back(nakayama_injective<S>(a, j));
  const Module<S> n0 = direct_sum(inj0);
  const Module<S> n1 = direct_sum(inj1);

  // x[l][k] as coefficients over the basis of A.
  std::vector<std::vector<RowVector<S>>> x(tops1.size());
  for (std::size_t l = 0; l < tops1.size(); ++l) {
    const int j = tops1[l];
    const Index row = summand_offset(d1, l, j);
    for (std::size_t k = 0; k < tops0.size(); ++k) {
      RowVector<S> e = RowVector<S>::Constant(a->dim(), S(0));
      const auto paths = a->paths_between(tops0[k], j);
      const Index col = summand_offset(d0, k, j);
      for (std::size_t r = 0; r < paths.size(); ++r)
        e(paths[r]) = pres.map.block(j)(row, col + static_cast<Index>(r));
      x[l].push_back(std::move(e));
    }
  }

  ModuleMap<S> nu = zero_map(n1, n0);
  for (int v = 0; v < a->num_vertices(); ++v) {
    auto& block = nu.blocks[static_cast<std::size_t>(v)];
    Index r0 = 0;
    for (std::size_t l = 0; l < tops1.size(); ++l) {
      const auto qs = a->paths_between(v, tops1[l]);
      Index c0 = 0;
      for (std::size_t k = 0; k < tops0.size(); ++k) {
        const auto ps = a->paths_between(v, tops0[k]);
        for (std::size_t pc = 0; pc < ps.size(); ++pc) {
          const auto px = a->multiply(a->basis_element(ps[pc]), x[l][k]);
          for (std::size_t qr = 0; qr < qs.size(); ++qr) block(r0 + static_cast<Index>(qr), c0 + static_cast<Index>(pc)) = px(qs[qr]);
        }
        c0 += static_cast<Index>(ps.size());
      }
      r0 += static_cast<Index>(qs.size());
    }
  }
  return nu;
}

}  // namespace

template <class S>
Module<S> tau(const Module<S>& m) {
  const auto& a = m.algebra();
  if (m.is_zero()) return m;
  const auto pres = min_proj_presentation(m);
  if (pres.p1.top_vertices.empty()) return Module<S>::zero(a);
  return map_kernel(nakayama_map(pres)).module;
}

template <class S>
Module<S> tau_minus(const Module<S>& m) {
  if (m.is_zero()) return m;
  return dualize(tau(dualize(m)));
}

template <class S>
int ext1_dim(const Module<S>& m, const Module<S>& n) {
  if (m.is_zero() || n.is_zero()) return 0;
  const auto p0 = projective_cover(m);
  const auto k = map_kernel(p0.map);
  if (k.module.is_zero()) return 0;
  const int hk = hom_dim(k.module, n);
  std::vector<ModuleMap<S>> restrictions;
  for (const auto& g : hom_basis(p0.cover, n).basis) restrictions.push_back(compose(g, k.inclusion));
  return hk - span_rank(restrictions);
}

template <class S>
int stable_hom_dim_injective(const Module<S>& m, const Module<S>& n) {
  if (m.is_zero() || n.is_zero()) return 0;
  const auto env = injective_envelope(m);
  std::vector<ModuleMap<S>> through;
  for (const auto& h : hom_basis(env.envelope, n).basis) through.push_back(compose(h, env.map));
  return hom_dim(m, n) - span_rank(through);
}

template <class S>
int stable_hom_dim_projective(const Module<S>& m, const Module<S>& n) {
  if (m.is_zero() || n.is_zero()) return 0;
  const auto pc = projective_cover(n);
  std::vector<ModuleMap<S>> through;
  for (const auto& h : hom_basis(m, pc.cover).basis) through.push_back(compose(pc.map, h));
  return hom_dim(m, n) - span_rank(through);
}

template <class S>
bool is_tau_rigid(const Module<S>& m) {
  return hom_dim(m, tau(m)) == 0;
}

namespace {

template <class S>
ModuleMap<S> endo_from_total(const Module<S>& m, const Matrix<S>& total) {
  ModuleMap<S> f = zero_map(m, m);
  Index off = 0;
  for (int v = 0; v < m.num_vertices(); ++v) {
    f.blocks[static_cast<std::size_t>(v)] = total.block(off, off, m.dim(v), m.dim(v));
    off += m.dim(v);
  }
  return f;
}

// r0: P0 -> P0 with pi r0 = r pi, built on the generators of the cover.
template <class S>
ModuleMap<S> lift_to_cover(const ProjectiveCover<S>& pc, const ModuleMap<S>& r) {
  const auto& a = pc.cover.algebra();
  std::vector<ModuleMap<S>> maps;
  const auto dims = projective_dims<S>(a, pc.top_vertices);
  for (std::size_t s = 0; s < pc.top_vertices.size(); ++s) {
    const int v = pc.top_vertices[s];
    const Index row = summand_offset(dims, s, v);
    const Matrix<S> image = pc.map.block(v).row(row) * r.block(v);
    const auto pre = solve_left<S>(pc.map.block(v), image);
    if (!pre) throw std::logic_error("lift_to_cover: projective cover is not surjective");
    maps.push_back(map_from_projective(projective_module<S>(a, v), v, pc.cover, RowVector<S>(pre->row(0))));
  }
  return map_from_sum(maps, pc.cover);
}

// Restriction of r0 to a submodule preserved by it.
template <class S>
ModuleMap<S> restrict_endo(const Submodule<S>& k, const ModuleMap<S>& r0) {
  ModuleMap<S> f = zero_map(k.module, k.module);
  for (int v = 0; v < k.module.num_vertices(); ++v) {
    if (k.module.dim(v) == 0) continue;
    const auto& incl = k.inclusion.block(v);
    const auto x = solve_left<S>(incl, Matrix<S>(incl * r0.block(v)));
    if (!x) throw std::logic_error("restrict_endo: submodule is not invariant");
    f.blocks[static_cast<std::size_t>(v)] = *x;
  }
  return f;
}

// The map on a quotient induced by psi, which must vanish on the kernel of q.
template <class S>
ModuleMap<S> induced_on_quotient(const QuotientModule<S>& q, const ModuleMap<S>& psi) {
  ModuleMap<S> f = zero_map(q.module, psi.target);
  for (int v = 0; v < q.module.num_vertices(); ++v) {
    if (q.module.dim(v) == 0) continue;
    const auto x = solve_linear<S>(q.projection.block(v), psi.block(v));
    if (!x) throw std::logic_error("induced_on_quotient: map does not factor");
    f.blocks[static_cast<std::size_t>(v)] = *x;
  }
  return f;
}

template <class S>
bool in_span(const std::vector<ModuleMap<S>>& maps, const ModuleMap<S>& f) {
  const RowVector<S> target = f.flatten();
  if (maps.empty()) return is_zero_matrix<S>(target);
  std::vector<RowVector<S>> rows;
  for (const auto& g : maps) rows.push_back(g.flatten());
  return Subspace<S>::span(rows_to_matrix(rows, target.cols())).contains(target);
}

}  // namespace

template <class S>
AlmostSplitSeq<S> almost_split_sequence(const Module<S>& x) {
  if (x.is_zero()) throw std::invalid_argument("almost_split_sequence: zero module");
  if (is_projective(x)) throw std::invalid_argument("almost_split_sequence: module is projective");
  const auto cert = local_certificate(x);
  if (!cert.local) {
    if (decompose(x).summands.size() > 1) throw std::invalid_argument("almost_split_sequence: module is decomposable");
    throw AlmostSplitError("almost_split_sequence: End(X) has no locality certificate");
  }

  const Module<S> t = tau(x);
  const auto pc = projective_cover(x);
  const auto k = map_kernel(pc.map);
  const auto hkt = hom_basis(k.module, t);
  if (hkt.dim() == 0) throw AlmostSplitError("almost_split_sequence: Hom(Omega X, tau X) vanishes");
  const Index width = hkt.basis.front().flatten().cols();

  std::vector<RowVector<S>> rrows;
  for (const auto& g : hom_basis(pc.cover, t).basis) rrows.push_back(compose(g, k.inclusion).flatten());
  const auto restr = Subspace<S>::span(rows_to_matrix(rrows, width));
  const Matrix<S> to_ext = restr.quotient_map();

  // Coefficient vectors c with (sum c_a h_a) r1 in R for every r in rad End(X).
  Matrix<S> conditions = zero_matrix<S>(hkt.dim(), 0);
  for (const auto& rt : cert.radical) {
    const auto r = endo_from_total(x, rt);
    const auto r1 = restrict_endo(k, lift_to_cover(pc, r));
    Matrix<S> block = zero_matrix<S>(hkt.dim(), to_ext.cols());
    for (int i = 0; i < hkt.dim(); ++i)
      block.row(i) = compose(hkt.basis[static_cast<std::size_t>(i)], r1).flatten() * to_ext;
    conditions = hstack(conditions, block);
  }
  const Matrix<S> socle = conditions.cols() == 0 ? identity_matrix<S>(hkt.dim()) : left_kernel_basis(conditions);

  std::vector<RowVector<S>> socle_rows;
  std::optional<RowVector<S>> chosen;
  for (Index i = 0; i < socle.rows(); ++i) {
    std::vector<S> c(socle.cols());
    for (Index j = 0; j < socle.cols(); ++j) c[static_cast<std::size_t>(j)] = socle(i, j);
    const RowVector<S> eta = hkt.combine(c).flatten();
    socle_rows.push_back(eta);
    if (!chosen && !restr.contains(eta)) chosen = RowVector<S>(socle.row(i));
  }
  const auto soc_plus_r = restr.sum(Subspace<S>::span(rows_to_matrix(socle_rows, width)));
  const int soc_dim = static_cast<int>(soc_plus_r.dim() - restr.dim());
  if (soc_dim != 1 || !chosen)
    throw AlmostSplitError("almost_split_sequence: Ext socle has dimension " + std::to_string(soc_dim));

  std::vector<S> coeffs(static_cast<std::size_t>(chosen->cols()));
  for (Index j = 0; j < chosen->cols(); ++j) coeffs[static_cast<std::size_t>(j)] = (*chosen)(j);
  const ModuleMap<S> eta = hkt.combine(coeffs);

  // Pushout of Omega X -> P0 along eta.
  const std::vector<Module<S>> parts{t, pc.cover};
  const Module<S> sum = direct_sum(parts);
  const auto phi = map_to_sum<S>({eta, scale(S(-1), k.inclusion)}, sum);
  const auto coker = map_cokernel(phi);
  const auto incl = compose(coker.projection, sum_injection(parts, 0));
  const auto psi = map_from_sum<S>({zero_map(t, x), pc.map}, sum);
  const auto proj = induced_on_quotient(coker, psi);

  AlmostSplitSeq<S> seq{t, coker.module, x, incl, proj, decompose_grouped(coker.module)};
  return seq;
}

template <class S>
bool is_exact_nonsplit(const AlmostSplitSeq<S>& seq) {
  if (!seq.incl.is_homomorphism() || !seq.proj.is_homomorphism()) return false;
  if (!seq.incl.is_injective() || !seq.proj.is_surjective()) return false;
  if (!compose(seq.proj, seq.incl).is_zero()) return false;
  for (int v = 0; v < seq.middle.num_vertices(); ++v)
    if (seq.middle.dim(v) != seq.left.dim(v) + seq.right.dim(v)) return false;
  std::vector<ModuleMap<S>> sections;
  for (const auto& s : hom_basis(seq.right, seq.middle).basis) sections.push_back(compose(seq.proj, s));
  return !in_span(sections, identity_map(seq.right));
}

template <class S>
bool is_right_almost_split_on(const AlmostSplitSeq<S>& seq, const std::vector<Module<S>>& family) {
  for (const auto& z : family) {
    if (z.dims() == seq.right.dims() && is_isomorphic(z, seq.right) == Tri::yes) continue;
    std::vector<ModuleMap<S>> through;
    for (const auto& g : hom_basis(z, seq.middle).basis) through.push_back(compose(seq.proj, g));
    for (const auto& f : hom_basis(z, seq.right).basis)
      if (!in_span(through, f)) return false;
  }
  return true;
}

template <class S>
std::vector<SummandClass<S>> ar_neighbors(const Module<S>& x, Direction direction) {
  if (direction == Direction::in) {
    if (is_projective(x)) {
      const auto rad = radical(x).module;
      return rad.is_zero() ? std::vector<SummandClass<S>>{} : decompose_grouped(rad);
    }
    return almost_split_sequence(x).middle_summands;
  }
  if (is_injective(x)) {
    const auto q = map_cokernel(socle(x).inclusion).module;
    return q.is_zero() ? std::vector<SummandClass<S>>{} : decompose_grouped(q);
  }
  return almost_split_sequence(tau_minus(x)).middle_summands;
}

template <class S>
int ARComponent<S>::find(const Module<S>& m) const {
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].module.dims() == m.dims() && iso_indecomposables(nodes[i].module, m)) return static_cast<int>(i);
  return -1;
}

namespace {

template <class S>
class Knitter {
 public:
  explicit Knitter(const KnitOptions& options) : options_(options) {}

  ARComponent<S> run(const std::vector<Module<S>>& seeds) {
    for (const auto& s : seeds) {
      if (!is_indecomposable(s)) throw std::invalid_argument("knit_component: seed is not indecomposable");
      if (locate_or_add(s, 0, 0) < 0) throw std::invalid_argument("knit_component: seed exceeds the caps");
    }
    while (!queue_.empty()) {
      const auto [back, dist, order, i] = queue_.top();
      queue_.pop();
      (void)order;
      try {
        expand(i, back, dist);
      } catch (const std::exception& e) {
        c_.diagnostics.push_back(c_.nodes[static_cast<std::size_t>(i)].label + ": " + e.what());
        mark_frontier(i);
      }
    }
    std::sort(c_.frontier.begin(), c_.frontier.end());
    c_.frontier.erase(std::unique(c_.frontier.begin(), c_.frontier.end()), c_.frontier.end());
    return std::move(c_);
  }

 private:
  using Item = std::tuple<int, int, int, int>;  // backward steps, distance, insertion order, node

  int locate_or_add(const Module<S>& m, int back, int dist) {
    const auto layers = loewy_layers(m);
    for (std::size_t i = 0; i < c_.nodes.size(); ++i)
      if (c_.nodes[i].module.dims() == m.dims() && layers_[i] == layers && iso_indecomposables(c_.nodes[i].module, m))
        return static_cast<int>(i);
    if (static_cast<int>(c_.nodes.size()) >= options_.max_nodes || m.total_dim() > options_.max_total_dim) {
      c_.cap_hit = true;
      return -1;
    }
    const int idx = static_cast<int>(c_.nodes.size());
    c_.nodes.push_back({m, loewy_series(m), is_projective(m), is_injective(m)});
    layers_.push_back(layers);
    sequences_.emplace_back();
    queue_.push({back, dist, idx, idx});
    return idx;
  }

  void mark_frontier(int i) { c_.frontier.push_back(i); }

  const AlmostSplitSeq<S>& sequence_at(int i) {
    auto& slot = sequences_[static_cast<std::size_t>(i)];
    if (!slot) slot = almost_split_sequence(c_.nodes[static_cast<std::size_t>(i)].module);
    return *slot;
  }

  void link(int from, int to, int mult, int missing_owner) {
    if (from < 0 || to < 0) {
      mark_frontier(missing_owner);
      return;
    }
    c_.arrows.emplace(std::make_pair(from, to), mult);
  }

  void expand(int i, int back, int dist) {
    const ARNode<S> node = c_.nodes[static_cast<std::size_t>(i)];
    // Successors first, so forward knitting fills the window before predecessors do.
    if (node.injective) {
      for (const auto& y : ar_neighbors(node.module, Direction::out))
        link(i, locate_or_add(y.module, back, dist + 1), y.multiplicity, i);
    } else {
      const int j = locate_or_add(tau_minus(node.module), back, dist + 1);
      // Arrows from i into existing nodes are recovered when those nodes are expanded.
      if (j < 0) {
        mark_frontier(i);
      } else {
        c_.tau_links[j] = i;
        for (const auto& y : sequence_at(j).middle_summands)
          link(i, locate_or_add(y.module, back, dist + 1), y.multiplicity, i);
      }
    }
    if (node.projective) {
      for (const auto& y : ar_neighbors(node.module, Direction::in))
        link(locate_or_add(y.module, back + 1, dist + 1), i, y.multiplicity, i);
    } else {
      const auto& seq = sequence_at(i);
      const int j = locate_or_add(seq.left, back + 1, dist + 1);
      if (j < 0) mark_frontier(i);
      else c_.tau_links[i] = j;
      for (const auto& y : seq.middle_summands)
        link(locate_or_add(y.module, back + 1, dist + 1), i, y.multiplicity, i);
    }
  }

  KnitOptions options_;
  ARComponent<S> c_;
  std::vector<std::vector<std::vector<int>>> layers_;
  std::vector<std::optional<AlmostSplitSeq<S>>> sequences_;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> queue_;
};

}  // namespace

template <class S>
ARComponent<S> knit_component(const std::vector<Module<S>>& seeds, const KnitOptions& options) {
  if (options.max_nodes <= 0 || options.max_total_dim <= 0)
    throw std::invalid_argument("knit_component: caps must be positive");
  if (seeds.empty()) throw std::invalid_argument("knit_component: no seeds");
  return Knitter<S>(options).run(seeds);
}

template <class S>
std::string emit_dot(const ARComponent<S>& c) {
  std::ostringstream out;
  out << "digraph AR {\n";
  for (std::size_t i = 0; i < c.nodes.size(); ++i) out << "  n" << i << " [label=\"" << c.nodes[i].label << "\"];\n";
  for (const auto& [edge, mult] : c.arrows)
    for (int k = 0; k < mult; ++k) out << "  n" << edge.first << " -> n" << edge.second << ";\n";
  for (const auto& [x, tx] : c.tau_links) out << "  n" << x << " -> n" << tx << " [style=dashed];\n";
  out << "}\n";
  return out.str();
}

#define TAUSLICE_INSTANTIATE_AR(S)                                                                        \
  template Module<S> tau<S>(const Module<S>&);                                                            \
  template Module<S> tau_minus<S>(const Module<S>&);                                                      \
  template int ext1_dim<S>(const Module<S>&, const Module<S>&);                                           \
  template int stable_hom_dim_injective<S>(const Module<S>&, const Module<S>&);                           \
  template int stable_hom_dim_projective<S>(const Module<S>&, const Module<S>&);                          \
  template bool is_tau_rigid<S>(const Module<S>&);                                                        \
  template AlmostSplitSeq<S> almost_split_sequence<S>(const Module<S>&);                                  \
  template bool is_exact_nonsplit<S>(const AlmostSplitSeq<S>&);                                           \
  template bool is_right_almost_split_on<S>(const AlmostSplitSeq<S>&, const std::vector<Module<S>>&);     \
  template std::vector<SummandClass<S>> ar_neighbors<S>(const Module<S>&, Direction);                     \
  template struct ARComponent<S>;                                                                         \
  template ARComponent<S> knit_component<S>(const std::vector<Module<S>>&, const KnitOptions&);           \
  template std::string emit_dot<S>(const ARComponent<S>&);

TAUSLICE_INSTANTIATE_AR(Rational)
TAUSLICE_INSTANTIATE_AR(ModInt)

}  // namespace tauslice
