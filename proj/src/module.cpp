#include "tauslice/module.hpp"

#include <numeric>

namespace tauslice {

std::string to_string(Tri t) {
  switch (t) {
    case Tri::no: return "no";
    case Tri::yes: return "yes";
    case Tri::unknown: return "unknown";
  }
  return "unknown";
}

// ---- Module -----------------------------------------------------------------

template <class S>
Module<S>::Module(AlgebraPtr algebra, std::vector<int> dims, std::vector<Matrix<S>> action)
    : algebra_(std::move(algebra)), dims_(std::move(dims)), action_(std::move(action)) {
  if (!algebra_) throw std::invalid_argument("module without an algebra");
  const auto& q = algebra_->quiver();
  if (static_cast<int>(dims_.size()) != q.num_vertices())
    throw std::invalid_argument("dimension vector has " + std::to_string(dims_.size()) + " entries, expected " +
                                std::to_string(q.num_vertices()));
  for (int d : dims_)
    if (d < 0) throw std::invalid_argument("negative entry in dimension vector");
  if (static_cast<int>(action_.size()) != q.num_arrows())
    throw std::invalid_argument("expected one matrix per arrow");
  for (int a = 0; a < q.num_arrows(); ++a) {
    const auto& arr = q.arrows[static_cast<std::size_t>(a)];
    const auto& m = action_[static_cast<std::size_t>(a)];
    if (m.rows() != dim(arr.source) || m.cols() != dim(arr.target))
      throw std::invalid_argument("matrix for arrow '" + arr.id + "' has shape " + std::to_string(m.rows()) + "x" +
                                  std::to_string(m.cols()) + ", expected " + std::to_string(dim(arr.source)) + "x" +
                                  std::to_string(dim(arr.target)));
  }
  if (auto bad = relation_violation()) throw std::invalid_argument("relation '" + *bad + "' does not vanish on the module");
}

template <class S>
Module<S> Module<S>::unchecked(AlgebraPtr algebra, std::vector<int> dims, std::vector<Matrix<S>> action) {
  Module m;
  m.algebra_ = std::move(algebra);
  m.dims_ = std::move(dims);
  m.action_ = std::move(action);
  return m;
}

template <class S>
Module<S> Module<S>::zero(AlgebraPtr algebra) {
  const auto& q = algebra->quiver();
  std::vector<Matrix<S>> action;
  for (int a = 0; a < q.num_arrows(); ++a) action.push_back(zero_matrix<S>(0, 0));
  return unchecked(algebra, std::vector<int>(static_cast<std::size_t>(q.num_vertices()), 0), std::move(action));
}

template <class S>
int Module<S>::total_dim() const {
  return std::accumulate(dims_.begin(), dims_.end(), 0);
}

template <class S>
Matrix<S> Module<S>::path_action(const Path& p) const {
  return BoundQuiverAlgebra<S>::evaluate_path(p, action_, dims_);
}

template <class S>
std::optional<std::string> Module<S>::relation_violation() const {
  const auto& q = algebra_->quiver();
  for (std::size_t r = 0; r < algebra_->relations().size(); ++r) {
    const auto& rel = algebra_->relations()[r];
    const Path& first = rel.terms.front().second;
    Matrix<S> sum = zero_matrix<S>(dim(first.source), dim(first.target(q)));
    for (const auto& [c, p] : rel.terms) sum += c * path_action(p);
    if (!is_zero_matrix(sum)) return rel.name.empty() ? "#" + std::to_string(r + 1) : rel.name;
  }
  return std::nullopt;
}

// ---- ModuleMap --------------------------------------------------------------

template <class S>
bool ModuleMap<S>::is_zero() const {
  for (const auto& b : blocks)
    if (!is_zero_matrix(b)) return false;
  return true;
}

template <class S>
bool ModuleMap<S>::is_injective() const {
  for (std::size_t v = 0; v < blocks.size(); ++v)
    if (rank(blocks[v]) != blocks[v].rows()) return false;
  return true;
}

template <class S>
bool ModuleMap<S>::is_surjective() const {
  for (std::size_t v = 0; v < blocks.size(); ++v)
    if (rank(blocks[v]) != blocks[v].cols()) return false;
  return true;
}

template <class S>
bool ModuleMap<S>::is_homomorphism() const {
  if (source.algebra() != target.algebra()) return false;
  const auto& q = source.algebra()->quiver();
  if (static_cast<int>(blocks.size()) != q.num_vertices()) return false;
  for (int v = 0; v < q.num_vertices(); ++v)
    if (block(v).rows() != source.dim(v) || block(v).cols() != target.dim(v)) return false;
  for (int a = 0; a < q.num_arrows(); ++a) {
    const auto& arr = q.arrows[static_cast<std::size_t>(a)];
    if (Matrix<S>(source.action(a) * block(arr.target)) != Matrix<S>(block(arr.source) * target.action(a))) return false;
  }
  return true;
}

template <class S>
RowVector<S> ModuleMap<S>::flatten() const {
  return tauslice::flatten<S>(blocks);
}

template <class S>
Matrix<S> ModuleMap<S>::total() const {
  return block_diag<S>(blocks);
}

template <class S>
ModuleMap<S> HomSpace<S>::combine(const std::vector<S>& coeffs) const {
  ModuleMap<S> f = zero_map(source, target);
  for (std::size_t i = 0; i < basis.size() && i < coeffs.size(); ++i) {
    if (is_zero(coeffs[i])) continue;
    for (std::size_t v = 0; v < f.blocks.size(); ++v) f.blocks[v] += coeffs[i] * basis[i].blocks[v];
  }
  return f;
}

// ---- Standard modules ---------------------------------------------------------

template <class S>
Module<S> simple_module(const typename Module<S>::AlgebraPtr& a, int v) {
  if (v < 0 || v >= a->num_vertices()) throw std::invalid_argument("no vertex with index " + std::to_string(v));
  std::vector<int> dims(static_cast<std::size_t>(a->num_vertices()), 0);
  dims[static_cast<std::size_t>(v)] = 1;
  std::vector<Matrix<S>> action;
  for (const auto& arr : a->quiver().arrows) action.push_back(zero_matrix<S>(dims[static_cast<std::size_t>(arr.source)], dims[static_cast<std::size_t>(arr.target)]));
  return Module<S>::unchecked(a, dims, action);
}

template <class S>
Module<S> projective_module(const typename Module<S>::AlgebraPtr& a, int v) {
  if (v < 0 || v >= a->num_vertices()) throw std::invalid_argument("no vertex with index " + std::to_string(v));
  const int nv = a->num_vertices();
  std::vector<std::vector<int>> at(static_cast<std::size_t>(nv));
  std::vector<int> pos(static_cast<std::size_t>(a->dim()), -1);
  for (int i : a->paths_from(v)) {
    auto& slot = at[static_cast<std::size_t>(a->target(i))];
    pos[static_cast<std::size_t>(i)] = static_cast<int>(slot.size());
    slot.push_back(i);
  }
  std::vector<int> dims;
  for (const auto& s : at) dims.push_back(static_cast<int>(s.size()));
  std::vector<Matrix<S>> action;
  const auto& q = a->quiver();
  for (int x = 0; x < q.num_arrows(); ++x) {
    const auto& arr = q.arrows[static_cast<std::size_t>(x)];
    const int xi = a->basis_index(Path{arr.source, {x}});
    Matrix<S> m = zero_matrix<S>(dims[static_cast<std::size_t>(arr.source)], dims[static_cast<std::size_t>(arr.target)]);
    if (xi >= 0) {
      const auto& rows = at[static_cast<std::size_t>(arr.source)];
      for (std::size_t r = 0; r < rows.size(); ++r)
        for (const auto& [k, c] : a->product(rows[r], xi)) m(static_cast<Index>(r), pos[static_cast<std::size_t>(k)]) += c;
    }
    action.push_back(std::move(m));
  }
  return Module<S>::unchecked(a, dims, action);
}

template <class S>
Module<S> injective_module(const typename Module<S>::AlgebraPtr& a, int v) {
  return dualize(projective_module<S>(a->opposite(), v));
}

template <class S>
Module<S> regular_module(const typename Module<S>::AlgebraPtr& a) {
  std::vector<Module<S>> parts;
  for (int v = 0; v < a->num_vertices(); ++v) parts.push_back(projective_module<S>(a, v));
  return direct_sum(parts);
}

template <class S>
Module<S> dual_regular_module(const typename Module<S>::AlgebraPtr& a) {
  std::vector<Module<S>> parts;
  for (int v = 0; v < a->num_vertices(); ++v) parts.push_back(injective_module<S>(a, v));
  return direct_sum(parts);
}

template <class S>
ModuleMap<S> map_from_projective(const Module<S>& pv, int v, const Module<S>& m, const RowVector<S>& element) {
  const auto& a = pv.algebra();
  ModuleMap<S> f = zero_map(pv, m);
  std::vector<int> filled(static_cast<std::size_t>(a->num_vertices()), 0);
  for (int i : a->paths_from(v)) {
    const int w = a->target(i);
    f.blocks[static_cast<std::size_t>(w)].row(filled[static_cast<std::size_t>(w)]++) = element * m.path_action(a->basis_path(i));
  }
  return f;
}

// ---- Sums, duals, maps ------------------------------------------------------

template <class S>
Module<S> direct_sum(const std::vector<Module<S>>& parts) {
  if (parts.empty()) throw std::invalid_argument("direct_sum of an empty list");
  const auto& a = parts.front().algebra();
  const auto& q = a->quiver();
  std::vector<int> dims(static_cast<std::size_t>(q.num_vertices()), 0);
  for (const auto& p : parts) {
    if (p.algebra() != a) throw std::invalid_argument("direct_sum over different algebras");
    for (int v = 0; v < q.num_vertices(); ++v) dims[static_cast<std::size_t>(v)] += p.dim(v);
  }
  std::vector<Matrix<S>> action;
  for (int x = 0; x < q.num_arrows(); ++x) {
    std::vector<Matrix<S>> blocks;
    for (const auto& p : parts) blocks.push_back(p.action(x));
    action.push_back(block_diag(blocks));
  }
  return Module<S>::unchecked(a, dims, action);
}

template <class S>
Module<S> power(const Module<S>& m, int n) {
  if (n == 0) return Module<S>::zero(m.algebra());
  return direct_sum(std::vector<Module<S>>(static_cast<std::size_t>(n), m));
}

namespace {

template <class S>
std::vector<int> offsets_at(const std::vector<Module<S>>& parts, int v) {
  std::vector<int> off;
  int acc = 0;
  for (const auto& p : parts) {
    off.push_back(acc);
    acc += p.dim(v);
  }
  return off;
}

}  // namespace

template <class S>
ModuleMap<S> sum_injection(const std::vector<Module<S>>& parts, int k) {
  const Module<S> sum = direct_sum(parts);
  const auto& part = parts[static_cast<std::size_t>(k)];
  ModuleMap<S> f = zero_map(part, sum);
  for (int v = 0; v < sum.num_vertices(); ++v) {
    const int off = offsets_at(parts, v)[static_cast<std::size_t>(k)];
    f.blocks[static_cast<std::size_t>(v)].block(0, off, part.dim(v), part.dim(v)) = identity_matrix<S>(part.dim(v));
  }
  return f;
}

template <class S>
ModuleMap<S> sum_projection(const std::vector<Module<S>>& parts, int k) {
  const Module<S> sum = direct_sum(parts);
  const auto& part = parts[static_cast<std::size_t>(k)];
  ModuleMap<S> f = zero_map(sum, part);
  for (int v = 0; v < sum.num_vertices(); ++v) {
    const int off = offsets_at(parts, v)[static_cast<std::size_t>(k)];
    f.blocks[static_cast<std::size_t>(v)].block(off, 0, part.dim(v), part.dim(v)) = identity_matrix<S>(part.dim(v));
  }
  return f;
}

template <class S>
ModuleMap<S> map_from_sum(const std::vector<ModuleMap<S>>& maps, const Module<S>& sum) {
  if (maps.empty()) throw std::invalid_argument("map_from_sum needs at least one map");
  ModuleMap<S> f = zero_map(sum, maps.front().target);
  for (int v = 0; v < sum.num_vertices(); ++v) {
    Matrix<S> stacked = zero_matrix<S>(0, maps.front().target.dim(v));
    for (const auto& m : maps) stacked = vstack(stacked, m.block(v));
    f.blocks[static_cast<std::size_t>(v)] = stacked;
  }
  return f;
}

template <class S>
ModuleMap<S> map_to_sum(const std::vector<ModuleMap<S>>& maps, const Module<S>& sum) {
  if (maps.empty()) throw std::invalid_argument("map_to_sum needs at least one map");
  ModuleMap<S> f = zero_map(maps.front().source, sum);
  for (int v = 0; v < sum.num_vertices(); ++v) {
    Matrix<S> joined = zero_matrix<S>(maps.front().source.dim(v), 0);
    for (const auto& m : maps) joined = hstack(joined, m.block(v));
    f.blocks[static_cast<std::size_t>(v)] = joined;
  }
  return f;
}

template <class S>
Module<S> dualize(const Module<S>& m) {
  std::vector<Matrix<S>> action;
  for (const auto& x : m.actions()) action.push_back(x.transpose());
  return Module<S>::unchecked(m.algebra()->opposite(), m.dims(), action);
}

template <class S>
ModuleMap<S> dualize(const ModuleMap<S>& f) {
  ModuleMap<S> d{dualize(f.target), dualize(f.source), {}};
  for (const auto& b : f.blocks) d.blocks.push_back(b.transpose());
  return d;
}

template <class S>
ModuleMap<S> identity_map(const Module<S>& m) {
  ModuleMap<S> f{m, m, {}};
  for (int d : m.dims()) f.blocks.push_back(identity_matrix<S>(d));
  return f;
}

template <class S>
ModuleMap<S> zero_map(const Module<S>& source, const Module<S>& target) {
  ModuleMap<S> f{source, target, {}};
  for (int v = 0; v < source.num_vertices(); ++v) f.blocks.push_back(zero_matrix<S>(source.dim(v), target.dim(v)));
  return f;
}

template <class S>
ModuleMap<S> compose(const ModuleMap<S>& g, const ModuleMap<S>& f) {
  if (f.target.dims() != g.source.dims()) throw std::invalid_argument("compose: maps are not composable");
  ModuleMap<S> h{f.source, g.target, {}};
  for (std::size_t v = 0; v < f.blocks.size(); ++v) h.blocks.push_back(f.blocks[v] * g.blocks[v]);
  return h;
}

template <class S>
ModuleMap<S> add(const ModuleMap<S>& f, const ModuleMap<S>& g) {
  ModuleMap<S> h = f;
  for (std::size_t v = 0; v < h.blocks.size(); ++v) h.blocks[v] += g.blocks[v];
  return h;
}

template <class S>
ModuleMap<S> scale(const S& c, const ModuleMap<S>& f) {
  ModuleMap<S> h = f;
  for (auto& b : h.blocks) b = c * b;
  return h;
}

// ---- Hom --------------------------------------------------------------------

template <class S>
HomSpace<S> hom_basis(const Module<S>& m, const Module<S>& n) {
  if (m.algebra() != n.algebra()) throw std::invalid_argument("hom_basis: modules over different algebras");
  const auto& q = m.algebra()->quiver();
  const int nv = q.num_vertices();
  std::vector<Index> off(static_cast<std::size_t>(nv) + 1, 0);
  for (int v = 0; v < nv; ++v) off[static_cast<std::size_t>(v) + 1] = off[static_cast<std::size_t>(v)] + Index(m.dim(v)) * n.dim(v);
  const Index unknowns = off.back();
  HomSpace<S> hom{m, n, {}};
  if (unknowns == 0) return hom;

  Index eqs = 0;
  for (const auto& arr : q.arrows) eqs += Index(m.dim(arr.source)) * n.dim(arr.target);
  Matrix<S> sys = zero_matrix<S>(eqs, unknowns);
  Index row = 0;
  for (int a = 0; a < q.num_arrows(); ++a) {
    const auto& arr = q.arrows[static_cast<std::size_t>(a)];
    const int s = arr.source, t = arr.target;
    const Matrix<S>& ma = m.action(a);
    const Matrix<S>& na = n.action(a);
    // (M_a X_t - X_s N_a)[i][j] = 0
    for (int i = 0; i < m.dim(s); ++i) {
      for (int j = 0; j < n.dim(t); ++j, ++row) {
        for (int k = 0; k < m.dim(t); ++k)
          if (!is_zero(ma(i, k))) sys(row, off[static_cast<std::size_t>(t)] + Index(k) * n.dim(t) + j) += ma(i, k);
        for (int k = 0; k < n.dim(s); ++k)
          if (!is_zero(na(k, j))) sys(row, off[static_cast<std::size_t>(s)] + Index(i) * n.dim(s) + k) -= na(k, j);
      }
    }
  }
  const Matrix<S> ker = kernel_basis(sys);
  for (Index r = 0; r < ker.rows(); ++r) {
    ModuleMap<S> f = zero_map(m, n);
    for (int v = 0; v < nv; ++v)
      for (int i = 0; i < m.dim(v); ++i)
        for (int j = 0; j < n.dim(v); ++j)
          f.blocks[static_cast<std::size_t>(v)](i, j) = ker(r, off[static_cast<std::size_t>(v)] + Index(i) * n.dim(v) + j);
    hom.basis.push_back(std::move(f));
  }
  return hom;
}

template <class S>
int hom_dim(const Module<S>& m, const Module<S>& n) {
  return hom_basis(m, n).dim();
}

#define TAUSLICE_INSTANTIATE_MODULE_BASICS(S)                                                              \
  template class Module<S>;                                                                                \
  template struct ModuleMap<S>;                                                                            \
  template struct HomSpace<S>;                                                                             \
  template Module<S> simple_module<S>(const Module<S>::AlgebraPtr&, int);                                   \
  template Module<S> projective_module<S>(const Module<S>::AlgebraPtr&, int);                               \
  template Module<S> injective_module<S>(const Module<S>::AlgebraPtr&, int);                                \
  template Module<S> regular_module<S>(const Module<S>::AlgebraPtr&);                                       \
  template Module<S> dual_regular_module<S>(const Module<S>::AlgebraPtr&);                                  \
  template ModuleMap<S> map_from_projective<S>(const Module<S>&, int, const Module<S>&, const RowVector<S>&); \
  template Module<S> direct_sum<S>(const std::vector<Module<S>>&);                                          \
  template Module<S> power<S>(const Module<S>&, int);                                                       \
  template ModuleMap<S> sum_injection<S>(const std::vector<Module<S>>&, int);                               \
  template ModuleMap<S> sum_projection<S>(const std::vector<Module<S>>&, int);                              \
  template ModuleMap<S> map_from_sum<S>(const std::vector<ModuleMap<S>>&, const Module<S>&);                \
  template ModuleMap<S> map_to_sum<S>(const std::vector<ModuleMap<S>>&, const Module<S>&);                  \
  template Module<S> dualize<S>(const Module<S>&);                                                          \
  template ModuleMap<S> dualize<S>(const ModuleMap<S>&);                                                    \
  template ModuleMap<S> identity_map<S>(const Module<S>&);                                                  \
  template ModuleMap<S> zero_map<S>(const Module<S>&, const Module<S>&);                                    \
  template ModuleMap<S> compose<S>(const ModuleMap<S>&, const ModuleMap<S>&);                               \
  template ModuleMap<S> add<S>(const ModuleMap<S>&, const ModuleMap<S>&);                                   \
  template ModuleMap<S> scale<S>(const S&, const ModuleMap<S>&);                                            \
  template HomSpace<S> hom_basis<S>(const Module<S>&, const Module<S>&);                                    \
  template int hom_dim<S>(const Module<S>&, const Module<S>&);

TAUSLICE_INSTANTIATE_MODULE_BASICS(Rational)
TAUSLICE_INSTANTIATE_MODULE_BASICS(ModInt)

}  // namespace tauslice
