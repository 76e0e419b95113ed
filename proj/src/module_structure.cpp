#include "tauslice/module.hpp"

namespace tauslice {

template <class S>
Submodule<S> submodule(const Module<S>& m, const std::vector<Subspace<S>>& spaces) {
  const auto& q = m.algebra()->quiver();
  std::vector<int> dims;
  for (const auto& s : spaces) dims.push_back(static_cast<int>(s.dim()));
  std::vector<Matrix<S>> action;
  for (int a = 0; a < q.num_arrows(); ++a) {
    const auto& arr = q.arrows[static_cast<std::size_t>(a)];
    const auto& src = spaces[static_cast<std::size_t>(arr.source)];
    const auto& tgt = spaces[static_cast<std::size_t>(arr.target)];
    action.push_back(tgt.coordinates(src.basis() * m.action(a)));
  }
  Module<S> sub = Module<S>::unchecked(m.algebra(), dims, action);
  ModuleMap<S> inc{sub, m, {}};
  for (const auto& s : spaces) inc.blocks.push_back(s.basis());
  return {std::move(sub), std::move(inc)};
}

template <class S>
Submodule<S> generated_submodule(const Module<S>& m, const std::vector<Matrix<S>>& generators) {
  const auto& q = m.algebra()->quiver();
  std::vector<Subspace<S>> spaces;
  for (int v = 0; v < m.num_vertices(); ++v) {
    const auto& g = generators[static_cast<std::size_t>(v)];
    spaces.push_back(g.rows() ? Subspace<S>::span(g) : Subspace<S>(m.dim(v)));
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (int a = 0; a < q.num_arrows(); ++a) {
      const auto& arr = q.arrows[static_cast<std::size_t>(a)];
      const auto& src = spaces[static_cast<std::size_t>(arr.source)];
      if (src.dim() == 0) continue;
      auto& tgt = spaces[static_cast<std::size_t>(arr.target)];
      const auto grown = tgt.sum(Subspace<S>::span(src.basis() * m.action(a)));
      if (grown.dim() != tgt.dim()) {
        tgt = grown;
        changed = true;
      }
    }
  }
  return submodule(m, spaces);
}

template <class S>
QuotientModule<S> quotient(const Module<S>& m, const std::vector<Subspace<S>>& spaces) {
  const auto& q = m.algebra()->quiver();
  std::vector<int> dims;
  std::vector<Matrix<S>> qmaps;
  std::vector<std::vector<Index>> comps;
  for (const auto& s : spaces) {
    qmaps.push_back(s.quotient_map());
    comps.push_back(s.complement_columns());
    dims.push_back(static_cast<int>(comps.back().size()));
  }
  std::vector<Matrix<S>> action;
  for (int a = 0; a < q.num_arrows(); ++a) {
    const auto& arr = q.arrows[static_cast<std::size_t>(a)];
    const Matrix<S> full = m.action(a) * qmaps[static_cast<std::size_t>(arr.target)];
    const auto& comp = comps[static_cast<std::size_t>(arr.source)];
    Matrix<S> c(static_cast<Index>(comp.size()), full.cols());
    for (std::size_t k = 0; k < comp.size(); ++k) c.row(static_cast<Index>(k)) = full.row(comp[k]);
    action.push_back(std::move(c));
  }
  Module<S> quo = Module<S>::unchecked(m.algebra(), dims, action);
  ModuleMap<S> proj{m, quo, qmaps};
  return {std::move(quo), std::move(proj)};
}

template <class S>
Submodule<S> map_kernel(const ModuleMap<S>& f) {
  std::vector<Subspace<S>> spaces;
  for (const auto& b : f.blocks) spaces.push_back(Subspace<S>::span(left_kernel_basis(b)));
  return submodule(f.source, spaces);
}

template <class S>
ImageFactorization<S> map_image(const ModuleMap<S>& f) {
  std::vector<Subspace<S>> spaces;
  for (std::size_t v = 0; v < f.blocks.size(); ++v) spaces.push_back(Subspace<S>::span(f.blocks[v]));
  auto sub = submodule(f.target, spaces);
  ModuleMap<S> onto{f.source, sub.module, {}};
  for (std::size_t v = 0; v < f.blocks.size(); ++v) onto.blocks.push_back(spaces[v].coordinates(f.blocks[v]));
  return {sub.module, std::move(onto), std::move(sub.inclusion)};
}

template <class S>
QuotientModule<S> map_cokernel(const ModuleMap<S>& f) {
  std::vector<Subspace<S>> spaces;
  for (const auto& b : f.blocks) spaces.push_back(Subspace<S>::span(b));
  return quotient(f.target, spaces);
}

namespace {

template <class S>
std::vector<Subspace<S>> radical_spaces(const Module<S>& m) {
  const auto& q = m.algebra()->quiver();
  std::vector<Matrix<S>> gens;
  for (int v = 0; v < m.num_vertices(); ++v) gens.push_back(zero_matrix<S>(0, m.dim(v)));
  for (int a = 0; a < q.num_arrows(); ++a) {
    const int t = q.arrows[static_cast<std::size_t>(a)].target;
    gens[static_cast<std::size_t>(t)] = vstack(gens[static_cast<std::size_t>(t)], m.action(a));
  }
  std::vector<Subspace<S>> spaces;
  for (int v = 0; v < m.num_vertices(); ++v) spaces.push_back(Subspace<S>::span(gens[static_cast<std::size_t>(v)]));
  return spaces;
}

}  // namespace

template <class S>
Submodule<S> radical(const Module<S>& m) {
  return submodule(m, radical_spaces(m));
}

template <class S>
Submodule<S> socle(const Module<S>& m) {
  const auto& q = m.algebra()->quiver();
  std::vector<Subspace<S>> spaces;
  for (int v = 0; v < m.num_vertices(); ++v) {
    Matrix<S> joined = zero_matrix<S>(m.dim(v), 0);
    for (int a = 0; a < q.num_arrows(); ++a)
      if (q.arrows[static_cast<std::size_t>(a)].source == v) joined = hstack(joined, m.action(a));
    spaces.push_back(joined.cols() ? Subspace<S>::span(left_kernel_basis(joined)) : Subspace<S>::whole(m.dim(v)));
  }
  return submodule(m, spaces);
}

template <class S>
QuotientModule<S> top(const Module<S>& m) {
  return quotient(m, radical_spaces(m));
}

template <class S>
std::vector<std::vector<int>> loewy_layers(const Module<S>& m) {
  std::vector<std::vector<int>> layers;
  Module<S> cur = m;
  while (!cur.is_zero()) {
    auto rad = radical(cur);
    std::vector<int> layer;
    for (int v = 0; v < cur.num_vertices(); ++v) layer.push_back(cur.dim(v) - rad.module.dim(v));
    layers.push_back(std::move(layer));
    cur = std::move(rad.module);
  }
  return layers;
}

template <class S>
std::string loewy_series(const Module<S>& m) {
  const auto& names = m.algebra()->quiver().vertices;
  bool long_names = false;
  for (const auto& n : names) long_names = long_names || n.size() != 1;
  const auto layers = loewy_layers(m);
  if (layers.empty()) return "0";
  std::string out;
  for (std::size_t l = 0; l < layers.size(); ++l) {
    if (l) out += '/';
    bool first = true;
    for (std::size_t v = names.size(); v-- > 0;) {
      for (int k = 0; k < layers[l][v]; ++k) {
        if (long_names && !first) out += ',';
        out += names[v];
        first = false;
      }
    }
  }
  return out;
}

namespace {

template <class S>
ProjectiveCover<S> cover_impl(const Module<S>& m) {
  const auto& a = m.algebra();
  const auto rad = radical_spaces(m);
  std::vector<Module<S>> parts;
  std::vector<ModuleMap<S>> maps;
  std::vector<int> tops;
  for (int v = 0; v < m.num_vertices(); ++v) {
    for (Index c : rad[static_cast<std::size_t>(v)].complement_columns()) {
      RowVector<S> gen = RowVector<S>::Constant(m.dim(v), S(0));
      gen(c) = S(1);
      parts.push_back(projective_module<S>(a, v));
      maps.push_back(map_from_projective(parts.back(), v, m, gen));
      tops.push_back(v);
    }
  }
  if (parts.empty()) {
    const auto z = Module<S>::zero(a);
    return {z, zero_map(z, m), {}};
  }
  Module<S> p0 = direct_sum(parts);
  ModuleMap<S> pi = map_from_sum(maps, p0);
  return {std::move(p0), std::move(pi), std::move(tops)};
}

}  // namespace

template <class S>
ProjectiveCover<S> projective_cover(const Module<S>& m) {
  if (m.is_zero()) throw std::invalid_argument("projective cover of the zero module");
  return cover_impl(m);
}

template <class S>
InjectiveEnvelope<S> injective_envelope(const Module<S>& m) {
  if (m.is_zero()) throw std::invalid_argument("injective envelope of the zero module");
  auto pc = cover_impl(dualize(m));
  return {dualize(pc.cover), dualize(pc.map), std::move(pc.top_vertices)};
}

template <class S>
Presentation<S> min_proj_presentation(const Module<S>& m) {
  auto p0 = cover_impl(m);
  auto k = map_kernel(p0.map);
  auto p1 = cover_impl(k.module);
  ModuleMap<S> f = compose(k.inclusion, p1.map);
  return {std::move(p0), std::move(p1), std::move(k), std::move(f)};
}

template <class S>
Module<S> syzygy(const Module<S>& m) {
  if (m.is_zero()) return m;
  return map_kernel(cover_impl(m).map).module;
}

template <class S>
Module<S> cosyzygy(const Module<S>& m) {
  if (m.is_zero()) return m;
  return dualize(syzygy(dualize(m)));
}

template <class S>
bool is_projective(const Module<S>& m) {
  return m.is_zero() || cover_impl(m).cover.total_dim() == m.total_dim();
}

template <class S>
bool is_injective(const Module<S>& m) {
  return is_projective(dualize(m));
}

template <class S>
bool pd_le(const Module<S>& m, int n) {
  Module<S> cur = m;
  for (int i = 0; i <= n; ++i) {
    if (is_projective(cur)) return true;
    cur = syzygy(cur);
  }
  return false;
}

template <class S>
bool id_le(const Module<S>& m, int n) {
  return pd_le(dualize(m), n);
}

template <class S>
DimensionReport projective_dimension(const Module<S>& m, int cap) {
  DimensionReport report;
  std::vector<Module<S>> syz{m};
  for (int k = 0; k <= cap; ++k) {
    const Module<S>& cur = syz.back();
    if (is_projective(cur)) {
      report.value = k;
      return report;
    }
    for (int j = 0; j < k; ++j) {
      if (syz[static_cast<std::size_t>(j)].dims() == cur.dims() && is_isomorphic(syz[static_cast<std::size_t>(j)], cur) == Tri::yes) {
        report.periodic = true;
        report.repeat_from = j;
        report.repeat_to = k;
        return report;
      }
    }
    syz.push_back(syzygy(cur));
  }
  return report;
}

#define TAUSLICE_INSTANTIATE_MODULE_STRUCTURE(S)                                                 \
  template Submodule<S> submodule<S>(const Module<S>&, const std::vector<Subspace<S>>&);          \
  template Submodule<S> generated_submodule<S>(const Module<S>&, const std::vector<Matrix<S>>&);  \
  template QuotientModule<S> quotient<S>(const Module<S>&, const std::vector<Subspace<S>>&);      \
  template Submodule<S> map_kernel<S>(const ModuleMap<S>&);                                       \
  template ImageFactorization<S> map_image<S>(const ModuleMap<S>&);                               \
  template QuotientModule<S> map_cokernel<S>(const ModuleMap<S>&);                                \
  template Submodule<S> radical<S>(const Module<S>&);                                             \
  template Submodule<S> socle<S>(const Module<S>&);                                               \
  template QuotientModule<S> top<S>(const Module<S>&);                                            \
  template std::vector<std::vector<int>> loewy_layers<S>(const Module<S>&);                       \
  template std::string loewy_series<S>(const Module<S>&);                                         \
  template ProjectiveCover<S> projective_cover<S>(const Module<S>&);                              \
  template InjectiveEnvelope<S> injective_envelope<S>(const Module<S>&);                          \
  template Presentation<S> min_proj_presentation<S>(const Module<S>&);                            \
  template Module<S> syzygy<S>(const Module<S>&);                                                 \
  template Module<S> cosyzygy<S>(const Module<S>&);                                               \
  template bool is_projective<S>(const Module<S>&);                                               \
  template bool is_injective<S>(const Module<S>&);                                                \
  template bool pd_le<S>(const Module<S>&, int);                                                  \
  template bool id_le<S>(const Module<S>&, int);                                                  \
  template DimensionReport projective_dimension<S>(const Module<S>&, int);

TAUSLICE_INSTANTIATE_MODULE_STRUCTURE(Rational)
TAUSLICE_INSTANTIATE_MODULE_STRUCTURE(ModInt)

}  // namespace tauslice
