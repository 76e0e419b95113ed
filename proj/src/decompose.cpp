#include "tauslice/module.hpp"
#include "tauslice/polynomial.hpp"

#include <algorithm>
#include <random>

namespace tauslice {

namespace {

template <class S>
ModuleMap<S> shifted(const ModuleMap<S>& f, const S& lambda) {
  if (is_zero(lambda)) return f;
  ModuleMap<S> g = f;
  for (auto& b : g.blocks)
    for (Index i = 0; i < b.rows(); ++i) b(i, i) -= lambda;
  return g;
}

template <class S>
ModuleMap<S> block_power(const ModuleMap<S>& f, int n) {
  ModuleMap<S> p = identity_map(f.source);
  ModuleMap<S> base = f;
  while (n > 0) {
    if (n & 1) p = compose(base, p);
    base = compose(base, base);
    n >>= 1;
  }
  return p;
}

// Neither nilpotent nor invertible.
template <class S>
bool splits(const ModuleMap<S>& f) {
  const Matrix<S> t = f.total();
  return !is_invertible(t) && !is_nilpotent(t);
}

// Some lambda with f - lambda nilpotent, if one exists.
template <class S>
std::optional<S> single_eigenvalue(const ModuleMap<S>& f) {
  const Matrix<S> t = f.total();
  const Index d = t.rows();
  if (d == 0) return S(0);
  S tr(0);
  for (Index i = 0; i < d; ++i) tr += t(i, i);
  const std::uint64_t p = FieldTraits<S>::characteristic();
  std::optional<S> lambda;
  if (p == 0 || static_cast<std::uint64_t>(d) % p != 0) {
    lambda = tr / S(static_cast<long long>(d));
  } else {
    const auto roots = rational_roots(charpoly(t));
    if (roots.size() != 1) return std::nullopt;
    lambda = roots.front();
  }
  if (!is_nilpotent(Matrix<S>(shifted(f, *lambda).total()))) return std::nullopt;
  return lambda;
}

template <class S>
S small_coefficient(std::mt19937_64& rng, int radius) {
  return S(static_cast<long long>(rng() % static_cast<std::uint64_t>(2 * radius + 1)) - radius);
}

template <class S>
std::optional<ModuleMap<S>> find_splitter(const HomSpace<S>& end) {
  if (end.dim() <= 1) return std::nullopt;
  auto try_with_shifts = [](const ModuleMap<S>& f) -> std::optional<ModuleMap<S>> {
    if (splits(f)) return f;
    for (const S& lambda : rational_roots(charpoly(f.total()))) {
      auto g = shifted(f, lambda);
      if (splits(g)) return g;
    }
    return std::nullopt;
  };
  for (const auto& b : end.basis)
    if (auto s = try_with_shifts(b)) return s;
  for (int i = 0; i < end.dim(); ++i) {
    for (int j = 0; j < end.dim(); ++j) {
      if (auto s = try_with_shifts(compose(end.basis[static_cast<std::size_t>(i)], end.basis[static_cast<std::size_t>(j)])))
        return s;
      if (j > i) {
        if (auto s = try_with_shifts(add(end.basis[static_cast<std::size_t>(i)], end.basis[static_cast<std::size_t>(j)])))
          return s;
      }
    }
  }
  std::mt19937_64 rng(0xdec0u);
  for (int trial = 0; trial < 24; ++trial) {
    std::vector<S> coeffs;
    for (int i = 0; i < end.dim(); ++i) coeffs.push_back(small_coefficient<S>(rng, 3));
    if (auto s = try_with_shifts(end.combine(coeffs))) return s;
  }
  return std::nullopt;
}

template <class S>
ModuleMap<S> unflatten_endo(const Module<S>& m, const RowVector<S>& row) {
  ModuleMap<S> f = zero_map(m, m);
  Index k = 0;
  for (int v = 0; v < m.num_vertices(); ++v)
    for (int i = 0; i < m.dim(v); ++i)
      for (int j = 0; j < m.dim(v); ++j) f.blocks[static_cast<std::size_t>(v)](i, j) = row(k++);
  return f;
}

template <class S>
bool canonical_less(const Module<S>& a, const Module<S>& b) {
  if (a.total_dim() != b.total_dim()) return a.total_dim() < b.total_dim();
  return a.dims() < b.dims();
}

}  // namespace

template <class S>
LocalityCertificate<S> local_certificate(const Module<S>& m) {
  LocalityCertificate<S> cert;
  if (m.is_zero()) return cert;
  const auto end = hom_basis(m, m);
  std::vector<ModuleMap<S>> h;
  for (const auto& b : end.basis) {
    const auto lambda = single_eigenvalue(b);
    if (!lambda) return cert;
    h.push_back(shifted(b, *lambda));
  }
  const Index width = identity_map(m).flatten().cols();
  std::vector<RowVector<S>> rows;
  for (const auto& x : h) rows.push_back(x.flatten());
  const auto hspace = Subspace<S>::span(rows_to_matrix(rows, width));
  if (hspace.dim() != end.dim() - 1) return cert;
  // H is closed under products and some power of it vanishes.
  std::vector<ModuleMap<S>> hbasis;
  for (Index r = 0; r < hspace.dim(); ++r) hbasis.push_back(unflatten_endo<S>(m, hspace.basis().row(r)));
  std::vector<ModuleMap<S>> layer = hbasis;
  for (int step = 0; !layer.empty(); ++step) {
    if (step > m.total_dim()) return cert;
    std::vector<RowVector<S>> prod_rows;
    for (const auto& x : layer)
      for (const auto& y : hbasis) {
        const auto p = compose(y, x).flatten();
        if (step == 0 && !hspace.contains(p)) return cert;
        prod_rows.push_back(p);
      }
    const auto next = Subspace<S>::span(rows_to_matrix(prod_rows, width));
    layer.clear();
    for (Index r = 0; r < next.dim(); ++r) layer.push_back(unflatten_endo<S>(m, next.basis().row(r)));
  }
  cert.local = true;
  for (const auto& x : hbasis) cert.radical.push_back(x.total());
  return cert;
}

template <class S>
Decomposition<S> decompose(const Module<S>& m) {
  Decomposition<S> out;
  std::vector<Module<S>> work;
  if (!m.is_zero()) work.push_back(m);
  while (!work.empty()) {
    Module<S> x = std::move(work.back());
    work.pop_back();
    const auto end = hom_basis(x, x);
    if (auto phi = find_splitter(end)) {
      // Fitting: X = im phi^n + ker phi^n.
      const auto p = block_power(*phi, x.total_dim());
      work.push_back(map_kernel(p).module);
      work.push_back(map_image(p).module);
      continue;
    }
    if (end.dim() > 1 && !local_certificate(x).local) out.certified = false;
    out.summands.push_back(std::move(x));
  }
  std::stable_sort(out.summands.begin(), out.summands.end(), canonical_less<S>);
  return out;
}

template <class S>
std::vector<SummandClass<S>> decompose_grouped(const Module<S>& m) {
  std::vector<SummandClass<S>> classes;
  for (auto& x : decompose(m).summands) {
    bool placed = false;
    for (auto& c : classes) {
      if (c.module.dims() == x.dims() && iso_indecomposables(c.module, x)) {
        ++c.multiplicity;
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back({std::move(x), 1});
  }
  return classes;
}

template <class S>
bool is_indecomposable(const Module<S>& m) {
  return !m.is_zero() && decompose(m).summands.size() == 1;
}

template <class S>
bool iso_indecomposables(const Module<S>& x, const Module<S>& y) {
  if (x.dims() != y.dims()) return false;
  return add_membership(x, y);
}

template <class S>
std::optional<ModuleMap<S>> find_isomorphism(const Module<S>& m, const Module<S>& n, std::uint64_t seed) {
  if (m.dims() != n.dims()) return std::nullopt;
  const auto hom = hom_basis(m, n);
  if (m.is_zero()) return zero_map(m, n);
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < 16; ++trial) {
    std::vector<S> coeffs;
    for (int i = 0; i < hom.dim(); ++i) coeffs.push_back(small_coefficient<S>(rng, 5));
    auto f = hom.combine(coeffs);
    if (f.is_isomorphism()) return f;
  }
  // Deterministic grid over {-2..2}^k for small Hom spaces.
  const int k = hom.dim();
  if (k == 0 || k > 6) return std::nullopt;
  std::vector<int> c(static_cast<std::size_t>(k), -2);
  for (;;) {
    std::vector<S> coeffs;
    for (int v : c) coeffs.push_back(S(v));
    auto f = hom.combine(coeffs);
    if (f.is_isomorphism()) return f;
    int i = 0;
    while (i < k && c[static_cast<std::size_t>(i)] == 2) c[static_cast<std::size_t>(i++)] = -2;
    if (i == k) break;
    ++c[static_cast<std::size_t>(i)];
  }
  return std::nullopt;
}

template <class S>
Tri is_isomorphic(const Module<S>& m, const Module<S>& n, std::uint64_t seed) {
  if (m.algebra() != n.algebra() || m.dims() != n.dims()) return Tri::no;
  if (m.is_zero()) return Tri::yes;
  const int end_m = hom_dim(m, m);
  if (hom_dim(n, n) != end_m || hom_dim(m, n) != end_m || hom_dim(n, m) != end_m) return Tri::no;
  if (find_isomorphism(m, n, seed)) return Tri::yes;
  const auto dm = decompose(m);
  const auto dn = decompose(n);
  if (!dm.certified || !dn.certified) return Tri::unknown;
  if (dm.summands.size() != dn.summands.size()) return Tri::no;
  std::vector<bool> used(dn.summands.size(), false);
  for (const auto& x : dm.summands) {
    bool matched = false;
    for (std::size_t j = 0; j < dn.summands.size() && !matched; ++j) {
      if (used[j] || !iso_indecomposables(x, dn.summands[j])) continue;
      used[j] = true;
      matched = true;
    }
    if (!matched) return Tri::no;
  }
  return Tri::yes;
}

#define TAUSLICE_INSTANTIATE_DECOMPOSE(S)                                                          \
  template LocalityCertificate<S> local_certificate<S>(const Module<S>&);                          \
  template Decomposition<S> decompose<S>(const Module<S>&);                                        \
  template std::vector<SummandClass<S>> decompose_grouped<S>(const Module<S>&);                    \
  template bool is_indecomposable<S>(const Module<S>&);                                            \
  template bool iso_indecomposables<S>(const Module<S>&, const Module<S>&);                        \
  template std::optional<ModuleMap<S>> find_isomorphism<S>(const Module<S>&, const Module<S>&, std::uint64_t); \
  template Tri is_isomorphic<S>(const Module<S>&, const Module<S>&, std::uint64_t);

TAUSLICE_INSTANTIATE_DECOMPOSE(Rational)
TAUSLICE_INSTANTIATE_DECOMPOSE(ModInt)

}  // namespace tauslice
