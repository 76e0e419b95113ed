#include "tauslice/module.hpp"

namespace tauslice {

template <class S>
bool add_membership(const Module<S>& x, const Module<S>& l) {
  if (x.is_zero()) return true;
  if (l.is_zero()) return false;
  const auto f = hom_basis(x, l);
  if (f.dim() == 0) return false;
  const auto g = hom_basis(l, x);
  if (g.dim() == 0) return false;
  const RowVector<S> id = identity_map(x).flatten();
  std::vector<RowVector<S>> rows;
  for (const auto& fi : f.basis)
    for (const auto& gj : g.basis) rows.push_back(compose(gj, fi).flatten());
  return Subspace<S>::span(rows_to_matrix(rows, id.cols())).contains(id);
}

template <class S>
bool gen_membership(const Module<S>& x, const Module<S>& t) {
  if (x.is_zero()) return true;
  const auto h = hom_basis(t, x);
  for (int v = 0; v < x.num_vertices(); ++v) {
    if (x.dim(v) == 0) continue;
    Matrix<S> images = zero_matrix<S>(0, x.dim(v));
    for (const auto& f : h.basis) images = vstack(images, f.block(v));
    if (rank(images) != x.dim(v)) return false;
  }
  return true;
}

template <class S>
bool cogen_membership(const Module<S>& x, const Module<S>& s) {
  if (x.is_zero()) return true;
  const auto h = hom_basis(x, s);
  for (int v = 0; v < x.num_vertices(); ++v) {
    if (x.dim(v) == 0) continue;
    Matrix<S> joined = zero_matrix<S>(x.dim(v), 0);
    for (const auto& f : h.basis) joined = hstack(joined, f.block(v));
    if (rank(joined) != x.dim(v)) return false;
  }
  return true;
}

template <class S>
bool perp_vanishing(const Module<S>& x, const Module<S>& t, PerpSide side) {
  return side == PerpSide::right ? hom_dim(t, x) == 0 : hom_dim(x, t) == 0;
}

template <class S>
bool is_sincere(const Module<S>& m) {
  for (int d : m.dims())
    if (d == 0) return false;
  return true;
}

#define TAUSLICE_INSTANTIATE_MEMBERSHIP(S)                                        \
  template bool add_membership<S>(const Module<S>&, const Module<S>&);            \
  template bool gen_membership<S>(const Module<S>&, const Module<S>&);            \
  template bool cogen_membership<S>(const Module<S>&, const Module<S>&);          \
  template bool perp_vanishing<S>(const Module<S>&, const Module<S>&, PerpSide);  \
  template bool is_sincere<S>(const Module<S>&);

TAUSLICE_INSTANTIATE_MEMBERSHIP(Rational)
TAUSLICE_INSTANTIATE_MEMBERSHIP(ModInt)

}  // namespace tauslice
