#include "tauslice/slice.hpp"

#include <functional>
#include <numeric>

namespace tauslice {

template <class S>
int SliceCandidate<S>::find(const Module<S>& m) const {
  for (std::size_t i = 0; i < summands.size(); ++i)
    if (summands[i].dims() == m.dims() && iso_indecomposables(summands[i], m)) return static_cast<int>(i);
  return -1;
}

template <class S>
SliceCandidate<S> slice_candidate(const Module<S>& t) {
  SliceCandidate<S> c;
  if (t.is_zero()) return c;
  const auto d = decompose(t);
  if (!d.certified) throw std::invalid_argument("slice_candidate: decomposition is not certified");
  for (const auto& x : d.summands) {
    if (c.find(x) >= 0) continue;
    c.summands.push_back(x);
    c.labels.push_back(loewy_series(x));
  }
  return c;
}

template <class S>
SliceCandidate<S> slice_candidate(const std::vector<Module<S>>& summands) {
  SliceCandidate<S> c;
  for (const auto& x : summands) {
    if (!is_indecomposable(x)) throw std::invalid_argument("slice_candidate: summand " + loewy_series(x) + " is decomposable");
    if (c.find(x) >= 0) throw std::invalid_argument("slice_candidate: summand " + loewy_series(x) + " is repeated");
    c.summands.push_back(x);
    c.labels.push_back(loewy_series(x));
  }
  return c;
}

namespace {

bool graph_acyclic(int n, const std::vector<std::pair<int, int>>& arrows) {
  std::vector<int> indeg(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<int>> out(static_cast<std::size_t>(n));
  for (const auto& [x, y] : arrows) {
    out[static_cast<std::size_t>(x)].push_back(y);
    ++indeg[static_cast<std::size_t>(y)];
  }
  std::vector<int> ready;
  for (int v = 0; v < n; ++v)
    if (indeg[static_cast<std::size_t>(v)] == 0) ready.push_back(v);
  int seen = 0;
  while (!ready.empty()) {
    const int v = ready.back();
    ready.pop_back();
    ++seen;
    for (int w : out[static_cast<std::size_t>(v)])
      if (--indeg[static_cast<std::size_t>(w)] == 0) ready.push_back(w);
  }
  return seen == n;
}

bool graph_connected(int n, const std::vector<std::pair<int, int>>& arrows) {
  if (n == 0) return false;
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> root = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
    return v;
  };
  int components = n;
  for (const auto& [x, y] : arrows) {
    const int rx = root(x), ry = root(y);
    if (rx != ry) {
      parent[static_cast<std::size_t>(rx)] = ry;
      --components;
    }
  }
  return components == 1;
}

std::string clause_text(const ArrowEvidence& e) {
  const bool succ = e.rule == ArrowEvidence::Rule::successor;
  const std::string endpoint = succ ? "target" : "source";
  const std::string translate = succ ? "tau(target)" : "tau^-(source)";
  if (!e.translate_defined) return e.endpoint_in ? endpoint + " in slice" : endpoint + " not in slice, " + translate + " undefined";
  if (e.endpoint_in && e.translate_in) return "both " + endpoint + " and " + translate + " in slice";
  if (e.endpoint_in) return endpoint + " in slice";
  if (e.translate_in) return translate + " in slice";
  return "neither " + endpoint + " nor " + translate + " in slice";
}

void finish(ArrowEvidence& e) {
  e.ok = e.translate_defined ? (e.endpoint_in != e.translate_in) : e.endpoint_in;
  e.clause = clause_text(e);
}

}  // namespace

template <class S>
PresectionResult is_presection(const SliceCandidate<S>& c) {
  PresectionResult r;
  const int n = c.size();
  for (int i = 0; i < n; ++i) {
    const auto& x = c.summands[static_cast<std::size_t>(i)];
    for (const auto& y : ar_neighbors(x, Direction::out)) {
      ArrowEvidence e;
      e.rule = ArrowEvidence::Rule::successor;
      e.from = c.labels[static_cast<std::size_t>(i)];
      e.to = loewy_series(y.module);
      e.multiplicity = y.multiplicity;
      const int j = c.find(y.module);
      e.endpoint_in = j >= 0;
      e.translate_defined = !is_projective(y.module);
      if (e.translate_defined) e.translate_in = c.find(tau(y.module)) >= 0;
      finish(e);
      if (j >= 0) r.internal_arrows.emplace_back(i, j);
      r.evidence.push_back(std::move(e));
    }
    for (const auto& w : ar_neighbors(x, Direction::in)) {
      ArrowEvidence e;
      e.rule = ArrowEvidence::Rule::predecessor;
      e.from = loewy_series(w.module);
      e.to = c.labels[static_cast<std::size_t>(i)];
      e.multiplicity = w.multiplicity;
      e.endpoint_in = c.find(w.module) >= 0;
      e.translate_defined = !is_injective(w.module);
      if (e.translate_defined) e.translate_in = c.find(tau_minus(w.module)) >= 0;
      finish(e);
      r.evidence.push_back(std::move(e));
    }
  }
  r.acyclic = graph_acyclic(n, r.internal_arrows);
  r.connected = graph_connected(n, r.internal_arrows);
  r.arrow_conditions = std::all_of(r.evidence.begin(), r.evidence.end(), [](const ArrowEvidence& e) { return e.ok; });
  r.presection = r.acyclic && r.connected && r.arrow_conditions;
  return r;
}

bool replay_presection(const PresectionResult& r, int size) {
  for (const auto& e : r.evidence) {
    ArrowEvidence copy = e;
    finish(copy);
    if (copy.ok != e.ok || copy.clause != e.clause) return false;
  }
  const bool arrows_ok = std::all_of(r.evidence.begin(), r.evidence.end(), [](const ArrowEvidence& e) { return e.ok; });
  const bool verdict = arrows_ok && graph_acyclic(size, r.internal_arrows) && graph_connected(size, r.internal_arrows);
  return verdict == r.presection;
}

std::string to_string(SliceVerdict v) {
  switch (v) {
    case SliceVerdict::not_slice: return "not-slice";
    case SliceVerdict::tau_slice: return "tau-slice";
    case SliceVerdict::complete_tau_slice: return "complete-tau-slice";
  }
  return "?";
}

template <class S>
SliceCertificate<S> is_tau_slice(const SliceCandidate<S>& c) {
  SliceCertificate<S> cert;
  cert.candidate = c;
  if (c.size() == 0) return cert;
  const Module<S> t = c.sum();
  cert.tau_rigid = is_tau_rigid(t);
  cert.details = is_presection(c);
  cert.presection = cert.details.presection;
  cert.connected = cert.details.connected;
  cert.acyclic = cert.details.acyclic;
  cert.sincere = is_sincere(t);
  if (cert.tau_rigid && cert.presection)
    cert.verdict = cert.sincere ? SliceVerdict::complete_tau_slice : SliceVerdict::tau_slice;
  return cert;
}

namespace {

// Row i: the action of basis element i on the total space of t, flattened.
template <class S>
std::vector<Matrix<S>> basis_actions(const Module<S>& t) {
  const auto& a = t.algebra();
  std::vector<int> off(static_cast<std::size_t>(t.num_vertices()) + 1, 0);
  for (int v = 0; v < t.num_vertices(); ++v) off[static_cast<std::size_t>(v) + 1] = off[static_cast<std::size_t>(v)] + t.dim(v);
  std::vector<Matrix<S>> out;
  for (int i = 0; i < a->dim(); ++i) {
    Matrix<S> m = zero_matrix<S>(t.total_dim(), t.total_dim());
    const int s = a->source(i), e = a->target(i);
    m.block(off[static_cast<std::size_t>(s)], off[static_cast<std::size_t>(e)], t.dim(s), t.dim(e)) = t.path_action(a->basis_path(i));
    out.push_back(std::move(m));
  }
  return out;
}

template <class S>
RowVector<S> flat(const Matrix<S>& m) {
  RowVector<S> r(m.size());
  Index k = 0;
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) r(k++) = m(i, j);
  return r;
}

}  // namespace

template <class S>
Subspace<S> annihilator(const Module<S>& t) {
  const auto acts = basis_actions(t);
  const Index width = static_cast<Index>(t.total_dim()) * t.total_dim();
  std::vector<RowVector<S>> rows;
  for (const auto& m : acts) rows.push_back(flat(m));
  const Matrix<S> stacked = rows_to_matrix(rows, width);
  if (width == 0) return Subspace<S>::whole(static_cast<Index>(acts.size()));
  return Subspace<S>::span(left_kernel_basis(stacked));
}

template <class S>
bool is_two_sided_ideal(const typename BoundQuiverAlgebra<S>::Ptr& a, const Subspace<S>& ideal) {
  for (Index r = 0; r < ideal.dim(); ++r) {
    const RowVector<S> x = ideal.basis().row(r);
    for (int i = 0; i < a->dim(); ++i) {
      const auto b = a->basis_element(i);
      if (!ideal.contains(a->multiply(b, x)) || !ideal.contains(a->multiply(x, b))) return false;
    }
  }
  return true;
}

template <class S>
AnnihilatorQuotient<S> quotient_by_annihilator(const Module<S>& t) {
  const auto& a = t.algebra();
  AnnihilatorQuotient<S> q;
  q.annihilator = annihilator(t);
  for (Index c : q.annihilator.complement_columns()) q.basis.push_back(static_cast<int>(c));
  const Matrix<S> to_q = q.annihilator.quotient_map();
  const auto acts = basis_actions(t);
  for (int i : q.basis) {
    std::vector<RowVector<S>> row;
    for (int j : q.basis) row.push_back(a->multiply(a->basis_element(i), a->basis_element(j)) * to_q);
    q.product.push_back(std::move(row));
    q.action.push_back(acts[static_cast<std::size_t>(i)]);
  }
  q.unit = a->unit() * to_q;
  std::vector<RowVector<S>> rows;
  for (const auto& m : q.action) rows.push_back(flat(m));
  const Index width = static_cast<Index>(t.total_dim()) * t.total_dim();
  q.faithful = rows.empty() || rank(rows_to_matrix(rows, width)) == static_cast<Index>(rows.size());
  return q;
}

#define TAUSLICE_INSTANTIATE_SLICE(S)                                                                         \
  template struct SliceCandidate<S>;                                                                          \
  template SliceCandidate<S> slice_candidate<S>(const Module<S>&);                                            \
  template SliceCandidate<S> slice_candidate<S>(const std::vector<Module<S>>&);                               \
  template PresectionResult is_presection<S>(const SliceCandidate<S>&);                                       \
  template SliceCertificate<S> is_tau_slice<S>(const SliceCandidate<S>&);                                     \
  template Subspace<S> annihilator<S>(const Module<S>&);                                                      \
  template bool is_two_sided_ideal<S>(const BoundQuiverAlgebra<S>::Ptr&, const Subspace<S>&);                 \
  template AnnihilatorQuotient<S> quotient_by_annihilator<S>(const Module<S>&);

TAUSLICE_INSTANTIATE_SLICE(Rational)
TAUSLICE_INSTANTIATE_SLICE(ModInt)

}  // namespace tauslice
