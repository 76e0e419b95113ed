#include "tauslice/algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace tauslice {

int Quiver::vertex_index(const std::string& name) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == name) return static_cast<int>(i);
  return -1;
}

int Quiver::arrow_index(const std::string& name) const {
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].id == name || (!arrows[i].alias.empty() && arrows[i].alias == name)) return static_cast<int>(i);
  return -1;
}

void Quiver::validate() const {
  std::set<std::string> seen;
  for (const auto& v : vertices) {
    if (v.empty()) throw std::invalid_argument("empty vertex name");
    if (!seen.insert(v).second) throw std::invalid_argument("duplicate vertex '" + v + "'");
  }
  std::set<std::string> ids;
  for (const auto& a : arrows) {
    if (a.id.empty()) throw std::invalid_argument("empty arrow id");
    if (!ids.insert(a.id).second) throw std::invalid_argument("duplicate arrow id '" + a.id + "'");
    if (!a.alias.empty() && a.alias != a.id && !ids.insert(a.alias).second)
      throw std::invalid_argument("duplicate arrow alias '" + a.alias + "'");
    if (a.source < 0 || a.source >= num_vertices() || a.target < 0 || a.target >= num_vertices())
      throw std::invalid_argument("arrow '" + a.id + "' has an undeclared endpoint");
  }
}

Quiver Quiver::opposite() const {
  Quiver op = *this;
  for (auto& a : op.arrows) std::swap(a.source, a.target);
  return op;
}

bool path_less(const Path& a, const Path& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  if (a.arrows.empty()) return a.source < b.source;
  return a.arrows < b.arrows;
}

std::string path_to_string(const Quiver& q, const Path& p) {
  if (p.arrows.empty()) return "e" + q.vertices[static_cast<std::size_t>(p.source)];
  std::string out;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) out += ' ';
    out += q.arrows[static_cast<std::size_t>(p.arrows[i])].id;
  }
  return out;
}

namespace {

bool composable(const Quiver& q, const Path& p) {
  if (p.source < 0 || p.source >= q.num_vertices()) return false;
  int at = p.source;
  for (int a : p.arrows) {
    if (a < 0 || a >= q.num_arrows()) return false;
    const auto& arr = q.arrows[static_cast<std::size_t>(a)];
    if (arr.source != at) return false;
    at = arr.target;
  }
  return true;
}

Path concat(const Path& a, const Path& b) {
  Path c = a;
  c.arrows.insert(c.arrows.end(), b.arrows.begin(), b.arrows.end());
  return c;
}

template <class S>
void check_relations(const Quiver& q, const std::vector<Relation<S>>& relations) {
  for (const auto& r : relations) {
    const std::string label = r.name.empty() ? "relation" : "relation '" + r.name + "'";
    if (r.terms.empty()) throw std::invalid_argument(label + " has no terms");
    const Path& first = r.terms.front().second;
    for (const auto& [c, p] : r.terms) {
      if (!composable(q, p)) throw std::invalid_argument(label + " contains a non-composable path");
      if (p.length() < 2)
        throw std::invalid_argument(label + " is not admissible: path '" + path_to_string(q, p) + "' has length " +
                                    std::to_string(p.length()));
      if (p.source != first.source || p.target(q) != first.target(q))
        throw std::invalid_argument(label + " mixes non-parallel paths");
    }
  }
}

// All paths of each length up to max_len.
std::vector<std::vector<Path>> enumerate_paths(const Quiver& q, int max_len) {
  std::vector<std::vector<Path>> by_len(static_cast<std::size_t>(max_len) + 1);
  for (int v = 0; v < q.num_vertices(); ++v) by_len[0].push_back(Path{v, {}});
  for (int len = 1; len <= max_len; ++len) {
    for (const auto& p : by_len[static_cast<std::size_t>(len) - 1]) {
      const int t = p.target(q);
      for (int a = 0; a < q.num_arrows(); ++a) {
        if (q.arrows[static_cast<std::size_t>(a)].source != t) continue;
        Path next = p;
        next.arrows.push_back(a);
        by_len[static_cast<std::size_t>(len)].push_back(std::move(next));
      }
    }
  }
  return by_len;
}

}  // namespace

template <class S>
typename BoundQuiverAlgebra<S>::Ptr BoundQuiverAlgebra<S>::build(Quiver q, std::vector<Relation<S>> relations,
                                                                 int degree_cap, std::string name) {
  q.validate();
  check_relations(q, relations);
  if (degree_cap < 1) throw std::invalid_argument("degree_cap must be positive");
  std::shared_ptr<BoundQuiverAlgebra> a(new BoundQuiverAlgebra());
  a->name_ = std::move(name);
  a->quiver_ = std::move(q);
  a->relations_ = std::move(relations);
  a->degree_cap_ = degree_cap;
  a->compute_basis();
  return a;
}

template <class S>
void BoundQuiverAlgebra<S>::compute_basis() {
  const Quiver& q = quiver_;
  int previous_dim = q.num_vertices();
  for (int d = 1;; ++d) {
    const auto by_len = enumerate_paths(q, d);
    // Columns: longest paths first, then lexicographically largest, so that
    // the surviving (non-pivot) paths are the shortest and smallest ones.
    std::vector<Path> cols;
    for (int len = d; len >= 0; --len) {
      auto layer = by_len[static_cast<std::size_t>(len)];
      std::sort(layer.begin(), layer.end(), [](const Path& x, const Path& y) { return path_less(y, x); });
      cols.insert(cols.end(), layer.begin(), layer.end());
    }
    std::map<Path, Index> col_of;
    for (std::size_t i = 0; i < cols.size(); ++i) col_of[cols[i]] = static_cast<Index>(i);

    std::vector<RowVector<S>> rows;
    for (const auto& r : relations_) {
      int min_len = d + 1;
      for (const auto& term : r.terms) min_len = std::min(min_len, term.second.length());
      if (min_len > d) continue;
      const int s = r.terms.front().second.source;
      const int t = r.terms.front().second.target(q);
      for (int lu = 0; lu + min_len <= d; ++lu) {
        for (const auto& u : by_len[static_cast<std::size_t>(lu)]) {
          if (u.target(q) != s) continue;
          for (int lv = 0; lu + lv + min_len <= d; ++lv) {
            for (const auto& v : by_len[static_cast<std::size_t>(lv)]) {
              if (v.source != t) continue;
              RowVector<S> row = RowVector<S>::Constant(static_cast<Index>(cols.size()), S(0));
              bool any = false;
              for (const auto& [c, p] : r.terms) {
                if (lu + p.length() + lv > d) continue;
                Path full = concat(concat(u, p), v);
                full.source = u.source;
                row(col_of.at(full)) += c;
                any = true;
              }
              if (any) rows.push_back(std::move(row));
            }
          }
        }
      }
    }
    const auto e = rref(rows_to_matrix(rows, static_cast<Index>(cols.size())));
    std::vector<int> pivot_row(cols.size(), -1);
    for (Index k = 0; k < e.rank(); ++k) pivot_row[static_cast<std::size_t>(e.pivots[static_cast<std::size_t>(k)])] = static_cast<int>(k);

    // dim kQ/(I + R^(d+1)) is stable from d-1 to d exactly when R^d lies in I.
    const int quotient_dim = static_cast<int>(cols.size()) - static_cast<int>(e.rank());
    if (quotient_dim != previous_dim) {
      if (d >= degree_cap_)
        throw NotFiniteDimensional("not finite-dimensional within cap: dimension still growing at degree " +
                                   std::to_string(d) + " (cap " + std::to_string(degree_cap_) + ")");
      previous_dim = quotient_dim;
      continue;
    }

    radical_degree_ = d;
    basis_.clear();
    for (std::size_t c = 0; c < cols.size(); ++c)
      if (pivot_row[c] < 0) basis_.push_back(cols[c]);
    std::sort(basis_.begin(), basis_.end(), path_less);
    basis_lookup_.clear();
    for (std::size_t i = 0; i < basis_.size(); ++i) basis_lookup_[basis_[i]] = static_cast<int>(i);

    const Index n = static_cast<Index>(basis_.size());
    reductions_.clear();
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (cols[c].length() >= d) continue;
      RowVector<S> nf = RowVector<S>::Constant(n, S(0));
      if (pivot_row[c] < 0) {
        nf(basis_lookup_.at(cols[c])) = S(1);
      } else {
        const Index k = pivot_row[c];
        for (std::size_t c2 = 0; c2 < cols.size(); ++c2) {
          if (pivot_row[c2] >= 0 || is_zero(e.reduced(k, static_cast<Index>(c2)))) continue;
          nf(basis_lookup_.at(cols[c2])) -= e.reduced(k, static_cast<Index>(c2));
        }
      }
      reductions_.emplace(cols[c], std::move(nf));
    }
    break;
  }

  const int nv = q.num_vertices();
  idempotents_.assign(static_cast<std::size_t>(nv), -1);
  from_.assign(static_cast<std::size_t>(nv), {});
  to_.assign(static_cast<std::size_t>(nv), {});
  for (int i = 0; i < dim(); ++i) {
    const Path& p = basis_[static_cast<std::size_t>(i)];
    if (p.arrows.empty()) idempotents_[static_cast<std::size_t>(p.source)] = i;
    from_[static_cast<std::size_t>(p.source)].push_back(i);
    to_[static_cast<std::size_t>(p.target(q))].push_back(i);
  }
  const std::size_t n = basis_.size();
  table_.assign(n * n, {});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (basis_[i].target(q) != basis_[j].source) continue;
      Path c = concat(basis_[i], basis_[j]);
      const auto nf = normal_form(c);
      for (Index k = 0; k < nf.cols(); ++k)
        if (!is_zero(nf(k))) table_[i * n + j].emplace_back(static_cast<int>(k), nf(k));
    }
  }
}

template <class S>
std::vector<int> BoundQuiverAlgebra<S>::paths_between(int s, int t) const {
  std::vector<int> out;
  for (int i : paths_from(s))
    if (target(i) == t) out.push_back(i);
  return out;
}

template <class S>
int BoundQuiverAlgebra<S>::basis_index(const Path& p) const {
  auto it = basis_lookup_.find(p);
  return it == basis_lookup_.end() ? -1 : it->second;
}

template <class S>
typename BoundQuiverAlgebra<S>::Element BoundQuiverAlgebra<S>::normal_form(const Path& p) const {
  if (!composable(quiver_, p)) throw std::invalid_argument("normal_form: path is not composable");
  if (p.length() >= radical_degree_) return RowVector<S>::Constant(dim(), S(0));
  return reductions_.at(p);
}

template <class S>
typename BoundQuiverAlgebra<S>::Element BoundQuiverAlgebra<S>::multiply(const Element& x, const Element& y) const {
  Element out = Element::Constant(dim(), S(0));
  for (int i = 0; i < dim(); ++i) {
    if (is_zero(x(i))) continue;
    for (int j = 0; j < dim(); ++j) {
      if (is_zero(y(j))) continue;
      const S c = x(i) * y(j);
      for (const auto& [k, v] : product(i, j)) out(k) += c * v;
    }
  }
  return out;
}

template <class S>
typename BoundQuiverAlgebra<S>::Element BoundQuiverAlgebra<S>::unit() const {
  Element u = Element::Constant(dim(), S(0));
  for (int idx : idempotents_) u(idx) = S(1);
  return u;
}

template <class S>
typename BoundQuiverAlgebra<S>::Element BoundQuiverAlgebra<S>::basis_element(int i) const {
  Element u = Element::Constant(dim(), S(0));
  u(i) = S(1);
  return u;
}

template <class S>
typename BoundQuiverAlgebra<S>::Ptr BoundQuiverAlgebra<S>::opposite() const {
  std::call_once(op_once_, [this] {
    if (op_weak_.lock()) return;
    std::vector<Relation<S>> rels = relations_;
    const Quiver opq = quiver_.opposite();
    for (auto& r : rels) {
      for (auto& [c, p] : r.terms) {
        const int t = p.target(quiver_);
        std::reverse(p.arrows.begin(), p.arrows.end());
        p.source = t;
      }
    }
    std::shared_ptr<BoundQuiverAlgebra> op(new BoundQuiverAlgebra());
    op->name_ = name_.empty() ? std::string() : name_ + "^op";
    op->quiver_ = opq;
    op->relations_ = std::move(rels);
    op->degree_cap_ = degree_cap_;
    op->compute_basis();
    op->op_weak_ = this->weak_from_this();
    op_strong_ = op;
  });
  if (op_strong_) return op_strong_;
  if (auto back = op_weak_.lock()) return back;
  throw std::logic_error("opposite algebra of an expired algebra");
}

template <class S>
Matrix<S> BoundQuiverAlgebra<S>::evaluate_path(const Path& p, const std::vector<Matrix<S>>& action,
                                               const std::vector<int>& dims) {
  Matrix<S> m = identity_matrix<S>(dims[static_cast<std::size_t>(p.source)]);
  for (int a : p.arrows) m = m * action[static_cast<std::size_t>(a)];
  return m;
}

template <class S>
AdmissibilityReport validate_admissible(const Quiver& q, const std::vector<Relation<S>>& relations, int degree_cap) {
  AdmissibilityReport report;
  try {
    const auto a = BoundQuiverAlgebra<S>::build(q, relations, degree_cap);
    report.radical_degree = a->radical_degree();
  } catch (const std::exception& e) {
    report.admissible = false;
    report.failures.emplace_back(e.what());
  }
  return report;
}

template class BoundQuiverAlgebra<Rational>;
template class BoundQuiverAlgebra<ModInt>;
template AdmissibilityReport validate_admissible<Rational>(const Quiver&, const std::vector<Relation<Rational>>&, int);
template AdmissibilityReport validate_admissible<ModInt>(const Quiver&, const std::vector<Relation<ModInt>>&, int);

}  // namespace tauslice
