// Bound quiver algebras kQ/I with an explicit path basis.
//
// Paths compose left to right: for a: i -> j and b: j -> l the product ab is a
// path i -> l.  Basis paths are ordered by (length, arrow sequence), trivial
// paths e_v first in vertex order.
#pragma once

#include "tauslice/linalg.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace tauslice {

struct Arrow {
  std::string id;
  std::string alias;  // optional display name such as a Greek letter
  int source = 0;
  int target = 0;
};

struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  int num_vertices() const { return static_cast<int>(vertices.size()); }
  int num_arrows() const { return static_cast<int>(arrows.size()); }
  /// Vertex index by name; -1 when absent.
  int vertex_index(const std::string& name) const;
  /// Arrow index by id or alias; -1 when absent.
  int arrow_index(const std::string& name) const;
  /// Throws std::invalid_argument on duplicate ids or dangling endpoints.
  void validate() const;
  Quiver opposite() const;
};

/// A path in the quiver: a start vertex plus a composable arrow sequence.
struct Path {
  int source = 0;
  std::vector<int> arrows;

  int length() const { return static_cast<int>(arrows.size()); }
  int target(const Quiver& q) const { return arrows.empty() ? source : q.arrows[static_cast<std::size_t>(arrows.back())].target; }
  friend auto operator<=>(const Path&, const Path&) = default;
};

/// Basis order: by length, then trivial paths by vertex, nontrivial by arrow sequence.
bool path_less(const Path& a, const Path& b);

std::string path_to_string(const Quiver& q, const Path& p);

template <class S>
struct Relation {
  std::string name;
  std::vector<std::pair<S, Path>> terms;
};

struct AdmissibilityReport {
  bool admissible = true;
  int radical_degree = 0;
  std::vector<std::string> failures;
};

class NotFiniteDimensional : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class S>
class BoundQuiverAlgebra : public std::enable_shared_from_this<BoundQuiverAlgebra<S>> {
 public:
  using Ptr = std::shared_ptr<const BoundQuiverAlgebra>;
  using Element = RowVector<S>;

  /// Throws std::invalid_argument for malformed relations and
  /// NotFiniteDimensional when new basis paths still appear at degree_cap.
  static Ptr build(Quiver q, std::vector<Relation<S>> relations, int degree_cap = 32, std::string name = "");

  const std::string& name() const { return name_; }
  const Quiver& quiver() const { return quiver_; }
  const std::vector<Relation<S>>& relations() const { return relations_; }
  int num_vertices() const { return quiver_.num_vertices(); }
  int dim() const { return static_cast<int>(basis_.size()); }
  /// Smallest n with every path of length n in I.
  int radical_degree() const { return radical_degree_; }
  int degree_cap() const { return degree_cap_; }

  const std::vector<Path>& basis() const { return basis_; }
  const Path& basis_path(int i) const { return basis_[static_cast<std::size_t>(i)]; }
  int source(int i) const { return basis_path(i).source; }
  int target(int i) const { return basis_path(i).target(quiver_); }
  /// Index of e_v in the basis.
  int idempotent(int v) const { return idempotents_[static_cast<std::size_t>(v)]; }
  /// Basis indices of paths starting (resp. ending) at v, in basis order.
  const std::vector<int>& paths_from(int v) const { return from_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& paths_to(int v) const { return to_[static_cast<std::size_t>(v)]; }
  /// Basis indices of paths from s to t.
  std::vector<int> paths_between(int s, int t) const;
  /// Index of a path that is itself a basis element, or -1.
  int basis_index(const Path& p) const;

  /// Coordinates of the residue of an arbitrary path.
  Element normal_form(const Path& p) const;
  /// Sparse product of two basis elements.
  const std::vector<std::pair<int, S>>& product(int i, int j) const {
    return table_[static_cast<std::size_t>(i) * basis_.size() + static_cast<std::size_t>(j)];
  }
  Element multiply(const Element& x, const Element& y) const;
  Element unit() const;
  Element basis_element(int i) const;

  /// Quiver with reversed arrows and reversed relations; cached, and
  /// opposite()->opposite() is this algebra.
  Ptr opposite() const;

  /// Product of the arrow matrices along p (identity for a trivial path).
  static Matrix<S> evaluate_path(const Path& p, const std::vector<Matrix<S>>& action, const std::vector<int>& dims);

 private:
  BoundQuiverAlgebra() = default;
  void compute_basis();

  std::string name_;
  Quiver quiver_;
  std::vector<Relation<S>> relations_;
  int degree_cap_ = 32;
  int radical_degree_ = 0;
  std::vector<Path> basis_;
  std::map<Path, int> basis_lookup_;
  // Residues of every path shorter than radical_degree, keyed by path.
  std::map<Path, Element> reductions_;
  std::vector<int> idempotents_;
  std::vector<std::vector<int>> from_, to_;
  std::vector<std::vector<std::pair<int, S>>> table_;

  mutable std::once_flag op_once_;
  mutable Ptr op_strong_;
  mutable std::weak_ptr<const BoundQuiverAlgebra> op_weak_;
};

template <class S>
AdmissibilityReport validate_admissible(const Quiver& q, const std::vector<Relation<S>>& relations, int degree_cap);

extern template class BoundQuiverAlgebra<Rational>;
extern template class BoundQuiverAlgebra<ModInt>;

}  // namespace tauslice
