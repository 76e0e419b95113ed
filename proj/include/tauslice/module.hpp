// Right modules over a bound quiver algebra, realized as quiver representations.
//
// Elements of M at vertex v are row vectors of length dims[v]; an arrow
// a: s -> t acts by right multiplication with a dims[s] x dims[t] matrix.  A
// map f: M -> N has one block per vertex and f followed by g has blocks F_v G_v.
#pragma once

#include "tauslice/algebra.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tauslice {

template <class S>
class Module {
 public:
  using AlgebraPtr = typename BoundQuiverAlgebra<S>::Ptr;

  Module() = default;
  /// Validates matrix shapes and that every relation acts as zero.
  Module(AlgebraPtr algebra, std::vector<int> dims, std::vector<Matrix<S>> action);
  /// Skips the relation check; shapes are still asserted in debug builds.
  static Module unchecked(AlgebraPtr algebra, std::vector<int> dims, std::vector<Matrix<S>> action);
  static Module zero(AlgebraPtr algebra);

  const AlgebraPtr& algebra() const { return algebra_; }
  const std::vector<int>& dims() const { return dims_; }
  int dim(int v) const { return dims_[static_cast<std::size_t>(v)]; }
  int total_dim() const;
  bool is_zero() const { return total_dim() == 0; }
  int num_vertices() const { return static_cast<int>(dims_.size()); }
  const Matrix<S>& action(int arrow) const { return action_[static_cast<std::size_t>(arrow)]; }
  const std::vector<Matrix<S>>& actions() const { return action_; }
  /// Matrix of a path acting on M.
  Matrix<S> path_action(const Path& p) const;
  /// Returns the first relation that does not vanish, if any.
  std::optional<std::string> relation_violation() const;

  friend bool operator==(const Module& a, const Module& b) {
    return a.algebra_ == b.algebra_ && a.dims_ == b.dims_ && a.action_ == b.action_;
  }

 private:
  AlgebraPtr algebra_;
  std::vector<int> dims_;
  std::vector<Matrix<S>> action_;
};

template <class S>
struct ModuleMap {
  Module<S> source;
  Module<S> target;
  std::vector<Matrix<S>> blocks;

  const Matrix<S>& block(int v) const { return blocks[static_cast<std::size_t>(v)]; }
  bool is_zero() const;
  bool is_injective() const;
  bool is_surjective() const;
  bool is_isomorphism() const { return is_injective() && is_surjective(); }
  /// Checks block shapes and the intertwining relations.
  bool is_homomorphism() const;
  /// All block entries, row-major, vertex by vertex.
  RowVector<S> flatten() const;
  /// Block-diagonal matrix on the total space.
  Matrix<S> total() const;
};

template <class S>
struct HomSpace {
  Module<S> source;
  Module<S> target;
  std::vector<ModuleMap<S>> basis;
  int dim() const { return static_cast<int>(basis.size()); }
  /// Linear combination of the basis.
  ModuleMap<S> combine(const std::vector<S>& coeffs) const;
};

template <class S>
struct Submodule {
  Module<S> module;
  ModuleMap<S> inclusion;
};

template <class S>
struct QuotientModule {
  Module<S> module;
  ModuleMap<S> projection;
};

template <class S>
struct ImageFactorization {
  Module<S> module;
  ModuleMap<S> onto;       // source -> image
  ModuleMap<S> inclusion;  // image -> target
};

template <class S>
struct ProjectiveCover {
  Module<S> cover;
  ModuleMap<S> map;              // cover -> module, surjective
  std::vector<int> top_vertices;  // summand P(v) of the cover, in order
};

template <class S>
struct InjectiveEnvelope {
  Module<S> envelope;
  ModuleMap<S> map;  // module -> envelope, injective
  std::vector<int> socle_vertices;
};

template <class S>
struct Presentation {
  ProjectiveCover<S> p0;   // P0 -> M
  ProjectiveCover<S> p1;   // P1 -> ker(P0 -> M)
  Submodule<S> kernel;     // ker(P0 -> M) inside P0
  ModuleMap<S> map;        // P1 -> P0
};

enum class Tri { no, yes, unknown };
std::string to_string(Tri t);

// ---- Standard modules -------------------------------------------------------

template <class S>
Module<S> simple_module(const typename Module<S>::AlgebraPtr& a, int v);
/// e_v A on the paths starting at v.
template <class S>
Module<S> projective_module(const typename Module<S>::AlgebraPtr& a, int v);
/// D(A e_v), realized as the dual of the projective of the opposite algebra.
template <class S>
Module<S> injective_module(const typename Module<S>::AlgebraPtr& a, int v);
/// A_A = sum of all P(v).
template <class S>
Module<S> regular_module(const typename Module<S>::AlgebraPtr& a);
/// DA = sum of all I(v).
template <class S>
Module<S> dual_regular_module(const typename Module<S>::AlgebraPtr& a);

/// The map P(v) -> M sending e_v to m (m is a row vector in M at v).
template <class S>
ModuleMap<S> map_from_projective(const Module<S>& pv, int v, const Module<S>& m, const RowVector<S>& element);

// ---- Sums, duals, maps ------------------------------------------------------

template <class S>
Module<S> direct_sum(const std::vector<Module<S>>& parts);
template <class S>
Module<S> direct_sum(const Module<S>& a, const Module<S>& b) {
  return direct_sum<S>(std::vector<Module<S>>{a, b});
}
template <class S>
Module<S> power(const Module<S>& m, int n);
/// Canonical inclusion of parts[k] into the direct sum.
template <class S>
ModuleMap<S> sum_injection(const std::vector<Module<S>>& parts, int k);
template <class S>
ModuleMap<S> sum_projection(const std::vector<Module<S>>& parts, int k);
/// Map sum(parts) -> target assembled from one map per part.
template <class S>
ModuleMap<S> map_from_sum(const std::vector<ModuleMap<S>>& maps, const Module<S>& sum);
/// Map source -> sum(parts) assembled from one map per part.
template <class S>
ModuleMap<S> map_to_sum(const std::vector<ModuleMap<S>>& maps, const Module<S>& sum);

/// D M over the opposite algebra: same dims, transposed matrices on reversed arrows.
template <class S>
Module<S> dualize(const Module<S>& m);
/// D f : D N -> D M.
template <class S>
ModuleMap<S> dualize(const ModuleMap<S>& f);

template <class S>
ModuleMap<S> identity_map(const Module<S>& m);
template <class S>
ModuleMap<S> zero_map(const Module<S>& source, const Module<S>& target);
/// g o f (f first).
template <class S>
ModuleMap<S> compose(const ModuleMap<S>& g, const ModuleMap<S>& f);
template <class S>
ModuleMap<S> add(const ModuleMap<S>& f, const ModuleMap<S>& g);
template <class S>
ModuleMap<S> scale(const S& c, const ModuleMap<S>& f);

// ---- Hom --------------------------------------------------------------------

/// Kernel of the intertwining system; deterministic basis.
template <class S>
HomSpace<S> hom_basis(const Module<S>& m, const Module<S>& n);
template <class S>
int hom_dim(const Module<S>& m, const Module<S>& n);

// ---- Kernels, images, cokernels, submodules -----------------------------------

template <class S>
Submodule<S> map_kernel(const ModuleMap<S>& f);
template <class S>
ImageFactorization<S> map_image(const ModuleMap<S>& f);
template <class S>
QuotientModule<S> map_cokernel(const ModuleMap<S>& f);
/// Submodule with the given row spaces per vertex; they must be closed under the arrows.
template <class S>
Submodule<S> submodule(const Module<S>& m, const std::vector<Subspace<S>>& spaces);
/// Smallest submodule containing the given rows per vertex.
template <class S>
Submodule<S> generated_submodule(const Module<S>& m, const std::vector<Matrix<S>>& generators);
template <class S>
QuotientModule<S> quotient(const Module<S>& m, const std::vector<Subspace<S>>& spaces);

// ---- Radical layers, covers, resolutions -----------------------------------------

template <class S>
Submodule<S> radical(const Module<S>& m);
template <class S>
Submodule<S> socle(const Module<S>& m);
template <class S>
QuotientModule<S> top(const Module<S>& m);
/// Dimension vectors of rad^k M / rad^(k+1) M, top first.
template <class S>
std::vector<std::vector<int>> loewy_layers(const Module<S>& m);
/// Layers joined by '/', e.g. "3/21"; within a layer vertices run from last to first, separated by ',' when
/// any vertex name is longer than one character.
template <class S>
std::string loewy_series(const Module<S>& m);

template <class S>
ProjectiveCover<S> projective_cover(const Module<S>& m);
template <class S>
InjectiveEnvelope<S> injective_envelope(const Module<S>& m);
template <class S>
Presentation<S> min_proj_presentation(const Module<S>& m);
template <class S>
Module<S> syzygy(const Module<S>& m);
template <class S>
Module<S> cosyzygy(const Module<S>& m);

template <class S>
bool is_projective(const Module<S>& m);
template <class S>
bool is_injective(const Module<S>& m);
/// True when Omega^n M is projective.
template <class S>
bool pd_le(const Module<S>& m, int n);
template <class S>
bool id_le(const Module<S>& m, int n);

struct DimensionReport {
  std::optional<int> value;  // set when the resolution terminates within the cap
  bool periodic = false;     // a syzygy repeated up to isomorphism, so the dimension is infinite
  int repeat_from = -1;      // Omega^repeat_from ~ Omega^repeat_to
  int repeat_to = -1;
};

template <class S>
DimensionReport projective_dimension(const Module<S>& m, int cap);

// ---- Structure of End, decomposition, isomorphism ---------------------------------

template <class S>
struct LocalityCertificate {
  bool local = false;
  /// Basis of the nilpotent ideal complementing the scalars, when local.
  std::vector<Matrix<S>> radical;
};

/// Decides whether End(M) is local by exhibiting End = k 1 + H with H a nilpotent ideal.
template <class S>
LocalityCertificate<S> local_certificate(const Module<S>& m);

template <class S>
struct Decomposition {
  std::vector<Module<S>> summands;  // indecomposable, in a canonical order
  bool certified = true;            // every summand carries a locality certificate
};

template <class S>
Decomposition<S> decompose(const Module<S>& m);

template <class S>
struct SummandClass {
  Module<S> module;
  int multiplicity = 0;
};

/// Summands grouped into isomorphism classes.
template <class S>
std::vector<SummandClass<S>> decompose_grouped(const Module<S>& m);

template <class S>
bool is_indecomposable(const Module<S>& m);

/// Exact test for modules with local endomorphism rings.
template <class S>
bool iso_indecomposables(const Module<S>& x, const Module<S>& y);

template <class S>
Tri is_isomorphic(const Module<S>& m, const Module<S>& n, std::uint64_t seed = 0x5eed);

/// Some isomorphism m -> n found by random search, if one turns up.
template <class S>
std::optional<ModuleMap<S>> find_isomorphism(const Module<S>& m, const Module<S>& n, std::uint64_t seed = 0x5eed);

// ---- Membership and vanishing ----------------------------------------------------

/// x in add l: the identity of x lies in span{g o f : f in Hom(x,l), g in Hom(l,x)}.
template <class S>
bool add_membership(const Module<S>& x, const Module<S>& l);
/// The trace of t in x is all of x.
template <class S>
bool gen_membership(const Module<S>& x, const Module<S>& t);
/// The reject of s in x is zero.
template <class S>
bool cogen_membership(const Module<S>& x, const Module<S>& s);

enum class PerpSide { left, right };
/// right: Hom(t, x) = 0; left: Hom(x, t) = 0.
template <class S>
bool perp_vanishing(const Module<S>& x, const Module<S>& t, PerpSide side);

template <class S>
bool is_sincere(const Module<S>& m);

}  // namespace tauslice
