// Auslander-Reiten theory: translates, Ext^1, almost-split sequences and knitting.
#pragma once

#include "tauslice/module.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace tauslice {

/// tau M = ker(nu P1 -> nu P0) for the minimal projective presentation, nu = D Hom(-, A).
template <class S>
Module<S> tau(const Module<S>& m);
/// D tau D over the opposite algebra.
template <class S>
Module<S> tau_minus(const Module<S>& m);

/// dim Ext^1(M, N) = dim Hom(Omega M, N) - rank of the restriction from Hom(P0, N).
template <class S>
int ext1_dim(const Module<S>& m, const Module<S>& n);

/// dim of Hom(M, N) modulo the maps factoring through an injective module.
template <class S>
int stable_hom_dim_injective(const Module<S>& m, const Module<S>& n);
/// dim of Hom(M, N) modulo the maps factoring through a projective module.
template <class S>
int stable_hom_dim_projective(const Module<S>& m, const Module<S>& n);

template <class S>
bool is_tau_rigid(const Module<S>& m);

template <class S>
struct AlmostSplitSeq {
  Module<S> left;    // tau X
  Module<S> middle;
  Module<S> right;   // X
  ModuleMap<S> incl;  // left -> middle
  ModuleMap<S> proj;  // middle -> right
  std::vector<SummandClass<S>> middle_summands;
};

/// Thrown when the Ext socle under End(X) is not one-dimensional, or End(X) is not certified local.
class AlmostSplitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The almost-split sequence ending at an indecomposable non-projective X.
template <class S>
AlmostSplitSeq<S> almost_split_sequence(const Module<S>& x);

/// Exactness, dims(middle) = dims(left) + dims(right), and non-splitness.
template <class S>
bool is_exact_nonsplit(const AlmostSplitSeq<S>& seq);

/// Every map z -> X factors through the middle term, for each z in the family not isomorphic to X.
template <class S>
bool is_right_almost_split_on(const AlmostSplitSeq<S>& seq, const std::vector<Module<S>>& family);

enum class Direction { in, out };

/// Direct predecessors (in) or successors (out) of an indecomposable in the AR quiver, with multiplicities.
template <class S>
std::vector<SummandClass<S>> ar_neighbors(const Module<S>& x, Direction direction);

template <class S>
struct ARNode {
  Module<S> module;
  std::string label;
  bool projective = false;
  bool injective = false;
};

template <class S>
struct ARComponent {
  std::vector<ARNode<S>> nodes;
  std::map<std::pair<int, int>, int> arrows;  // (from, to) -> multiplicity
  std::map<int, int> tau_links;               // x -> tau x
  std::vector<int> frontier;                  // nodes with neighbours outside the window
  bool cap_hit = false;
  std::vector<std::string> diagnostics;       // expansions that failed

  bool complete() const { return frontier.empty(); }
  /// Index of the node isomorphic to m, or -1.
  int find(const Module<S>& m) const;
};

struct KnitOptions {
  int max_nodes = 64;
  int max_total_dim = 64;
};

/// Priority breadth-first closure under AR neighbours, tau and tau^-.
/// Successor directions are explored before predecessor directions.
template <class S>
ARComponent<S> knit_component(const std::vector<Module<S>>& seeds, const KnitOptions& options);

/// Graphviz digraph; solid arrows once per multiplicity, dashed tau-links from X to tau X.
template <class S>
std::string emit_dot(const ARComponent<S>& c);

}  // namespace tauslice
