// Presections, tau-slices, annihilators and A / Ann T.
#pragma once

#include "tauslice/ar.hpp"

#include <string>
#include <vector>

namespace tauslice {

template <class S>
struct SliceCandidate {
  std::vector<Module<S>> summands;  // indecomposable, pairwise non-isomorphic
  std::vector<std::string> labels;  // Loewy series of each summand

  int size() const { return static_cast<int>(summands.size()); }
  /// Index of the summand isomorphic to the indecomposable m, or -1.
  int find(const Module<S>& m) const;
  Module<S> sum() const { return direct_sum(summands); }
};

/// Basic version of t: one representative per isomorphism class of indecomposable summand.
template <class S>
SliceCandidate<S> slice_candidate(const Module<S>& t);
/// Throws std::invalid_argument when a module is decomposable or two are isomorphic.
template <class S>
SliceCandidate<S> slice_candidate(const std::vector<Module<S>>& summands);

/// One arrow of the AR quiver meeting the candidate, with the clause that decides it.
struct ArrowEvidence {
  enum class Rule { successor, predecessor };  // x in slice (arrow out) / y in slice (arrow in)
  Rule rule = Rule::successor;
  std::string from;  // Loewy labels
  std::string to;
  int multiplicity = 1;
  bool endpoint_in = false;    // y (successor) or x (predecessor) in the slice
  bool translate_defined = false;
  bool translate_in = false;   // tau y (successor) or tau^- x (predecessor) in the slice
  bool ok = false;
  std::string clause;
};

struct PresectionResult {
  bool presection = false;
  bool acyclic = false;
  bool connected = false;
  bool arrow_conditions = false;
  std::vector<ArrowEvidence> evidence;
  /// Arrows between slice members, as indices into the candidate.
  std::vector<std::pair<int, int>> internal_arrows;
};

template <class S>
PresectionResult is_presection(const SliceCandidate<S>& c);

/// Recomputes the verdict from the recorded evidence alone.
bool replay_presection(const PresectionResult& r, int size);

enum class SliceVerdict { not_slice, tau_slice, complete_tau_slice };
std::string to_string(SliceVerdict v);

template <class S>
struct SliceCertificate {
  SliceCandidate<S> candidate;
  bool tau_rigid = false;
  bool presection = false;
  bool connected = false;
  bool acyclic = false;
  bool sincere = false;
  PresectionResult details;
  SliceVerdict verdict = SliceVerdict::not_slice;
};

template <class S>
SliceCertificate<S> is_tau_slice(const SliceCandidate<S>& c);

/// Ann t as a subspace of A in basis coordinates.
template <class S>
Subspace<S> annihilator(const Module<S>& t);
/// Checks a x and x a lie in the subspace for every basis element a and basis vector x.
template <class S>
bool is_two_sided_ideal(const typename BoundQuiverAlgebra<S>::Ptr& a, const Subspace<S>& ideal);

template <class S>
struct AnnihilatorQuotient {
  Subspace<S> annihilator;
  std::vector<int> basis;                          // A-basis elements spanning a complement of Ann t
  std::vector<std::vector<RowVector<S>>> product;  // product[i][j] in quotient coordinates
  RowVector<S> unit;
  std::vector<Matrix<S>> action;                   // action of basis[i] on the total space of t
  bool faithful = false;

  int dim() const { return static_cast<int>(basis.size()); }
};

/// A / Ann t by structure constants; t restricted to it.
template <class S>
AnnihilatorQuotient<S> quotient_by_annihilator(const Module<S>& t);

}  // namespace tauslice
