// Auslander generators, End(L) by quiver and relations, and rep.dim <= 3 certificates.
#pragma once

#include "tauslice/determined.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tauslice {

template <class S>
struct AuslanderGenerator {
  std::vector<Module<S>> summands;             // indecomposable, pairwise non-isomorphic
  std::vector<std::vector<std::string>> origins;  // per summand: "A", "DA", "T1", "S2", "Y", ...
  std::vector<std::string> labels;

  int size() const { return static_cast<int>(summands.size()); }
  Module<S> sum() const { return direct_sum(summands); }
};

/// Union of the summands of A, DA, the T_i, the S_j and y, up to isomorphism.
template <class S>
AuslanderGenerator<S> assemble_auslander_generator(const SliceFamily<S>& f, const std::vector<Module<S>>& y,
                                                   const typename Module<S>::AlgebraPtr& a);

/// Every indecomposable projective and injective lies in add L.
template <class S>
bool is_generator_cogenerator(const AuslanderGenerator<S>& l);

/// End(L) with the diagrammatic product: for f in Hom(L_a, L_b) and g in Hom(L_b, L_c), f g = g o f.
/// Vertex a of the presentation is L_a; its arrows are a basis of rad / rad^2.
template <class S>
struct EndoAlgebra {
  std::vector<Module<S>> summands;
  std::vector<std::vector<HomSpace<S>>> blocks;  // blocks[a][b] = Hom(L_a, L_b)
  std::vector<std::vector<int>> offsets;         // start of blocks[a][b] in the global basis
  typename BoundQuiverAlgebra<S>::Ptr presentation;
  int rad_nilpotency = 0;  // least d with rad^d = 0

  int dim() const;
  int num_summands() const { return static_cast<int>(summands.size()); }
  /// Diagrammatic product of elements in global coordinates.
  RowVector<S> multiply(const RowVector<S>& x, const RowVector<S>& y) const;
  /// Global coordinates of the identity of L_a.
  RowVector<S> idempotent(int a) const;
  RowVector<S> unit() const;
};

/// Throws std::domain_error when some End(L_a) / rad is not the ground field.
template <class S>
EndoAlgebra<S> endo_algebra(const std::vector<Module<S>>& summands);

struct GldimReport {
  int bound = 0;
  int cap = 0;
  Tri verdict = Tri::unknown;               // all simples have pd <= bound
  std::vector<DimensionReport> per_simple;  // right modules over the presentation
  std::optional<int> gldim;                 // set when every resolution terminated
  int witness = -1;                         // simple refuting the bound
};

/// Throws std::invalid_argument when cap < bound + 1.
template <class S>
GldimReport gldim_at_most(const EndoAlgebra<S>& e, int bound, int cap = 8);

template <class S>
struct RightApproximation {
  ModuleMap<S> map;            // M0 -> x
  std::vector<int> summand_of;  // generator index of each summand of M0
};

/// Evaluation map from sums of L_a, shrunk by deleting summands in reverse order while it stays an approximation.
template <class S>
RightApproximation<S> right_approximation(const Module<S>& x, const AuslanderGenerator<S>& l);
/// Hom(L_a, f) is onto for every summand L_a.
template <class S>
bool is_right_approximation(const ModuleMap<S>& f, const AuslanderGenerator<S>& l);

template <class S>
struct ApproximationCertificate {
  std::string label;
  RightApproximation<S> approximation;
  Module<S> kernel;
  bool surjective = false;
  bool kernel_in_add = false;
};

template <class S>
ApproximationCertificate<S> approximation_certificate(const Module<S>& x, const AuslanderGenerator<S>& l);

enum class RepDimRoute { endo, approximation, both };
enum class RepDimVerdict { certified_le_3, refuted_at_witness, inconclusive };
std::string to_string(RepDimRoute r);
std::string to_string(RepDimVerdict v);

struct RepDimOptions {
  RepDimRoute route = RepDimRoute::both;
  int resolution_cap = 8;
  bool override_determined = false;  // run even when the determined check fails
};

/// Side condition of the bound: union Cogen S_j in L_A or union Gen T_i in R_A, tested on the inventory.
struct HypothesisCheck {
  bool cogen_in_left = false;  // every inventory predecessor of union Cogen S_j has pd <= 1
  bool gen_in_right = false;   // every inventory successor of union Gen T_i has id <= 1
  bool holds = false;
  std::vector<std::string> cogen_failures;
  std::vector<std::string> gen_failures;
};

template <class S>
struct RepDimCertificate {
  AuslanderGenerator<S> generator;
  DeterminedReport<S> determined;
  HypothesisCheck hypothesis;
  std::optional<GldimReport> endo;
  std::vector<ApproximationCertificate<S>> approximations;
  std::optional<bool> approximations_ok;
  Scope scope = Scope::relative_to_inventory;
  RepDimVerdict verdict = RepDimVerdict::inconclusive;
  std::string witness;
  bool wrepdim_le_3 = false;
  bool findim_finite = false;
  std::vector<std::string> warnings;
};

/// Throws std::invalid_argument when the family fails the determined check and no override is given.
template <class S>
RepDimCertificate<S> certify_repdim3(const SliceFamily<S>& f, const Inventory<S>& inv, const typename Module<S>::AlgebraPtr& a,
                                     const RepDimOptions& options = {});

}  // namespace tauslice
