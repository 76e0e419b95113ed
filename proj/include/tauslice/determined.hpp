// Checking that given families of tau-slices determine the algebra, relative to an inventory of indecomposables.
#pragma once

#include "tauslice/slice.hpp"

#include <string>
#include <utility>
#include <vector>

namespace tauslice {

template <class S>
struct SliceFamily {
  std::vector<SliceCandidate<S>> t_side;
  std::vector<SliceCandidate<S>> s_side;
};

enum class Provenance { knitted, user_supplied, exhaustive };
std::string to_string(Provenance p);

template <class S>
struct Inventory {
  std::vector<Module<S>> modules;  // indecomposable, pairwise non-isomorphic
  Provenance provenance = Provenance::user_supplied;

  int size() const { return static_cast<int>(modules.size()); }
};

/// Deduplicates up to isomorphism; throws std::invalid_argument on a decomposable module.
template <class S>
Inventory<S> make_inventory(const std::vector<Module<S>>& modules, Provenance provenance);
/// Exhaustive when the component is complete and the quiver is connected, knitted otherwise.
template <class S>
Inventory<S> inventory_from_component(const ARComponent<S>& c);

bool quiver_connected(const Quiver& q);

enum class Scope { exhaustive, relative_to_inventory };
std::string to_string(Scope s);

template <class S>
struct YResult {
  std::vector<int> complement;  // in neither union Gen T_i nor union Cogen S_j
  std::vector<int> perp;        // in (union T_i^perp) and (union ^perp S_j)
  std::vector<int> mismatches;  // in exactly one of the two lists
  bool equal = true;
};

template <class S>
YResult<S> compute_Y(const SliceFamily<S>& f, const Inventory<S>& inv);

struct Cond1Result {
  bool ok = true;
  std::vector<std::pair<int, int>> failing;  // (i, j) with Hom(T_i, S_j) != 0
};

template <class S>
Cond1Result check_cond1(const SliceFamily<S>& f);

enum class FactorDirection { gen, cogen };

struct FactorizationResult {
  bool ok = false;
  int chosen_k = -1;                       // first k that works, 0-based
  std::vector<int> satisfying_k;
  std::vector<std::string> permitted;      // permitted test modules for chosen_k (or for k = 0 when none works)
  std::vector<std::string> failing;        // for each k, the first test module without a factorization
};

/// Condition (3) for x in union Gen T_i (gen) or (3^op) for x in union Cogen S_j (cogen).
template <class S>
FactorizationResult check_factorization(const SliceFamily<S>& f, const Module<S>& x, FactorDirection direction);

/// Every map from l to x factors through add u (u given by its summands).
template <class S>
bool factors_through(const Module<S>& l, const Module<S>& x, const std::vector<Module<S>>& u);
/// Every map from x to n factors through add u.
template <class S>
bool factors_through_from(const Module<S>& x, const Module<S>& n, const std::vector<Module<S>>& u);

template <class S>
struct DeterminedReport {
  std::vector<SliceCertificate<S>> t_certificates;
  std::vector<SliceCertificate<S>> s_certificates;
  bool slices_ok = false;
  Cond1Result cond1;
  YResult<S> y;
  bool cond2 = false;
  std::vector<std::pair<int, FactorizationResult>> cond3;    // inventory index, result
  std::vector<std::pair<int, FactorizationResult>> cond3op;
  bool cond3_ok = true;
  bool cond3op_ok = true;
  std::vector<std::pair<int, int>> closure_violations;  // (M, N) with M in union Gen T_i, Hom(M, N) != 0, N in Y
  bool closure_ok = true;
  std::vector<int> in_gen;    // inventory members in union Gen T_i
  std::vector<int> in_cogen;  // inventory members in union Cogen S_j
  bool empty_family_convention = false;  // one side empty, so its union is the zero category
  Scope scope = Scope::relative_to_inventory;
  bool overall = false;
};

template <class S>
DeterminedReport<S> check_determined(const SliceFamily<S>& f, const Inventory<S>& inv);

}  // namespace tauslice
