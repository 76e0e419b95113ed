// Helpers to write small representations by hand in tests.
#pragma once

#include "tauslice/module.hpp"

#include <initializer_list>
#include <map>
#include <string>
#include <vector>

namespace tauslice::testing {

template <class S>
Matrix<S> mat(int rows, int cols, std::initializer_list<long long> entries) {
  Matrix<S> m = zero_matrix<S>(rows, cols);
  auto it = entries.begin();
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = S(it == entries.end() ? 0 : *it++);
  return m;
}

/// Representation with the given dims; unspecified arrows act as zero.
template <class S>
Module<S> rep(const typename Module<S>::AlgebraPtr& a, std::vector<int> dims,
              const std::map<std::string, Matrix<S>>& arrows = {}) {
  const auto& q = a->quiver();
  std::vector<Matrix<S>> action;
  for (const auto& arr : q.arrows) {
    auto it = arrows.find(arr.id);
    action.push_back(it != arrows.end() ? it->second
                                        : zero_matrix<S>(dims[static_cast<std::size_t>(arr.source)],
                                                         dims[static_cast<std::size_t>(arr.target)]));
  }
  return Module<S>(a, std::move(dims), std::move(action));
}

/// Indecomposables of 1 -> 2 -> 3 as vertex intervals [i, j] (1-based, inclusive).
template <class S>
Module<S> interval(const typename Module<S>::AlgebraPtr& a, int i, int j) {
  const int n = a->num_vertices();
  std::vector<int> dims(static_cast<std::size_t>(n), 0);
  for (int v = i; v <= j; ++v) dims[static_cast<std::size_t>(v - 1)] = 1;
  std::map<std::string, Matrix<S>> arrows;
  for (int v = i; v < j; ++v) arrows["a" + std::to_string(v)] = mat<S>(1, 1, {1});
  return rep<S>(a, dims, arrows);
}

/// All indecomposables of the linear A_n quiver.
template <class S>
std::vector<Module<S>> linear_inventory(const typename Module<S>::AlgebraPtr& a) {
  std::vector<Module<S>> out;
  const int n = a->num_vertices();
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) out.push_back(interval<S>(a, i, j));
  return out;
}

}  // namespace tauslice::testing
