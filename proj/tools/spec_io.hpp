// Line-oriented algebra (.alg) and module (.mods) files.
//
// .alg:
//   name: kc
//   field: Q                 # or GF(p)
//   vertices: 1 2 3 4 5
//   arrow ga (γ): 3 -> 1     # ASCII id, optional display alias
//   relation: ga*a1
//   relation: th*ep - 2/3 de*ga
//   degree_cap: 16
//
// .mods, any number of modules:
//   module: 11/4             # optional label
//   dims: 2 0 0 1 0
//   be1: 1 ; 0               # rows separated by ';', zero matrices may be omitted
//   expr: tau(S(3)) (+) P(2)^2
#pragma once

#include "tauslice/algebra.hpp"
#include "tauslice/module.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tauslice::cli {

class SpecError : public std::runtime_error {
 public:
  SpecError(const std::string& file, int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

struct RelationTerm {
  std::string coefficient;  // rational literal, parsed in the target field
  std::vector<std::string> arrows;
  int column = 0;
};

struct AlgebraSpec {
  std::string name;
  FieldSpec field;
  Quiver quiver;
  std::vector<std::vector<RelationTerm>> relations;
  std::vector<int> relation_lines;
  int degree_cap = 32;
};

AlgebraSpec parse_algebra_text(const std::string& text, const std::string& file = "<input>");
AlgebraSpec parse_algebra_file(const std::string& path);
/// Inverse of parse_algebra_text up to comments and spacing.
std::string print_algebra(const AlgebraSpec& spec);

/// Throws SpecError at the relation's line for unknown or non-composable arrows.
template <class S>
typename BoundQuiverAlgebra<S>::Ptr build_algebra(const AlgebraSpec& spec, const std::string& file = "<input>");

struct ModuleEntry {
  int line = 0;
  std::string label;
  bool constructive = false;
  std::string expression;
  int expression_column = 0;
  std::vector<int> dims;
  std::vector<std::pair<std::string, std::vector<std::vector<std::string>>>> matrices;  // arrow id, rows
  std::vector<int> matrix_lines;
};

struct ModuleFile {
  std::string path;
  std::vector<ModuleEntry> entries;
};

ModuleFile parse_module_text(const std::string& text, const std::string& file = "<input>");
ModuleFile parse_module_file(const std::string& path);

/// Evaluates every entry. Explicit modules are checked against the relations.
template <class S>
std::vector<Module<S>> evaluate_modules(const ModuleFile& file, const typename BoundQuiverAlgebra<S>::Ptr& a);

/// Evaluates a single constructive expression such as "tau(S(3)) (+) P(1)".
template <class S>
Module<S> evaluate_expression(const std::string& expr, const typename BoundQuiverAlgebra<S>::Ptr& a,
                              const std::string& file = "<expr>", int line = 1, int column = 1);

std::string read_file(const std::string& path);
std::uint64_t fnv1a(const std::string& bytes);
std::string hex64(std::uint64_t h);

}  // namespace tauslice::cli
