#include "spec_io.hpp"

#include "tauslice/ar.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace tauslice::cli {

SpecError::SpecError(const std::string& file, int line, int column, const std::string& message)
    : std::runtime_error(file + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t h) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) s[static_cast<std::size_t>(i)] = digits[h & 0xf];
  return s;
}

namespace {

struct Line {
  int number = 0;
  std::string key;
  std::string value;
  int key_column = 1;
  int value_column = 1;
};

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

// Non-blank lines split at the first ':', comments removed.
std::vector<Line> split_lines(const std::string& text, const std::string& file) {
  std::vector<Line> out;
  std::istringstream in(text);
  int number = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    if (trim(raw).empty()) continue;
    const auto colon = raw.find(':');
    const int first = static_cast<int>(raw.find_first_not_of(" \t")) + 1;
    if (colon == std::string::npos) throw SpecError(file, number, first, "expected 'key: value'");
    Line l;
    l.number = number;
    l.key = trim(raw.substr(0, colon));
    l.key_column = first;
    const auto vstart = raw.find_first_not_of(" \t", colon + 1);
    l.value = vstart == std::string::npos ? "" : trim(raw.substr(vstart));
    l.value_column = vstart == std::string::npos ? static_cast<int>(colon) + 2 : static_cast<int>(vstart) + 1;
    out.push_back(std::move(l));
  }
  return out;
}

std::vector<RelationTerm> parse_relation(const Line& l, const std::string& file) {
  const std::string& s = l.value;
  std::size_t i = 0;
  auto col = [&](std::size_t k) { return l.value_column + static_cast<int>(k); };
  auto skip = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  std::vector<RelationTerm> terms;
  bool first = true;
  while (true) {
    skip();
    if (i >= s.size()) {
      if (first) throw SpecError(file, l.number, col(i), "empty relation");
      break;
    }
    RelationTerm t;
    t.column = col(i);
    bool negative = false;
    if (s[i] == '+' || s[i] == '-') {
      negative = s[i] == '-';
      ++i;
      skip();
    } else if (!first) {
      throw SpecError(file, l.number, col(i), "expected '+' or '-' between terms");
    }
    std::string coef;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      const std::size_t start = i;
      while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) ++i;
      coef = s.substr(start, i - start);
      try {
        (void)FieldTraits<Rational>::parse(coef);
      } catch (const std::invalid_argument& e) {
        throw SpecError(file, l.number, col(start), e.what());
      }
      skip();
      if (i < s.size() && s[i] == '*') {
        ++i;
        skip();
      }
    }
    t.coefficient = (negative ? "-" : "") + (coef.empty() ? std::string("1") : coef);
    while (true) {
      if (i >= s.size() || !is_ident_start(s[i])) throw SpecError(file, l.number, col(i), "expected an arrow id");
      const std::size_t start = i;
      while (i < s.size() && is_ident_char(s[i])) ++i;
      t.arrows.push_back(s.substr(start, i - start));
      skip();
      if (i < s.size() && s[i] == '*') {
        ++i;
        skip();
        continue;
      }
      break;
    }
    terms.push_back(std::move(t));
    first = false;
  }
  return terms;
}

}  // namespace

AlgebraSpec parse_algebra_text(const std::string& text, const std::string& file) {
  AlgebraSpec spec;
  bool have_vertices = false;
  for (const auto& l : split_lines(text, file)) {
    if (l.key == "name") {
      spec.name = l.value;
    } else if (l.key == "field") {
      if (l.value == "Q") {
        spec.field = FieldSpec::rationals();
      } else if (l.value.size() > 4 && l.value.rfind("GF(", 0) == 0 && l.value.back() == ')') {
        try {
          spec.field = FieldSpec::prime(std::stoull(l.value.substr(3, l.value.size() - 4)));
        } catch (const std::exception& e) {
          throw SpecError(file, l.number, l.value_column, std::string("bad field: ") + e.what());
        }
      } else {
        throw SpecError(file, l.number, l.value_column, "field must be Q or GF(p)");
      }
    } else if (l.key == "vertices") {
      spec.quiver.vertices = split_ws(l.value);
      if (spec.quiver.vertices.empty()) throw SpecError(file, l.number, l.value_column, "no vertices");
      for (std::size_t i = 0; i < spec.quiver.vertices.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
          if (spec.quiver.vertices[i] == spec.quiver.vertices[j])
            throw SpecError(file, l.number, l.value_column, "duplicate vertex " + spec.quiver.vertices[i]);
      have_vertices = true;
    } else if (l.key.rfind("arrow", 0) == 0 && l.key.size() > 5 && std::isspace(static_cast<unsigned char>(l.key[5]))) {
      if (!have_vertices) throw SpecError(file, l.number, l.key_column, "arrows must follow the vertices line");
      std::string decl = trim(l.key.substr(5));
      Arrow a;
      std::size_t k = 0;
      while (k < decl.size() && is_ident_char(decl[k])) ++k;
      a.id = decl.substr(0, k);
      if (a.id.empty() || !is_ident_start(a.id.front()))
        throw SpecError(file, l.number, l.key_column + 6, "arrow id must be an ASCII identifier");
      const std::string rest = trim(decl.substr(k));
      if (!rest.empty()) {
        if (rest.front() != '(' || rest.back() != ')') throw SpecError(file, l.number, l.key_column + 6, "expected '(alias)' after the arrow id");
        a.alias = trim(rest.substr(1, rest.size() - 2));
      }
      const auto arrow_pos = l.value.find("->");
      if (arrow_pos == std::string::npos) throw SpecError(file, l.number, l.value_column, "expected 'source -> target'");
      const std::string src = trim(l.value.substr(0, arrow_pos)), tgt = trim(l.value.substr(arrow_pos + 2));
      a.source = spec.quiver.vertex_index(src);
      a.target = spec.quiver.vertex_index(tgt);
      if (a.source < 0) throw SpecError(file, l.number, l.value_column, "unknown vertex '" + src + "'");
      if (a.target < 0) throw SpecError(file, l.number, l.value_column + static_cast<int>(arrow_pos) + 2, "unknown vertex '" + tgt + "'");
      if (spec.quiver.arrow_index(a.id) >= 0) throw SpecError(file, l.number, l.key_column + 6, "duplicate arrow '" + a.id + "'");
      spec.quiver.arrows.push_back(std::move(a));
    } else if (l.key == "relation") {
      spec.relations.push_back(parse_relation(l, file));
      spec.relation_lines.push_back(l.number);
    } else if (l.key == "degree_cap") {
      try {
        spec.degree_cap = std::stoi(l.value);
      } catch (const std::exception&) {
        throw SpecError(file, l.number, l.value_column, "degree_cap must be an integer");
      }
      if (spec.degree_cap < 1) throw SpecError(file, l.number, l.value_column, "degree_cap must be positive");
    } else {
      throw SpecError(file, l.number, l.key_column, "unknown key '" + l.key + "'");
    }
  }
  if (!have_vertices) throw SpecError(file, 1, 1, "missing 'vertices' line");
  return spec;
}

AlgebraSpec parse_algebra_file(const std::string& path) { return parse_algebra_text(read_file(path), path); }

std::string print_algebra(const AlgebraSpec& spec) {
  std::ostringstream out;
  if (!spec.name.empty()) out << "name: " << spec.name << "\n";
  out << "field: " << (spec.field.kind == FieldKind::rationals ? "Q" : "GF(" + std::to_string(spec.field.characteristic) + ")") << "\n";
  out << "vertices:";
  for (const auto& v : spec.quiver.vertices) out << " " << v;
  out << "\n";
  for (const auto& a : spec.quiver.arrows) {
    out << "arrow " << a.id;
    if (!a.alias.empty()) out << " (" << a.alias << ")";
    out << ": " << spec.quiver.vertices[static_cast<std::size_t>(a.source)] << " -> "
        << spec.quiver.vertices[static_cast<std::size_t>(a.target)] << "\n";
  }
  for (const auto& rel : spec.relations) {
    out << "relation:";
    for (std::size_t i = 0; i < rel.size(); ++i) {
      std::string c = rel[i].coefficient;
      const bool negative = !c.empty() && c.front() == '-';
      if (negative) c.erase(0, 1);
      out << (i == 0 ? (negative ? " -" : "") : (negative ? " - " : " + "));
      if (i == 0 && !negative) out << " ";
      if (c != "1") out << c << " ";
      for (std::size_t k = 0; k < rel[i].arrows.size(); ++k) out << (k ? "*" : "") << rel[i].arrows[k];
    }
    out << "\n";
  }
  out << "degree_cap: " << spec.degree_cap << "\n";
  return out.str();
}

namespace {

std::string relation_text(const std::vector<RelationTerm>& rel) {
  AlgebraSpec one;
  one.relations.push_back(rel);
  std::string printed = print_algebra(one);
  const auto start = printed.find("relation: ") + 10;
  return printed.substr(start, printed.find('\n', start) - start);
}

}  // namespace

template <class S>
typename BoundQuiverAlgebra<S>::Ptr build_algebra(const AlgebraSpec& spec, const std::string& file) {
  const Quiver& q = spec.quiver;
  std::vector<Relation<S>> relations;
  for (std::size_t r = 0; r < spec.relations.size(); ++r) {
    const int line = spec.relation_lines[r];
    Relation<S> rel;
    rel.name = relation_text(spec.relations[r]);
    int source = -1, target = -1;
    for (const auto& term : spec.relations[r]) {
      Path p;
      for (const auto& id : term.arrows) {
        const int a = q.arrow_index(id);
        if (a < 0) throw SpecError(file, line, term.column, "unknown arrow '" + id + "'");
        if (!p.arrows.empty() && q.arrows[static_cast<std::size_t>(p.arrows.back())].target != q.arrows[static_cast<std::size_t>(a)].source)
          throw SpecError(file, line, term.column, "arrows do not compose at '" + id + "'");
        if (p.arrows.empty()) p.source = q.arrows[static_cast<std::size_t>(a)].source;
        p.arrows.push_back(a);
      }
      if (source < 0) {
        source = p.source;
        target = p.target(q);
      } else if (p.source != source || p.target(q) != target) {
        throw SpecError(file, line, term.column, "terms of a relation must share source and target");
      }
      rel.terms.emplace_back(FieldTraits<S>::parse(term.coefficient), p);
    }
    relations.push_back(std::move(rel));
  }
  try {
    return BoundQuiverAlgebra<S>::build(q, std::move(relations), spec.degree_cap, spec.name);
  } catch (const NotFiniteDimensional& e) {
    throw SpecError(file, 1, 1, std::string("not admissible: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw SpecError(file, 1, 1, e.what());
  }
}

ModuleFile parse_module_text(const std::string& text, const std::string& file) {
  ModuleFile mf;
  mf.path = file;
  ModuleEntry* open = nullptr;
  for (const auto& l : split_lines(text, file)) {
    if (l.key == "expr") {
      if (l.value.empty()) throw SpecError(file, l.number, l.value_column, "empty expression");
      if (!open || !open->dims.empty()) {
        ModuleEntry e;
        e.line = l.number;
        mf.entries.push_back(std::move(e));
      }
      ModuleEntry& e = mf.entries.back();
      e.constructive = true;
      e.expression = l.value;
      e.expression_column = l.value_column;
      open = nullptr;
    } else if (l.key == "module") {
      ModuleEntry e;
      e.line = l.number;
      e.label = l.value;
      mf.entries.push_back(std::move(e));
      open = &mf.entries.back();
    } else if (l.key == "dims") {
      if (!open || !open->dims.empty()) {
        ModuleEntry e;
        e.line = l.number;
        mf.entries.push_back(std::move(e));
        open = &mf.entries.back();
      }
      for (const auto& w : split_ws(l.value)) {
        try {
          std::size_t used = 0;
          const int d = std::stoi(w, &used);
          if (used != w.size() || d < 0) throw std::invalid_argument(w);
          open->dims.push_back(d);
        } catch (const std::exception&) {
          throw SpecError(file, l.number, l.value_column, "dimensions must be non-negative integers");
        }
      }
    } else {
      if (!open || open->dims.empty()) throw SpecError(file, l.number, l.key_column, "matrix '" + l.key + "' before a dims line");
      std::vector<std::vector<std::string>> rows;
      std::istringstream in(l.value);
      for (std::string row; std::getline(in, row, ';');) rows.push_back(split_ws(row));
      if (rows.size() == 1 && rows.front().empty()) rows.clear();
      open->matrices.emplace_back(l.key, std::move(rows));
      open->matrix_lines.push_back(l.number);
    }
  }
  for (const auto& e : mf.entries)
    if (!e.constructive && e.dims.empty()) throw SpecError(file, e.line, 1, "module '" + e.label + "' has neither dims nor expr");
  return mf;
}

ModuleFile parse_module_file(const std::string& path) { return parse_module_text(read_file(path), path); }

namespace {

template <class S>
class ExprParser {
 public:
  ExprParser(const std::string& text, const typename BoundQuiverAlgebra<S>::Ptr& a, const std::string& file, int line, int column)
      : s_(text), a_(a), file_(file), line_(line), column_(column) {}

  Module<S> parse() {
    Module<S> m = sum();
    skip();
    if (i_ < s_.size()) fail("unexpected '" + s_.substr(i_, 1) + "'");
    return m;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw SpecError(file_, line_, column_ + static_cast<int>(i_), msg); }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool at(const std::string& tok) {
    skip();
    return s_.compare(i_, tok.size(), tok) == 0;
  }
  void expect(char c) {
    skip();
    if (i_ >= s_.size() || s_[i_] != c) fail(std::string("expected '") + c + "'");
    ++i_;
  }

  Module<S> sum() {
    std::vector<Module<S>> parts{term()};
    while (at("(+)")) {
      i_ += 3;
      parts.push_back(term());
    }
    return parts.size() == 1 ? parts.front() : direct_sum(parts);
  }

  Module<S> term() {
    Module<S> m = atom();
    if (at("^")) {
      ++i_;
      skip();
      const std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (start == i_) fail("expected an exponent");
      const int n = std::stoi(s_.substr(start, i_ - start));
      if (n < 1) fail("exponent must be positive");
      m = power(m, n);
    }
    return m;
  }

  int vertex() {
    skip();
    const std::size_t start = i_;
    while (i_ < s_.size() && s_[i_] != ')' && !std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    const std::string name = s_.substr(start, i_ - start);
    const int v = a_->quiver().vertex_index(name);
    if (v < 0) {
      i_ = start;
      fail("unknown vertex '" + name + "'");
    }
    return v;
  }

  Module<S> atom() {
    skip();
    if (at("(+)")) fail("missing operand before '(+)'");
    if (i_ < s_.size() && s_[i_] == '(') {
      ++i_;
      Module<S> m = sum();
      expect(')');
      return m;
    }
    const std::size_t start = i_;
    while (i_ < s_.size() && is_ident_char(s_[i_])) ++i_;
    const std::string name = s_.substr(start, i_ - start);
    if (name.empty()) fail("expected a module");
    if (name == "A") return regular_module<S>(a_);
    if (name == "DA") return dual_regular_module<S>(a_);
    if (name == "S" || name == "P" || name == "I") {
      expect('(');
      const int v = vertex();
      expect(')');
      if (name == "S") return simple_module<S>(a_, v);
      if (name == "P") return projective_module<S>(a_, v);
      return injective_module<S>(a_, v);
    }
    static const std::map<std::string, int> functions{{"tau", 0},  {"tau_minus", 1}, {"syzygy", 2}, {"cosyzygy", 3},
                                                      {"rad", 4}, {"top", 5},       {"soc", 6}};
    const auto f = functions.find(name);
    if (f == functions.end()) {
      i_ = start;
      fail("unknown name '" + name + "'");
    }
    expect('(');
    const Module<S> arg = sum();
    expect(')');
    switch (f->second) {
      case 0: return tau(arg);
      case 1: return tau_minus(arg);
      case 2: return syzygy(arg);
      case 3: return cosyzygy(arg);
      case 4: return radical(arg).module;
      case 5: return top(arg).module;
      default: return socle(arg).module;
    }
  }

  const std::string& s_;
  typename BoundQuiverAlgebra<S>::Ptr a_;
  const std::string& file_;
  int line_;
  int column_;
  std::size_t i_ = 0;
};

}  // namespace

template <class S>
Module<S> evaluate_expression(const std::string& expr, const typename BoundQuiverAlgebra<S>::Ptr& a, const std::string& file, int line,
                              int column) {
  return ExprParser<S>(expr, a, file, line, column).parse();
}

template <class S>
std::vector<Module<S>> evaluate_modules(const ModuleFile& file, const typename BoundQuiverAlgebra<S>::Ptr& a) {
  const Quiver& q = a->quiver();
  std::vector<Module<S>> out;
  for (const auto& e : file.entries) {
    if (e.constructive) {
      out.push_back(evaluate_expression<S>(e.expression, a, file.path, e.line, e.expression_column));
      continue;
    }
    if (static_cast<int>(e.dims.size()) != q.num_vertices())
      throw SpecError(file.path, e.line, 1,
                      "dimension mismatch: " + std::to_string(e.dims.size()) + " entries for " + std::to_string(q.num_vertices()) + " vertices");
    std::vector<Matrix<S>> action;
    std::vector<bool> given(static_cast<std::size_t>(q.num_arrows()), false);
    for (const auto& arrow : q.arrows)
      action.push_back(zero_matrix<S>(e.dims[static_cast<std::size_t>(arrow.source)], e.dims[static_cast<std::size_t>(arrow.target)]));
    for (std::size_t k = 0; k < e.matrices.size(); ++k) {
      const auto& [id, rows] = e.matrices[k];
      const int line = e.matrix_lines[k];
      const int ai = q.arrow_index(id);
      if (ai < 0) throw SpecError(file.path, line, 1, "unknown arrow '" + id + "'");
      if (given[static_cast<std::size_t>(ai)]) throw SpecError(file.path, line, 1, "matrix for '" + id + "' given twice");
      given[static_cast<std::size_t>(ai)] = true;
      Matrix<S>& m = action[static_cast<std::size_t>(ai)];
      if (static_cast<Index>(rows.size()) != m.rows())
        throw SpecError(file.path, line, 1, "dimension mismatch: '" + id + "' needs " + std::to_string(m.rows()) + " rows");
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (static_cast<Index>(rows[r].size()) != m.cols())
          throw SpecError(file.path, line, 1, "dimension mismatch: row " + std::to_string(r + 1) + " of '" + id + "' needs " + std::to_string(m.cols()) + " entries");
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
          try {
            m(static_cast<Index>(r), static_cast<Index>(c)) = FieldTraits<S>::parse(rows[r][c]);
          } catch (const std::invalid_argument& err) {
            throw SpecError(file.path, line, 1, err.what());
          }
        }
      }
    }
    auto m = Module<S>::unchecked(a, e.dims, std::move(action));
    if (const auto bad = m.relation_violation()) throw SpecError(file.path, e.line, 1, "relation '" + *bad + "' does not vanish on the module");
    out.push_back(std::move(m));
  }
  return out;
}

#define TAUSLICE_INSTANTIATE_SPEC_IO(S)                                                                                          \
  template BoundQuiverAlgebra<S>::Ptr build_algebra<S>(const AlgebraSpec&, const std::string&);                                \
  template std::vector<Module<S>> evaluate_modules<S>(const ModuleFile&, const BoundQuiverAlgebra<S>::Ptr&);                   \
  template Module<S> evaluate_expression<S>(const std::string&, const BoundQuiverAlgebra<S>::Ptr&, const std::string&, int, int);

TAUSLICE_INSTANTIATE_SPEC_IO(Rational)
TAUSLICE_INSTANTIATE_SPEC_IO(ModInt)

}  // namespace tauslice::cli
