#include "commands.hpp"

#include "spec_io.hpp"
#include "tauslice/repdim.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>

namespace tauslice::cli {

using json = nlohmann::json;

namespace {

struct Options {
  std::string command;
  std::string algebra;
  std::string format = "json";
  std::string out;
  bool timings = false;

  std::string module;
  bool minus = false;
  std::string from, to;
  std::vector<std::string> seeds;
  int max_nodes = 64;
  int max_dim = 64;
  std::string dot;
  std::string slice;
  std::vector<std::string> t_slices, s_slices;
  std::string inventory;
  std::string route = "both";
  int resolution_cap = 8;
  bool override_determined = false;
};

struct Outcome {
  json result = json::object();
  std::string verdict;
  int exit = exit_true;
};

template <class S>
json module_json(const Module<S>& m) {
  json j;
  j["dims"] = m.dims();
  j["loewy"] = loewy_series(m);
  return j;
}

template <class S>
std::vector<std::string> summand_labels(const Module<S>& m) {
  std::vector<std::string> out;
  for (const auto& c : decompose_grouped(m))
    out.push_back(c.multiplicity == 1 ? loewy_series(c.module) : loewy_series(c.module) + "^" + std::to_string(c.multiplicity));
  return out;
}

// A module argument is a .mods file when such a file exists, a constructive expression otherwise.
template <class S>
std::vector<Module<S>> load_modules(const std::string& arg, const typename BoundQuiverAlgebra<S>::Ptr& a, json& inputs,
                                    const std::string& role) {
  json rec;
  std::vector<Module<S>> mods;
  if (std::filesystem::is_regular_file(arg)) {
    const std::string text = read_file(arg);
    rec["path"] = arg;
    rec["fnv1a"] = hex64(fnv1a(text));
    mods = evaluate_modules<S>(parse_module_text(text, arg), a);
    if (mods.empty()) throw SpecError(arg, 1, 1, "no modules in file");
  } else {
    rec["expr"] = arg;
    mods.push_back(evaluate_expression<S>(arg, a));
  }
  inputs[role].push_back(rec);
  return mods;
}

template <class S>
Module<S> load_module(const std::string& arg, const typename BoundQuiverAlgebra<S>::Ptr& a, json& inputs, const std::string& role) {
  const auto mods = load_modules<S>(arg, a, inputs, role);
  return mods.size() == 1 ? mods.front() : direct_sum(mods);
}

// Indecomposable summands of every listed module, one per isomorphism class.
template <class S>
SliceCandidate<S> load_candidate(const std::string& arg, const typename BoundQuiverAlgebra<S>::Ptr& a, json& inputs,
                                 const std::string& role) {
  std::vector<Module<S>> parts;
  for (const auto& m : load_modules<S>(arg, a, inputs, role)) {
    if (m.is_zero()) continue;
    if (is_indecomposable(m)) {
      parts.push_back(m);
    } else {
      for (const auto& x : decompose(m).summands) parts.push_back(x);
    }
  }
  SliceCandidate<S> c;
  for (const auto& x : parts) {
    if (c.find(x) >= 0) continue;
    c.summands.push_back(x);
    c.labels.push_back(loewy_series(x));
  }
  return c;
}

template <class S>
ARComponent<S> knit_from_projectives(const typename BoundQuiverAlgebra<S>::Ptr& a, const Options& o) {
  std::vector<Module<S>> seeds;
  for (int v = 0; v < a->num_vertices(); ++v) seeds.push_back(projective_module<S>(a, v));
  return knit_component(seeds, KnitOptions{o.max_nodes, o.max_dim});
}

template <class S>
Outcome cmd_build(const AlgebraSpec& spec, const typename BoundQuiverAlgebra<S>::Ptr& a) {
  Outcome o;
  json& r = o.result;
  const Quiver& q = a->quiver();
  r["name"] = spec.name;
  r["field"] = spec.field.to_string();
  r["vertices"] = q.vertices;
  r["arrows"] = json::array();
  for (const auto& ar : q.arrows)
    r["arrows"].push_back({{"id", ar.id}, {"alias", ar.alias}, {"source", q.vertices[static_cast<std::size_t>(ar.source)]},
                           {"target", q.vertices[static_cast<std::size_t>(ar.target)]}});
  r["relations"] = json::array();
  for (const auto& rel : a->relations()) r["relations"].push_back(rel.name);
  r["dim"] = a->dim();
  r["radical_degree"] = a->radical_degree();
  r["basis"] = json::array();
  for (const auto& p : a->basis()) r["basis"].push_back(path_to_string(q, p));
  o.verdict = "built";
  return o;
}

template <class S>
Outcome cmd_tau(const Options& opt, const typename BoundQuiverAlgebra<S>::Ptr& a, json& inputs) {
  Outcome o;
  const auto m = load_module<S>(opt.module, a, inputs, "module");
  const auto t = opt.minus ? tau_minus(m) : tau(m);
  o.result["module"] = module_json(m);
  o.result["translate"] = opt.minus ? "tau_minus" : "tau";
  o.result["result"] = module_json(t);
  o.result["result"]["summands"] = summand_labels(t);
  o.verdict = "computed";
  return o;
}

template <class S>
Outcome cmd_hom_ext(const Options& opt, const typename BoundQuiverAlgebra<S>::Ptr& a, json& inputs, bool ext) {
  Outcome o;
  const auto m = load_module<S>(opt.from, a, inputs, "from");
  const auto n = load_module<S>(opt.to, a, inputs, "to");
  o.result["from"] = module_json(m);
  o.result["to"] = module_json(n);
  if (ext) o.result["ext1_dim"] = ext1_dim(m, n);
  else o.result["hom_dim"] = hom_dim(m, n);
  o.verdict = "computed";
  return o;
}

template <class S>
Outcome cmd_ass(const Options& opt, const typename BoundQuiverAlgebra<S>::Ptr& a, json& inputs) {
  Outcome o;
  const auto x = load_module<S>(opt.module, a, inputs, "module");
  o.result["module"] = module_json(x);
  if (is_projective(x)) {
    o.result["reason"] = "projective modules end no almost-split sequence";
    o.verdict = "none";
    o.exit = exit_false;
    return o;
  }
  try {
    const auto seq = almost_split_sequence(x);
    o.result["left"] = module_json(seq.left);
    o.result["middle"] = module_json(seq.middle);
    o.result["middle"]["summands"] = json::array();
    for (const auto& c : seq.middle_summands)
      o.result["middle"]["summands"].push_back({{"loewy", loewy_series(c.module)}, {"dims", c.module.dims()}, {"multiplicity", c.multiplicity}});
    o.result["right"] = module_json(seq.right);
    o.result["exact_nonsplit"] = is_exact_nonsplit(seq);
    o.verdict = "almost-split";
  } catch (const AlmostSplitError& e) {
    o.result["reason"] = e.what();
    o.verdict = "inconclusive";
    o.exit = exit_inconclusive;
  }
  return o;
}

template <class S>
json component_json(const ARComponent<S>& c) {
  json j;
  j["nodes"] = json::array();
  for (std::size_t i = 0; i < c.nodes.size(); ++i)
    j["nodes"].push_back({{"id", "n" + std::to_string(i)},
                          {"loewy", c.nodes[i].label},
                          {"dims", c.nodes[i].module.dims()},
                          {"projective", c.nodes[i].projective},
                          {"injective", c.nodes[i].injective}});
  j["arrows"] = json::array();
  for (const auto& [e, mult] : c.arrows)
    j["arrows"].push_back({{"from", "n" + std::to_string(e.first)}, {"to", "n" + std::to_string(e.second)}, {"multiplicity", mult}});
  j["tau"] = json::array();
  for (const auto& [x, tx] : c.tau_links) j["tau"].push_back({{"from", "n" + std::to_string(x)}, {"to", "n" + std::to_string(tx)}});
  j["frontier"] = json::array();
  for (int f : c.frontier) j["frontier"].push_back("n" + std::to_string(f));
  j["complete"] = c.complete();
  j["cap_hit"] = c.cap_hit;
  j["diagnostics"] = c.diagnostics;
  return j;
}

template <class S>
Outcome cmd_knit(const Options& opt, const typename BoundQuiverAlgebra<S>::Ptr& a, json& inputs) {
  Outcome o;
  ARComponent<S> c;
  if (opt.seeds.empty()) {
    c = knit_from_projectives<S>(a, opt);
  } else {
    std::vector<Module<S>> seeds;
    for (const auto& s : opt.seeds)
      for (const auto& m : load_modules<S>(s, a, inputs, "seed")) {
        if (!is_indecomposable(m)) throw std::invalid_argument("seed " + loewy_series(m) + " is not indecomposable");
        seeds.push_back(m);
      }
    c = knit_component(seeds, KnitOptions{opt.max_nodes, opt.max_dim});
  }
  o.result = component_json(c);
  o.result["caps"] = {{"max_nodes", opt.max_nodes}, {"max_dim", opt.max_dim}};
  if (!opt.dot.empty()) {
    std::ofstream dot(opt.dot, std::ios::binary);
    if (!dot) throw std::runtime_error("cannot write " + opt.dot);
    dot << emit_dot(c);
    o.result["dot"] = opt.dot;
  }
  o.verdict = c.complete() ? "complete" : "partial";
  o.exit = c.complete() ? exit_true : exit_inconclusive;
  return o;
}

template <class S>
json certificate_json(const SliceCertificate<S>& cert) {
  json j;
  j["summands"] = cert.candidate.labels;
  j["tau_rigid"] = cert.tau_rigid;
  j["presection"] = cert.presection;
  j["connected"] = cert.connected;
  j["acyclic"] = cert.acyclic;
  j["sincere"] = cert.sincere;
  j["verdict"] = to_string(cert.verdict);
  j["evidence"] = json::array();
  for (const auto& e : cert.details.evidence)
    j["evidence"].push_back({{"rule", e.rule == ArrowEvidence::Rule::successor ? "successor" : "predecessor"},
                             {"from", e.from},
                             {"to", e.to},
                             {"multiplicity", e.multiplicity},
                             {"ok", e.ok},
                             {"clause", e.clause}});
  return j;
}

template <class S>
Outcome cmd_check_slice(const Options& opt, const typename BoundQuiverAlgebra<S>::Ptr& a, json& inputs) {
  Outcome o;
  const auto cert = is_tau_slice(load_candidate<S>(opt.slice, a, inputs, "slice"));
  o.result = certificate_json(cert);
  o.verdict = to_string(cert.verdict);
  o.exit = cert.verdict == SliceVerdict::not_slice ? exit_false : exit_true;
  return o;
}

template <class S>
struct FamilyInputs {
  SliceFamily<S> family;
  Inventory<S> inventory;
};

template <class S>
FamilyInputs<S> load_family(const Options& opt, const typename BoundQuiverAlgebra<S>::Ptr& a, json& inputs) {
  FamilyInputs<S> f;
  for (const auto& t : opt.t_slices) f.family.t_side.push_back(load_candidate<S>(t, a, inputs, "t_slices"));
  for (const auto& s : opt.s_slices) f.family.s_side.push_back(load_candidate<S>(s, a, inputs, "s_slices"));
  if (!opt.inventory.empty()) {
    std::vector<Module<S>> mods;
    for (const auto& m : load_modules<S>(opt.inventory, a, inputs, "inventory")) {
      if (is_indecomposable(m)) mods.push_back(m);
      else
        for (const auto& x : decompose(m).summands) mods.push_back(x);
    }
    f.inventory = make_inventory(mods, Provenance::user_supplied);
  } else {
    f.inventory = inventory_from_component(knit_from_projectives<S>(a, opt));
  }
  return f;
}

template <class S>
json factorization_json(const Inventory<S>& inv, const std::vector<std::pair<int, FactorizationResult>>& rs) {
  json arr = json::array();
  for (const auto& [i, r] : rs) {
    json k = json::array();
    for (int s : r.satisfying_k) k.push_back(s + 1);
    arr.push_back({{"module", loewy_series(inv.modules[static_cast<std::size_t>(i)])},
                   {"ok", r.ok},
                   {"chosen_k", r.chosen_k < 0 ? json(nullptr) : json(r.chosen_k + 1)},
                   {"satisfying_k", k},
                   {"permitted", r.permitted},
                   {"failing", r.failing}});
  }
  return arr;
}

template <class S>
json determined_json(const DeterminedReport<S>& r, const Inventory<S>& inv) {
  auto labels = [&](const std::vector<int>& idx) {
    std::vector<std::string> out;
    for (int i : idx) out.push_back(loewy_series(inv.modules[static_cast<std::size_t>(i)]));
    return out;
  };
  json j;
  j["t_slices"] = json::array();
  for (const auto& c : r.t_certificates) j["t_slices"].push_back({{"summands", c.candidate.labels}, {"verdict", to_string(c.verdict)}});
  j["s_slices"] = json::array();
  for (const auto& c : r.s_certificates) j["s_slices"].push_back({{"summands", c.candidate.labels}, {"verdict", to_string(c.verdict)}});
  j["slices_ok"] = r.slices_ok;
  json failing = json::array();
  for (const auto& [i, k] : r.cond1.failing) failing.push_back({{"t", i + 1}, {"s", k + 1}});
  j["cond1"] = {{"ok", r.cond1.ok}, {"failing", failing}};
  j["cond2"] = {{"equal", r.y.equal}, {"complement", labels(r.y.complement)}, {"perp", labels(r.y.perp)}, {"mismatches", labels(r.y.mismatches)}};
  j["cond3"] = {{"ok", r.cond3_ok}, {"modules", factorization_json(inv, r.cond3)}};
  j["cond3op"] = {{"ok", r.cond3op_ok}, {"modules", factorization_json(inv, r.cond3op)}};
  json violations = json::array();
  for (const auto& [m, n] : r.closure_violations)
    violations.push_back({{"from", loewy_series(inv.modules[static_cast<std::size_t>(m)])}, {"to", loewy_series(inv.modules[static_cast<std::size_t>(n)])}});
  j["closure"] = {{"ok", r.closure_ok}, {"violations", violations}};
  j["empty_family_convention"] = r.empty_family_convention;
  j["inventory"] = {{"size", inv.size()}, {"provenance", to_string(inv.provenance)}, {"modules", labels([&] {
                                                                                       std::vector<int> all(static_cast<std::size_t>(inv.size()));
                                                                                       for (int i = 0; i < inv.size(); ++i) all[static_cast<std::size_t>(i)] = i;
                                                                                       return all;
                                                                                     }())}};
  j["overall"] = r.overall;
  return j;
}

template <class S>
Outcome cmd_check_determined(const Options& opt, const typename BoundQuiverAlgebra<S>::Ptr& a, json& inputs) {
  Outcome o;
  const auto in = load_family<S>(opt, a, inputs);
  const auto r = check_determined(in.family, in.inventory);
  o.result = determined_json(r, in.inventory);
  o.result["scope"] = to_string(r.scope);
  if (!r.overall) {
    o.verdict = "not-determined";
    o.exit = exit_false;
  } else if (r.scope == Scope::exhaustive) {
    o.verdict = "determined";
  } else {
    o.verdict = "determined-on-inventory";
    o.exit = exit_inconclusive;
  }
  return o;
}

template <class S>
Outcome cmd_certify(const Options& opt, const typename BoundQuiverAlgebra<S>::Ptr& a, json& inputs) {
  Outcome o;
  const auto in = load_family<S>(opt, a, inputs);
  RepDimOptions ro;
  ro.route = opt.route == "endo" ? RepDimRoute::endo : opt.route == "approx" ? RepDimRoute::approximation : RepDimRoute::both;
  ro.resolution_cap = opt.resolution_cap;
  ro.override_determined = opt.override_determined;
  if (ro.resolution_cap < 4) throw std::invalid_argument("--resolution-cap must be at least 4");
  const auto det = check_determined(in.family, in.inventory);
  if (!det.overall && !opt.override_determined) {
    o.result["determined"] = determined_json(det, in.inventory);
    o.result["scope"] = to_string(det.scope);
    o.result["reason"] = "the family fails the determined check; pass --override to continue";
    o.verdict = "inconclusive";
    o.exit = exit_inconclusive;
    return o;
  }
  const auto c = certify_repdim3(in.family, in.inventory, a, ro);
  json& r = o.result;
  r["route"] = to_string(ro.route);
  r["determined"] = determined_json(c.determined, in.inventory);
  r["generator"] = json::array();
  for (int i = 0; i < c.generator.size(); ++i)
    r["generator"].push_back({{"loewy", c.generator.labels[static_cast<std::size_t>(i)]}, {"origins", c.generator.origins[static_cast<std::size_t>(i)]}});
  r["hypothesis"] = {{"cogen_in_left", c.hypothesis.cogen_in_left},
                     {"gen_in_right", c.hypothesis.gen_in_right},
                     {"holds", c.hypothesis.holds},
                     {"cogen_failures", c.hypothesis.cogen_failures},
                     {"gen_failures", c.hypothesis.gen_failures}};
  if (c.endo) {
    json simples = json::array();
    for (std::size_t v = 0; v < c.endo->per_simple.size(); ++v) {
      const auto& d = c.endo->per_simple[v];
      simples.push_back({{"summand", c.generator.labels[v]},
                         {"pd", d.value ? json(*d.value) : json(nullptr)},
                         {"periodic", d.periodic}});
    }
    r["endo"] = {{"bound", c.endo->bound},
                 {"cap", c.endo->cap},
                 {"verdict", to_string(c.endo->verdict)},
                 {"gldim", c.endo->gldim ? json(*c.endo->gldim) : json(nullptr)},
                 {"simples", simples}};
  }
  if (c.approximations_ok) {
    json arr = json::array();
    for (const auto& ac : c.approximations)
      arr.push_back({{"module", ac.label}, {"kernel", loewy_series(ac.kernel)}, {"surjective", ac.surjective}, {"kernel_in_add", ac.kernel_in_add}});
    r["approximations"] = {{"ok", *c.approximations_ok}, {"modules", arr}};
  }
  r["scope"] = to_string(c.scope);
  r["witness"] = c.witness;
  r["warnings"] = c.warnings;
  r["corollaries"] = {{"wrepdim_le_3", c.wrepdim_le_3}, {"findim_finite", c.findim_finite}};
  o.verdict = to_string(c.verdict);
  o.exit = c.verdict == RepDimVerdict::certified_le_3 ? exit_true : c.verdict == RepDimVerdict::refuted_at_witness ? exit_false : exit_inconclusive;
  return o;
}

void render_text(const json& j, std::ostream& out, int indent, const std::string& key) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string head = key.empty() ? pad : pad + key + ":";
  auto scalar = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  if (j.is_object()) {
    if (!key.empty()) out << head << "\n";
    for (const auto& [k, v] : j.items()) render_text(v, out, key.empty() ? indent : indent + 1, k);
  } else if (j.is_array() && std::all_of(j.begin(), j.end(), [](const json& v) { return v.is_primitive(); })) {
    out << head << " [";
    for (std::size_t i = 0; i < j.size(); ++i) out << (i ? ", " : "") << scalar(j[i]);
    out << "]\n";
  } else if (j.is_array()) {
    out << head << "\n";
    for (const auto& v : j) {
      out << pad << "  -\n";
      render_text(v, out, indent + 2, "");
    }
  } else {
    out << head << " " << scalar(j) << "\n";
  }
}

template <class S>
Outcome dispatch(const Options& opt, const AlgebraSpec& spec, json& inputs) {
  const auto a = build_algebra<S>(spec, opt.algebra);
  if (opt.command == "build") return cmd_build<S>(spec, a);
  if (opt.command == "tau") return cmd_tau<S>(opt, a, inputs);
  if (opt.command == "hom") return cmd_hom_ext<S>(opt, a, inputs, false);
  if (opt.command == "ext") return cmd_hom_ext<S>(opt, a, inputs, true);
  if (opt.command == "ass") return cmd_ass<S>(opt, a, inputs);
  if (opt.command == "knit") return cmd_knit<S>(opt, a, inputs);
  if (opt.command == "check-tau-slice") return cmd_check_slice<S>(opt, a, inputs);
  if (opt.command == "check-determined") return cmd_check_determined<S>(opt, a, inputs);
  return cmd_certify<S>(opt, a, inputs);
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("algebra", o.algebra, "algebra file (.alg)")->required()->check(CLI::ExistingFile);
  sub->add_option("--format", o.format, "report format")->check(CLI::IsMember({"json", "text"}));
  sub->add_option("--out", o.out, "write the report to this file");
  sub->add_flag("--timings", o.timings, "add wall-clock timings to the report");
}

void add_caps(CLI::App* sub, Options& o) {
  sub->add_option("--max-nodes", o.max_nodes, "knitting node cap")->check(CLI::PositiveNumber);
  sub->add_option("--max-dim", o.max_dim, "knitting total-dimension cap")->check(CLI::PositiveNumber);
}

void add_family(CLI::App* sub, Options& o) {
  sub->add_option("--t-slices", o.t_slices, "T-side slices (files or expressions)");
  sub->add_option("--s-slices", o.s_slices, "S-side slices (files or expressions)");
  sub->add_option("--inventory", o.inventory, "inventory of indecomposables; knitted from the projectives when absent");
  add_caps(sub, o);
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Tau-slices, AR theory and representation dimension certificates", "tauslice"};
  app.require_subcommand(1);
  auto* build = app.add_subcommand("build", "build the algebra and list its path basis");
  add_common(build, o);
  auto* tau_cmd = app.add_subcommand("tau", "AR translate of a module");
  add_common(tau_cmd, o);
  tau_cmd->add_option("--module", o.module, "module file or expression")->required();
  tau_cmd->add_flag("--minus", o.minus, "compute tau^- instead");
  for (const char* name : {"hom", "ext"}) {
    auto* sub = app.add_subcommand(name, std::string(name == std::string("hom") ? "dim Hom(from, to)" : "dim Ext^1(from, to)"));
    add_common(sub, o);
    sub->add_option("--from", o.from, "module file or expression")->required();
    sub->add_option("--to", o.to, "module file or expression")->required();
  }
  auto* ass = app.add_subcommand("ass", "almost-split sequence ending at a module");
  add_common(ass, o);
  ass->add_option("--module", o.module, "module file or expression")->required();
  auto* knit = app.add_subcommand("knit", "knit an AR component");
  add_common(knit, o);
  knit->add_option("--seed", o.seeds, "seed modules; all projectives when absent");
  add_caps(knit, o);
  knit->add_option("--dot", o.dot, "write a Graphviz file");
  auto* slice = app.add_subcommand("check-tau-slice", "certify a tau-slice");
  add_common(slice, o);
  slice->add_option("--slice", o.slice, "module file or expression")->required();
  auto* det = app.add_subcommand("check-determined", "check that slice families determine the algebra");
  add_common(det, o);
  add_family(det, o);
  auto* cert = app.add_subcommand("certify-repdim3", "certify rep.dim <= 3");
  add_common(cert, o);
  add_family(cert, o);
  cert->add_option("--route", o.route, "certificate route")->check(CLI::IsMember({"endo", "approx", "both"}));
  cert->add_option("--resolution-cap", o.resolution_cap, "projective resolution cap");
  cert->add_flag("--override", o.override_determined, "continue when the determined check fails");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_input_error;
  }
  o.command = app.get_subcommands().front()->get_name();

  const auto start = std::chrono::steady_clock::now();
  json report;
  report["schema"] = kReportSchema;
  report["command"] = o.command;
  report["rng_seed"] = kRecordedSeed;
  json inputs;
  Outcome outcome;
  try {
    const std::string text = read_file(o.algebra);
    inputs["algebra"] = {{"path", o.algebra}, {"fnv1a", hex64(fnv1a(text))}};
    const AlgebraSpec spec = parse_algebra_text(text, o.algebra);
    if (spec.field.kind == FieldKind::rationals) {
      outcome = dispatch<Rational>(o, spec, inputs);
    } else {
      ModulusScope scope(spec.field.characteristic);
      outcome = dispatch<ModInt>(o, spec, inputs);
    }
  } catch (const SpecError& e) {
    err << "input error: " << e.what() << "\n";
    return exit_input_error;
  } catch (const AlmostSplitError& e) {
    err << "inconclusive: " << e.what() << "\n";
    return exit_inconclusive;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << "\n";
    return exit_input_error;
  } catch (const std::runtime_error& e) {
    err << "input error: " << e.what() << "\n";
    return exit_input_error;
  }
  report["inputs"] = inputs;
  report["result"] = outcome.result;
  report["verdict"] = outcome.verdict;
  report["exit_code"] = outcome.exit;
  if (o.timings)
    report["timings"] = {{"total_ms", std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count()}};

  std::ostringstream text;
  if (o.format == "json") text << report.dump(2) << "\n";
  else render_text(report, text, 0, "");
  if (o.out.empty()) {
    out << text.str();
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) {
      err << "input error: cannot write " << o.out << "\n";
      return exit_input_error;
    }
    f << text.str();
  }
  return outcome.exit;
}

}  // namespace tauslice::cli
