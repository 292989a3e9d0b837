#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sdim/harness.hpp"

namespace sdim::cli {

enum class InputKind { Poset, Blowup, Fields, Zn, Local, Vspace };

/// Raw input flags, shared by every subcommand.
struct InputArgs {
  std::string poset_file;
  std::string blowup;
  std::size_t boolean_n = 0;
  std::string fields;
  std::uint64_t zn = 0;
  std::string local;
  std::string vspace;
};

/// A resolved input: a lattice (possibly a known blow-up) or an adapter graph.
struct Input {
  InputKind kind = InputKind::Poset;
  std::string description;
  std::optional<FinitePoset> poset;
  std::optional<BlowupLattice> blowup;
  SimpleGraph graph{{}};
  std::optional<SimpleGraph> predicted;      // adapter inputs
  std::optional<SimpleGraph> predicted_view;  // adapter graph in predicted labels
  std::optional<BlowupSpec> predicted_spec;
  std::optional<long long> formula;
  std::string formula_note;

  bool is_lattice() const { return poset.has_value(); }
};

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

inline std::uint64_t parse_uint(const std::string& s, const std::string& what) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw Error(ErrorCode::ParseError, what + ": expected a positive integer, got \"" + s + "\"");
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, what + ": integer out of range");
  }
}

inline std::vector<std::uint64_t> parse_fields(const std::string& s) {
  std::vector<std::uint64_t> out;
  for (const auto& part : split(s, ',')) out.push_back(parse_uint(part, "--fields"));
  return out;
}

inline LocalProductSpec parse_local(const std::string& s) {
  LocalProductSpec spec;
  for (const auto& part : split(s, ',')) {
    auto pe = split(part, '^');
    if (pe.size() > 2) throw Error(ErrorCode::ParseError, "--local: bad factor \"" + part + "\"");
    const auto p = parse_uint(pe[0], "--local");
    const auto e = pe.size() == 2 ? parse_uint(pe[1], "--local") : 1;
    spec.prime_powers.emplace_back(p, static_cast<unsigned>(e));
  }
  return spec;
}

inline std::pair<std::size_t, std::uint64_t> parse_vspace(const std::string& s) {
  std::optional<std::uint64_t> n, q;
  for (const auto& part : split(s, ',')) {
    auto kv = split(part, '=');
    if (kv.size() != 2) throw Error(ErrorCode::ParseError, "--vspace: expected n=<dim>,q=<order>");
    if (kv[0] == "n") n = parse_uint(kv[1], "--vspace n");
    else if (kv[0] == "q") q = parse_uint(kv[1], "--vspace q");
    else throw Error(ErrorCode::ParseError, "--vspace: unknown key \"" + kv[0] + "\"");
  }
  if (!n || !q) throw Error(ErrorCode::ParseError, "--vspace: both n and q are required");
  return {static_cast<std::size_t>(*n), *q};
}

inline std::optional<long long> formula_or_note(std::string& note, const std::function<long long()>& f) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::HypothesisUnmet && e.code() != ErrorCode::NotApplicable &&
        e.code() != ErrorCode::NotZeroDistributive && e.code() != ErrorCode::NotBounded)
      throw;
    note = e.what();
    const auto colon = note.find(": ");
    if (colon != std::string::npos) note = note.substr(colon + 2);
    return std::nullopt;
  }
}

inline void set_adapter(Input& in, const AdapterGraph& a, SimpleGraph predicted) {
  in.graph = a.graph;
  in.predicted_view = in_predicted_labels(a);
  in.predicted = std::move(predicted);
  in.predicted_spec = a.predicted.spec;
}

}  // namespace detail

inline void add_input_options(CLI::App& sub, InputArgs& a) {
  sub.add_option("--poset", a.poset_file, "Poset JSON file: {labels, covers, bottom, top}");
  sub.add_option("--blowup", a.blowup, "Blow-up spec JSON, or @file");
  sub.add_option("--boolean", a.boolean_n, "Boolean lattice 2^N");
  sub.add_option("--fields", a.fields, "Product of fields, e.g. 3,3,3");
  sub.add_option("--zn", a.zn, "Comaximal ideal graph of Z_N");
  sub.add_option("--local", a.local, "Product of Z_{p^e}, e.g. 2^2,3,5");
  sub.add_option("--vspace", a.vspace, "Vector space GF(q)^n, e.g. n=3,q=3");
}

inline Input resolve_input(const InputArgs& a) {
  const int given = !a.poset_file.empty() + !a.blowup.empty() + (a.boolean_n != 0) + !a.fields.empty() + (a.zn != 0) +
                    !a.local.empty() + !a.vspace.empty();
  if (given != 1)
    throw Error(ErrorCode::ParseError,
                "exactly one of --poset, --blowup, --boolean, --fields, --zn, --local, --vspace is required");
  Input in;
  auto set_blowup = [&](const BlowupSpec& spec, std::string description) {
    in.kind = InputKind::Blowup;
    in.description = std::move(description);
    in.blowup = build_blowup(spec);
    in.poset = in.blowup->poset;
    in.graph = zero_divisor_graph(*in.poset);
    in.formula = detail::formula_or_note(in.formula_note, [&] { return sdim_formula(spec); });
  };

  if (!a.poset_file.empty()) {
    in.kind = InputKind::Poset;
    in.description = a.poset_file;
    in.poset = io::poset_from_json(io::parse_json(io::read_file(a.poset_file), a.poset_file));
    in.graph = zero_divisor_graph(*in.poset);
    in.formula = detail::formula_or_note(in.formula_note, [&] {
      require_lattice(*in.poset);
      return sdim_formula(canonical_blowup_of(*in.poset).spec);
    });
  } else if (!a.blowup.empty()) {
    const bool from_file = a.blowup.front() == '@';
    const std::string source = from_file ? a.blowup.substr(1) : "--blowup";
    const std::string text = from_file ? io::read_file(source) : a.blowup;
    set_blowup(io::spec_from_json(io::parse_json(text, source)), "blow-up");
  } else if (a.boolean_n != 0) {
    if (a.boolean_n > kMaxBlowupAtoms) throw Error(ErrorCode::TooLarge, "--boolean above " + std::to_string(kMaxBlowupAtoms));
    set_blowup({a.boolean_n, {}}, "2^" + std::to_string(a.boolean_n));
  } else if (!a.fields.empty()) {
    in.kind = InputKind::Fields;
    const ReducedRingSpec spec{detail::parse_fields(a.fields)};
    in.description = "fields " + a.fields;
    in.graph = reduced_ring_zdg(spec);
    in.predicted = reduced_ring_predicted_graph(spec);
    in.predicted_view = in.graph;
    in.formula = detail::formula_or_note(in.formula_note, [&] { return reduced_ring_sdim_formula(spec); });
  } else if (a.zn != 0) {
    in.kind = InputKind::Zn;
    in.description = "CG(Z_" + std::to_string(a.zn) + ")";
    const AdapterGraph g = comaximal_ideal_graph_zn(a.zn);
    detail::set_adapter(in, g, predicted_blowup_graph(g.predicted.spec));
    in.formula = detail::formula_or_note(in.formula_note, [&] { return comaximal_ideal_sdim_formula(a.zn); });
  } else if (!a.local.empty()) {
    in.kind = InputKind::Local;
    in.description = "comaximal graph of " + a.local;
    const AdapterGraph g = comaximal_gamma2prime(detail::parse_local(a.local));
    detail::set_adapter(in, g, predicted_blowup_graph(g.predicted.spec));
    in.formula = detail::formula_or_note(in.formula_note, [&] { return sdim_formula(g.predicted.spec); });
  } else {
    in.kind = InputKind::Vspace;
    const auto [n, q] = detail::parse_vspace(a.vspace);
    in.description = "UG(GF(" + std::to_string(q) + ")^" + std::to_string(n) + ")";
    const AdapterGraph g = component_union_graph(n, q);
    detail::set_adapter(in, g, predicted_component_union_graph(n, q, g.predicted.spec));
    in.formula = detail::formula_or_note(in.formula_note, [&] { return component_union_sdim_formula(n, q); });
  }
  return in;
}

inline std::size_t brute_cap_from_env() {
  const char* env = std::getenv("SDIM_BRUTE_CAP");
  if (!env || !*env) return kDefaultBruteCap;
  const auto cap = detail::parse_uint(env, "SDIM_BRUTE_CAP");
  if (cap > kMaxBruteCap) throw Error(ErrorCode::TooLarge, "SDIM_BRUTE_CAP above " + std::to_string(kMaxBruteCap));
  return static_cast<std::size_t>(cap);
}

namespace detail {

inline bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

/// Writes a graph to `path` (.dot or .json), or DOT to stdout for "-".
inline void emit_graph(const SimpleGraph& g, const std::string& path, const std::string& name, std::ostream& out) {
  if (path.empty()) return;
  if (path == "-") {
    write_dot(out, g, name);
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error(ErrorCode::ParseError, "cannot write " + path);
  if (ends_with(path, ".json")) f << io::graph_to_json(g).dump(2) << '\n';
  else if (ends_with(path, ".dot")) write_dot(f, g, name);
  else throw Error(ErrorCode::ParseError, "--out must end in .dot or .json");
}

inline std::string graph_summary(const SimpleGraph& g) {
  std::string s = std::to_string(g.size()) + " vertices, " + std::to_string(g.edge_count()) + " edges";
  if (g.size() > 0 && is_connected(g)) s += ", diameter " + std::to_string(diameter(g));
  else if (g.size() > 0) s += ", disconnected";
  return s;
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

/// Class sizes of the proper nonzero annihilator classes, by ascending mask.
inline std::optional<std::vector<std::size_t>> class_sizes(const FinitePoset& p) {
  if (!p.is_lattice() || !is_zero_distributive(p)) return std::nullopt;
  const ClassPartition q = quotient_classes(p);
  if (!q.boolean_image || q.atom_count == 0) return std::nullopt;
  std::vector<std::pair<Mask, std::size_t>> by_mask;
  const Mask full = full_mask(q.atom_count);
  for (std::size_t c = 0; c < q.size(); ++c) {
    const Mask m = (*q.boolean_image)[c];
    if (m != 0 && m != full) by_mask.emplace_back(m, q.classes[c].size());
  }
  std::sort(by_mask.begin(), by_mask.end());
  std::vector<std::size_t> out;
  for (auto [m, s] : by_mask) out.push_back(s);
  return out;
}

inline std::string join_sizes(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

inline std::string join_labels(const std::vector<std::string>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
  return s + "}";
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Commands. Each returns the process exit code: 0 success, 1 a failed check
// or suite, 2 an input or usage error.

inline int cmd_build(const Input& in, const std::string& out_path, std::ostream& out) {
  if (in.is_lattice()) {
    const FinitePoset& p = *in.poset;
    out << p.size() << " elements, " << atoms(p).count() << " atoms\n";
    const std::size_t zstar = nonzero_zero_divisors(p).count();
    if (auto sizes = detail::class_sizes(p)) out << "|Z*|=" << zstar << ", classes sizes " << detail::join_sizes(*sizes) << '\n';
    else out << "|Z*|=" << zstar << ", not a 0-distributive lattice\n";
    if (!out_path.empty()) {
      if (detail::ends_with(out_path, ".json")) {
        std::ofstream f(out_path);
        if (!f) throw Error(ErrorCode::ParseError, "cannot write " + out_path);
        f << io::poset_to_json(p).dump(2) << '\n';
      } else {
        detail::emit_graph(in.graph, out_path, "G", out);
      }
    }
    return 0;
  }
  out << in.description << ": " << detail::graph_summary(in.graph) << '\n';
  if (in.predicted_spec) out << "predicted blow-up " << io::spec_to_json(*in.predicted_spec).dump() << '\n';
  out << "matches predicted graph: " << detail::yes_no(labeled_equal(*in.predicted_view, *in.predicted)) << '\n';
  detail::emit_graph(in.graph, out_path, "G", out);
  return 0;
}

inline int cmd_zdg(const Input& in, const std::string& out_path, std::ostream& out) {
  out << "G: " << detail::graph_summary(in.graph) << '\n';
  detail::emit_graph(in.graph, out_path, "G", out);
  return 0;
}

inline int cmd_gsr(const Input& in, const std::string& out_path, std::ostream& out) {
  const DistanceMatrix d = all_pairs_distances(in.graph);
  const SimpleGraph gsr = strong_resolving_graph(in.graph, d);
  out << "boundary: " << boundary(in.graph, d).count() << " vertices\n";
  out << "G_SR: " << gsr.size() << " vertices, " << gsr.edge_count() << " edges\n";
  detail::emit_graph(gsr, out_path, "G_SR", out);
  return 0;
}

inline int cmd_gstarstar(const Input& in, const std::string& out_path, std::ostream& out) {
  if (!in.is_lattice()) throw Error(ErrorCode::NotApplicable, "gstarstar needs a lattice input");
  const auto dec = decompose_gstar_star(*in.poset);
  out << "G**: " << dec.graph.size() << " vertices, " << dec.graph.edge_count() << " edges\n";
  out << "H: " << dec.rest.count() << " vertices, connected " << detail::yes_no(dec.rest_connected) << '\n';
  std::vector<std::size_t> sizes;
  for (const auto& c : dec.atom_cliques) sizes.push_back(c.count());
  out << "atom cliques: " << detail::join_sizes(sizes) << ", components "
      << detail::yes_no(dec.atom_classes_are_clique_components) << '\n';
  out << "G* = G_SR: " << detail::yes_no(labeled_equal(gstar(*in.poset), strong_resolving_graph(in.graph))) << '\n';
  detail::emit_graph(dec.graph, out_path, "Gss", out);
  return 0;
}

struct SdimArgs {
  std::string method = "all";
  bool check = false;
  bool json = false;
  bool witness = false;
};

inline int cmd_sdim(const Input& in, const SdimArgs& args, std::size_t brute_cap, std::ostream& out, std::ostream& err) {
  const bool want_formula = args.method == "formula" || args.method == "all";
  const bool want_gsr = args.method == "gsr" || args.method == "all";
  const bool want_brute = args.method == "brute" || args.method == "all";

  SdimReport r = graph_report(in.graph, in.formula, in.formula_note, {brute_cap, want_brute});
  if (in.blowup) {
    r.n = in.blowup->spec.n;
    r.m = in.blowup->spec.singleton_atom_count();
  }
  if (!want_formula) r.formula_value.reset();
  const bool consistent = r.consistent();
  if (args.json) {
    io::json j = io::report_to_json(r);
    j["method"] = args.method;
    j["input"] = in.description;
    out << j.dump(2) << '\n';
  } else {
    std::vector<std::array<std::string, 3>> rows;
    if (want_formula)
      rows.push_back(r.formula_value ? std::array<std::string, 3>{"formula", std::to_string(*r.formula_value), "-"}
                                     : std::array<std::string, 3>{"formula", in.formula_note, "-"});
    if (want_gsr) rows.push_back({"gsr", std::to_string(r.gsr_value), std::to_string(r.vertex_cover.size())});
    if (want_brute)
      rows.push_back(r.bruteforce_value
                         ? std::array<std::string, 3>{"brute", std::to_string(*r.bruteforce_value),
                                                      std::to_string(r.strong_resolving_set->size())}
                         : std::array<std::string, 3>{"brute", "skipped: " + r.bruteforce_note, "-"});
    std::size_t w0 = 6, w1 = 5;
    for (const auto& row : rows) {
      w0 = std::max(w0, row[0].size());
      w1 = std::max(w1, row[1].size());
    }
    out << std::left << std::setw(static_cast<int>(w0)) << "method" << " | " << std::setw(static_cast<int>(w1)) << "value"
        << " | witness size\n";
    for (const auto& row : rows)
      out << std::left << std::setw(static_cast<int>(w0)) << row[0] << " | " << std::setw(static_cast<int>(w1)) << row[1]
          << " | " << row[2] << '\n';
    out << std::right;
    if (args.witness) {
      if (want_gsr) out << "gsr witness: " << detail::join_labels(r.vertex_cover) << '\n';
      if (want_brute && r.strong_resolving_set) out << "brute witness: " << detail::join_labels(*r.strong_resolving_set) << '\n';
    }
  }
  if (!consistent) {
    err << "methods disagree\n";
    if (args.check) return 1;
  }
  return 0;
}

struct VerifyArgs {
  std::string suite;
  std::uint64_t seed = 1;
  std::size_t count = 50;
  bool timing = false;
  bool json = false;
};

inline int cmd_verify(const VerifyArgs& args, std::size_t brute_cap, std::ostream& out) {
  std::vector<std::string> names;
  if (args.suite == "all") names = harness::suite_names();
  else names.push_back(args.suite);
  bool all_passed = true;
  io::json report = io::json::array();
  for (const auto& name : names) {
    const auto r = harness::run_suite(name, {args.seed, args.count, brute_cap});
    all_passed = all_passed && r.passed();
    if (args.json) {
      io::json failures = io::json::array();
      for (const auto& f : r.failures)
        failures.push_back({{"case", f.case_id}, {"input", f.input}, {"expected", f.expected}, {"got", f.got}});
      io::json j{{"suite", r.suite}, {"cases", r.cases}, {"passed", r.passed()}, {"failures", failures}};
      if (args.timing) j["wall_ms"] = r.wall_ms;
      report.push_back(j);
      continue;
    }
    out << (r.passed() ? "PASS " : "FAIL ") << r.suite << ": " << r.cases << " cases, " << r.failures.size()
        << " failures";
    if (args.timing) out << " (" << std::fixed << std::setprecision(1) << r.wall_ms << " ms)";
    out << '\n';
    for (const auto& f : r.failures)
      out << "  " << f.case_id << "  input " << f.input << "  expected " << f.expected << "  got " << f.got << '\n';
  }
  if (args.json) out << report.dump(2) << '\n';
  return all_passed ? 0 : 1;
}

inline int cmd_adapter(const Input& in, const SdimArgs& sdim_args, std::size_t brute_cap, std::ostream& out,
                       std::ostream& err) {
  if (in.is_lattice()) throw Error(ErrorCode::NotApplicable, "adapter needs --fields, --zn, --local or --vspace");
  out << in.description << ": " << detail::graph_summary(in.graph) << '\n';
  if (in.predicted_spec) out << "predicted blow-up " << io::spec_to_json(*in.predicted_spec).dump() << '\n';
  const bool match = labeled_equal(*in.predicted_view, *in.predicted);
  out << "matches predicted graph: " << detail::yes_no(match) << '\n';
  const int code = cmd_sdim(in, sdim_args, brute_cap, out, err);
  if (!match && sdim_args.check) return 1;
  return code;
}

/// Entry point. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Strong metric dimension of zero-divisor graphs of blown-up Boolean lattices", "sdim"};
  app.require_subcommand(1);

  InputArgs input;
  std::string out_path;
  SdimArgs sdim_args;
  VerifyArgs verify_args;

  auto with_input = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_input_options(*sub, input);
    sub->add_option("--out", out_path, "Write to a .dot or .json file, or - for DOT on stdout");
    return sub;
  };
  CLI::App* build = with_input("build", "Construct the input and summarize it");
  CLI::App* zdg = with_input("zdg", "Zero-divisor graph");
  CLI::App* gsr = with_input("gsr", "Strong resolving graph");
  CLI::App* gss = with_input("gstarstar", "Class-based auxiliary graph G** and its decomposition");
  CLI::App* sdim = with_input("sdim", "Strong metric dimension by formula, G_SR and brute force");
  CLI::App* adapter = with_input("adapter", "Ring or vector-space graph against its predicted blow-up");
  for (CLI::App* sub : {sdim, adapter}) {
    sub->add_option("--method", sdim_args.method, "formula, gsr, brute or all")
        ->check(CLI::IsMember({"formula", "gsr", "brute", "all"}));
    sub->add_flag("--check", sdim_args.check, "Exit 1 when methods disagree");
    sub->add_flag("--json", sdim_args.json, "Machine-readable output");
    sub->add_flag("--witness", sdim_args.witness, "Print witness sets");
  }
  CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", verify_args.suite, "Suite name, or all")->required();
  verify->add_option("--seed", verify_args.seed, "Corpus seed");
  verify->add_option("--count", verify_args.count, "Corpus size");
  verify->add_flag("--timing", verify_args.timing, "Report wall time");
  verify->add_flag("--json", verify_args.json, "Machine-readable output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    const std::size_t cap = brute_cap_from_env();
    if (verify->parsed()) return cmd_verify(verify_args, cap, out);
    const Input in = resolve_input(input);
    if (build->parsed()) return cmd_build(in, out_path, out);
    if (zdg->parsed()) return cmd_zdg(in, out_path, out);
    if (gsr->parsed()) return cmd_gsr(in, out_path, out);
    if (gss->parsed()) return cmd_gstarstar(in, out_path, out);
    if (sdim->parsed()) return cmd_sdim(in, sdim_args, cap, out, err);
    if (adapter->parsed()) return cmd_adapter(in, sdim_args, cap, out, err);
  } catch (const Error& e) {
    err << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace sdim::cli
