#pragma once

#include <array>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "families.hpp"
#include "graded_root.hpp"
#include "graph.hpp"
#include "graph_io.hpp"
#include "hf.hpp"
#include "intersection_form.hpp"
#include "tau.hpp"
#include "validation.hpp"

namespace plumbhf {

inline constexpr const char* kSchema = "plumb-hf/1";
inline constexpr std::size_t kTextElisionThreshold = 10000;

enum class Command { tau, hf, root, validate, brieskorn, mazur, rank_check };
enum class OutputFormat { text, json, dot };

inline const char* to_string(Command c) {
  switch (c) {
    case Command::tau: return "tau";
    case Command::hf: return "hf";
    case Command::root: return "root";
    case Command::validate: return "validate";
    case Command::brieskorn: return "brieskorn";
    case Command::mazur: return "mazur";
    default: return "rank-check";
  }
}

struct RunConfig {
  Command command = Command::validate;
  std::optional<std::string> input_text;             // graph document, text or JSON
  std::optional<int> mazur_n;                        // mazur command / inline input
  std::optional<std::array<i64, 3>> brieskorn_pqr;   // brieskorn command / inline input
  bool seifert_only = false;                         // brieskorn --seifert
  GradingMode grading = GradingMode::absolute_d0;
  i64 user_d = 0;
  OutputFormat format = OutputFormat::text;
  i64 step_budget = 10000000;
  std::optional<i64> v0_id;                          // original vertex id
  bool run_ar = false;                               // validate --ar
  std::optional<i64> expected_lambda;                // hf --expect-lambda
};

struct RunResult {
  int exit_code = 0;
  std::string document;
};

// The cross-validation grid: every Casson-Harer parameter set exercised by
// rank-check and the test suite. Family1 tau rows with s != 1 are known to
// disagree with the graph pipeline — the closed form's first ceiling term
// (p-s)/2p matches the true Seifert invariant p' = (p-1)/2 only at s = 1 —
// so those entries are compared but reported, not asserted. Ranks are
// asserted for every entry.
struct CHGridEntry {
  CassonHarerFamily fam;
  bool tau_asserted;
};

inline std::vector<CHGridEntry> casson_harer_grid() {
  std::vector<CHGridEntry> grid;
  for (i64 p : {3, 5, 7})
    for (i64 s : {1, 2})
      for (CHSign sign : {CHSign::plus, CHSign::minus}) {
        if (p == 3 && s == 1 && sign == CHSign::minus) continue;  // degenerate triple (1,2,3)
        grid.push_back({CassonHarerFamily(CHFamily::family1, p, s, sign), s == 1});
      }
  for (auto [p, s] : {std::pair<i64, i64>{2, 3}, {2, 5}, {4, 1}, {4, 3}})
    grid.push_back({CassonHarerFamily(CHFamily::family2, p, s), true});
  return grid;
}

namespace detail {

inline std::string fmt_seq(const std::vector<i64>& v) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ", ";
    out << v[i];
  }
  out << ']';
  return out.str();
}

inline nlohmann::ordered_json json_doc(Command c) {
  nlohmann::ordered_json doc;
  doc["schema"] = kSchema;
  doc["command"] = to_string(c);
  return doc;
}

inline nlohmann::ordered_json graph_summary_json(const PlumbingGraph& g) {
  return {{"vertices", g.size()}, {"edges", static_cast<i64>(g.edges().size())}};
}

inline nlohmann::ordered_json validation_json(const PlumbingGraph& g, const ValidationReport& rep) {
  nlohmann::ordered_json v;
  v["is_tree"] = rep.is_tree;
  v["is_negative_definite"] = rep.is_negative_definite;
  v["determinant"] = rep.determinant;
  v["is_integral_homology_sphere"] = rep.is_integral_homology_sphere;
  if (rep.distinguished_vertex)
    v["distinguished_vertex"] = g.original_id(*rep.distinguished_vertex);
  else
    v["distinguished_vertex"] = nullptr;
  v["ar_advisory"] = to_string(rep.ar_advisory);
  return v;
}

inline nlohmann::ordered_json hf_json(const HFModule& m) {
  nlohmann::ordered_json h;
  h["tower_bottom"] = m.tower_bottom;
  h["summands"] = nlohmann::ordered_json::array();
  for (const Summand& s : m.summands)
    h["summands"].push_back({{"rank", s.rank}, {"deg", s.bottom_degree}});
  h["grading_mode"] = to_string(m.mode);
  return h;
}

inline std::string hf_text(const HFModule& m) {
  std::ostringstream out;
  out << "T+(" << m.tower_bottom << ")";
  for (std::size_t i = 0; i < m.summands.size();) {
    std::size_t j = i;
    while (j < m.summands.size() && m.summands[j] == m.summands[i]) ++j;
    out << " + Z^" << m.summands[i].rank << "(" << m.summands[i].bottom_degree << ")";
    if (j - i > 1) out << " x" << (j - i);
    i = j;
  }
  return out.str();
}

inline std::string tau_text_line(const char* name, const std::vector<i64>& seq) {
  std::ostringstream out;
  out << name << " (" << seq.size() << " entries)";
  if (seq.size() > kTextElisionThreshold)
    out << ": elided; use --format json for the full sequence";
  else
    out << ": " << fmt_seq(seq);
  out << '\n';
  return out.str();
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace detail

inline PlumbingGraph resolve_graph(const RunConfig& cfg) {
  if (cfg.mazur_n) return mazur_graph(*cfg.mazur_n);
  if (cfg.brieskorn_pqr) {
    const auto& t = *cfg.brieskorn_pqr;
    return brieskorn_graph(BrieskornTriple(t[0], t[1], t[2]));
  }
  if (cfg.input_text) return parse_graph(*cfg.input_text);
  throw InputError("no input graph: supply a file, or mazur/brieskorn parameters");
}

// Failed engine preconditions by name, empty when the graph is ready.
inline std::vector<std::string> engine_diagnostics(const PlumbingGraph& g,
                                                   const ValidationReport& rep,
                                                   const RunConfig& cfg) {
  std::vector<std::string> bad;
  if (!rep.is_tree) bad.push_back("graph is not a tree (connected and acyclic)");
  if (!rep.is_negative_definite) bad.push_back("intersection form is not negative definite");
  if (!rep.is_integral_homology_sphere)
    bad.push_back("not an integral homology sphere: |determinant| = " +
                  std::to_string(rep.determinant < 0 ? -rep.determinant : rep.determinant));
  if (cfg.v0_id) {
    if (g.index_of_id(*cfg.v0_id) < 0)
      bad.push_back("--v0 " + std::to_string(*cfg.v0_id) + " is not a vertex id of the input");
  } else if (!rep.distinguished_vertex) {
    bad.push_back("no distinguished vertex (no unique v with |m(v)| < degree(v)); use --v0");
  }
  return bad;
}

namespace detail {

inline EngineOptions engine_options(const PlumbingGraph& g, const RunConfig& cfg) {
  EngineOptions opt;
  opt.step_budget = cfg.step_budget;
  if (cfg.v0_id) opt.v0 = g.index_of_id(*cfg.v0_id);
  return opt;
}

// Shared front half of tau/root/hf: validate, gate, compute.
struct PipelineRun {
  PlumbingGraph graph;
  ValidationReport report;
  TauFunction tau;
};

inline PipelineRun run_pipeline(const RunConfig& cfg) {
  PipelineRun run{resolve_graph(cfg), {}, {}};
  run.report = validate(run.graph, cfg.run_ar);
  auto bad = engine_diagnostics(run.graph, run.report, cfg);
  if (!bad.empty()) {
    std::string msg = bad.front();
    for (std::size_t i = 1; i < bad.size(); ++i) msg += "; " + bad[i];
    throw InputError(msg);
  }
  run.tau = compute_tau(run.graph, engine_options(run.graph, cfg));
  return run;
}

inline RunResult doc_result(const RunConfig& cfg, const nlohmann::ordered_json& json_form,
                            const std::string& text_form) {
  if (cfg.format == OutputFormat::json) return {0, json_form.dump(2) + "\n"};
  return {0, text_form};
}

inline RunResult run_validate(const RunConfig& cfg) {
  PlumbingGraph g = resolve_graph(cfg);
  ValidationReport rep = validate(g, cfg.run_ar);
  auto bad = engine_diagnostics(g, rep, cfg);
  int exit_code = bad.empty() ? 0 : 1;

  nlohmann::ordered_json doc = json_doc(cfg.command);
  doc["graph_summary"] = graph_summary_json(g);
  doc["validation"] = validation_json(g, rep);
  doc["diagnostics"] = bad;
  doc["engine_ready"] = bad.empty();

  std::ostringstream text;
  text << "vertices: " << g.size() << "\n"
       << "edges: " << g.edges().size() << "\n"
       << "is_tree: " << (rep.is_tree ? "yes" : "no") << "\n"
       << "negative_definite: " << (rep.is_negative_definite ? "yes" : "no") << "\n"
       << "determinant: " << rep.determinant << "\n"
       << "integral_homology_sphere: " << (rep.is_integral_homology_sphere ? "yes" : "no") << "\n";
  if (rep.distinguished_vertex)
    text << "distinguished_vertex: " << g.original_id(*rep.distinguished_vertex) << "\n";
  else
    text << "distinguished_vertex: none\n";
  text << "ar_advisory: " << to_string(rep.ar_advisory) << "\n";
  for (const auto& b : bad) text << "diagnostic: " << b << "\n";

  RunResult res = doc_result(cfg, doc, text.str());
  res.exit_code = exit_code;
  return res;
}

inline RunResult run_tau(const RunConfig& cfg) {
  PipelineRun run = run_pipeline(cfg);
  nlohmann::ordered_json doc = json_doc(cfg.command);
  doc["graph_summary"] = graph_summary_json(run.graph);
  doc["validation"] = validation_json(run.graph, run.report);
  doc["tau_full"] = run.tau.full;
  doc["tau_reduced"] = run.tau.reduced;

  std::string text = tau_text_line("tau_full", run.tau.full) +
                     tau_text_line("tau_reduced", run.tau.reduced);
  return doc_result(cfg, doc, text);
}

inline RunResult run_root(const RunConfig& cfg) {
  PipelineRun run = run_pipeline(cfg);
  GradedRoot root = build_root(run.tau.reduced);

  if (cfg.format == OutputFormat::dot) return {0, root_to_dot(root)};

  nlohmann::ordered_json doc = json_doc(cfg.command);
  doc["graph_summary"] = graph_summary_json(run.graph);
  doc["validation"] = validation_json(run.graph, run.report);
  doc["tau_reduced"] = run.tau.reduced;
  doc["root"] = nlohmann::ordered_json::object();
  doc["root"]["leaves"] = root.leaves;
  doc["root"]["merges"] = nlohmann::ordered_json::array();
  for (const auto& m : root.merges)
    doc["root"]["merges"].push_back({{"value", m.value}, {"left", m.left}, {"right", m.right}});

  std::string text = tau_text_line("tau_reduced", run.tau.reduced) + root_to_text(root);
  return doc_result(cfg, doc, text);
}

inline RunResult run_hf(const RunConfig& cfg) {
  PipelineRun run = run_pipeline(cfg);
  GradedRoot root = build_root(run.tau.reduced);
  HFModule module = hf_from_root(root, cfg.grading, cfg.user_d);
  i64 rank = rank_red(module);
  bool casson_applicable = module.mode != GradingMode::relative && module.tower_bottom == 0;
  std::optional<CassonReport> casson;
  if (casson_applicable) casson = casson_check(module, cfg.expected_lambda);

  nlohmann::ordered_json doc = json_doc(cfg.command);
  doc["graph_summary"] = graph_summary_json(run.graph);
  doc["validation"] = validation_json(run.graph, run.report);
  doc["tau_full"] = run.tau.full;
  doc["tau_reduced"] = run.tau.reduced;
  doc["hf"] = hf_json(module);
  doc["rank_red"] = rank;
  if (casson) {
    nlohmann::ordered_json c;
    c["lambda"] = casson->lambda;
    c["is_even"] = casson->is_even;
    c["advisory"] = casson->advisory;
    if (casson->expected) {
      c["expected"] = *casson->expected;
      c["matches"] = casson->matches;
    } else {
      c["expected"] = nullptr;
      c["matches"] = nullptr;
    }
    doc["casson"] = c;
  } else {
    doc["casson"] = nullptr;
  }

  std::ostringstream text;
  text << tau_text_line("tau_reduced", run.tau.reduced);
  text << "HF+ = " << hf_text(module) << "\n";
  text << "rank_red: " << rank << "\n";
  if (casson) {
    text << "casson: lambda = " << casson->lambda << " (" << casson->advisory << ")\n";
    if (casson->expected)
      text << "casson expected " << *casson->expected << ": "
           << (casson->matches ? "match" : "MISMATCH") << "\n";
  } else {
    text << "casson: not applicable in this grading\n";
  }

  RunResult res = doc_result(cfg, doc, text.str());
  if (casson && casson->expected && !casson->matches) res.exit_code = 1;
  return res;
}

inline RunResult run_mazur(const RunConfig& cfg) {
  if (!cfg.mazur_n) throw InputError("mazur requires n");
  PlumbingGraph g = mazur_graph(*cfg.mazur_n);
  if (cfg.format == OutputFormat::dot) return {0, graph_to_dot(g)};
  if (cfg.format == OutputFormat::text) return {0, graph_to_text(g)};
  nlohmann::ordered_json doc = json_doc(cfg.command);
  doc["n"] = *cfg.mazur_n;
  doc["graph"] = graph_to_json(g);
  return {0, doc.dump(2) + "\n"};
}

inline RunResult run_brieskorn(const RunConfig& cfg) {
  if (!cfg.brieskorn_pqr) throw InputError("brieskorn requires p q r");
  const auto& a = *cfg.brieskorn_pqr;
  BrieskornTriple t(a[0], a[1], a[2]);
  SeifertInvariants inv = seifert_invariants(t);

  if (cfg.seifert_only) {
    nlohmann::ordered_json doc = json_doc(cfg.command);
    doc["triple"] = {t.p, t.q, t.r};
    doc["seifert"] = {{"e0", inv.e0},
                      {"pairs",
                       {{inv.pairs[0].first, inv.pairs[0].second},
                        {inv.pairs[1].first, inv.pairs[1].second},
                        {inv.pairs[2].first, inv.pairs[2].second}}}};
    std::ostringstream text;
    text << "triple: (" << t.p << ", " << t.q << ", " << t.r << ")\n"
         << "e0: " << inv.e0 << "\n";
    for (const auto& [alpha, alpha_prime] : inv.pairs)
      text << "pair: (" << alpha << ", " << alpha_prime << ")\n";
    return doc_result(cfg, doc, text.str());
  }

  PlumbingGraph g = brieskorn_graph(t);
  if (cfg.format == OutputFormat::dot) return {0, graph_to_dot(g)};
  if (cfg.format == OutputFormat::text) return {0, graph_to_text(g)};
  nlohmann::ordered_json doc = json_doc(cfg.command);
  doc["triple"] = {t.p, t.q, t.r};
  doc["seifert"] = {{"e0", inv.e0},
                    {"pairs",
                     {{inv.pairs[0].first, inv.pairs[0].second},
                      {inv.pairs[1].first, inv.pairs[1].second},
                      {inv.pairs[2].first, inv.pairs[2].second}}}};
  doc["graph"] = graph_to_json(g);
  return {0, doc.dump(2) + "\n"};
}

inline i64 pipeline_rank(const PlumbingGraph& g, i64 step_budget) {
  TauFunction tau = compute_tau(g, EngineOptions{step_budget, std::nullopt, 50});
  return rank_red(hf_from_root(build_root(tau.reduced)));
}

inline RunResult run_rank_check(const RunConfig& cfg) {
  nlohmann::ordered_json doc = json_doc(cfg.command);
  doc["entries"] = nlohmann::ordered_json::array();
  std::ostringstream text;
  text << "set                                closed  pipeline  rank     tau\n";
  bool all_ok = true;

  for (int n = 1; n <= 7; ++n) {
    i64 closed = mazur_rank(n);
    i64 piped = pipeline_rank(mazur_graph(n), cfg.step_budget);
    bool ok = closed == piped;
    all_ok = all_ok && ok;
    doc["entries"].push_back({{"kind", "mazur"},
                              {"n", n},
                              {"closed_rank", closed},
                              {"pipeline_rank", piped},
                              {"rank_match", ok}});
    std::ostringstream name;
    name << "mazur n=" << n;
    text << name.str() << std::string(35 - name.str().size(), ' ') << closed << "       " << piped
         << "         " << (ok ? "ok" : "FAIL") << "     -\n";
  }

  for (const CHGridEntry& entry : casson_harer_grid()) {
    const CassonHarerFamily& fam = entry.fam;
    BrieskornTriple t = fam.triple();
    TauFunction tau = compute_tau(brieskorn_graph(t), EngineOptions{cfg.step_budget, std::nullopt, 50});
    i64 piped = rank_red(hf_from_root(build_root(tau.reduced)));
    i64 closed = rank_casson_harer(fam);
    std::vector<i64> closed_reduced = reduce_tau(tau_casson_harer_sequence(fam, cfg.step_budget));
    bool rank_ok = closed == piped;
    bool tau_ok = closed_reduced == tau.reduced;
    all_ok = all_ok && rank_ok && (tau_ok || !entry.tau_asserted);

    nlohmann::ordered_json e;
    e["kind"] = "casson-harer";
    e["family"] = fam.family == CHFamily::family1 ? 1 : 2;
    e["p"] = fam.p;
    e["s"] = fam.s;
    if (fam.family == CHFamily::family1) e["sign"] = fam.sign == CHSign::plus ? "+" : "-";
    e["triple"] = {t.p, t.q, t.r};
    e["closed_rank"] = closed;
    e["pipeline_rank"] = piped;
    e["rank_match"] = rank_ok;
    e["tau_match"] = tau_ok;
    e["tau_asserted"] = entry.tau_asserted;
    doc["entries"].push_back(e);

    std::ostringstream name;
    name << "fam" << (fam.family == CHFamily::family1 ? 1 : 2) << " p=" << fam.p << " s=" << fam.s;
    if (fam.family == CHFamily::family1) name << (fam.sign == CHSign::plus ? " +" : " -");
    name << " (" << t.p << "," << t.q << "," << t.r << ")";
    text << name.str() << std::string(name.str().size() < 35 ? 35 - name.str().size() : 1, ' ')
         << closed << "       " << piped << "         " << (rank_ok ? "ok" : "FAIL") << "     "
         << (tau_ok ? "ok" : (entry.tau_asserted ? "FAIL" : "mismatch (reported, not asserted)"))
         << "\n";
  }

  doc["all_ok"] = all_ok;
  text << (all_ok ? "all asserted comparisons passed\n" : "FAILURES present\n");
  RunResult res = doc_result(cfg, doc, text.str());
  res.exit_code = all_ok ? 0 : 1;
  return res;
}

inline RunResult error_result(const RunConfig& cfg, int code, const std::string& message) {
  if (cfg.format == OutputFormat::json) {
    nlohmann::ordered_json doc = json_doc(cfg.command);
    doc["error"] = message;
    return {code, doc.dump(2) + "\n"};
  }
  return {code, "error: " + message + "\n"};
}

}  // namespace detail

inline RunResult run(const RunConfig& cfg) {
  try {
    switch (cfg.command) {
      case Command::validate: return detail::run_validate(cfg);
      case Command::tau: return detail::run_tau(cfg);
      case Command::root: return detail::run_root(cfg);
      case Command::hf: return detail::run_hf(cfg);
      case Command::mazur: return detail::run_mazur(cfg);
      case Command::brieskorn: return detail::run_brieskorn(cfg);
      case Command::rank_check: return detail::run_rank_check(cfg);
    }
    throw Error("unreachable command");
  } catch (const InputError& e) {
    return detail::error_result(cfg, 1, e.what());
  } catch (const BudgetError& e) {
    return detail::error_result(cfg, 2, e.what());
  } catch (const OverflowError& e) {
    return detail::error_result(cfg, 2, e.what());
  } catch (const Error& e) {
    return detail::error_result(cfg, 2, e.what());
  }
}

// Batch manifest: JSON array of entries, each an object selecting a command
// plus the same knobs the CLI exposes. Entries run independently; the
// aggregate preserves manifest order and fails if any entry failed.
inline RunConfig config_from_json(const nlohmann::json& e) {
  RunConfig cfg;
  if (!e.is_object() || !e.contains("command"))
    throw InputError("batch entry must be an object with a 'command' field");
  std::string cmd = e.at("command").get<std::string>();
  if (cmd == "tau") cfg.command = Command::tau;
  else if (cmd == "hf") cfg.command = Command::hf;
  else if (cmd == "root") cfg.command = Command::root;
  else if (cmd == "validate") cfg.command = Command::validate;
  else if (cmd == "brieskorn") cfg.command = Command::brieskorn;
  else if (cmd == "mazur") cfg.command = Command::mazur;
  else if (cmd == "rank-check") cfg.command = Command::rank_check;
  else throw InputError("unknown command in batch entry: " + cmd);

  if (e.contains("path")) cfg.input_text = detail::slurp(e.at("path").get<std::string>());
  if (e.contains("text")) cfg.input_text = e.at("text").get<std::string>();
  if (e.contains("graph")) cfg.input_text = e.at("graph").dump();
  if (e.contains("mazur")) cfg.mazur_n = e.at("mazur").get<int>();
  if (e.contains("brieskorn")) {
    auto arr = e.at("brieskorn");
    if (!arr.is_array() || arr.size() != 3)
      throw InputError("batch entry 'brieskorn' must be [p, q, r]");
    cfg.brieskorn_pqr = {arr.at(0).get<i64>(), arr.at(1).get<i64>(), arr.at(2).get<i64>()};
  }
  if (e.contains("seifert")) cfg.seifert_only = e.at("seifert").get<bool>();
  if (e.contains("grading")) {
    std::string gm = e.at("grading").get<std::string>();
    if (gm == "d0") cfg.grading = GradingMode::absolute_d0;
    else if (gm == "relative") cfg.grading = GradingMode::relative;
    else throw InputError("batch 'grading' must be \"d0\" or \"relative\" (or use \"d\")");
  }
  if (e.contains("d")) {
    cfg.grading = GradingMode::absolute_user;
    cfg.user_d = e.at("d").get<i64>();
  }
  if (e.contains("format")) {
    std::string f = e.at("format").get<std::string>();
    if (f == "text") cfg.format = OutputFormat::text;
    else if (f == "json") cfg.format = OutputFormat::json;
    else if (f == "dot") cfg.format = OutputFormat::dot;
    else throw InputError("batch 'format' must be text, json, or dot");
  }
  if (e.contains("budget")) cfg.step_budget = e.at("budget").get<i64>();
  if (e.contains("v0")) cfg.v0_id = e.at("v0").get<i64>();
  if (e.contains("ar")) cfg.run_ar = e.at("ar").get<bool>();
  if (e.contains("expect_lambda")) cfg.expected_lambda = e.at("expect_lambda").get<i64>();
  return cfg;
}

inline RunResult run_batch(const std::string& manifest_text) {
  nlohmann::json manifest;
  try {
    manifest = nlohmann::json::parse(manifest_text);
  } catch (const nlohmann::json::parse_error& e) {
    return {1, std::string("error: manifest JSON parse error: ") + e.what() + "\n"};
  }
  if (!manifest.is_array()) return {1, "error: batch manifest must be a JSON array\n"};

  nlohmann::ordered_json doc;
  doc["schema"] = kSchema;
  doc["command"] = "batch";
  doc["entries"] = nlohmann::ordered_json::array();
  int worst = 0;
  int failures = 0;
  for (std::size_t i = 0; i < manifest.size(); ++i) {
    nlohmann::ordered_json slot;
    slot["index"] = i;
    RunResult r;
    try {
      RunConfig cfg = config_from_json(manifest.at(i));
      slot["command"] = to_string(cfg.command);
      r = run(cfg);
      if (cfg.format == OutputFormat::json)
        slot["document"] = nlohmann::ordered_json::parse(r.document);
      else
        slot["document"] = r.document;
    } catch (const Error& e) {
      r.exit_code = 1;
      slot["document"] = std::string("error: ") + e.what();
    }
    slot["exit"] = r.exit_code;
    if (r.exit_code != 0) {
      ++failures;
      worst = std::max(worst, r.exit_code);
    }
    doc["entries"].push_back(slot);
  }
  doc["failures"] = failures;
  return {worst, doc.dump(2) + "\n"};
}

}  // namespace plumbhf
