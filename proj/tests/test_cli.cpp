#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <plumbhf/plumbhf.hpp>

#include "support/fixtures.hpp"

using namespace plumbhf;
using nlohmann::json;

namespace {

RunConfig mazur_cfg(int n, OutputFormat fmt = OutputFormat::text) {
  RunConfig cfg;
  cfg.command = Command::mazur;
  cfg.mazur_n = n;
  cfg.format = fmt;
  return cfg;
}

json expected_summands(int n) {
  json arr = json::array();
  for (const Summand& s : fixtures::mazur_summands(n))
    arr.push_back({{"rank", s.rank}, {"deg", s.bottom_degree}});
  return arr;
}

}  // namespace

TEST_CASE("generator output pipes straight back into the analyzer", "[cli]") {
  RunResult gen = run(mazur_cfg(2));
  REQUIRE(gen.exit_code == 0);

  RunConfig hf;
  hf.command = Command::hf;
  hf.input_text = gen.document;  // exactly what `mazur 2 | hf` would see
  hf.format = OutputFormat::json;
  RunResult res = run(hf);
  REQUIRE(res.exit_code == 0);

  json doc = json::parse(res.document);
  CHECK(doc.at("schema") == kSchema);
  CHECK(doc.at("command") == "hf");
  CHECK(doc.at("validation").at("is_tree") == true);
  CHECK(doc.at("validation").at("is_integral_homology_sphere") == true);
  CHECK(doc.at("validation").at("distinguished_vertex") == 0);
  CHECK(doc.at("hf").at("tower_bottom") == 0);
  CHECK(doc.at("hf").at("summands") == expected_summands(2));
  CHECK(doc.at("rank_red") == 8);
  CHECK(doc.at("casson").at("lambda") == -8);
  CHECK(doc.at("casson").at("is_even") == true);
  CHECK(doc.at("casson").at("expected").is_null());
}

TEST_CASE("documents are byte-for-byte deterministic", "[cli]") {
  RunConfig hf;
  hf.command = Command::hf;
  hf.input_text = graph_to_text(fixtures::sigma237());
  hf.format = OutputFormat::json;
  RunResult first = run(hf);
  RunResult second = run(hf);
  CHECK(first.document == second.document);
  CHECK(first.exit_code == 0);

  RunConfig tau = hf;
  tau.command = Command::tau;
  tau.format = OutputFormat::text;
  CHECK(run(tau).document == run(tau).document);
}

TEST_CASE("text output elides very long sequences, json never does", "[cli]") {
  RunConfig tau;
  tau.command = Command::tau;
  tau.mazur_n = 11;

  tau.format = OutputFormat::json;
  RunResult as_json = run(tau);
  REQUIRE(as_json.exit_code == 0);
  json doc = json::parse(as_json.document);
  REQUIRE(doc.at("tau_full").size() > kTextElisionThreshold);
  CHECK(doc.at("tau_full").front() == 0);
  CHECK(doc.at("tau_full").back() == 2);

  tau.format = OutputFormat::text;
  RunResult as_text = run(tau);
  REQUIRE(as_text.exit_code == 0);
  CHECK(as_text.document.find("elided") != std::string::npos);
  CHECK(as_text.document.find("tau_reduced") != std::string::npos);
  CHECK(as_text.document.size() < 100000);  // the full sequence must not leak through
}

TEST_CASE("validate reports diagnostics and gates the engine commands", "[cli]") {
  const std::string no_v0 = "v 0 -1\nv 1 -2\ne 0 1\n";

  RunConfig val;
  val.command = Command::validate;
  val.input_text = no_v0;
  val.format = OutputFormat::json;
  RunResult res = run(val);
  CHECK(res.exit_code == 1);
  json doc = json::parse(res.document);
  CHECK(doc.at("engine_ready") == false);
  CHECK(doc.at("validation").at("distinguished_vertex").is_null());
  REQUIRE(doc.at("diagnostics").size() == 1);
  CHECK(std::string(doc.at("diagnostics").at(0)).find("no distinguished vertex") !=
        std::string::npos);

  val.format = OutputFormat::text;
  RunResult text = run(val);
  CHECK(text.exit_code == 1);
  CHECK(text.document.find("diagnostic: no distinguished vertex") != std::string::npos);

  RunConfig tau = val;
  tau.command = Command::tau;
  RunResult gated = run(tau);
  CHECK(gated.exit_code == 1);
  CHECK(gated.document.find("no distinguished vertex") != std::string::npos);

  RunConfig good;
  good.command = Command::validate;
  good.mazur_n = 2;
  good.format = OutputFormat::json;
  good.run_ar = true;
  RunResult ok = run(good);
  CHECK(ok.exit_code == 0);
  json okdoc = json::parse(ok.document);
  CHECK(okdoc.at("engine_ready") == true);
  CHECK(okdoc.at("validation").at("ar_advisory") == "pass");
  CHECK(okdoc.at("diagnostics").empty());
}

TEST_CASE("non-spheres and starved budgets exit with distinct codes", "[cli]") {
  RunConfig tau;
  tau.command = Command::tau;
  tau.input_text = "v 0 -2\n";
  RunResult not_sphere = run(tau);
  CHECK(not_sphere.exit_code == 1);
  CHECK(not_sphere.document.find("homology sphere") != std::string::npos);

  RunConfig starved;
  starved.command = Command::tau;
  starved.mazur_n = 2;
  starved.step_budget = 3;
  RunResult out_of_gas = run(starved);
  CHECK(out_of_gas.exit_code == 2);
  CHECK(out_of_gas.document.find("budget") != std::string::npos);

  RunConfig bad_v0;
  bad_v0.command = Command::hf;
  bad_v0.mazur_n = 1;
  bad_v0.v0_id = 99;
  RunResult missing = run(bad_v0);
  CHECK(missing.exit_code == 1);
  CHECK(missing.document.find("not a vertex id") != std::string::npos);
}

TEST_CASE("explicit v0 by original id matches autodetection", "[cli]") {
  RunConfig base;
  base.command = Command::hf;
  base.input_text = graph_to_text(fixtures::sigma237());
  base.format = OutputFormat::json;
  RunConfig forced = base;
  forced.v0_id = 0;
  CHECK(run(forced).document == run(base).document);
}

TEST_CASE("grading flags flow through to the module and casson check", "[cli]") {
  RunConfig hf;
  hf.command = Command::hf;
  hf.mazur_n = 1;
  hf.format = OutputFormat::json;

  hf.grading = GradingMode::relative;
  json rel = json::parse(run(hf).document);
  CHECK(rel.at("casson").is_null());
  CHECK(rel.at("hf").at("grading_mode") == "relative");

  hf.grading = GradingMode::absolute_user;
  hf.user_d = 4;
  json user = json::parse(run(hf).document);
  CHECK(user.at("hf").at("tower_bottom") == 4);
  CHECK(user.at("casson").is_null());  // tower not at 0, check not applicable
  for (const auto& s : user.at("hf").at("summands")) CHECK(s.at("deg") == 4);

  hf.grading = GradingMode::absolute_d0;
  RunResult matched = run([&] {
    RunConfig c = hf;
    c.expected_lambda = -2;
    return c;
  }());
  CHECK(matched.exit_code == 0);
  CHECK(json::parse(matched.document).at("casson").at("matches") == true);

  RunResult mismatched = run([&] {
    RunConfig c = hf;
    c.expected_lambda = -4;
    return c;
  }());
  CHECK(mismatched.exit_code == 1);
  CHECK(json::parse(mismatched.document).at("casson").at("matches") == false);
}

TEST_CASE("root command renders text, json and dot", "[cli]") {
  RunConfig root;
  root.command = Command::root;
  root.mazur_n = 1;

  root.format = OutputFormat::dot;
  RunResult dot = run(root);
  CHECK(dot.exit_code == 0);
  CHECK(dot.document.rfind("graph graded_root", 0) == 0);

  root.format = OutputFormat::json;
  json doc = json::parse(run(root).document);
  CHECK(doc.at("root").at("leaves") == json::array({0, 0, 0}));
  REQUIRE(doc.at("root").at("merges").size() == 2);
  CHECK(doc.at("root").at("merges").at(0).at("value") == 1);

  root.format = OutputFormat::text;
  RunResult text = run(root);
  CHECK(text.document.find("o o o") != std::string::npos);
}

TEST_CASE("brieskorn command emits the graph and the seifert data", "[cli]") {
  RunConfig cfg;
  cfg.command = Command::brieskorn;
  cfg.brieskorn_pqr = std::array<i64, 3>{2, 3, 7};

  RunResult text = run(cfg);
  REQUIRE(text.exit_code == 0);
  PlumbingGraph g = parse_graph(text.document);  // text output is pipeable graph format
  CHECK(g.size() == 4);

  cfg.seifert_only = true;
  cfg.format = OutputFormat::json;
  json doc = json::parse(run(cfg).document);
  CHECK(doc.at("triple") == json::array({2, 3, 7}));
  CHECK(doc.at("seifert").at("e0") == -1);
  CHECK(doc.at("seifert").at("pairs") ==
        json::array({json::array({2, 1}), json::array({3, 1}), json::array({7, 1})}));

  cfg.format = OutputFormat::text;
  RunResult seifert_text = run(cfg);
  CHECK(seifert_text.document.find("e0: -1") != std::string::npos);

  RunConfig bad = cfg;
  bad.brieskorn_pqr = std::array<i64, 3>{2, 4, 7};
  CHECK(run(bad).exit_code == 1);
}

TEST_CASE("rank-check cross-validates closed forms against the pipeline", "[cli][golden]") {
  RunConfig cfg;
  cfg.command = Command::rank_check;
  cfg.format = OutputFormat::json;
  RunResult res = run(cfg);
  REQUIRE(res.exit_code == 0);
  json doc = json::parse(res.document);
  CHECK(doc.at("all_ok") == true);
  REQUIRE(doc.at("entries").size() == 7 + 15);
  for (const auto& e : doc.at("entries")) {
    CHECK(e.at("rank_match") == true);
    if (e.at("kind") == "casson-harer" && e.at("tau_asserted") == true)
      CHECK(e.at("tau_match") == true);
  }

  cfg.format = OutputFormat::text;
  RunResult text = run(cfg);
  CHECK(text.exit_code == 0);
  CHECK(text.document.find("FAIL") == std::string::npos);
  CHECK(text.document.find("all asserted comparisons passed") != std::string::npos);
}

TEST_CASE("batch manifests run every entry and aggregate failures", "[cli]") {
  json manifest = json::array();
  for (int n = 1; n <= 7; ++n)
    manifest.push_back({{"command", "tau"}, {"mazur", n}, {"format", "json"}});
  RunResult res = run_batch(manifest.dump());
  REQUIRE(res.exit_code == 0);
  json doc = json::parse(res.document);
  CHECK(doc.at("schema") == kSchema);
  CHECK(doc.at("command") == "batch");
  CHECK(doc.at("failures") == 0);
  REQUIRE(doc.at("entries").size() == 7);
  for (int n = 1; n <= 7; ++n) {
    const auto& entry = doc.at("entries").at(static_cast<std::size_t>(n - 1));
    CHECK(entry.at("index") == n - 1);
    CHECK(entry.at("exit") == 0);
    json reduced = entry.at("document").at("tau_reduced");
    json expect = fixtures::mazur_reduced_rows()[static_cast<std::size_t>(n)];
    REQUIRE(reduced == expect);
  }

  // determinism of the aggregate
  CHECK(run_batch(manifest.dump()).document == res.document);

  // empty manifest is a successful no-op
  RunResult empty = run_batch("[]");
  CHECK(empty.exit_code == 0);
  CHECK(json::parse(empty.document).at("entries").empty());

  // failures are isolated per entry and drive the aggregate exit code
  json mixed = json::array();
  mixed.push_back({{"command", "validate"}, {"mazur", 1}, {"format", "json"}});
  mixed.push_back({{"command", "brieskorn"}, {"brieskorn", {2, 4, 7}}, {"format", "json"}});
  mixed.push_back({{"command", "tau"}, {"mazur", 2}, {"budget", 3}, {"format", "json"}});
  RunResult mixed_res = run_batch(mixed.dump());
  CHECK(mixed_res.exit_code == 2);  // worst entry wins
  json mixed_doc = json::parse(mixed_res.document);
  CHECK(mixed_doc.at("failures") == 2);
  CHECK(mixed_doc.at("entries").at(0).at("exit") == 0);
  CHECK(mixed_doc.at("entries").at(1).at("exit") == 1);
  CHECK(mixed_doc.at("entries").at(2).at("exit") == 2);

  // malformed manifests fail up front
  CHECK(run_batch("{\"not\": \"an array\"}").exit_code == 1);
  CHECK(run_batch("[{\"no_command\": 1}]").exit_code == 1);
  CHECK(run_batch("not json").exit_code == 1);
}

TEST_CASE("generated graph text survives a round trip", "[cli]") {
  RunResult gen = run(mazur_cfg(3));
  PlumbingGraph parsed = parse_graph(gen.document);
  CHECK(graph_to_text(parsed) == gen.document);
  CHECK(graph_to_text(parsed) == graph_to_text(mazur_graph(3)));
}
