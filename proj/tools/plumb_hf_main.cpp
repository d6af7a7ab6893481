#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <plumbhf/plumbhf.hpp>

namespace {

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read file: " << path << "\n";
    std::exit(1);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int emit(const plumbhf::RunResult& result, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << result.document;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write file: " << out_path << "\n";
      return 1;
    }
    out << result.document;
  }
  return result.exit_code;
}

struct CommonFlags {
  std::string format = "text";
  std::string out_path;
  plumbhf::i64 budget = 10000000;
  std::optional<plumbhf::i64> v0;
  bool d0 = false;
  bool relative = false;
  std::optional<plumbhf::i64> user_d;
};

void add_format(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--format", f.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  cmd->add_option("--out", f.out_path, "Write output to a file instead of stdout");
}

void add_engine(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--budget", f.budget, "Step budget for the computation sequence");
  cmd->add_option_function<plumbhf::i64>(
      "--v0", [&f](plumbhf::i64 v) { f.v0 = v; },
      "Distinguished vertex id (defaults to the unique |m(v)| < degree(v) vertex)");
}

void add_grading(CLI::App* cmd, CommonFlags& f) {
  auto* d0 = cmd->add_flag("--d0", f.d0, "Absolute grading with d = 0 (default)");
  auto* rel = cmd->add_flag("--relative", f.relative, "Relative grading (tower shown at 0)");
  auto* user = cmd->add_option_function<plumbhf::i64>(
      "--d", [&f](plumbhf::i64 v) { f.user_d = v; }, "Absolute grading with user-supplied d");
  d0->excludes(rel)->excludes(user);
  rel->excludes(user);
}

void apply_common(plumbhf::RunConfig& cfg, const CommonFlags& f) {
  cfg.format = f.format == "json"  ? plumbhf::OutputFormat::json
               : f.format == "dot" ? plumbhf::OutputFormat::dot
                                   : plumbhf::OutputFormat::text;
  cfg.step_budget = f.budget;
  cfg.v0_id = f.v0;
  if (f.relative) {
    cfg.grading = plumbhf::GradingMode::relative;
  } else if (f.user_d) {
    cfg.grading = plumbhf::GradingMode::absolute_user;
    cfg.user_d = *f.user_d;
  } else {
    cfg.grading = plumbhf::GradingMode::absolute_d0;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"HF+ of plumbed integral homology spheres: tau functions, graded roots, Z[U]-modules"};
  app.require_subcommand(1);

  std::string input_path;
  CommonFlags flags;
  bool ar = false;
  bool seifert = false;
  std::optional<plumbhf::i64> expect_lambda;
  int mazur_n = 0;
  std::vector<plumbhf::i64> pqr;

  auto* tau = app.add_subcommand("tau", "Compute the tau function of a plumbing graph");
  tau->add_option("input", input_path, "Graph file (text or JSON); '-' or absent reads stdin");
  add_format(tau, flags);
  add_engine(tau, flags);

  auto* hf = app.add_subcommand("hf", "Compute HF+ as a decomposed Z[U]-module");
  hf->add_option("input", input_path, "Graph file (text or JSON); '-' or absent reads stdin");
  add_format(hf, flags);
  add_engine(hf, flags);
  add_grading(hf, flags);
  hf->add_option_function<plumbhf::i64>(
      "--expect-lambda", [&expect_lambda](plumbhf::i64 v) { expect_lambda = v; },
      "Cross-check the Casson invariant against this value");

  auto* root = app.add_subcommand("root", "Compute the graded root");
  root->add_option("input", input_path, "Graph file (text or JSON); '-' or absent reads stdin");
  add_format(root, flags);
  add_engine(root, flags);

  auto* validate = app.add_subcommand("validate", "Check engine preconditions and report");
  validate->add_option("input", input_path, "Graph file (text or JSON); '-' or absent reads stdin");
  add_format(validate, flags);
  validate->add_flag("--ar", ar, "Run the almost-rationality advisory (best-effort)");
  add_engine(validate, flags);

  auto* brieskorn = app.add_subcommand("brieskorn", "Emit the plumbing graph of Sigma(p,q,r)");
  brieskorn->add_option("pqr", pqr, "Pairwise coprime exponents p q r")->expected(3);
  brieskorn->add_flag("--seifert", seifert, "Emit the Seifert invariants instead of the graph");
  add_format(brieskorn, flags);

  auto* mazur = app.add_subcommand("mazur", "Emit the Mazur-family plumbing graph G_n");
  mazur->add_option("n", mazur_n, "Family index (n >= 1)")->required();
  add_format(mazur, flags);

  auto* rank_check = app.add_subcommand("rank-check",
                                        "Cross-validate closed-form ranks/taus against the pipeline");
  add_format(rank_check, flags);
  rank_check->add_option("--budget", flags.budget, "Step budget per entry");

  auto* batch = app.add_subcommand("batch", "Run a JSON manifest of commands");
  batch->add_option("manifest", input_path, "Manifest file; '-' or absent reads stdin");
  batch->add_option("--out", flags.out_path, "Write output to a file instead of stdout");

  CLI11_PARSE(app, argc, argv);

  plumbhf::RunConfig cfg;
  apply_common(cfg, flags);
  cfg.run_ar = ar;
  cfg.seifert_only = seifert;
  cfg.expected_lambda = expect_lambda;

  if (batch->parsed()) return emit(plumbhf::run_batch(read_input(input_path)), flags.out_path);

  if (tau->parsed()) cfg.command = plumbhf::Command::tau;
  else if (hf->parsed()) cfg.command = plumbhf::Command::hf;
  else if (root->parsed()) cfg.command = plumbhf::Command::root;
  else if (validate->parsed()) cfg.command = plumbhf::Command::validate;
  else if (brieskorn->parsed()) cfg.command = plumbhf::Command::brieskorn;
  else if (mazur->parsed()) cfg.command = plumbhf::Command::mazur;
  else if (rank_check->parsed()) cfg.command = plumbhf::Command::rank_check;

  if (mazur->parsed()) cfg.mazur_n = mazur_n;
  if (brieskorn->parsed())
    cfg.brieskorn_pqr = std::array<plumbhf::i64, 3>{pqr[0], pqr[1], pqr[2]};
  if (tau->parsed() || hf->parsed() || root->parsed() || validate->parsed())
    cfg.input_text = read_input(input_path);

  return emit(plumbhf::run(cfg), flags.out_path);
}
