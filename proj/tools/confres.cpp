// Command-line front end; talks to the prover only through the C interface.
#include <confres/confres.h>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"

namespace {

constexpr int kExitVerdict = 0;
constexpr int kExitInput = 2;
constexpr int kExitLimit = 3;
constexpr int kSearchBudget = 5;

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  out = buf.str();
  return true;
}

int input_error(const std::string& what) {
  std::cerr << "error: " << what << "\n";
  return kExitInput;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Resolution prover for K(n) with confluence axioms"};
  app.set_version_flag("--version", confres_version());

  std::string mode = "valid";
  std::string logic;
  int agents = 0;
  std::string formula;
  std::string formula_file;
  std::string snf_file;
  std::string proof_out;
  bool emit_snf = false;
  bool oracle_check = false;
  bool all_rules = false;
  bool eager_definitions = false;
  bool json = false;
  int max_worlds = 4;
  std::size_t max_clauses = 100000;
  double max_seconds = 60.0;

  app.add_option("formula", formula, "Formula, e.g. \"[1]p -> p\"");
  app.add_option("-f,--formula-file", formula_file, "Read the formula from a file");
  app.add_option("--input-snf", snf_file, "Read a clause set instead of a formula");
  app.add_option("--mode", mode, "valid: refute the negation; sat: refute the formula")
      ->check(CLI::IsMember({"valid", "sat"}));
  app.add_option("--logic", logic, "Per-agent families, e.g. \"1:T,5;2:K\"");
  app.add_option("--agents", agents, "Number of agents (default: inferred)")->check(CLI::NonNegativeNumber);
  app.add_flag("--emit-snf", emit_snf, "Print the clause set before proving");
  app.add_option("--proof-out", proof_out, "Write the proof to a file (- for stdout)");
  app.add_flag("--oracle-check", oracle_check, "Search for a bounded model when no refutation is found");
  app.add_option("--max-worlds", max_worlds, "Model search bound")->check(CLI::Range(1, kSearchBudget));
  app.add_option("--max-clauses", max_clauses, "Clause limit")->check(CLI::PositiveNumber);
  app.add_option("--max-seconds", max_seconds, "Time limit")->check(CLI::PositiveNumber);
  app.add_flag("--all-rules", all_rules, "Use both rules of every family");
  app.add_flag("--eager-definitions", eager_definitions, "Add definition clauses for every literal up front");
  app.add_flag("--json", json, "Print the model as JSON as well");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  const int sources = !formula.empty() + !formula_file.empty() + !snf_file.empty();
  if (sources != 1) return input_error("give exactly one of FORMULA, --formula-file, --input-snf");
  std::string text = formula;
  if (!formula_file.empty() && !read_file(formula_file, text)) return input_error("cannot read " + formula_file);
  if (!snf_file.empty() && !read_file(snf_file, text)) return input_error("cannot read " + snf_file);

  std::unique_ptr<confres_prover, decltype(&confres_prover_free)> prover(confres_prover_new(), confres_prover_free);
  confres_prover* p = prover.get();
  auto check = [&](confres_status s) { return s == CONFRES_OK ? 0 : input_error(confres_last_error(p)); };

  if (int rc = check(confres_set_logic(p, logic.c_str()))) return rc;
  if (int rc = check(confres_set_agents(p, agents))) return rc;
  if (int rc = check(confres_set_mode(p, mode == "valid" ? CONFRES_MODE_VALID : CONFRES_MODE_SAT))) return rc;
  if (int rc = check(confres_set_limits(p, max_clauses, max_seconds))) return rc;
  if (int rc = check(confres_set_all_rules(p, all_rules ? 1 : 0))) return rc;
  if (int rc = check(confres_set_eager_definitions(p, eager_definitions ? 1 : 0))) return rc;
  if (int rc = check(snf_file.empty() ? confres_load_formula(p, text.c_str()) : confres_load_snf(p, text.c_str()))) return rc;

  if (emit_snf) {
    const char* snf = confres_snf_text(p);
    if (snf == nullptr) return input_error(confres_last_error(p));
    std::cout << snf;
  }

  confres_verdict verdict{};
  if (int rc = check(confres_run(p, &verdict))) return rc;
  std::cout << confres_verdict_name(verdict) << "\n";

  if (const char* proof = confres_proof_text(p); proof != nullptr && !proof_out.empty()) {
    if (proof_out == "-") {
      std::cout << proof;
    } else {
      std::ofstream out(proof_out);
      if (!out) return input_error("cannot write " + proof_out);
      out << proof;
    }
  }

  if (oracle_check && (verdict == CONFRES_VERDICT_NOT_VALID || verdict == CONFRES_VERDICT_SAT)) {
    int found = 0;
    if (int rc = check(confres_search_model(p, max_worlds, kSearchBudget, &found))) return rc;
    if (found) {
      std::cout << (verdict == CONFRES_VERDICT_NOT_VALID ? "countermodel:\n" : "model:\n") << confres_model_text(p);
      if (json) std::cout << confres_model_json(p) << "\n";
    } else {
      std::cout << "no model ≤ " << max_worlds << "\n";
    }
  }

  return verdict == CONFRES_VERDICT_UNKNOWN ? kExitLimit : kExitVerdict;
}
