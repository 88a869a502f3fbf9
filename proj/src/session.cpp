#include "session.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

#include "snf.hpp"

namespace confres {

std::string_view verdict_text(Verdict v) {
  switch (v) {
    case Verdict::Valid: return "VALID";
    case Verdict::NotValid: return "NOT VALID";
    case Verdict::Sat: return "SAT";
    case Verdict::Unsat: return "UNSAT";
    case Verdict::Unknown: return "UNKNOWN (resource limit)";
  }
  return "UNKNOWN (resource limit)";
}

Verdict verdict_of(Outcome outcome, Mode mode) {
  switch (outcome) {
    case Outcome::Unsatisfiable: return mode == Mode::Valid ? Verdict::Valid : Verdict::Unsat;
    case Outcome::Saturated: return mode == Mode::Valid ? Verdict::NotValid : Verdict::Sat;
    case Outcome::ResourceLimit: return Verdict::Unknown;
  }
  return Verdict::Unknown;
}

void Session::invalidate() {
  problem_.reset();
  result_.reset();
}

void Session::set_logic(std::string_view text) { set_logic(LogicSpec::parse(text)); }

void Session::set_logic(LogicSpec spec) {
  spec.set_all_rules(spec_.all_rules());
  spec_ = std::move(spec);
  invalidate();
}

void Session::set_agents(int count) {
  if (count < 0) throw std::invalid_argument("agent count must not be negative");
  agents_ = count;
  invalidate();
}

void Session::set_mode(Mode mode) {
  mode_ = mode;
  invalidate();
}

void Session::set_all_rules(bool on) {
  spec_.set_all_rules(on);
  invalidate();
}

void Session::set_eager_definitions(bool on) {
  eager_definitions_ = on;
  invalidate();
}

int Session::agent_limit() const { return agents_ > 0 ? agents_ : INT_MAX; }

void Session::load_formula(std::string_view text) { load_formula(parse(text, ParseOptions{agent_limit(), false})); }

void Session::load_formula(Formula f) {
  formula_ = std::move(f);
  clauses_.reset();
  invalidate();
}

void Session::load_clauses(std::string_view text) {
  ClauseSet set = parse_clauses(text);
  for (const auto& e : set.entries()) {
    if (e.clause.is_modal() && e.clause.agent().id > agent_limit()) {
      throw std::invalid_argument("clause mentions agent " + std::to_string(e.clause.agent().id) + " beyond the agent count");
    }
  }
  clauses_ = std::move(set);
  formula_.reset();
  invalidate();
}

std::optional<Formula> Session::tested_formula() const {
  if (!formula_) return std::nullopt;
  return mode_ == Mode::Valid ? Formula::negation(*formula_) : *formula_;
}

const ClauseSet& Session::problem() {
  if (problem_) return *problem_;
  if (spec_.max_agent() > agent_limit()) {
    throw std::invalid_argument("logic mentions agent " + std::to_string(spec_.max_agent()) + " beyond the agent count");
  }
  ClauseSet set;
  if (formula_) {
    to_snf(*tested_formula(), set);
  } else if (clauses_) {
    set = *clauses_;
  } else {
    throw std::logic_error("no input loaded");
  }
  add_definition_clauses(set, spec_, eager_definitions_ ? DefinitionScope::AllLiterals : DefinitionScope::ModalLiterals);
  add_mentioned_definitions(set);
  problem_ = std::move(set);
  return *problem_;
}

Verdict Session::run() {
  const ClauseSet& p = problem();
  result_ = saturate(p, spec_, limits_);
  return verdict_of(result_->outcome, mode_);
}

std::optional<std::string> Session::proof_text() const {
  if (!result_ || !result_->proof) return std::nullopt;
  return render_proof(*result_->proof, result_->derivation.symbols);
}

std::optional<KripkeModel> Session::search_model(const SearchOptions& options) {
  if (auto f = tested_formula()) return bounded_model_search(*f, spec_, options);
  return bounded_model_search(problem(), spec_, options);
}

}  // namespace confres
