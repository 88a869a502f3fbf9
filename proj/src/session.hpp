#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "clause.hpp"
#include "formula.hpp"
#include "logic.hpp"
#include "saturation.hpp"
#include "semantics.hpp"

namespace confres {

enum class Mode { Valid, Sat };
enum class Verdict { Valid, NotValid, Sat, Unsat, Unknown };

/// `VALID`, `NOT VALID`, `SAT`, `UNSAT` or `UNKNOWN (resource limit)`.
std::string_view verdict_text(Verdict v);
Verdict verdict_of(Outcome outcome, Mode mode);

/// One problem: input, logic, limits, and the result of the last run.
/// Valid mode refutes the negated formula; a loaded clause set is taken to
/// be the set to refute in either mode.
class Session {
 public:
  /// Throws std::invalid_argument on a malformed logic string.
  void set_logic(std::string_view text);
  void set_logic(LogicSpec spec);
  /// 0 infers the agent count from the logic string and the input.
  void set_agents(int count);
  void set_mode(Mode mode);
  void set_limits(const Limits& limits) { limits_ = limits; }
  void set_all_rules(bool on);
  /// Emit definition clauses for every literal up front. By default only
  /// literals under a modal operator get them first; saturation adds the
  /// rest when a rule introduces their symbol.
  void set_eager_definitions(bool on);

  /// Throws ParseError or std::invalid_argument.
  void load_formula(std::string_view text);
  void load_formula(Formula f);
  void load_clauses(std::string_view text);

  const LogicSpec& logic() const { return spec_; }
  Mode mode() const { return mode_; }
  /// Formula whose satisfiability is tested (negated in valid mode), if the input was a formula.
  std::optional<Formula> tested_formula() const;

  /// Translated input plus definition clauses, built on first use.
  const ClauseSet& problem();
  Verdict run();

  bool has_result() const { return result_.has_value(); }
  const SaturationResult& result() const { return *result_; }
  std::optional<std::string> proof_text() const;

  /// Bounded countermodel/model search on the tested formula, or on the
  /// clause set, definition clauses included, when the input was SNF.
  std::optional<KripkeModel> search_model(const SearchOptions& options);

 private:
  void invalidate();
  int agent_limit() const;

  LogicSpec spec_;
  int agents_ = 0;
  Mode mode_ = Mode::Valid;
  Limits limits_;
  bool eager_definitions_ = false;
  std::optional<Formula> formula_;
  std::optional<ClauseSet> clauses_;
  std::optional<ClauseSet> problem_;
  std::optional<SaturationResult> result_;
};

}  // namespace confres
