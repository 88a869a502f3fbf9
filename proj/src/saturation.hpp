#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "clause.hpp"
#include "logic.hpp"

namespace confres {

struct Limits {
  std::size_t max_clauses = 100000;
  double max_seconds = 60.0;
};

struct ProofStep {
  std::size_t index;  // position in the derivation
  Clause clause;
  Justification why;  // premises refer to derivation indices
};

/// Ancestors of a contradiction, in derivation order.
struct Proof {
  std::vector<ProofStep> steps;

  /// Rule applications by name, e.g. {"NEC1": 3, "LRES": 2}.
  std::vector<std::pair<std::string, int>> rule_counts() const;
  int count(const std::string& rule_name) const;
};

struct Statistics {
  std::size_t generated = 0;
  std::size_t selected = 0;
  std::size_t forward_subsumed = 0;
  std::size_t backward_subsumed = 0;
  std::size_t tautologies = 0;
  std::size_t definitions = 0;  // definition clauses added during the run
  double seconds = 0.0;
};

enum class Outcome { Unsatisfiable, Saturated, ResourceLimit };

struct SaturationResult {
  Outcome outcome = Outcome::Saturated;
  /// Every clause ever recorded: input, definitions and inferences.
  ClauseSet derivation;
  std::optional<Proof> proof;
  std::string limit_reason;
  Statistics stats;
};

/// Result of simplifying a clause: the merged clause, or nothing for a tautology.
std::optional<Clause> simplify(const Clause& c);

/// `general` subsumes `specific`: same propositional kind and a sub-disjunction,
/// true => D subsumes start => D' for D a subset of D', modal clauses only when equal.
bool subsumes(const Clause& general, const Clause& specific);

/// Given-clause saturation under the rules `spec` enables. Definition
/// clauses for every definition symbol that occurs in the input or in a
/// conclusion are added to the derivation as the symbol comes into play.
SaturationResult saturate(ClauseSet input, const LogicSpec& spec, const Limits& limits = {});

/// Minimal ancestor closure of the contradiction at `index`.
/// Throws std::invalid_argument if that clause is not start => false / true => false.
Proof extract_proof(const ClauseSet& derivation, std::size_t index);

/// `N. <clause>  [RULE, i,j]` per step, renumbered from 1; inputs print `[input]`,
/// definition clauses `[def]`.
std::string render_proof(const Proof& proof, const SymbolTable& symbols);

}  // namespace confres
