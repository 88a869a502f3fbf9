#pragma once

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "clause.hpp"
#include "logic.hpp"

namespace confres {

/// Premises do not fit the rule schema.
class RuleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The conclusion would need a definition symbol nested inside another one.
class DefinitionUnavailable : public RuleError {
 public:
  using RuleError::RuleError;
};

// Literal resolution. `first` is a literal clause (IRES1) or an initial
// clause (IRES2); `pivot` occurs in `first`, its complement in `initial`.
Clause ires(const Clause& first, const Clause& initial, Literal pivot);
Clause lres(const Clause& c1, const Clause& c2, Literal pivot);

// Modal resolution; all premises refer to the same agent.
Clause mres(const Clause& pos, const Clause& neg);
Clause nec1(std::span<const Clause> pos, const Clause& neg, const Clause& lit);
Clause nec2(const Clause& pos1, const Clause& pos2, const Clause& neg);
Clause nec3(std::span<const Clause> pos, const Clause& neg, const Clause& lit);

/// Names negated disjunctions ~D with a fresh `_dN`, once per D. Only the
/// literal-premise confluence rules need it.
class DisjunctionNamer {
 public:
  /// Returns the surrogate for ~D and whether it was created just now.
  std::pair<Literal, bool> name(const std::vector<Literal>& d, SymbolTable& symbols);

 private:
  std::map<std::vector<Literal>, Literal> names_;
};

/// Unary confluence rule RES_a^{p,q,r,s}. Premise shapes:
///   positive modal: RES{0,1,0,0} {1,1,0,0} {0,1,0,1} {0,1,1,1} {1,1,0,1} {1,1,1,0} {1,1,1,1}
///   negative modal: RES{1,0,0,0} {1,0,1,0} {1,0,1,1}
///   literal clause: RES{0,0,0,1} {0,0,1,0} {0,0,1,1}, with `pivot` selecting l in D | l.
/// Literal-premise rules with |D| != 1 yield two clauses, true => D | d and
/// d => ..., where d names ~D (requires `namer`). All other rules yield one.
/// Definition symbols the conclusion needs are interned in `symbols`.
std::vector<Clause> confluence_step(const RuleId& rule, const Clause& premise, SymbolTable& symbols,
                                    std::optional<Literal> pivot = std::nullopt, DisjunctionNamer* namer = nullptr);

/// Whether `premise` has the clause kind the rule consumes (ignores agent).
bool confluence_applies(const Exponents& e, const Clause& premise);

}  // namespace confres
