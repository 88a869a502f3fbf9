#pragma once

#include <span>
#include <vector>

#include "clause.hpp"
#include "formula.hpp"
#include "logic.hpp"

namespace confres {

/// Translates `f` into Separated Normal Form, appending the clauses to `out`
/// (symbols are interned into `out.symbols`, surrogates are fresh `_tN`).
/// The seed is start => t0 and t0 => f; conjunctions are split, non-literal
/// disjuncts and non-literal modal operands are renamed.
void to_snf(const Formula& f, ClauseSet& out);
ClauseSet to_snf(const Formula& f);

/// Which literals receive definition clauses before saturation.
enum class DefinitionScope {
  AllLiterals,    // every symbol of the clause set
  ModalLiterals,  // symbols occurring under a modal operator
};

/// Literals over the symbols `scope` selects, definition and renaming
/// symbols excluded, both polarities, in symbol order.
std::vector<Literal> definable_literals(const ClauseSet& set, DefinitionScope scope = DefinitionScope::AllLiterals);

/// For each agent a and literal l: w^{a,l} => ~[a]~l and ~w^{a,l} => [a]~l.
/// Throws std::invalid_argument when some l is itself a definition symbol.
std::vector<Clause> definition_clauses(std::span<const Literal> literals, std::span<const Agent> agents,
                                       SymbolTable& symbols);

/// Adds the definition clauses required by `spec` for the definable literals
/// (agents with an enabled rule concluding with definition symbols).
/// Clauses already present are not repeated. Returns the number added.
std::size_t add_definition_clauses(ClauseSet& set, const LogicSpec& spec,
                                   DefinitionScope scope = DefinitionScope::AllLiterals);

/// Adds the definition clauses of the definition symbols `set` already
/// mentions. Returns the number added.
std::size_t add_mentioned_definitions(ClauseSet& set);

}  // namespace confres
