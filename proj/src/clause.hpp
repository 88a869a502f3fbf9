#pragma once

#include <cstddef>
#include <deque>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "literal.hpp"
#include "logic.hpp"

namespace confres {

enum class ClauseKind { Initial, Literal, PositiveModal, NegativeModal };

/// One SNF clause under an implicit universal operator:
///   Initial        start => l1 | ... | lk
///   Literal        true  => l1 | ... | lk
///   PositiveModal  l'    => [a] l
///   NegativeModal  l'    => ~[a] l
/// An empty disjunction reads as false.
class Clause {
 public:
  static Clause initial(std::vector<Literal> disjuncts);
  static Clause literal(std::vector<Literal> disjuncts);
  static Clause box(Literal lhs, Agent agent, Literal rhs);
  static Clause not_box(Literal lhs, Agent agent, Literal rhs);

  ClauseKind kind() const { return kind_; }
  bool is_modal() const { return kind_ == ClauseKind::PositiveModal || kind_ == ClauseKind::NegativeModal; }
  bool is_propositional() const { return !is_modal(); }

  const std::vector<Literal>& disjuncts() const { return disjuncts_; }
  Literal lhs() const { return lhs_; }
  Agent agent() const { return agent_; }
  Literal rhs() const { return rhs_; }

  bool contains(Literal l) const;
  /// start => false or true => false.
  bool is_contradiction() const { return is_propositional() && disjuncts_.empty(); }
  bool is_tautology() const;
  /// Number of literal occurrences; used to order the passive queue.
  std::size_t weight() const { return is_modal() ? 2 : disjuncts_.size(); }

  /// Sorted, duplicate-free copy of the disjunct list.
  Clause normalized() const;
  bool is_normalized() const;

  void for_each_symbol(const std::function<void(Symbol)>& fn) const;

  friend bool operator==(const Clause&, const Clause&) = default;

 private:
  ClauseKind kind_ = ClauseKind::Literal;
  std::vector<Literal> disjuncts_;
  Literal lhs_;
  Agent agent_;
  Literal rhs_;
};

struct ClauseHash {
  std::size_t operator()(const Clause& c) const noexcept;
};

/// Where a clause in a derivation came from.
struct Justification {
  enum class Origin { Input, Definition, Inference };
  Origin origin = Origin::Input;
  std::optional<RuleId> rule;
  std::vector<std::size_t> premises;

  static Justification input() { return {Origin::Input, std::nullopt, {}}; }
  static Justification definition() { return {Origin::Definition, std::nullopt, {}}; }
  static Justification inference(RuleId rule, std::vector<std::size_t> premises) {
    return {Origin::Inference, rule, std::move(premises)};
  }
};

/// Indexed clause record. Entries are never erased; retired ones are flagged.
struct ClauseEntry {
  Clause clause;
  Justification why;
  bool retired = false;
};

class ClauseSet {
 public:
  SymbolTable symbols;

  std::size_t add(Clause c, Justification why);
  std::size_t size() const { return entries_.size(); }
  const ClauseEntry& operator[](std::size_t i) const { return entries_.at(i); }
  ClauseEntry& operator[](std::size_t i) { return entries_.at(i); }
  const std::deque<ClauseEntry>& entries() const { return entries_; }

  std::vector<Clause> clauses() const;

  std::string render(const Clause& c) const;
  /// One clause per line, in the SNF text format.
  std::string to_text() const;

 private:
  // Deque keeps references stable while a derivation grows.
  std::deque<ClauseEntry> entries_;
};

/// Reads the SNF text format: `start -> l1 | l2`, `true -> l1 | l2`,
/// `l -> [a] l'`, `l -> ~[a] l'`. `false` denotes the empty disjunction.
ClauseSet parse_clauses(std::string_view text);

std::string render_clause(const Clause& c, const SymbolTable& symbols);

}  // namespace confres
