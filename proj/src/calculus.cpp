#include "calculus.hpp"

#include <algorithm>

namespace confres {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw RuleError(what);
}

std::vector<Literal> without(const std::vector<Literal>& lits, Literal drop) {
  std::vector<Literal> out;
  out.reserve(lits.size());
  bool dropped = false;
  for (Literal l : lits) {
    if (!dropped && l == drop) {
      dropped = true;
      continue;
    }
    out.push_back(l);
  }
  return out;
}

void check_same_agent(std::span<const Clause> pos, const Clause& neg) {
  for (const Clause& p : pos) {
    require(p.kind() == ClauseKind::PositiveModal, "expected positive modal premises");
    require(p.agent() == neg.agent(), "modal premises must refer to the same agent");
  }
}

// Each literal of `lit` must be matched by exactly one entry of `required`.
void check_cover(std::vector<Literal> required, const Clause& lit) {
  std::sort(required.begin(), required.end());
  require(std::adjacent_find(required.begin(), required.end()) == required.end(), "literal covered twice");
  const Clause norm = lit.normalized();
  require(required == norm.disjuncts(), "modal premises do not cover the literal clause");
}

Clause negated_lhs_clause(std::span<const Clause> pos, const Clause& neg) {
  std::vector<Literal> out;
  for (const Clause& p : pos) out.push_back(p.lhs().complement());
  out.push_back(neg.lhs().complement());
  return Clause::literal(std::move(out)).normalized();
}

// Interns w^{a,l} on first use; the caller owns adding its definition clauses.
Literal definition_of(SymbolTable& symbols, Agent a, Literal l) {
  if (symbols.is_definition(l.symbol())) {
    throw DefinitionUnavailable("definition symbols may not be nested: " + symbols.render(l));
  }
  return Literal(symbols.definition(a, l), false);
}

}  // namespace

Clause ires(const Clause& first, const Clause& initial, Literal pivot) {
  require(first.kind() == ClauseKind::Literal || first.kind() == ClauseKind::Initial,
          "IRES: first premise must be a literal or initial clause");
  require(initial.kind() == ClauseKind::Initial, "IRES: second premise must be an initial clause");
  require(first.contains(pivot), "IRES: pivot absent from first premise");
  require(initial.contains(pivot.complement()), "IRES: complement of pivot absent from second premise");
  auto lits = without(first.disjuncts(), pivot);
  auto rest = without(initial.disjuncts(), pivot.complement());
  lits.insert(lits.end(), rest.begin(), rest.end());
  return Clause::initial(std::move(lits)).normalized();
}

Clause lres(const Clause& c1, const Clause& c2, Literal pivot) {
  require(c1.kind() == ClauseKind::Literal && c2.kind() == ClauseKind::Literal, "LRES: premises must be literal clauses");
  require(c1.contains(pivot), "LRES: pivot absent from first premise");
  require(c2.contains(pivot.complement()), "LRES: complement of pivot absent from second premise");
  auto lits = without(c1.disjuncts(), pivot);
  auto rest = without(c2.disjuncts(), pivot.complement());
  lits.insert(lits.end(), rest.begin(), rest.end());
  return Clause::literal(std::move(lits)).normalized();
}

Clause mres(const Clause& pos, const Clause& neg) {
  require(pos.kind() == ClauseKind::PositiveModal && neg.kind() == ClauseKind::NegativeModal,
          "MRES: expected a positive and a negative modal clause");
  require(pos.agent() == neg.agent(), "MRES: agent mismatch");
  require(pos.rhs() == neg.rhs(), "MRES: right-hand literals differ");
  return Clause::literal({pos.lhs().complement(), neg.lhs().complement()}).normalized();
}

Clause nec1(std::span<const Clause> pos, const Clause& neg, const Clause& lit) {
  require(neg.kind() == ClauseKind::NegativeModal, "NEC1: expected a negative modal clause");
  require(lit.kind() == ClauseKind::Literal, "NEC1: expected a literal clause");
  check_same_agent(pos, neg);
  std::vector<Literal> required;
  for (const Clause& p : pos) required.push_back(p.rhs().complement());
  required.push_back(neg.rhs());
  check_cover(std::move(required), lit);
  return negated_lhs_clause(pos, neg);
}

Clause nec2(const Clause& pos1, const Clause& pos2, const Clause& neg) {
  require(neg.kind() == ClauseKind::NegativeModal, "NEC2: expected a negative modal clause");
  const Clause both[] = {pos1, pos2};
  check_same_agent(both, neg);
  require(pos1.rhs() == pos2.rhs().complement(), "NEC2: positive right-hand literals are not complementary");
  return Clause::literal({pos1.lhs().complement(), pos2.lhs().complement(), neg.lhs().complement()}).normalized();
}

Clause nec3(std::span<const Clause> pos, const Clause& neg, const Clause& lit) {
  require(!pos.empty(), "NEC3: needs at least one positive modal clause");
  require(neg.kind() == ClauseKind::NegativeModal, "NEC3: expected a negative modal clause");
  require(lit.kind() == ClauseKind::Literal, "NEC3: expected a literal clause");
  require(!lit.contains(neg.rhs()), "NEC3: negative clause literal occurs in the literal clause");
  check_same_agent(pos, neg);
  std::vector<Literal> required;
  for (const Clause& p : pos) required.push_back(p.rhs().complement());
  check_cover(std::move(required), lit);
  return negated_lhs_clause(pos, neg);
}

std::pair<Literal, bool> DisjunctionNamer::name(const std::vector<Literal>& d, SymbolTable& symbols) {
  auto it = names_.find(d);
  if (it != names_.end()) return {it->second, false};
  const Literal s(symbols.fresh_renaming(), false);
  names_.emplace(d, s);
  return {s, true};
}

bool confluence_applies(const Exponents& e, const Clause& premise) {
  if (takes_literal_premise(e)) return premise.kind() == ClauseKind::Literal;
  // q = 0 with p = 1: negative modal premise l => <a>l'.
  if (e[0] == 1 && e[1] == 0) return premise.kind() == ClauseKind::NegativeModal;
  return premise.kind() == ClauseKind::PositiveModal;
}

std::vector<Clause> confluence_step(const RuleId& rule, const Clause& premise, SymbolTable& symbols,
                                    std::optional<Literal> pivot, DisjunctionNamer* namer) {
  require(rule.kind == RuleKind::Confluence, "not a confluence rule");
  const Exponents& e = rule.pqrs;
  const Agent a = rule.agent;
  require(confluence_applies(e, premise), "premise does not match the rule's premise shape");
  if (premise.is_modal()) require(premise.agent() == a, "premise refers to another agent");

  auto one = [](Clause c) { return std::vector<Clause>{c.normalized()}; };

  if (takes_literal_premise(e)) {
    require(pivot.has_value() && premise.contains(*pivot), "literal-premise rule needs a pivot from the premise");
    const Literal l = *pivot;
    auto make = [&](Literal lhs) -> Clause {
      if (e == Exponents{0, 0, 0, 1}) return Clause::not_box(lhs, a, l.complement());
      if (e == Exponents{0, 0, 1, 0}) return Clause::box(lhs, a, l);
      if (e == Exponents{0, 0, 1, 1}) return Clause::box(lhs, a, definition_of(symbols, a, l));
      throw RuleError("no such literal-premise rule");
    };
    const auto d = without(premise.normalized().disjuncts(), l);
    if (d.size() == 1) return one(make(d.front().complement()));
    require(namer != nullptr, "renaming ~D needs a disjunction namer");
    // Build the conclusion before naming so a failed lookup leaves no symbol behind.
    make(l);
    auto [s, fresh] = namer->name(d, symbols);
    std::vector<Literal> def = d;
    def.push_back(s);
    return {Clause::literal(std::move(def)).normalized(), make(s).normalized()};
  }

  const Literal l = premise.lhs();
  if (premise.kind() == ClauseKind::NegativeModal) {
    // premise: l => ~[a]m, read as l => <a>l' with l' = ~m.
    const Literal lp = premise.rhs().complement();
    if (e == Exponents{1, 0, 0, 0}) return one(Clause::literal({l.complement(), lp}));
    if (e == Exponents{1, 0, 1, 0}) return one(Clause::box(l, a, lp));
    if (e == Exponents{1, 0, 1, 1}) return one(Clause::box(l, a, definition_of(symbols, a, lp)));
    throw RuleError("no such negative-premise rule");
  }

  const Literal lp = premise.rhs();
  if (e == Exponents{0, 1, 0, 0}) return one(Clause::literal({l.complement(), lp}));
  if (e == Exponents{1, 1, 0, 0}) return one(Clause::box(lp.complement(), a, l.complement()));
  if (e == Exponents{0, 1, 0, 1}) return one(Clause::not_box(l, a, lp.complement()));
  if (e == Exponents{0, 1, 1, 1}) return one(Clause::box(l, a, definition_of(symbols, a, lp)));
  if (e == Exponents{1, 1, 0, 1}) return one(Clause::not_box(definition_of(symbols, a, l), a, lp.complement()));
  if (e == Exponents{1, 1, 1, 0}) return one(Clause::box(definition_of(symbols, a, l), a, lp));
  if (e == Exponents{1, 1, 1, 1}) {
    return one(Clause::box(definition_of(symbols, a, l), a, definition_of(symbols, a, lp)));
  }
  throw RuleError("no such positive-premise rule");
}

}  // namespace confres
