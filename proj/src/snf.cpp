#include "snf.hpp"

#include <optional>
#include <set>
#include <stdexcept>
#include <unordered_set>
#include <utility>

namespace confres {

namespace {

using K = Formula::Kind;

// Rewrites Iff, Implies and Dia into Not/And/Or/Box.
Formula core(const Formula& f) {
  switch (f.kind()) {
    case K::True:
    case K::False:
    case K::Prop: return f;
    case K::Start: throw std::invalid_argument("'start' cannot be translated");
    case K::Not: return Formula::negation(core(f.operand()));
    case K::And: return Formula::conj(core(f.left()), core(f.right()));
    case K::Or: return Formula::disj(core(f.left()), core(f.right()));
    case K::Implies: return Formula::disj(Formula::negation(core(f.left())), core(f.right()));
    case K::Iff: {
      const Formula a = core(f.left());
      const Formula b = core(f.right());
      return Formula::conj(Formula::disj(Formula::negation(a), b), Formula::disj(Formula::negation(b), a));
    }
    case K::Box: return Formula::box(f.agent(), core(f.operand()));
    case K::Dia: return Formula::negation(Formula::box(f.agent(), Formula::negation(core(f.operand()))));
  }
  throw std::logic_error("unreachable");
}

// A formula under an explicit polarity.
struct Signed {
  const Formula* f;
  bool negated;
};

// Strips negations.
Signed peel(const Formula& f, bool negated) {
  const Formula* cur = &f;
  while (cur->is(K::Not)) {
    cur = &cur->operand();
    negated = !negated;
  }
  return {cur, negated};
}

class Translator {
 public:
  explicit Translator(ClauseSet& out) : out_(out) {}

  void run(const Formula& f) {
    const Formula c = core(f);
    const Literal t0(out_.symbols.fresh_surrogate(), false);
    emit(Clause::initial({t0}));
    translate(t0, c, false);
  }

 private:
  void emit(Clause c) {
    c = c.normalized();
    if (c.is_tautology()) return;
    out_.add(std::move(c), Justification::input());
  }

  Literal fresh() { return Literal(out_.symbols.fresh_surrogate(), false); }

  std::optional<Literal> as_literal(Signed s) {
    if (!s.f->is(K::Prop)) return std::nullopt;
    return Literal(out_.symbols.intern(s.f->name()), s.negated);
  }

  static std::optional<bool> as_constant(Signed s) {
    if (s.f->is(K::True)) return !s.negated;
    if (s.f->is(K::False)) return s.negated;
    return std::nullopt;
  }

  // Flattens a (signed) disjunction into its disjuncts.
  static void disjuncts(const Formula& f, bool negated, std::vector<Signed>& out) {
    const Signed s = peel(f, negated);
    const bool is_or = (s.f->is(K::Or) && !s.negated) || (s.f->is(K::And) && s.negated);
    if (is_or) {
      disjuncts(s.f->left(), s.negated, out);
      disjuncts(s.f->right(), s.negated, out);
    } else {
      out.push_back(s);
    }
  }

  // Emits clauses for  t => (negated ? ~f : f).
  void translate(Literal t, const Formula& f, bool negated) {
    const Signed s = peel(f, negated);
    if (auto v = as_constant(s)) {
      if (!*v) emit(Clause::literal({t.complement()}));
      return;
    }
    if (auto l = as_literal(s)) {
      emit(Clause::literal({t.complement(), *l}));
      return;
    }
    const Formula& g = *s.f;
    if ((g.is(K::And) && !s.negated) || (g.is(K::Or) && s.negated)) {
      translate(t, g.left(), s.negated);
      translate(t, g.right(), s.negated);
      return;
    }
    if (g.is(K::Or) || g.is(K::And)) {
      translate_disjunction(t, g, s.negated);
      return;
    }
    if (g.is(K::Box)) {
      const Signed body = peel(g.operand(), false);
      const auto lit = as_literal(body);
      if (!s.negated) {
        if (lit) {
          emit(Clause::box(t, g.agent(), *lit));
          return;
        }
        if (auto v = as_constant(body); v && *v) return;
        const Literal t1 = fresh();
        emit(Clause::box(t, g.agent(), t1));
        translate(t1, g.operand(), false);
        return;
      }
      if (lit) {
        emit(Clause::not_box(t, g.agent(), *lit));
        return;
      }
      if (auto v = as_constant(body); v && *v) {
        emit(Clause::literal({t.complement()}));
        return;
      }
      // t => ~[a]chi becomes t => ~[a]~t1 with t1 => ~chi.
      const Literal t1 = fresh();
      emit(Clause::not_box(t, g.agent(), t1.complement()));
      translate(t1, g.operand(), true);
      return;
    }
    throw std::logic_error("unexpected connective in translation");
  }

  void translate_disjunction(Literal t, const Formula& g, bool negated) {
    std::vector<Signed> parts;
    disjuncts(g, negated, parts);
    std::vector<Literal> lits{t.complement()};
    std::vector<std::pair<Literal, Signed>> renamed;
    for (const Signed& d : parts) {
      if (auto v = as_constant(d)) {
        if (*v) return;
        continue;
      }
      if (auto l = as_literal(d)) {
        lits.push_back(*l);
        continue;
      }
      const Literal ti = fresh();
      lits.push_back(ti);
      renamed.emplace_back(ti, d);
    }
    emit(Clause::literal(std::move(lits)));
    for (const auto& [ti, d] : renamed) translate(ti, *d.f, d.negated);
  }

  ClauseSet& out_;
};

}  // namespace

void to_snf(const Formula& f, ClauseSet& out) { Translator(out).run(f); }

ClauseSet to_snf(const Formula& f) {
  ClauseSet out;
  to_snf(f, out);
  return out;
}

std::vector<Literal> definable_literals(const ClauseSet& set, DefinitionScope scope) {
  std::vector<bool> present(set.symbols.size(), false);
  for (const auto& e : set.entries()) {
    if (scope == DefinitionScope::AllLiterals) {
      e.clause.for_each_symbol([&](Symbol s) { present[s] = true; });
    } else if (e.clause.is_modal()) {
      present[e.clause.rhs().symbol()] = true;
    }
  }
  std::vector<Literal> out;
  for (Symbol s = 0; s < present.size(); ++s) {
    if (!present[s]) continue;
    const auto kind = set.symbols.info(s).kind;
    if (kind == SymbolKind::Definition || kind == SymbolKind::Renaming) continue;
    out.emplace_back(s, false);
    out.emplace_back(s, true);
  }
  return out;
}

std::vector<Clause> definition_clauses(std::span<const Literal> literals, std::span<const Agent> agents,
                                       SymbolTable& symbols) {
  for (Literal l : literals) {
    if (symbols.is_definition(l.symbol())) {
      throw std::invalid_argument("definition symbols cannot be defined: " + symbols.render(l));
    }
  }
  std::vector<Clause> out;
  for (Agent a : agents) {
    for (Literal l : literals) {
      const Literal w(symbols.definition(a, l), false);
      out.push_back(Clause::not_box(w, a, l.complement()));
      out.push_back(Clause::box(w.complement(), a, l.complement()));
    }
  }
  return out;
}

std::size_t add_mentioned_definitions(ClauseSet& set) {
  std::unordered_set<Clause, ClauseHash> have;
  std::set<Symbol> mentioned;
  for (const auto& e : set.entries()) {
    have.insert(e.clause);
    e.clause.for_each_symbol([&](Symbol s) {
      if (set.symbols.is_definition(s)) mentioned.insert(s);
    });
  }
  std::size_t added = 0;
  for (Symbol s : mentioned) {
    const SymbolInfo info = set.symbols.info(s);
    const Literal w(s, false);
    for (Clause c : {Clause::not_box(w, info.agent, ~info.defined), Clause::box(~w, info.agent, ~info.defined)}) {
      if (have.insert(c).second) {
        set.add(std::move(c), Justification::definition());
        ++added;
      }
    }
  }
  return added;
}

std::size_t add_definition_clauses(ClauseSet& set, const LogicSpec& spec, DefinitionScope scope) {
  std::vector<Agent> agents;
  for (Agent a : spec.agents()) {
    if (spec.needs_definitions(a)) agents.push_back(a);
  }
  if (agents.empty()) return 0;
  const auto literals = definable_literals(set, scope);
  std::unordered_set<Clause, ClauseHash> have;
  for (const auto& e : set.entries()) have.insert(e.clause);
  std::size_t added = 0;
  for (Clause& c : definition_clauses(literals, agents, set.symbols)) {
    if (have.insert(c).second) {
      set.add(std::move(c), Justification::definition());
      ++added;
    }
  }
  return added;
}

}  // namespace confres
