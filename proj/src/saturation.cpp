#include "saturation.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "calculus.hpp"

namespace confres {

std::optional<Clause> simplify(const Clause& c) {
  Clause n = c.normalized();
  if (n.is_tautology()) return std::nullopt;
  return n;
}

namespace {

// Both sorted.
bool sorted_subset(const std::vector<Literal>& small, const std::vector<Literal>& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

bool subsumes(const Clause& general, const Clause& specific) {
  if (general.is_modal() || specific.is_modal()) return general == specific;
  const bool kinds_ok = general.kind() == specific.kind() ||
                        (general.kind() == ClauseKind::Literal && specific.kind() == ClauseKind::Initial);
  if (!kinds_ok) return false;
  const Clause g = general.normalized();
  const Clause s = specific.normalized();
  return sorted_subset(g.disjuncts(), s.disjuncts());
}

std::vector<std::pair<std::string, int>> Proof::rule_counts() const {
  std::map<std::string, int> counts;
  for (const auto& s : steps) {
    if (s.why.rule) ++counts[s.why.rule->name()];
  }
  return {counts.begin(), counts.end()};
}

int Proof::count(const std::string& rule_name) const {
  int n = 0;
  for (const auto& s : steps) {
    if (s.why.rule && s.why.rule->name() == rule_name) ++n;
  }
  return n;
}

Proof extract_proof(const ClauseSet& derivation, std::size_t index) {
  if (index >= derivation.size() || !derivation[index].clause.is_contradiction()) {
    throw std::invalid_argument("clause " + std::to_string(index) + " is not a contradiction");
  }
  std::set<std::size_t> seen;
  std::vector<std::size_t> stack{index};
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    if (!seen.insert(i).second) continue;
    for (std::size_t p : derivation[i].why.premises) stack.push_back(p);
  }
  Proof proof;
  for (std::size_t i : seen) proof.steps.push_back(ProofStep{i, derivation[i].clause, derivation[i].why});
  return proof;
}

std::string render_proof(const Proof& proof, const SymbolTable& symbols) {
  std::map<std::size_t, std::size_t> number;
  for (std::size_t k = 0; k < proof.steps.size(); ++k) number[proof.steps[k].index] = k + 1;
  std::string out;
  for (std::size_t k = 0; k < proof.steps.size(); ++k) {
    const auto& s = proof.steps[k];
    out += std::to_string(k + 1) + ". " + render_clause(s.clause, symbols) + "  [";
    switch (s.why.origin) {
      case Justification::Origin::Input: out += "input"; break;
      case Justification::Origin::Definition: out += "def"; break;
      case Justification::Origin::Inference: {
        out += s.why.rule->name() + ", ";
        for (std::size_t j = 0; j < s.why.premises.size(); ++j) {
          if (j) out += ',';
          out += std::to_string(number.at(s.why.premises[j]));
        }
        break;
      }
    }
    out += "]\n";
  }
  return out;
}

namespace {

using Index = std::size_t;
using Clock = std::chrono::steady_clock;

struct ResourceExceeded {
  std::string reason;
};

// Sorted disjunct lists of the active clauses, for subset queries.
class SubsetTrie {
 public:
  void insert(const std::vector<Literal>& d) { ++nodes_[walk(d, true)].ends; }
  void erase(const std::vector<Literal>& d) { --nodes_[walk(d, false)].ends; }

  /// Some stored list is a subset of `d`.
  bool has_subset_of(const std::vector<Literal>& d) const { return search(0, d, 0); }

 private:
  struct Node {
    std::map<std::uint32_t, std::size_t> kids;
    int ends = 0;
  };

  std::size_t walk(const std::vector<Literal>& d, bool grow) {
    std::size_t n = 0;
    for (Literal x : d) {
      auto it = nodes_[n].kids.find(x.code());
      if (it == nodes_[n].kids.end()) {
        if (!grow) throw std::logic_error("erasing a clause the trie does not hold");
        nodes_.emplace_back();
        it = nodes_[n].kids.emplace(x.code(), nodes_.size() - 1).first;
      }
      n = it->second;
    }
    return n;
  }

  bool search(std::size_t n, const std::vector<Literal>& d, std::size_t from) const {
    const Node& node = nodes_[n];
    if (node.ends > 0) return true;
    for (std::size_t j = from; j < d.size(); ++j) {
      auto it = node.kids.find(d[j].code());
      if (it != node.kids.end() && search(it->second, d, j + 1)) return true;
    }
    return false;
  }

  std::vector<Node> nodes_ = std::vector<Node>(1);
};

struct AgentIndex {
  std::map<Literal, std::vector<Index>> pos_by_rhs;
  std::map<Literal, std::vector<Index>> neg_by_rhs;
  std::vector<Index> neg_all;
  std::vector<RuleId> rules;
};

class Saturator {
 public:
  Saturator(ClauseSet& set, const LogicSpec& spec, const Limits& limits, Statistics& stats)
      : set_(set), spec_(spec), limits_(limits), stats_(stats), started_(Clock::now()) {
    for (Agent a : spec.agents()) agent(a).rules = spec.enabled_rules(a);
    for (Agent a : spec.agents()) {
      for (const RuleId& r : spec.enabled_rules(a)) {
        if (takes_literal_premise(r.pqrs)) literal_rules_.push_back(r);
      }
    }
  }

  /// Returns the index of a contradiction, or nullopt when saturated.
  std::optional<Index> run() {
    const std::size_t n = set_.size();
    for (Index i = 0; i < n; ++i) {
      active_.push_back(false);
      auto simplified = simplify(set_[i].clause);
      if (!simplified) {
        set_[i].retired = true;
        ++stats_.tautologies;
        continue;
      }
      set_[i].clause = *simplified;
      if (!seen_.emplace(set_[i].clause, i).second) {
        set_[i].retired = true;
        continue;
      }
      if (set_[i].clause.is_contradiction()) return i;
      passive_.push({set_[i].clause.weight(), i});
    }
    for (Index i = 0; i < n; ++i) {
      if (!set_[i].retired) ensure_definitions(set_[i].clause);
    }
    while (!passive_.empty()) {
      check_limits();
      const Index given = passive_.top().second;
      passive_.pop();
      if (set_[given].retired) continue;
      ++stats_.selected;
      if (subsumed_by_active(clause(given))) {
        set_[given].retired = true;
        ++stats_.forward_subsumed;
        continue;
      }
      backward_subsume(given);
      activate(given);
      infer(given);
      if (contradiction_) return contradiction_;
    }
    return std::nullopt;
  }

 private:
  AgentIndex& agent(Agent a) { return agents_[a.id]; }
  const Clause& clause(Index i) const { return set_[i].clause; }
  bool active(Index i) const { return active_[i]; }

  void check_limits() {
    if (set_.size() > limits_.max_clauses) {
      throw ResourceExceeded{"clause limit of " + std::to_string(limits_.max_clauses) + " exceeded"};
    }
    const double elapsed = std::chrono::duration<double>(Clock::now() - started_).count();
    if (elapsed > limits_.max_seconds) {
      throw ResourceExceeded{"time limit of " + std::to_string(limits_.max_seconds) + " s exceeded"};
    }
  }

  // Records a conclusion unless it is a tautology or already known.
  void conclude(Clause c, const RuleId& rule, std::vector<Index> premises) {
    if (contradiction_) return;
    ++stats_.generated;
    auto simplified = simplify(c);
    if (!simplified) {
      ++stats_.tautologies;
      return;
    }
    if (seen_.count(*simplified)) return;
    // Redundant against the active set already: never recorded.
    if (subsumed_by_active(*simplified)) {
      ++stats_.forward_subsumed;
      return;
    }
    const Index i = set_.add(*simplified, Justification::inference(rule, std::move(premises)));
    active_.push_back(false);
    seen_.emplace(clause(i), i);
    if (clause(i).is_contradiction()) {
      contradiction_ = i;
      return;
    }
    passive_.push({clause(i).weight(), i});
    if ((set_.size() & 0x3ff) == 0) check_limits();
  }

  // Every definition symbol in play carries its two definition clauses.
  void ensure_definitions(const Clause& c) {
    c.for_each_symbol([&](Symbol s) {
      if (!set_.symbols.is_definition(s) || !defined_.insert(s).second) return;
      const SymbolInfo& info = set_.symbols.info(s);
      const Literal w(s, false);
      for (Clause d : {Clause::not_box(w, info.agent, ~info.defined), Clause::box(~w, info.agent, ~info.defined)}) {
        if (seen_.count(d)) continue;
        const Index i = set_.add(std::move(d), Justification::definition());
        active_.push_back(false);
        seen_.emplace(clause(i), i);
        passive_.push({clause(i).weight(), i});
        ++stats_.definitions;
      }
    });
  }

  bool subsumed_by_active(const Clause& c) const {
    if (c.is_modal()) return false;
    if (lit_trie_.has_subset_of(c.disjuncts())) return true;
    return c.kind() == ClauseKind::Initial && init_trie_.has_subset_of(c.disjuncts());
  }

  void backward_subsume(Index i) {
    const Clause& c = clause(i);
    if (c.is_modal() || c.disjuncts().empty()) return;
    auto sweep = [&](std::unordered_map<Literal, std::vector<Index>>& occ) {
      Literal rarest = c.disjuncts().front();
      std::size_t best = SIZE_MAX;
      for (Literal x : c.disjuncts()) {
        auto it = occ.find(x);
        const std::size_t n = it == occ.end() ? 0 : it->second.size();
        if (n < best) {
          best = n;
          rarest = x;
        }
      }
      auto it = occ.find(rarest);
      if (it == occ.end()) return;
      for (Index s : it->second) {
        if (s != i && active(s) && sorted_subset(c.disjuncts(), clause(s).disjuncts())) {
          active_[s] = false;
          set_[s].retired = true;
          (clause(s).kind() == ClauseKind::Literal ? lit_trie_ : init_trie_).erase(clause(s).disjuncts());
          ++stats_.backward_subsumed;
        }
      }
    };
    if (c.kind() == ClauseKind::Literal) sweep(lit_occ_);
    sweep(init_occ_);
  }

  void activate(Index i) {
    active_[i] = true;
    const Clause& c = clause(i);
    switch (c.kind()) {
      case ClauseKind::Literal:
        for (Literal x : c.disjuncts()) lit_occ_[x].push_back(i);
        lit_trie_.insert(c.disjuncts());
        active_literals_.push_back(i);
        break;
      case ClauseKind::Initial:
        for (Literal x : c.disjuncts()) init_occ_[x].push_back(i);
        init_trie_.insert(c.disjuncts());
        break;
      case ClauseKind::PositiveModal: agent(c.agent()).pos_by_rhs[c.rhs()].push_back(i); break;
      case ClauseKind::NegativeModal: {
        auto& a = agent(c.agent());
        a.neg_by_rhs[c.rhs()].push_back(i);
        a.neg_all.push_back(i);
        break;
      }
    }
  }

  std::vector<Index> active_in(const std::vector<Index>& v) const {
    std::vector<Index> out;
    for (Index i : v) {
      if (active(i)) out.push_back(i);
    }
    return out;
  }

  std::vector<Index> active_at(const std::map<Literal, std::vector<Index>>& m, Literal key) const {
    auto it = m.find(key);
    return it == m.end() ? std::vector<Index>{} : active_in(it->second);
  }

  std::vector<Index> active_at(const std::unordered_map<Literal, std::vector<Index>>& m, Literal key) const {
    auto it = m.find(key);
    return it == m.end() ? std::vector<Index>{} : active_in(it->second);
  }

  // Calls `fn` with one positive a-clause per literal of `to_cover`, whose
  // right-hand side is that literal's complement. `fixed` pins the choice
  // for one literal.
  void for_each_cover(const AgentIndex& a, const std::vector<Literal>& to_cover, std::optional<std::pair<Literal, Index>> fixed,
                      const std::function<void(const std::vector<Index>&)>& fn) {
    std::vector<std::vector<Index>> choices;
    for (Literal x : to_cover) {
      if (fixed && fixed->first == x) {
        choices.push_back({fixed->second});
        continue;
      }
      auto c = active_at(a.pos_by_rhs, x.complement());
      if (c.empty()) return;
      choices.push_back(std::move(c));
    }
    std::vector<std::size_t> pos(choices.size(), 0);
    std::vector<Index> chosen(choices.size());
    for (;;) {
      for (std::size_t k = 0; k < choices.size(); ++k) chosen[k] = choices[k][pos[k]];
      fn(chosen);
      if (contradiction_) return;
      std::size_t k = 0;
      while (k < choices.size() && ++pos[k] == choices[k].size()) {
        pos[k] = 0;
        ++k;
      }
      if (k == choices.size()) return;
    }
  }

  void modal_conclusion(RuleKind kind, const std::vector<Index>& pos, Index neg, std::optional<Index> lit) {
    std::vector<Literal> lits;
    for (Index p : pos) lits.push_back(clause(p).lhs().complement());
    lits.push_back(clause(neg).lhs().complement());
    std::vector<Index> premises = pos;
    premises.push_back(neg);
    if (lit) premises.push_back(*lit);
    conclude(Clause::literal(std::move(lits)), RuleId::k(kind, clause(neg).agent()), std::move(premises));
  }

  // NEC1 with literal clause `lit` and negative clause literal `x` in it.
  void nec1_for(const AgentIndex& a, Index lit, Literal x, std::optional<std::pair<Literal, Index>> fixed,
                const std::vector<Index>& negs) {
    if (negs.empty()) return;
    std::vector<Literal> rest;
    for (Literal y : clause(lit).disjuncts()) {
      if (y != x) rest.push_back(y);
    }
    for_each_cover(a, rest, fixed, [&](const std::vector<Index>& pos) {
      for (Index n : negs) modal_conclusion(RuleKind::NEC1, pos, n, lit);
    });
  }

  void nec3_for(const AgentIndex& a, Index lit, std::optional<std::pair<Literal, Index>> fixed,
                const std::vector<Index>& negs) {
    const Clause& l = clause(lit);
    std::vector<Index> usable;
    for (Index n : negs) {
      if (!l.contains(clause(n).rhs())) usable.push_back(n);
    }
    if (usable.empty() || l.disjuncts().empty()) return;
    for_each_cover(a, l.disjuncts(), fixed, [&](const std::vector<Index>& pos) {
      for (Index n : usable) modal_conclusion(RuleKind::NEC3, pos, n, lit);
    });
  }

  void apply_confluence(const RuleId& rule, Index i, std::optional<Literal> pivot) {
    std::vector<Clause> out;
    try {
      out = confluence_step(rule, clause(i), set_.symbols, pivot, &namer_);
    } catch (const DefinitionUnavailable&) {
      return;
    }
    for (Clause& c : out) {
      ensure_definitions(c);
      conclude(std::move(c), rule, {i});
    }
  }

  bool mentions_renaming(const Clause& c) const {
    bool found = false;
    c.for_each_symbol([&](Symbol s) { found = found || set_.symbols.info(s).kind == SymbolKind::Renaming; });
    return found;
  }

  void infer(Index i) {
    const Clause c = clause(i);
    switch (c.kind()) {
      case ClauseKind::Literal: infer_literal(i, c); break;
      case ClauseKind::Initial: infer_initial(i, c); break;
      case ClauseKind::PositiveModal: infer_positive(i, c); break;
      case ClauseKind::NegativeModal: infer_negative(i, c); break;
    }
  }

  void infer_literal(Index i, const Clause& c) {
    for (Literal x : c.disjuncts()) {
      for (Index e : active_at(lit_occ_, x.complement())) conclude(lres(c, clause(e), x), RuleId::k(RuleKind::LRES), {i, e});
      for (Index e : active_at(init_occ_, x.complement())) conclude(ires(c, clause(e), x), RuleId::k(RuleKind::IRES1), {i, e});
    }
    for (auto& [id, a] : agents_) {
      for (Literal x : c.disjuncts()) nec1_for(a, i, x, std::nullopt, active_at(a.neg_by_rhs, x));
      nec3_for(a, i, std::nullopt, active_in(a.neg_all));
      if (contradiction_) return;
    }
    if (!literal_rules_.empty() && !mentions_renaming(c)) {
      for (const RuleId& r : literal_rules_) {
        for (Literal x : c.disjuncts()) apply_confluence(r, i, x);
      }
    }
  }

  void infer_initial(Index i, const Clause& c) {
    for (Literal x : c.disjuncts()) {
      for (Index e : active_at(lit_occ_, x.complement())) {
        conclude(ires(clause(e), c, x.complement()), RuleId::k(RuleKind::IRES1), {e, i});
      }
      for (Index e : active_at(init_occ_, x.complement())) {
        if (e != i) conclude(ires(c, clause(e), x), RuleId::k(RuleKind::IRES2), {i, e});
      }
    }
  }

  void infer_positive(Index i, const Clause& c) {
    AgentIndex& a = agent(c.agent());
    const Agent ag = c.agent();
    for (Index n : active_at(a.neg_by_rhs, c.rhs())) {
      conclude(Clause::literal({c.lhs().complement(), clause(n).lhs().complement()}), RuleId::k(RuleKind::MRES, ag), {i, n});
    }
    const auto negs = active_in(a.neg_all);
    for (Index p2 : active_at(a.pos_by_rhs, c.rhs().complement())) {
      for (Index n : negs) {
        conclude(Clause::literal({c.lhs().complement(), clause(p2).lhs().complement(), clause(n).lhs().complement()}),
                 RuleId::k(RuleKind::NEC2, ag), {i, p2, n});
      }
    }
    const Literal covered = c.rhs().complement();
    const std::pair<Literal, Index> fixed{covered, i};
    for (Index lit : active_at(lit_occ_, covered)) {
      for (Literal x : clause(lit).disjuncts()) {
        if (x != covered) nec1_for(a, lit, x, fixed, active_at(a.neg_by_rhs, x));
      }
      nec3_for(a, lit, fixed, negs);
      if (contradiction_) return;
    }
    for (const RuleId& r : a.rules) {
      if (confluence_applies(r.pqrs, c)) apply_confluence(r, i, std::nullopt);
    }
  }

  void infer_negative(Index i, const Clause& c) {
    AgentIndex& a = agent(c.agent());
    const Agent ag = c.agent();
    for (Index p : active_at(a.pos_by_rhs, c.rhs())) {
      conclude(Clause::literal({clause(p).lhs().complement(), c.lhs().complement()}), RuleId::k(RuleKind::MRES, ag), {p, i});
    }
    for (const auto& [rhs, list] : a.pos_by_rhs) {
      if (rhs.negative()) continue;
      const auto p1s = active_in(list);
      if (p1s.empty()) continue;
      const auto p2s = active_at(a.pos_by_rhs, rhs.complement());
      for (Index p1 : p1s) {
        for (Index p2 : p2s) {
          conclude(Clause::literal({clause(p1).lhs().complement(), clause(p2).lhs().complement(), c.lhs().complement()}),
                   RuleId::k(RuleKind::NEC2, ag), {p1, p2, i});
        }
      }
    }
    for (Index lit : active_at(lit_occ_, c.rhs())) nec1_for(a, lit, c.rhs(), std::nullopt, {i});
    for (Index lit : active_in(active_literals_)) nec3_for(a, lit, std::nullopt, {i});
    for (const RuleId& r : a.rules) {
      if (confluence_applies(r.pqrs, c)) apply_confluence(r, i, std::nullopt);
    }
  }

  ClauseSet& set_;
  const LogicSpec& spec_;
  Limits limits_;
  Statistics& stats_;
  Clock::time_point started_;

  std::vector<bool> active_;
  std::unordered_map<Clause, Index, ClauseHash> seen_;
  using Key = std::pair<std::size_t, Index>;
  std::priority_queue<Key, std::vector<Key>, std::greater<>> passive_;

  std::unordered_map<Literal, std::vector<Index>> lit_occ_;
  std::unordered_map<Literal, std::vector<Index>> init_occ_;
  SubsetTrie lit_trie_;
  SubsetTrie init_trie_;
  std::vector<Index> active_literals_;
  std::map<int, AgentIndex> agents_;
  std::vector<RuleId> literal_rules_;
  DisjunctionNamer namer_;
  std::unordered_set<Symbol> defined_;
  std::optional<Index> contradiction_;
};

}  // namespace

SaturationResult saturate(ClauseSet input, const LogicSpec& spec, const Limits& limits) {
  SaturationResult result;
  result.derivation = std::move(input);
  const auto t0 = Clock::now();
  Saturator sat(result.derivation, spec, limits, result.stats);
  try {
    if (auto idx = sat.run()) {
      result.outcome = Outcome::Unsatisfiable;
      result.proof = extract_proof(result.derivation, *idx);
    } else {
      result.outcome = Outcome::Saturated;
    }
  } catch (const ResourceExceeded& e) {
    result.outcome = Outcome::ResourceLimit;
    result.limit_reason = e.reason;
  }
  result.stats.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return result;
}

}  // namespace confres
