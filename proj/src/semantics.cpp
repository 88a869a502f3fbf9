#include "semantics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <tuple>

#include "json.hpp"

#include "sat_solver.hpp"

namespace confres {

KripkeModel KripkeModel::with_worlds(int n) {
  KripkeModel m;
  m.world_count = n;
  m.valuation.assign(n, {});
  return m;
}

bool KripkeModel::related(Agent a, int w, int v) const {
  auto it = relations.find(a.id);
  return it != relations.end() && it->second.count({w, v}) != 0;
}

std::vector<int> KripkeModel::successors(Agent a, int w) const {
  std::vector<int> out;
  auto it = relations.find(a.id);
  if (it == relations.end()) return out;
  for (auto e = it->second.lower_bound({w, 0}); e != it->second.end() && e->first == w; ++e) out.push_back(e->second);
  return out;
}

std::vector<int> KripkeModel::reachable() const {
  std::vector<bool> seen(world_count, false);
  std::vector<int> stack{distinguished};
  seen[distinguished] = true;
  while (!stack.empty()) {
    const int w = stack.back();
    stack.pop_back();
    for (const auto& [agent, edges] : relations) {
      for (int v : successors(Agent{agent}, w)) {
        if (!seen[v]) {
          seen[v] = true;
          stack.push_back(v);
        }
      }
    }
  }
  std::vector<int> out;
  for (int w = 0; w < world_count; ++w) {
    if (seen[w]) out.push_back(w);
  }
  return out;
}

bool satisfies(const KripkeModel& m, int w, const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::True: return true;
    case K::False: return false;
    case K::Start: return w == m.distinguished;
    case K::Prop: return m.true_at(w, f.name());
    case K::Not: return !satisfies(m, w, f.operand());
    case K::And: return satisfies(m, w, f.left()) && satisfies(m, w, f.right());
    case K::Or: return satisfies(m, w, f.left()) || satisfies(m, w, f.right());
    case K::Implies: return !satisfies(m, w, f.left()) || satisfies(m, w, f.right());
    case K::Iff: return satisfies(m, w, f.left()) == satisfies(m, w, f.right());
    case K::Box: {
      for (int v : m.successors(f.agent(), w)) {
        if (!satisfies(m, v, f.operand())) return false;
      }
      return true;
    }
    case K::Dia: {
      for (int v : m.successors(f.agent(), w)) {
        if (satisfies(m, v, f.operand())) return true;
      }
      return false;
    }
  }
  return false;
}

namespace {

bool literal_at(const KripkeModel& m, int w, Literal l, const SymbolTable& symbols) {
  return m.true_at(w, symbols.name(l.symbol())) != l.negative();
}

}  // namespace

bool holds_at(const KripkeModel& m, int w, const Clause& c, const SymbolTable& symbols) {
  switch (c.kind()) {
    case ClauseKind::Initial:
      if (w != m.distinguished) return true;
      [[fallthrough]];
    case ClauseKind::Literal:
      return std::any_of(c.disjuncts().begin(), c.disjuncts().end(),
                         [&](Literal l) { return literal_at(m, w, l, symbols); });
    case ClauseKind::PositiveModal: {
      if (!literal_at(m, w, c.lhs(), symbols)) return true;
      for (int v : m.successors(c.agent(), w)) {
        if (!literal_at(m, v, c.rhs(), symbols)) return false;
      }
      return true;
    }
    case ClauseKind::NegativeModal: {
      if (!literal_at(m, w, c.lhs(), symbols)) return true;
      for (int v : m.successors(c.agent(), w)) {
        if (!literal_at(m, v, c.rhs(), symbols)) return true;
      }
      return false;
    }
  }
  return false;
}

bool holds_universally(const KripkeModel& m, const Clause& c, const SymbolTable& symbols) {
  for (int w : m.reachable()) {
    if (!holds_at(m, w, c, symbols)) return false;
  }
  return true;
}

bool holds_universally(const KripkeModel& m, const ClauseSet& set) {
  const auto worlds = m.reachable();
  for (const auto& e : set.entries()) {
    for (int w : worlds) {
      if (!holds_at(m, w, e.clause, set.symbols)) return false;
    }
  }
  return true;
}

bool frame_has_property(const KripkeModel& m, Agent a, FrameProperty p) {
  const int n = m.world_count;
  auto r = [&](int w, int v) { return m.related(a, w, v); };
  for (int w = 0; w < n; ++w) {
    switch (p) {
      case FrameProperty::Reflexive:
        if (!r(w, w)) return false;
        break;
      case FrameProperty::Serial: {
        bool any = false;
        for (int v = 0; v < n; ++v) any = any || r(w, v);
        if (!any) return false;
        break;
      }
      default:
        for (int v = 0; v < n; ++v) {
          if (!r(w, v)) continue;
          switch (p) {
            case FrameProperty::Symmetric:
              if (!r(v, w)) return false;
              break;
            case FrameProperty::ModallyBanal:
              if (w != v) return false;
              break;
            case FrameProperty::ZeroOneOneOneConvergent: {
              bool meet = false;
              for (int t = 0; t < n; ++t) meet = meet || (r(w, t) && r(v, t));
              if (!meet) return false;
              break;
            }
            default:
              for (int u = 0; u < n; ++u) {
                if (!r(w, u)) continue;
                if (p == FrameProperty::Functional && v != u) return false;
                if (p == FrameProperty::Euclidean && !r(v, u)) return false;
                if (p == FrameProperty::Convergent) {
                  bool meet = false;
                  for (int t = 0; t < n; ++t) meet = meet || (r(v, t) && r(u, t));
                  if (!meet) return false;
                }
              }
          }
        }
    }
  }
  return true;
}

bool frame_satisfies(const KripkeModel& m, const LogicSpec& spec) {
  for (Agent a : spec.agents()) {
    for (FrameProperty p : spec.frame_properties(a)) {
      if (!frame_has_property(m, a, p)) return false;
    }
  }
  return true;
}

namespace {

using sat::Lit;

void collect_agents(const Formula& f, std::set<int>& out) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::True:
    case K::False:
    case K::Start:
    case K::Prop: return;
    case K::Box:
    case K::Dia: out.insert(f.agent().id); [[fallthrough]];
    case K::Not: collect_agents(f.operand(), out); return;
    default:
      collect_agents(f.left(), out);
      collect_agents(f.right(), out);
  }
}

struct Vocabulary {
  std::vector<int> agents;  // ascending
  std::vector<std::string> symbols;  // sorted by name

  Vocabulary(std::set<int> agent_ids, const LogicSpec& spec, std::set<std::string> names) {
    for (Agent a : spec.agents()) agent_ids.insert(a.id);
    agents.assign(agent_ids.begin(), agent_ids.end());
    symbols.assign(names.begin(), names.end());
  }

  static Vocabulary of(const ClauseSet& set, const LogicSpec& spec) {
    std::set<int> agents;
    std::set<std::string> names;
    for (const auto& e : set.entries()) {
      if (e.clause.is_modal()) agents.insert(e.clause.agent().id);
      e.clause.for_each_symbol([&](Symbol s) { names.insert(set.symbols.name(s)); });
    }
    return Vocabulary(std::move(agents), spec, std::move(names));
  }

  static Vocabulary of(const Formula& f, const LogicSpec& spec) {
    std::set<int> agents;
    std::set<std::string> names;
    collect_agents(f, agents);
    f.collect_props(names);
    return Vocabulary(std::move(agents), spec, std::move(names));
  }
};

/// Propositional encoding of "some n-world model in the frame class".
class Grounding {
 public:
  Grounding(int n, const Vocabulary& vocab, const LogicSpec& spec) : n_(n), vocab_(vocab) {
    true_ = sat::pos(solver_.new_var());
    solver_.add_clause({true_});
    for (std::size_t a = 0; a < vocab.agents.size(); ++a) {
      for (int k = 0; k < n * n; ++k) rel_.push_back(solver_.new_var());
    }
    for (int w = 0; w < n; ++w) {
      for (std::size_t s = 0; s < vocab.symbols.size(); ++s) val_.push_back(solver_.new_var());
    }
    for (std::size_t a = 0; a < vocab.agents.size(); ++a) {
      for (FrameProperty p : spec.frame_properties(Agent{vocab.agents[a]})) add_frame(a, p);
    }
  }

  Lit rel(std::size_t agent_pos, int w, int v) const { return sat::pos(rel_[(agent_pos * n_ + w) * n_ + v]); }
  Lit val(int w, std::size_t sym_pos) const { return sat::pos(val_[w * vocab_.symbols.size() + sym_pos]); }
  Lit val(int w, const std::string& name) const {
    auto it = std::lower_bound(vocab_.symbols.begin(), vocab_.symbols.end(), name);
    return val(w, static_cast<std::size_t>(it - vocab_.symbols.begin()));
  }
  std::size_t agent_pos(Agent a) const {
    return static_cast<std::size_t>(std::lower_bound(vocab_.agents.begin(), vocab_.agents.end(), a.id) - vocab_.agents.begin());
  }

  void require(std::vector<Lit> c) { solver_.add_clause(std::move(c)); }

  void add_clauses(const ClauseSet& set) {
    auto lit = [&](int w, Literal l) {
      const Lit x = val(w, set.symbols.name(l.symbol()));
      return l.negative() ? sat::flip(x) : x;
    };
    for (const auto& e : set.entries()) {
      const Clause& c = e.clause;
      for (int w = 0; w < n_; ++w) {
        switch (c.kind()) {
          case ClauseKind::Initial:
            if (w != 0) break;
            [[fallthrough]];
          case ClauseKind::Literal: {
            std::vector<Lit> out;
            for (Literal l : c.disjuncts()) out.push_back(lit(w, l));
            require(out);
            break;
          }
          case ClauseKind::PositiveModal: {
            const std::size_t a = agent_pos(c.agent());
            for (int v = 0; v < n_; ++v) require({sat::flip(lit(w, c.lhs())), sat::flip(rel(a, w, v)), lit(v, c.rhs())});
            break;
          }
          case ClauseKind::NegativeModal: {
            const std::size_t a = agent_pos(c.agent());
            std::vector<Lit> out{sat::flip(lit(w, c.lhs()))};
            for (int v = 0; v < n_; ++v) out.push_back(make_and({rel(a, w, v), sat::flip(lit(v, c.rhs()))}));
            require(out);
            break;
          }
        }
      }
    }
  }

  Lit encode(const Formula& f, int w) {
    const auto key = std::make_pair(render(f), w);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    const Lit out = encode_fresh(f, w);
    memo_.emplace(key, out);
    return out;
  }

  bool solve(const std::vector<Lit>& assumptions = {}) { return solver_.solve(assumptions); }

  /// Fixes the order variables one at a time to their least feasible value.
  /// Requires a preceding successful solve().
  KripkeModel least_model() {
    std::vector<Lit> fixed;
    auto settle = [&](int var) {
      if (!solver_.model_value(var)) {
        fixed.push_back(sat::neg(var));
        return;
      }
      fixed.push_back(sat::neg(var));
      // On failure the previous model, which sets var, stays current.
      if (!solver_.solve(fixed)) fixed.back() = sat::pos(var);
    };
    for (int v : rel_) settle(v);
    for (int v : val_) settle(v);
    KripkeModel m = KripkeModel::with_worlds(n_);
    for (std::size_t a = 0; a < vocab_.agents.size(); ++a) {
      m.relations[vocab_.agents[a]];
      for (int w = 0; w < n_; ++w) {
        for (int v = 0; v < n_; ++v) {
          if (solver_.model_value_lit(rel(a, w, v))) m.add_edge(Agent{vocab_.agents[a]}, w, v);
        }
      }
    }
    for (int w = 0; w < n_; ++w) {
      for (std::size_t s = 0; s < vocab_.symbols.size(); ++s) {
        if (solver_.model_value_lit(val(w, s))) m.set_true(w, vocab_.symbols[s]);
      }
    }
    return m;
  }

 private:
  Lit fresh() { return sat::pos(solver_.new_var()); }

  Lit make_and(const std::vector<Lit>& xs) {
    const Lit g = fresh();
    std::vector<Lit> back{g};
    for (Lit x : xs) {
      require({sat::flip(g), x});
      back.push_back(sat::flip(x));
    }
    require(back);
    return g;
  }

  Lit make_or(const std::vector<Lit>& xs) {
    std::vector<Lit> negated;
    for (Lit x : xs) negated.push_back(sat::flip(x));
    return sat::flip(make_and(negated));
  }

  Lit encode_fresh(const Formula& f, int w) {
    using K = Formula::Kind;
    switch (f.kind()) {
      case K::True: return true_;
      case K::False: return sat::flip(true_);
      case K::Start: return w == 0 ? true_ : sat::flip(true_);
      case K::Prop: return val(w, f.name());
      case K::Not: return sat::flip(encode(f.operand(), w));
      case K::And: return make_and({encode(f.left(), w), encode(f.right(), w)});
      case K::Or: return make_or({encode(f.left(), w), encode(f.right(), w)});
      case K::Implies: return make_or({sat::flip(encode(f.left(), w)), encode(f.right(), w)});
      case K::Iff: {
        const Lit a = encode(f.left(), w);
        const Lit b = encode(f.right(), w);
        return make_or({make_and({a, b}), make_and({sat::flip(a), sat::flip(b)})});
      }
      case K::Box: {
        const std::size_t a = agent_pos(f.agent());
        std::vector<Lit> parts;
        for (int v = 0; v < n_; ++v) parts.push_back(make_or({sat::flip(rel(a, w, v)), encode(f.operand(), v)}));
        return make_and(parts);
      }
      case K::Dia: {
        const std::size_t a = agent_pos(f.agent());
        std::vector<Lit> parts;
        for (int v = 0; v < n_; ++v) parts.push_back(make_and({rel(a, w, v), encode(f.operand(), v)}));
        return make_or(parts);
      }
    }
    return true_;
  }

  // meet(a, v, u, t) implies r(v,t) and r(u,t).
  Lit meet(std::size_t a, int v, int u, int t) {
    const auto key = std::make_tuple(a, v, u, t);
    auto it = meets_.find(key);
    if (it != meets_.end()) return it->second;
    const Lit m = fresh();
    require({sat::flip(m), rel(a, v, t)});
    require({sat::flip(m), rel(a, u, t)});
    meets_.emplace(key, m);
    return m;
  }

  void add_frame(std::size_t a, FrameProperty p) {
    const int n = n_;
    auto nr = [&](int w, int v) { return sat::flip(rel(a, w, v)); };
    for (int w = 0; w < n; ++w) {
      switch (p) {
        case FrameProperty::Reflexive: require({rel(a, w, w)}); break;
        case FrameProperty::Serial: {
          std::vector<Lit> c;
          for (int v = 0; v < n; ++v) c.push_back(rel(a, w, v));
          require(c);
          break;
        }
        case FrameProperty::Symmetric:
          for (int v = 0; v < n; ++v) require({nr(w, v), rel(a, v, w)});
          break;
        case FrameProperty::ModallyBanal:
          for (int v = 0; v < n; ++v) {
            if (v != w) require({nr(w, v)});
          }
          break;
        case FrameProperty::Functional:
          for (int v = 0; v < n; ++v) {
            for (int u = v + 1; u < n; ++u) require({nr(w, v), nr(w, u)});
          }
          break;
        case FrameProperty::Euclidean:
          for (int v = 0; v < n; ++v) {
            for (int u = 0; u < n; ++u) require({nr(w, v), nr(w, u), rel(a, v, u)});
          }
          break;
        case FrameProperty::Convergent:
          for (int v = 0; v < n; ++v) {
            for (int u = 0; u < n; ++u) {
              std::vector<Lit> c{nr(w, v), nr(w, u)};
              for (int t = 0; t < n; ++t) c.push_back(meet(a, v, u, t));
              require(c);
            }
          }
          break;
        case FrameProperty::ZeroOneOneOneConvergent:
          for (int v = 0; v < n; ++v) {
            std::vector<Lit> c{nr(w, v)};
            for (int t = 0; t < n; ++t) c.push_back(meet(a, w, v, t));
            require(c);
          }
          break;
      }
    }
  }

  int n_;
  const Vocabulary& vocab_;
  sat::Solver solver_;
  Lit true_ = 0;
  std::vector<int> rel_;
  std::vector<int> val_;
  std::map<std::pair<std::string, int>, Lit> memo_;
  std::map<std::tuple<std::size_t, int, int, int>, Lit> meets_;
};

void check_budget(const SearchOptions& options) {
  if (options.max_worlds < 1) throw std::invalid_argument("max_worlds must be positive");
  if (options.max_worlds > options.budget) {
    throw BudgetExceeded("model search bound " + std::to_string(options.max_worlds) + " exceeds the budget of " +
                         std::to_string(options.budget) + " worlds");
  }
}

// The least model has no unreachable worlds: dropping them would give a smaller
// one, and every frame property survives passing to generated submodels. So at
// the least size "at all worlds" and "at reachable worlds" agree.
template <typename AddConstraints>
std::optional<KripkeModel> search(const Vocabulary& vocab, const LogicSpec& spec, const SearchOptions& options,
                                  AddConstraints add) {
  check_budget(options);
  for (int n = 1; n <= options.max_worlds; ++n) {
    Grounding g(n, vocab, spec);
    add(g, n);
    if (g.solve()) return g.least_model();
  }
  return std::nullopt;
}

}  // namespace

std::optional<KripkeModel> bounded_model_search(const ClauseSet& set, const LogicSpec& spec, const SearchOptions& options) {
  const auto vocab = Vocabulary::of(set, spec);
  return search(vocab, spec, options, [&](Grounding& g, int) { g.add_clauses(set); });
}

std::optional<KripkeModel> bounded_model_search(const Formula& f, const LogicSpec& spec, const SearchOptions& options) {
  const auto vocab = Vocabulary::of(f, spec);
  return search(vocab, spec, options, [&](Grounding& g, int) { g.require({g.encode(f, 0)}); });
}

namespace {

std::optional<KripkeModel> enumerate(const Vocabulary& vocab, const LogicSpec& spec, int max_worlds,
                                     const std::function<bool(const KripkeModel&)>& accept) {
  double total = 0;
  for (int n = 1; n <= max_worlds; ++n) {
    total += std::ldexp(1.0, static_cast<int>(vocab.agents.size()) * n * n + n * static_cast<int>(vocab.symbols.size()));
  }
  if (total > std::ldexp(1.0, 24)) throw BudgetExceeded("enumeration space too large");
  for (int n = 1; n <= max_worlds; ++n) {
    const int rbits = static_cast<int>(vocab.agents.size()) * n * n;
    const int vbits = n * static_cast<int>(vocab.symbols.size());
    // Bit 0 of the enumeration order is the most significant counter bit.
    for (std::uint64_t rc = 0; rc < (std::uint64_t{1} << rbits); ++rc) {
      KripkeModel m = KripkeModel::with_worlds(n);
      for (int a : vocab.agents) m.relations[a];
      for (int b = 0; b < rbits; ++b) {
        if ((rc >> (rbits - 1 - b)) & 1) {
          const int a = b / (n * n);
          m.add_edge(Agent{vocab.agents[a]}, (b % (n * n)) / n, b % n);
        }
      }
      if (!frame_satisfies(m, spec)) continue;
      for (std::uint64_t vc = 0; vc < (std::uint64_t{1} << vbits); ++vc) {
        for (auto& world : m.valuation) world.clear();
        for (int b = 0; b < vbits; ++b) {
          if ((vc >> (vbits - 1 - b)) & 1) m.set_true(b / static_cast<int>(vocab.symbols.size()), vocab.symbols[b % vocab.symbols.size()]);
        }
        if (accept(m)) return m;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<KripkeModel> enumerate_models(const ClauseSet& set, const LogicSpec& spec, int max_worlds) {
  return enumerate(Vocabulary::of(set, spec), spec, max_worlds, [&](const KripkeModel& m) { return holds_universally(m, set); });
}

std::optional<KripkeModel> enumerate_models(const Formula& f, const LogicSpec& spec, int max_worlds) {
  return enumerate(Vocabulary::of(f, spec), spec, max_worlds, [&](const KripkeModel& m) { return satisfies(m, m.distinguished, f); });
}

namespace {

bool shown(const std::string& name, bool include_generated) { return include_generated || name.empty() || name[0] != '_'; }

}  // namespace

std::string countermodel_text(const KripkeModel& m, bool include_generated) {
  std::ostringstream out;
  out << "worlds:";
  for (int w = 0; w < m.world_count; ++w) out << " w" << w;
  out << "\n";
  for (const auto& [agent, edges] : m.relations) {
    out << "R" << agent << ":";
    if (edges.empty()) out << " (none)";
    for (const auto& [w, v] : edges) out << " w" << w << "->w" << v;
    out << "\n";
  }
  for (int w = 0; w < m.world_count; ++w) {
    out << "w" << w << ":";
    bool any = false;
    for (const auto& p : m.valuation[w]) {
      if (!shown(p, include_generated)) continue;
      out << " " << p;
      any = true;
    }
    if (!any) out << " (none)";
    out << "\n";
  }
  return out.str();
}

std::string countermodel_json(const KripkeModel& m, bool include_generated) {
  nlohmann::json j;
  j["worlds"] = m.world_count;
  j["distinguished"] = m.distinguished;
  j["relations"] = nlohmann::json::object();
  for (const auto& [agent, edges] : m.relations) {
    auto list = nlohmann::json::array();
    for (const auto& [w, v] : edges) list.push_back({w, v});
    j["relations"][std::to_string(agent)] = list;
  }
  auto val = nlohmann::json::array();
  for (int w = 0; w < m.world_count; ++w) {
    auto props = nlohmann::json::array();
    for (const auto& p : m.valuation[w]) {
      if (shown(p, include_generated)) props.push_back(p);
    }
    val.push_back(props);
  }
  j["valuation"] = val;
  return j.dump();
}

}  // namespace confres
