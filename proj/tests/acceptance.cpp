// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "calculus.hpp"
#include "saturation.hpp"
#include "semantics.hpp"
#include "session.hpp"
#include "snf.hpp"
#include "support.hpp"

using namespace confres;

namespace {

// Pinned tolerances.
constexpr double kGoldenSeconds = 1.0;
constexpr double kAxiomSuiteSeconds = 10.0;
constexpr int kCountermodelWorlds = 2;
constexpr int kInstancesPerRule = 200;
constexpr int kSoundnessWorlds = 3;
constexpr int kSnfFormulas = 300;
constexpr int kFuzzFormulas = 300;
constexpr int kFuzzOracleWorlds = 4;
constexpr int kPermutations = 5;

const Agent a1{1};

using Clock = std::chrono::steady_clock;
double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

bool all_passed = true;

void report(const char* id, bool ok, const std::string& detail) {
  std::printf("%s %s: %s\n", id, ok ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  all_passed = all_passed && ok;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

const char* kDistribution =
    "start -> t1\n"
    "t1 -> [1] t2\n"
    "t2 -> [2] t3\n"
    "true -> ~t3 | a\n"
    "true -> ~t3 | b\n"
    "t1 -> ~[1] ~t4\n"
    "true -> ~t4 | t5 | t6\n"
    "t5 -> ~[2] a\n"
    "t6 -> ~[2] b\n";

const char* kSymmetric =
    "start -> t0\n"
    "true -> ~t0 | p\n"
    "t0 -> ~[1] ~t1\n"
    "t1 -> [1] ~p\n"
    "~_w1_pt1 -> [1] ~t1\n"
    "_w1_pt1 -> ~[1] ~t1\n"
    "_w1_pp -> ~[1] ~p\n"
    "~_w1_pp -> [1] ~p\n";

// ---------------------------------------------------------------- AC1, AC2

void ac1() {
  const auto t = Clock::now();
  const auto r = saturate(parse_clauses(kDistribution), LogicSpec{});
  const double secs = since(t);
  const std::vector<std::pair<std::string, int>> want = {{"IRES1", 1}, {"LRES", 2}, {"NEC1", 3}};
  auto got = r.proof ? r.proof->rule_counts() : decltype(want){};
  std::sort(got.begin(), got.end());
  const bool ok = r.outcome == Outcome::Unsatisfiable && got == want && secs < kGoldenSeconds;
  std::string counts;
  for (const auto& [name, n] : got) counts += fmt(" %s x%d", name.c_str(), n);
  report("AC1", ok, fmt("distribution example refuted, rules%s, %.3f s", counts.c_str(), secs));
}

void ac2() {
  const auto t = Clock::now();
  const LogicSpec spec = LogicSpec::parse("1:T,5");
  ClauseSet input = parse_clauses(kSymmetric);
  add_definition_clauses(input, spec);
  const auto r = saturate(input, spec);
  const double secs = since(t);
  const int euclid = r.proof ? r.proof->count("RES[1]{1,0,1,1}") : -1;
  const int refl = r.proof ? r.proof->count("RES[1]{0,1,0,0}") : -1;
  const bool ok = r.outcome == Outcome::Unsatisfiable && euclid == 1 && refl == 1 && secs < kGoldenSeconds;
  report("AC2", ok,
         fmt("symmetric example refuted in %zu steps, RES{1,0,1,1} x%d, RES{0,1,0,0} x%d, %.3f s",
             r.proof ? r.proof->steps.size() : 0, euclid, refl, secs));
}

// ---------------------------------------------------------------- AC3

std::string schema(const Exponents& e) {
  std::string lhs = "p", rhs = "p";
  if (e[1]) lhs = "[1]" + lhs;
  if (e[0]) lhs = "<1>" + lhs;
  if (e[3]) rhs = "<1>" + rhs;
  if (e[2]) rhs = "[1]" + rhs;
  return lhs + " -> " + rhs;
}

Family family_of(const Exponents& e) {
  for (Family f : {Family::B, Family::Ban, Family::D, Family::F, Family::T, Family::Five, Family::G1, Family::G0111}) {
    for (const auto& r : family_rules(f)) {
      if (r == e) return f;
    }
  }
  throw std::logic_error("exponents outside every family");
}

// Both dual forms of each family, as listed with the frame conditions.
const std::vector<Exponents> kSchemata = {{0, 0, 1, 1}, {1, 1, 0, 0}, {0, 0, 1, 0}, {1, 0, 0, 0}, {0, 1, 0, 1},
                                          {1, 0, 1, 0}, {0, 0, 0, 1}, {0, 1, 0, 0}, {1, 0, 1, 1}, {1, 1, 1, 0},
                                          {1, 1, 1, 1}, {0, 1, 1, 1}, {1, 1, 0, 1}};

void ac3() {
  const auto t = Clock::now();
  int passed = 0;
  std::string failures;
  for (const auto& e : kSchemata) {
    const std::string text = schema(e);
    const Family fam = family_of(e);

    Session own;
    own.set_logic("1:" + std::string(family_name(fam)));
    own.load_formula(text);
    if (own.run() == Verdict::Valid) ++passed;
    else failures += " [" + text + " under " + std::string(family_name(fam)) + "]";

    Session k;
    k.load_formula(text);
    const Verdict v = k.run();
    const auto m = k.search_model({kCountermodelWorlds, 5});
    const bool counter = m && m->world_count <= kCountermodelWorlds && !satisfies(*m, 0, parse(text, 1));
    if (v == Verdict::NotValid && counter) ++passed;
    else failures += " [" + text + " under K]";
  }
  const double secs = since(t);
  const int total = static_cast<int>(2 * kSchemata.size());
  report("AC3", passed == total && secs < kAxiomSuiteSeconds,
         fmt("%d/%d axiom checks, %.3f s%s", passed, total, secs, failures.c_str()));
}

// ---------------------------------------------------------------- AC4
//
// Models over at most three worlds are bitmasks: bit w of a mask is world w.

struct Frame {
  int n;
  std::array<std::uint8_t, 3> succ{};
  std::uint8_t reach = 1;
};

std::vector<Frame> frames_with(std::optional<FrameProperty> prop) {
  std::vector<Frame> out;
  for (int n = 1; n <= kSoundnessWorlds; ++n) {
    for (int bits = 0; bits < (1 << (n * n)); ++bits) {
      KripkeModel m = KripkeModel::with_worlds(n);
      m.relations[1];
      Frame f{n};
      for (int b = 0; b < n * n; ++b) {
        if (bits >> b & 1) {
          m.add_edge(a1, b / n, b % n);
          f.succ[b / n] |= static_cast<std::uint8_t>(1 << (b % n));
        }
      }
      if (prop && !frame_has_property(m, a1, *prop)) continue;
      for (int w : m.reachable()) f.reach |= static_cast<std::uint8_t>(1 << w);
      out.push_back(f);
    }
  }
  return out;
}

// Valuation of the symbols an instance mentions, derived symbols computed from the rest.
class Evaluator {
 public:
  Evaluator(const SymbolTable& symbols, std::map<Symbol, std::vector<Literal>> renamings)
      : symbols_(symbols), renamings_(std::move(renamings)) {}

  // Premises hold universally but a conclusion fails somewhere, on some frame and valuation.
  bool find_violation(const std::vector<Frame>& frames, const std::vector<Clause>& premises,
                      const std::vector<Clause>& conclusions) {
    collect(premises);
    collect(conclusions);
    for (const Frame& f : frames) {
      frame_ = &f;
      full_ = static_cast<std::uint8_t>((1 << f.n) - 1);
      const int vars = static_cast<int>(users_.size());
      for (int v = 0; v < (1 << (vars * f.n)); ++v) {
        for (int i = 0; i < vars; ++i) mask_[users_[i]] = static_cast<std::uint8_t>((v >> (i * f.n)) & full_);
        for (Symbol s : defs_) {
          const Literal l = symbols_.info(s).defined;
          mask_[s] = dia(lit(l));
        }
        for (Symbol s : renames_) {
          std::uint8_t d = 0;
          for (Literal l : renamings_.at(s)) d |= lit(l);
          mask_[s] = static_cast<std::uint8_t>(~d & full_);
        }
        bool premises_hold = true;
        for (const auto& c : premises) {
          if (!holds(c)) {
            premises_hold = false;
            break;
          }
        }
        if (!premises_hold) continue;
        for (const auto& c : conclusions) {
          if (!holds(c)) return true;
        }
      }
    }
    return false;
  }

 private:
  void collect(const std::vector<Clause>& cs) {
    for (const auto& c : cs) {
      c.for_each_symbol([&](Symbol s) { note(s); });
    }
  }
  void note(Symbol s) {
    if (!seen_.insert(s).second) return;
    if (mask_.size() <= s) mask_.resize(s + 1);
    switch (symbols_.info(s).kind) {
      case SymbolKind::Definition:
        note(symbols_.info(s).defined.symbol());
        defs_.push_back(s);
        break;
      case SymbolKind::Renaming:
        for (Literal l : renamings_.at(s)) note(l.symbol());
        renames_.push_back(s);
        break;
      default: users_.push_back(s);
    }
  }
  std::uint8_t lit(Literal l) const {
    const std::uint8_t m = mask_[l.symbol()];
    return l.negative() ? static_cast<std::uint8_t>(~m & full_) : m;
  }
  std::uint8_t box(std::uint8_t m) const {
    std::uint8_t out = 0;
    for (int w = 0; w < frame_->n; ++w) {
      if ((frame_->succ[w] & ~m) == 0) out |= static_cast<std::uint8_t>(1 << w);
    }
    return out;
  }
  std::uint8_t dia(std::uint8_t m) const {
    std::uint8_t out = 0;
    for (int w = 0; w < frame_->n; ++w) {
      if (frame_->succ[w] & m) out |= static_cast<std::uint8_t>(1 << w);
    }
    return out;
  }
  bool holds(const Clause& c) const {
    std::uint8_t m = 0;
    switch (c.kind()) {
      case ClauseKind::Initial:
      case ClauseKind::Literal:
        for (Literal l : c.disjuncts()) m |= lit(l);
        break;
      case ClauseKind::PositiveModal: m = static_cast<std::uint8_t>(lit(~c.lhs()) | box(lit(c.rhs()))); break;
      case ClauseKind::NegativeModal: m = static_cast<std::uint8_t>(lit(~c.lhs()) | (~box(lit(c.rhs())) & full_)); break;
    }
    if (c.kind() == ClauseKind::Initial) return (m & 1) != 0;
    return (m & frame_->reach) == frame_->reach;
  }

  const SymbolTable& symbols_;
  std::map<Symbol, std::vector<Literal>> renamings_;
  std::set<Symbol> seen_;
  std::vector<Symbol> users_, defs_, renames_;
  std::vector<std::uint8_t> mask_;
  const Frame* frame_ = nullptr;
  std::uint8_t full_ = 1;
};

// Random premises for one rule; the rule function decides whether they fit.
class InstanceMaker {
 public:
  explicit InstanceMaker(std::uint32_t seed) : rng_(seed) {}

  Literal plain() {
    const Symbol s = table_.intern(kProps[pick(3)]);
    return Literal(s, pick(2) == 1);
  }
  // Occasionally a definition symbol over a plain literal.
  Literal any() {
    if (pick(4) != 0) return plain();
    return Literal(table_.definition(a1, plain()), pick(2) == 1);
  }
  std::vector<Literal> disjunction(int max) {
    std::vector<Literal> out;
    const int k = pick(max + 1);
    for (int i = 0; i < k; ++i) out.push_back(plain());
    return out;
  }
  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

  SymbolTable& table() { return table_; }
  // Fresh table with w^{1,l} introduced for every plain literal, as definition clauses would.
  void reset() {
    table_ = SymbolTable{};
    for (const char* p : kProps) {
      const Symbol s = table_.intern(p);
      table_.definition(a1, Literal(s, false));
      table_.definition(a1, Literal(s, true));
    }
  }

 private:
  static constexpr const char* kProps[] = {"p", "q", "r"};
  std::mt19937 rng_;
  SymbolTable table_;
};

struct Instance {
  std::vector<Clause> premises;
  std::vector<Clause> conclusions;
  std::map<Symbol, std::vector<Literal>> renamings;
};

std::vector<Literal> with(std::vector<Literal> d, Literal l) {
  d.push_back(l);
  return d;
}

// One instance of a K rule, or nothing when the random draw does not fit the rule.
std::optional<Instance> k_instance(RuleKind kind, InstanceMaker& g) {
  Instance in;
  auto& P = in.premises;
  try {
    switch (kind) {
      case RuleKind::IRES1:
      case RuleKind::IRES2: {
        const Literal l = g.plain();
        const auto c = with(g.disjunction(2), l);
        P = {kind == RuleKind::IRES1 ? Clause::literal(c) : Clause::initial(c), Clause::initial(with(g.disjunction(2), ~l))};
        in.conclusions = {ires(P[0], P[1], l)};
        break;
      }
      case RuleKind::LRES: {
        const Literal l = g.plain();
        P = {Clause::literal(with(g.disjunction(2), l)), Clause::literal(with(g.disjunction(2), ~l))};
        in.conclusions = {lres(P[0], P[1], l)};
        break;
      }
      case RuleKind::MRES: {
        const Literal l = g.plain();
        P = {Clause::box(g.plain(), a1, l), Clause::not_box(g.plain(), a1, l)};
        in.conclusions = {mres(P[0], P[1])};
        break;
      }
      case RuleKind::NEC2: {
        const Literal l = g.plain();
        P = {Clause::box(g.plain(), a1, l), Clause::box(g.plain(), a1, ~l), Clause::not_box(g.plain(), a1, g.plain())};
        in.conclusions = {nec2(P[0], P[1], P[2])};
        break;
      }
      case RuleKind::NEC1:
      case RuleKind::NEC3: {
        const int m = (kind == RuleKind::NEC3 ? 1 : 0) + g.pick(3);
        std::vector<Clause> pos;
        std::vector<Literal> lits;
        for (int i = 0; i < m; ++i) {
          const Literal rhs = g.plain();
          pos.push_back(Clause::box(g.plain(), a1, rhs));
          lits.push_back(~rhs);
        }
        const Literal n = g.plain();
        if (kind == RuleKind::NEC1) lits.push_back(n);
        const Clause neg = Clause::not_box(g.plain(), a1, n);
        const Clause lit = Clause::literal(lits);
        in.conclusions = {kind == RuleKind::NEC1 ? nec1(pos, neg, lit) : nec3(pos, neg, lit)};
        P = pos;
        P.push_back(neg);
        P.push_back(lit);
        break;
      }
      case RuleKind::Confluence: return std::nullopt;
    }
  } catch (const RuleError&) {
    return std::nullopt;
  }
  return in;
}

std::optional<Instance> confluence_instance(const Exponents& e, InstanceMaker& g, DisjunctionNamer& namer) {
  Instance in;
  std::optional<Literal> pivot;
  Clause premise = Clause::literal({});
  if (takes_literal_premise(e)) {
    const Literal l = g.plain();
    const auto d = g.disjunction(2);
    premise = Clause::literal(with(d, l));
    pivot = l;
  } else if (e[1] == 1) {
    premise = Clause::box(g.any(), a1, g.any());
  } else {
    premise = Clause::not_box(g.any(), a1, g.any());
  }
  try {
    in.conclusions = confluence_step(RuleId::res(a1, e), premise, g.table(), pivot, &namer);
  } catch (const RuleError&) {
    return std::nullopt;
  }
  in.premises = {premise};
  if (in.conclusions.size() == 2) {
    // true => D | d, then d => ...: d names ~D.
    std::vector<Literal> d;
    for (Literal l : premise.disjuncts()) {
      if (l != *pivot) d.push_back(l);
    }
    in.renamings[in.conclusions[1].lhs().symbol()] = d;
  }
  return in;
}

void ac4() {
  const auto t = Clock::now();
  const auto k_frames = frames_with(std::nullopt);
  int instances = 0, violations = 0, short_rules = 0;
  std::string detail;
  InstanceMaker g(404);

  auto check = [&](const std::string& name, const std::vector<Frame>& frames, auto make) {
    int done = 0, attempts = 0;
    while (done < kInstancesPerRule && attempts < 100 * kInstancesPerRule) {
      ++attempts;
      g.reset();
      auto in = make();
      if (!in) continue;
      ++done;
      Evaluator ev(g.table(), in->renamings);
      if (ev.find_violation(frames, in->premises, in->conclusions)) {
        ++violations;
        if (violations <= 3) detail += " [" + name + ": " + render_clause(in->premises[0], g.table()) + "]";
      }
    }
    instances += done;
    if (done < kInstancesPerRule) {
      ++short_rules;
      detail += " [" + name + fmt(" only %d instances]", done);
    }
  };

  for (RuleKind kind : {RuleKind::IRES1, RuleKind::IRES2, RuleKind::LRES, RuleKind::MRES, RuleKind::NEC1, RuleKind::NEC2, RuleKind::NEC3}) {
    check(RuleId::k(kind).name(), k_frames, [&] { return k_instance(kind, g); });
  }
  for (const auto& e : all_confluence_rules()) {
    const auto frames = frames_with(frame_property(family_of(e)));
    check(RuleId::res(a1, e).name(), frames, [&] {
      DisjunctionNamer namer;
      return confluence_instance(e, g, namer);
    });
  }
  report("AC4", violations == 0 && short_rules == 0,
         fmt("%d rules, %d instances, %d violations over all pointed models up to %d worlds, %.1f s%s",
             7 + static_cast<int>(all_confluence_rules().size()), instances, violations, kSoundnessWorlds, since(t),
             detail.c_str()));
}

// ---------------------------------------------------------------- AC5

void ac5() {
  const auto t = Clock::now();
  std::mt19937 rng(505);
  const testing::FormulaShape shape{3, 2, 3, 12};
  const LogicSpec k;
  int discrepancies = 0, satisfiable = 0;
  std::string detail;
  for (int i = 0; i < kSnfFormulas; ++i) {
    const Formula f = testing::random_formula(rng, shape);
    const ClauseSet snf = to_snf(f);
    for (int bound = 1; bound <= 3; ++bound) {
      const bool a = bounded_model_search(f, k, {bound, 5}).has_value();
      const bool b = bounded_model_search(snf, k, {bound, 5}).has_value();
      if (a != b) {
        ++discrepancies;
        if (discrepancies <= 3) detail += " [" + render(f) + fmt(" at %d]", bound);
      }
      if (bound == 3 && a) ++satisfiable;
    }
  }
  report("AC5", discrepancies == 0,
         fmt("%d formulas x 3 bounds, %d discrepancies, %d satisfiable at bound 3, %.1f s%s", kSnfFormulas,
             discrepancies, satisfiable, since(t), detail.c_str()));
}

// ---------------------------------------------------------------- AC6, AC7

// Input symbols and definition symbols only.
bool symbols_closed(const ClauseSet& input, const ClauseSet& derivation) {
  std::set<std::string> in;
  for (const auto& e : input.entries()) e.clause.for_each_symbol([&](Symbol s) { in.insert(input.symbols.name(s)); });
  bool ok = true;
  for (const auto& e : derivation.entries()) {
    e.clause.for_each_symbol([&](Symbol s) {
      ok = ok && (in.count(derivation.symbols.name(s)) > 0 || derivation.symbols.is_definition(s));
    });
  }
  return ok;
}

void ac6_ac7() {
  const auto t = Clock::now();
  const char* logics[] = {"", "1:T", "1:D", "1:F", "1:Ban", "1:B", "1:5", "1:G1", "1:G0111"};
  std::mt19937 rng(606);
  const testing::FormulaShape shape{3, 1, 3, 10};
  int runs = 0, unsat = 0, sat = 0, violations = 0, review = 0;
  int limits = 0, escaped = 0, unstable = 0;
  std::string detail6, detail7;
  for (const char* logic : logics) {
    const LogicSpec spec = LogicSpec::parse(logic);
    const std::string label = *logic ? logic : "K";
    for (int i = 0; i < kFuzzFormulas; ++i) {
      const Formula f = testing::random_formula(rng, shape);
      ClauseSet input = to_snf(f);
      add_definition_clauses(input, spec, DefinitionScope::ModalLiterals);
      const auto r = saturate(input, spec);
      ++runs;
      if (r.outcome == Outcome::ResourceLimit) {
        ++limits;
        if (limits <= 3) detail7 += " [limit: " + render(f) + " in " + label + "]";
        continue;
      }
      if (!symbols_closed(input, r.derivation)) {
        ++escaped;
        if (escaped <= 3) detail7 += " [new symbol: " + render(f) + " in " + label + "]";
      }
      for (int k = 0; k < kPermutations; ++k) {
        std::vector<std::size_t> order(input.size());
        for (std::size_t j = 0; j < order.size(); ++j) order[j] = j;
        std::shuffle(order.begin(), order.end(), rng);
        ClauseSet shuffled;
        shuffled.symbols = input.symbols;
        for (std::size_t j : order) shuffled.add(input[j].clause, input[j].why);
        if (saturate(shuffled, spec).outcome != r.outcome) {
          ++unstable;
          if (unstable <= 3) detail7 += " [order: " + render(f) + " in " + label + "]";
          break;
        }
      }

      const auto model = bounded_model_search(f, spec, {kFuzzOracleWorlds, 5});
      if (r.outcome == Outcome::Unsatisfiable) {
        ++unsat;
        if (model) {
          ++violations;
          if (violations <= 3) detail6 += " [unsound: " + render(f) + " in " + label + "]";
        }
      } else {
        ++sat;
        if (!model) {
          ++review;
          if (review <= 5) detail6 += " [review: " + render(f) + " in " + label + "]";
        }
      }
    }
  }
  const double secs = since(t);
  report("AC6", violations == 0,
         fmt("%d runs, %d UNSAT, %d saturated, %d soundness violations, %d logged for review, %.1f s%s", runs, unsat,
             sat, violations, review, secs, detail6.c_str()));
  report("AC7", limits == 0 && escaped == 0 && unstable == 0,
         fmt("%d runs, %d resource limits, %d with new symbols, %d order-dependent verdicts over %d permutations%s",
             runs, limits, escaped, unstable, kPermutations, detail7.c_str()));
}

}  // namespace

int main() {
  const std::vector<std::function<void()>> checks = {ac1, ac2, ac3, ac4, ac5, ac6_ac7};
  for (const auto& c : checks) {
    try {
      c();
    } catch (const std::exception& e) {
      report("AC?", false, std::string("exception: ") + e.what());
    }
  }
  return all_passed ? 0 : 1;
}
