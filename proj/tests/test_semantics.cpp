#include "doctest.h"

#include "semantics.hpp"
#include "snf.hpp"
#include "support.hpp"

using namespace confres;

namespace {

const Agent a1{1};

KripkeModel frame(int n, std::initializer_list<std::pair<int, int>> edges) {
  KripkeModel m = KripkeModel::with_worlds(n);
  for (auto [w, v] : edges) m.add_edge(a1, w, v);
  return m;
}

// Every frame over n worlds for agent 1.
template <typename Fn>
void for_each_frame(int n, Fn fn) {
  for (int bits = 0; bits < (1 << (n * n)); ++bits) {
    KripkeModel m = KripkeModel::with_worlds(n);
    m.relations[1];
    for (int b = 0; b < n * n; ++b) {
      if (bits >> b & 1) m.add_edge(a1, b / n, b % n);
    }
    fn(m);
  }
}

// The family's axiom (first form of its table row) with phi = p.
const char* axiom(Family f) {
  switch (f) {
    case Family::B: return "p -> [1]<1>p";
    case Family::Ban: return "p -> [1]p";
    case Family::D: return "[1]p -> <1>p";
    case Family::F: return "<1>p -> [1]p";
    case Family::T: return "p -> <1>p";
    case Family::Five: return "<1>p -> [1]<1>p";
    case Family::G1: return "<1>[1]p -> [1]<1>p";
    case Family::G0111: return "[1]p -> [1]<1>p";
  }
  return "";
}

const Family kFamilies[] = {Family::B, Family::Ban, Family::D, Family::F, Family::T, Family::Five, Family::G1, Family::G0111};

}  // namespace

TEST_CASE("satisfaction on small models") {
  KripkeModel one = KripkeModel::with_worlds(1);
  one.set_true(0, "p");
  CHECK(satisfies(one, 0, parse("[1]q", 1)));
  CHECK_FALSE(satisfies(one, 0, parse("<1>true", 1)));

  KripkeModel two = frame(2, {{0, 1}});
  two.set_true(1, "p");
  CHECK(satisfies(two, 0, parse("[1]p", 1)));
  CHECK_FALSE(satisfies(two, 0, parse("p", 1)));
  CHECK(satisfies(two, 0, Formula::start()));
  CHECK_FALSE(satisfies(two, 1, Formula::start()));
}

TEST_CASE("diamond abbreviates not-box-not") {
  std::mt19937 rng(3);
  testing::FormulaShape shape{2, 1, 2, 6};
  for (int i = 0; i < 40; ++i) {
    const Formula f = testing::random_formula(rng, shape);
    const Formula dia = Formula::dia(a1, f);
    const Formula nbn = Formula::negation(Formula::box(a1, Formula::negation(f)));
    for (int n = 1; n <= 3; ++n) {
      for_each_frame(n, [&](KripkeModel m) {
        for (int v = 0; v < (1 << (2 * n)); ++v) {
          for (int w = 0; w < n; ++w) {
            m.valuation[w].clear();
            if (v >> (2 * w) & 1) m.set_true(w, "p");
            if (v >> (2 * w + 1) & 1) m.set_true(w, "q");
          }
          for (int w = 0; w < n; ++w) REQUIRE(satisfies(m, w, dia) == satisfies(m, w, nbn));
        }
      });
    }
  }
}

TEST_CASE("universal clause evaluation") {
  ClauseSet set = parse_clauses("start -> p\ntrue -> p\nt1 -> [1] t2\nt1 -> ~[1] t2\n");
  KripkeModel m = frame(3, {{0, 1}, {1, 2}});
  m.set_true(0, "p");
  CHECK(holds_universally(m, set[0].clause, set.symbols));
  CHECK_FALSE(holds_universally(m, set[1].clause, set.symbols));

  // A chain where t1 holds at w0 and w1 and t2 at w1 and w2.
  for (int w : {0, 1}) m.set_true(w, "t1");
  for (int w : {1, 2}) m.set_true(w, "t2");
  CHECK(holds_universally(m, set[2].clause, set.symbols));
  CHECK_FALSE(holds_universally(m, set[3].clause, set.symbols));
  // Unreachable worlds do not count.
  KripkeModel island = KripkeModel::with_worlds(2);
  island.set_true(0, "p");
  CHECK(holds_universally(island, set[1].clause, set.symbols));
  CHECK(island.reachable() == std::vector<int>{0});
}

TEST_CASE("frame properties") {
  CHECK(frame_has_property(frame(1, {{0, 0}}), a1, FrameProperty::Reflexive));
  CHECK_FALSE(frame_has_property(frame(1, {}), a1, FrameProperty::Reflexive));
  CHECK(frame_has_property(frame(2, {{0, 1}, {1, 0}}), a1, FrameProperty::Symmetric));
  CHECK_FALSE(frame_has_property(frame(2, {{0, 1}}), a1, FrameProperty::Symmetric));
  CHECK_FALSE(frame_has_property(frame(4, {{0, 1}, {0, 2}}), a1, FrameProperty::Convergent));
  // w1 reaches w3 twice over, so w3 itself needs a successor.
  CHECK_FALSE(frame_has_property(frame(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}), a1, FrameProperty::Convergent));
  CHECK(frame_has_property(frame(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 3}}), a1, FrameProperty::Convergent));
  CHECK(frame_has_property(frame(2, {{0, 0}, {1, 1}}), a1, FrameProperty::ModallyBanal));
  CHECK_FALSE(frame_has_property(frame(2, {{0, 1}}), a1, FrameProperty::ModallyBanal));
  CHECK(frame_has_property(frame(2, {{0, 1}}), a1, FrameProperty::Functional));
  CHECK_FALSE(frame_has_property(frame(3, {{0, 1}, {0, 2}}), a1, FrameProperty::Functional));
  CHECK(frame_has_property(frame(2, {{0, 1}, {1, 1}}), a1, FrameProperty::Serial));
  CHECK_FALSE(frame_has_property(frame(2, {{0, 1}}), a1, FrameProperty::Serial));
  CHECK(frame_has_property(frame(3, {{0, 1}, {0, 2}, {1, 2}, {2, 1}, {1, 1}, {2, 2}}), a1, FrameProperty::Euclidean));
  CHECK_FALSE(frame_has_property(frame(3, {{0, 1}, {0, 2}}), a1, FrameProperty::Euclidean));
  CHECK(frame_has_property(frame(2, {{0, 1}, {1, 1}}), a1, FrameProperty::ZeroOneOneOneConvergent));
  CHECK_FALSE(frame_has_property(frame(2, {{0, 1}}), a1, FrameProperty::ZeroOneOneOneConvergent));
}

TEST_CASE("axioms correspond to their frame conditions on frames up to three worlds") {
  for (Family fam : kFamilies) {
    const FrameProperty prop = frame_property(fam);
    const Formula ax = parse(axiom(fam), 1);
    bool some_violation = false;
    for (int n = 1; n <= 3; ++n) {
      for_each_frame(n, [&](KripkeModel m) {
        bool valid = true;
        for (int v = 0; v < (1 << n) && valid; ++v) {
          for (int w = 0; w < n; ++w) {
            m.valuation[w].clear();
            if (v >> w & 1) m.set_true(w, "p");
          }
          for (int w = 0; w < n; ++w) valid = valid && satisfies(m, w, ax);
        }
        const bool has = frame_has_property(m, a1, prop);
        CAPTURE(family_name(fam));
        if (has) REQUIRE(valid);
        if (!has && !valid) some_violation = true;
      });
    }
    CHECK(some_violation);
  }
}

TEST_CASE("bounded search examples") {
  const LogicSpec k;
  CHECK_FALSE(bounded_model_search(parse_clauses("true -> p\ntrue -> ~p\n"), k, {4, 5}).has_value());

  const ClauseSet t_axiom = to_snf(parse("~([1]p -> p)", 1));
  const auto m = bounded_model_search(t_axiom, k, {1, 5});
  REQUIRE(m.has_value());
  CHECK(m->world_count == 1);
  CHECK(m->successors(a1, 0).empty());
  CHECK_FALSE(m->true_at(0, "p"));
  CHECK(holds_universally(*m, t_axiom));

  const auto reflexive = LogicSpec::parse("1:T");
  for (int bound = 1; bound <= 4; ++bound) CHECK_FALSE(bounded_model_search(t_axiom, reflexive, {bound, 5}).has_value());

  CHECK_THROWS_AS(bounded_model_search(t_axiom, k, {6, 5}), BudgetExceeded);
  CHECK_NOTHROW(bounded_model_search(t_axiom, k, {6, 6}));
}

TEST_CASE("search agrees with plain enumeration, model for model") {
  std::mt19937 rng(9);
  testing::FormulaShape shape{2, 1, 2, 7};
  const char* logics[] = {"", "1:T", "1:D", "1:B", "1:Ban", "1:F", "1:5", "1:G1", "1:G0111"};
  for (const std::string logic : logics) {
    const auto spec = LogicSpec::parse(logic);
    for (int i = 0; i < 15; ++i) {
      const Formula f = testing::random_formula(rng, shape);
      CAPTURE(logic);
      CAPTURE(render(f));
      const auto a = bounded_model_search(f, spec, {3, 5});
      const auto b = enumerate_models(f, spec, 3);
      REQUIRE(a.has_value() == b.has_value());
      if (a) {
        CHECK(*a == *b);
        CHECK(satisfies(*a, 0, f));
        CHECK(frame_satisfies(*a, spec));
      }
      const ClauseSet set = to_snf(f);
      const auto c = bounded_model_search(set, spec, {2, 5});
      const auto d = enumerate_models(set, spec, 2);
      REQUIRE(c.has_value() == d.has_value());
      if (c) {
        CHECK(*c == *d);
        CHECK(holds_universally(*c, set));
      }
    }
  }
}

TEST_CASE("countermodel output") {
  KripkeModel m = frame(2, {{0, 1}});
  m.set_true(1, "p");
  m.set_true(1, "_t0");
  CHECK(countermodel_text(m) == "worlds: w0 w1\nR1: w0->w1\nw0: (none)\nw1: p\n");
  CHECK(countermodel_text(m, true) == "worlds: w0 w1\nR1: w0->w1\nw0: (none)\nw1: _t0 p\n");
  CHECK(countermodel_json(m) == R"({"distinguished":0,"relations":{"1":[[0,1]]},"valuation":[[],["p"]],"worlds":2})");
}
