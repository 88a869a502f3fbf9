#include "doctest.h"

#include <random>

#include "sat_solver.hpp"

using namespace confres::sat;

namespace {

// Truth-table check for small random CNFs.
bool brute_force(int vars, const std::vector<std::vector<Lit>>& cnf, const std::vector<Lit>& assumptions) {
  for (int m = 0; m < (1 << vars); ++m) {
    auto val = [&](Lit l) { return ((m >> var_of(l)) & 1) != (l & 1); };
    bool ok = true;
    for (Lit a : assumptions) ok = ok && val(a);
    for (const auto& c : cnf) {
      bool sat = false;
      for (Lit l : c) sat = sat || val(l);
      ok = ok && sat;
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("trivial instances") {
  Solver s;
  const int x = s.new_var();
  CHECK(s.solve());
  CHECK(s.add_clause({pos(x)}));
  CHECK(s.solve());
  CHECK(s.model_value(x));
  CHECK_FALSE(s.solve({neg(x)}));
  CHECK(s.solve());
  CHECK_FALSE(s.add_clause({neg(x)}));
  CHECK_FALSE(s.solve());
}

TEST_CASE("pigeonhole 4 into 3 is unsatisfiable") {
  Solver s;
  int p[4][3];
  for (auto& row : p) {
    for (int& v : row) v = s.new_var();
  }
  for (auto& row : p) s.add_clause({pos(row[0]), pos(row[1]), pos(row[2])});
  for (int h = 0; h < 3; ++h) {
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) s.add_clause({neg(p[i][h]), neg(p[j][h])});
    }
  }
  CHECK_FALSE(s.solve());
}

TEST_CASE("agrees with truth tables on random 3-CNF, with and without assumptions") {
  std::mt19937 rng(1);
  for (int round = 0; round < 400; ++round) {
    const int vars = 3 + round % 8;
    const int clauses = static_cast<int>(vars * (3.0 + (round % 5) * 0.5));
    std::vector<std::vector<Lit>> cnf;
    Solver s;
    for (int v = 0; v < vars; ++v) s.new_var();
    for (int c = 0; c < clauses; ++c) {
      std::vector<Lit> cl;
      for (int k = 0; k < 3; ++k) {
        const int v = std::uniform_int_distribution<int>(0, vars - 1)(rng);
        cl.push_back(rng() & 1 ? pos(v) : neg(v));
      }
      cnf.push_back(cl);
      s.add_clause(cl);
    }
    std::vector<Lit> assumptions;
    if (round % 2) assumptions = {rng() & 1 ? pos(0) : neg(0), rng() & 1 ? pos(1) : neg(1)};
    const bool expected = brute_force(vars, cnf, assumptions);
    REQUIRE(s.solve(assumptions) == expected);
    if (expected) {
      for (Lit a : assumptions) CHECK(s.model_value_lit(a));
      for (const auto& c : cnf) {
        bool sat = false;
        for (Lit l : c) sat = sat || s.model_value_lit(l);
        CHECK(sat);
      }
    }
    // Assumptions never stick.
    CHECK(s.solve() == brute_force(vars, cnf, {}));
  }
}
