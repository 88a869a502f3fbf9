#pragma once

#include <random>
#include <string>
#include <vector>

#include "clause.hpp"
#include "formula.hpp"

namespace confres::testing {

struct FormulaShape {
  int max_depth = 3;  // modal depth bound
  int agents = 1;
  int props = 3;
  int max_size = 12;  // rough connective budget
};

/// Random formula over p, q, r, ... with modal depth at most `shape.max_depth`.
inline Formula random_formula(std::mt19937& rng, const FormulaShape& shape, int depth = 0, int budget = -1) {
  if (budget < 0) budget = shape.max_size;
  auto pick = [&](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };
  static const char* names[] = {"p", "q", "r", "s", "u"};
  if (budget <= 1) {
    const Formula atom = Formula::prop(names[pick(shape.props)]);
    return pick(3) == 0 ? Formula::negation(atom) : atom;
  }
  const bool modal_ok = depth < shape.max_depth;
  switch (pick(modal_ok ? 10 : 6)) {
    case 0: return Formula::prop(names[pick(shape.props)]);
    case 1: return Formula::negation(random_formula(rng, shape, depth, budget - 1));
    case 2: {
      const int left = 1 + pick(budget - 1);
      return Formula::conj(random_formula(rng, shape, depth, left), random_formula(rng, shape, depth, budget - left));
    }
    case 3: {
      const int left = 1 + pick(budget - 1);
      return Formula::disj(random_formula(rng, shape, depth, left), random_formula(rng, shape, depth, budget - left));
    }
    case 4: {
      const int left = 1 + pick(budget - 1);
      return Formula::implies(random_formula(rng, shape, depth, left), random_formula(rng, shape, depth, budget - left));
    }
    case 5: {
      if (pick(4) != 0) return Formula::negation(random_formula(rng, shape, depth, budget - 1));
      const int left = 1 + pick(budget - 1);
      return Formula::iff(random_formula(rng, shape, depth, left), random_formula(rng, shape, depth, budget - left));
    }
    case 6:
    case 7: return Formula::box(Agent{1 + pick(shape.agents)}, random_formula(rng, shape, depth + 1, budget - 1));
    default: return Formula::dia(Agent{1 + pick(shape.agents)}, random_formula(rng, shape, depth + 1, budget - 1));
  }
}

inline std::vector<std::string> rendered(const ClauseSet& set) {
  std::vector<std::string> out;
  for (const auto& e : set.entries()) out.push_back(set.render(e.clause));
  return out;
}

}  // namespace confres::testing
