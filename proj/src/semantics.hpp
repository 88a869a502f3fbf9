#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "clause.hpp"
#include "formula.hpp"
#include "logic.hpp"

namespace confres {

/// Finite pointed Kripke model over worlds 0..world_count-1.
struct KripkeModel {
  int world_count = 1;
  int distinguished = 0;
  /// Edges per agent id.
  std::map<int, std::set<std::pair<int, int>>> relations;
  /// True propositions per world; absent names are false.
  std::vector<std::set<std::string>> valuation = std::vector<std::set<std::string>>(1);

  static KripkeModel with_worlds(int n);

  bool related(Agent a, int w, int v) const;
  std::vector<int> successors(Agent a, int w) const;
  void add_edge(Agent a, int w, int v) { relations[a.id].insert({w, v}); }
  bool true_at(int w, const std::string& name) const { return valuation.at(w).count(name) != 0; }
  void set_true(int w, const std::string& name) { valuation.at(w).insert(name); }

  /// Worlds reachable from the distinguished world through any agent's
  /// relation, reflexive-transitively, in ascending order.
  std::vector<int> reachable() const;

  friend bool operator==(const KripkeModel&, const KripkeModel&) = default;
};

/// Requested model size exceeds the enumeration budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool satisfies(const KripkeModel& m, int w, const Formula& f);

/// The clause's implication read at world `w`; `start` holds only at the distinguished world.
bool holds_at(const KripkeModel& m, int w, const Clause& c, const SymbolTable& symbols);
/// Holds at every world reachable from the distinguished one.
bool holds_universally(const KripkeModel& m, const Clause& c, const SymbolTable& symbols);
bool holds_universally(const KripkeModel& m, const ClauseSet& set);

bool frame_has_property(const KripkeModel& m, Agent a, FrameProperty p);
/// Every agent of `spec` satisfies all of its frame properties.
bool frame_satisfies(const KripkeModel& m, const LogicSpec& spec);

struct SearchOptions {
  int max_worlds = 4;
  /// Guard on max_worlds; raise it deliberately for larger searches.
  int budget = 5;
};

/// Smallest model (fewest worlds, then lexicographically least relations,
/// then valuation) in the frame class of `spec` in which every clause holds
/// universally, or nothing within the bound. Throws BudgetExceeded.
std::optional<KripkeModel> bounded_model_search(const ClauseSet& set, const LogicSpec& spec, const SearchOptions& options = {});
/// Same search for a formula, which must hold at the distinguished world.
std::optional<KripkeModel> bounded_model_search(const Formula& f, const LogicSpec& spec, const SearchOptions& options = {});

/// Literal enumeration in the same order; exponential, used to cross-check
/// the search above on tiny inputs. Throws BudgetExceeded past 2^24 candidates.
std::optional<KripkeModel> enumerate_models(const ClauseSet& set, const LogicSpec& spec, int max_worlds);
std::optional<KripkeModel> enumerate_models(const Formula& f, const LogicSpec& spec, int max_worlds);

/// Worlds `w0..wk`, one edge list per agent, true propositions per world.
/// Generated symbols (leading underscore) are hidden unless `include_generated`.
std::string countermodel_text(const KripkeModel& m, bool include_generated = false);
std::string countermodel_json(const KripkeModel& m, bool include_generated = false);

}  // namespace confres
