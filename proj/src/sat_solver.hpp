#pragma once

#include <cstdint>
#include <vector>

namespace confres::sat {

/// Literal over variable v: 2v for positive, 2v+1 for negative.
using Lit = int;

constexpr Lit pos(int var) { return 2 * var; }
constexpr Lit neg(int var) { return 2 * var + 1; }
constexpr Lit flip(Lit l) { return l ^ 1; }
constexpr int var_of(Lit l) { return l >> 1; }

/// Small CDCL solver: two watched literals, first-UIP learning, VSIDS with
/// index tie-breaking, Luby restarts. Fully deterministic.
class Solver {
 public:
  int new_var();
  int num_vars() const { return static_cast<int>(assign_.size()); }

  /// Adds a permanent clause. Returns false once the formula is known unsatisfiable.
  bool add_clause(std::vector<Lit> lits);

  /// Satisfiable under `assumptions`? The model stays readable until the next call.
  bool solve(const std::vector<Lit>& assumptions = {});

  /// Value of `var` in the last model.
  bool model_value(int var) const { return model_[var] != 0; }
  bool model_value_lit(Lit l) const { return model_value(var_of(l)) != ((l & 1) != 0); }

  std::uint64_t conflicts() const { return conflicts_; }

 private:
  static constexpr std::int8_t kUnassigned = -1;

  std::int8_t value(Lit l) const {
    const std::int8_t v = assign_[var_of(l)];
    return v == kUnassigned ? kUnassigned : static_cast<std::int8_t>(v ^ (l & 1));
  }
  int level() const { return static_cast<int>(trail_lim_.size()); }

  void enqueue(Lit l, int reason);
  int propagate();  // conflicting clause index or -1
  void analyze(int conflict, std::vector<Lit>& learnt, int& back_level);
  void backtrack(int to_level);
  int pick_branch();
  void bump(int var);
  void decay();
  int attach(std::vector<Lit> lits);

  void heap_insert(int var);
  void heap_up(int pos);
  void heap_down(int pos);
  bool heap_less(int a, int b) const;
  int heap_pop();

  std::vector<std::vector<Lit>> clauses_;
  std::vector<std::vector<int>> watches_;  // by literal
  std::vector<std::int8_t> assign_;
  std::vector<std::int8_t> model_;
  std::vector<std::int8_t> phase_;
  std::vector<int> level_;
  std::vector<int> reason_;
  std::vector<Lit> trail_;
  std::vector<int> trail_lim_;
  std::size_t qhead_ = 0;
  std::vector<double> activity_;
  double inc_ = 1.0;
  std::vector<int> heap_;
  std::vector<int> heap_pos_;
  std::vector<char> seen_;
  bool ok_ = true;
  std::uint64_t conflicts_ = 0;
};

}  // namespace confres::sat
