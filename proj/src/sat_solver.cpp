#include "sat_solver.hpp"

#include <algorithm>

namespace confres::sat {

namespace {

// Luby sequence, 1-based.
std::uint64_t luby(std::uint64_t i) {
  std::uint64_t k = 1;
  while (((std::uint64_t{1} << k) - 1) < i) ++k;
  while (i != (std::uint64_t{1} << k) - 1) {
    i -= (std::uint64_t{1} << (k - 1)) - 1;
    k = 1;
    while (((std::uint64_t{1} << k) - 1) < i) ++k;
  }
  return std::uint64_t{1} << (k - 1);
}

}  // namespace

int Solver::new_var() {
  const int v = num_vars();
  assign_.push_back(kUnassigned);
  model_.push_back(0);
  phase_.push_back(0);
  level_.push_back(0);
  reason_.push_back(-1);
  activity_.push_back(0.0);
  seen_.push_back(0);
  heap_pos_.push_back(-1);
  watches_.emplace_back();
  watches_.emplace_back();
  heap_insert(v);
  return v;
}

bool Solver::add_clause(std::vector<Lit> lits) {
  if (!ok_) return false;
  backtrack(0);
  std::sort(lits.begin(), lits.end());
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  std::vector<Lit> kept;
  for (std::size_t i = 0; i < lits.size(); ++i) {
    if (i + 1 < lits.size() && lits[i + 1] == flip(lits[i])) return true;
    const std::int8_t v = value(lits[i]);
    if (v == 1) return true;
    if (v == kUnassigned) kept.push_back(lits[i]);
  }
  if (kept.empty()) return ok_ = false;
  if (kept.size() == 1) {
    enqueue(kept[0], -1);
    return ok_ = propagate() < 0;
  }
  attach(std::move(kept));
  return true;
}

int Solver::attach(std::vector<Lit> lits) {
  const int idx = static_cast<int>(clauses_.size());
  watches_[flip(lits[0])].push_back(idx);
  watches_[flip(lits[1])].push_back(idx);
  clauses_.push_back(std::move(lits));
  return idx;
}

void Solver::enqueue(Lit l, int reason) {
  const int v = var_of(l);
  assign_[v] = static_cast<std::int8_t>((l & 1) ? 0 : 1);
  level_[v] = level();
  reason_[v] = reason;
  trail_.push_back(l);
}

// watches_[l] holds clauses watching ~l, visited when l becomes true.
int Solver::propagate() {
  while (qhead_ < trail_.size()) {
    const Lit p = trail_[qhead_++];
    auto& ws = watches_[p];
    std::size_t keep = 0;
    for (std::size_t k = 0; k < ws.size(); ++k) {
      const int ci = ws[k];
      auto& c = clauses_[ci];
      const Lit false_lit = flip(p);
      if (c[0] == false_lit) std::swap(c[0], c[1]);
      if (value(c[0]) == 1) {
        ws[keep++] = ci;
        continue;
      }
      bool moved = false;
      for (std::size_t j = 2; j < c.size(); ++j) {
        if (value(c[j]) != 0) {
          std::swap(c[1], c[j]);
          watches_[flip(c[1])].push_back(ci);
          moved = true;
          break;
        }
      }
      if (moved) continue;
      ws[keep++] = ci;
      if (value(c[0]) == 0) {
        for (std::size_t r = k + 1; r < ws.size(); ++r) ws[keep++] = ws[r];
        ws.resize(keep);
        qhead_ = trail_.size();
        return ci;
      }
      enqueue(c[0], ci);
    }
    ws.resize(keep);
  }
  return -1;
}

void Solver::analyze(int conflict, std::vector<Lit>& learnt, int& back_level) {
  learnt.assign(1, 0);
  int pending = 0;
  Lit p = -1;
  std::size_t index = trail_.size();
  int ci = conflict;
  do {
    const auto& c = clauses_[ci];
    for (std::size_t j = (p == -1 ? 0 : 1); j < c.size(); ++j) {
      const int v = var_of(c[j]);
      if (seen_[v] || level_[v] == 0) continue;
      seen_[v] = 1;
      bump(v);
      if (level_[v] >= level()) {
        ++pending;
      } else {
        learnt.push_back(c[j]);
      }
    }
    while (!seen_[var_of(trail_[--index])]) {
    }
    p = trail_[index];
    ci = reason_[var_of(p)];
    seen_[var_of(p)] = 0;
    --pending;
    // Reason clauses keep their implied literal at position 0.
  } while (pending > 0);
  learnt[0] = flip(p);
  back_level = 0;
  std::size_t max_i = 1;
  for (std::size_t j = 1; j < learnt.size(); ++j) {
    seen_[var_of(learnt[j])] = 0;
    if (level_[var_of(learnt[j])] > back_level) {
      back_level = level_[var_of(learnt[j])];
      max_i = j;
    }
  }
  if (learnt.size() > 1) std::swap(learnt[1], learnt[max_i]);
  decay();
}

void Solver::backtrack(int to_level) {
  if (level() <= to_level) return;
  for (std::size_t i = trail_.size(); i > static_cast<std::size_t>(trail_lim_[to_level]); --i) {
    const int v = var_of(trail_[i - 1]);
    phase_[v] = assign_[v];
    assign_[v] = kUnassigned;
    reason_[v] = -1;
    if (heap_pos_[v] < 0) heap_insert(v);
  }
  trail_.resize(trail_lim_[to_level]);
  trail_lim_.resize(to_level);
  qhead_ = trail_.size();
}

int Solver::pick_branch() {
  while (!heap_.empty()) {
    const int v = heap_pop();
    if (assign_[v] == kUnassigned) return v;
  }
  return -1;
}

void Solver::bump(int var) {
  activity_[var] += inc_;
  if (activity_[var] > 1e100) {
    for (double& a : activity_) a *= 1e-100;
    inc_ *= 1e-100;
  }
  if (heap_pos_[var] >= 0) heap_up(heap_pos_[var]);
}

void Solver::decay() { inc_ /= 0.95; }

bool Solver::heap_less(int a, int b) const {
  if (activity_[a] != activity_[b]) return activity_[a] > activity_[b];
  return a < b;
}

void Solver::heap_insert(int var) {
  heap_pos_[var] = static_cast<int>(heap_.size());
  heap_.push_back(var);
  heap_up(heap_pos_[var]);
}

void Solver::heap_up(int pos) {
  const int v = heap_[pos];
  while (pos > 0) {
    const int parent = (pos - 1) / 2;
    if (!heap_less(v, heap_[parent])) break;
    heap_[pos] = heap_[parent];
    heap_pos_[heap_[pos]] = pos;
    pos = parent;
  }
  heap_[pos] = v;
  heap_pos_[v] = pos;
}

void Solver::heap_down(int pos) {
  const int v = heap_[pos];
  const int n = static_cast<int>(heap_.size());
  for (;;) {
    int child = 2 * pos + 1;
    if (child >= n) break;
    if (child + 1 < n && heap_less(heap_[child + 1], heap_[child])) ++child;
    if (!heap_less(heap_[child], v)) break;
    heap_[pos] = heap_[child];
    heap_pos_[heap_[pos]] = pos;
    pos = child;
  }
  heap_[pos] = v;
  heap_pos_[v] = pos;
}

int Solver::heap_pop() {
  const int top = heap_.front();
  heap_pos_[top] = -1;
  const int last = heap_.back();
  heap_.pop_back();
  if (!heap_.empty()) {
    heap_[0] = last;
    heap_pos_[last] = 0;
    heap_down(0);
  }
  return top;
}

bool Solver::solve(const std::vector<Lit>& assumptions) {
  if (!ok_) return false;
  backtrack(0);
  if (propagate() >= 0) return ok_ = false;
  std::uint64_t restart_no = 1;
  std::uint64_t budget = 100 * luby(restart_no);
  std::vector<Lit> learnt;
  for (;;) {
    const int conflict = propagate();
    if (conflict >= 0) {
      ++conflicts_;
      if (level() == 0) return ok_ = false;
      int back_level = 0;
      analyze(conflict, learnt, back_level);
      backtrack(back_level);
      if (learnt.size() == 1) {
        enqueue(learnt[0], -1);
      } else {
        enqueue(learnt[0], attach(learnt));
      }
      if (--budget == 0) {
        backtrack(0);
        budget = 100 * luby(++restart_no);
      }
      continue;
    }
    Lit next = -1;
    while (level() < static_cast<int>(assumptions.size())) {
      const Lit a = assumptions[level()];
      const std::int8_t v = value(a);
      if (v == 1) {
        trail_lim_.push_back(static_cast<int>(trail_.size()));
      } else if (v == 0) {
        backtrack(0);
        return false;
      } else {
        next = a;
        break;
      }
    }
    if (next == -1) {
      const int v = pick_branch();
      if (v < 0) {
        for (int i = 0; i < num_vars(); ++i) model_[i] = assign_[i];
        backtrack(0);
        return true;
      }
      next = phase_[v] == 1 ? pos(v) : neg(v);
    }
    trail_lim_.push_back(static_cast<int>(trail_.size()));
    enqueue(next, -1);
  }
}

}  // namespace confres::sat
