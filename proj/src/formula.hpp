#pragma once

#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

#include "literal.hpp"

namespace confres {

/// Immutable multimodal formula. Copies share structure.
class Formula {
 public:
  enum class Kind { True, False, Start, Prop, Not, And, Or, Implies, Iff, Box, Dia };

  static Formula truth();
  static Formula falsity();
  static Formula start();
  static Formula prop(std::string name);
  static Formula negation(Formula f);
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula implies(Formula a, Formula b);
  static Formula iff(Formula a, Formula b);
  static Formula box(Agent a, Formula f);
  static Formula dia(Agent a, Formula f);

  Kind kind() const { return node_->kind; }
  bool is(Kind k) const { return node_->kind == k; }
  const std::string& name() const { return node_->name; }
  Agent agent() const { return node_->agent; }
  /// Operand of Not/Box/Dia, left operand of binary connectives.
  const Formula& left() const { return *node_->left; }
  const Formula& right() const { return *node_->right; }
  const Formula& operand() const { return *node_->left; }

  /// Prop or Not(Prop).
  bool is_literal() const;
  int modal_depth() const;
  std::size_t size() const;
  void collect_props(std::set<std::string>& out) const;
  int max_agent() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node {
    Kind kind;
    std::string name;
    Agent agent;
    std::shared_ptr<const Formula> left;
    std::shared_ptr<const Formula> right;
  };
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula make(Kind kind, std::string name, Agent agent, const Formula* l, const Formula* r);

  std::shared_ptr<const Node> node_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int column)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

struct ParseOptions {
  int agent_count = 1;
  /// Accept the `start` constant in the input.
  bool allow_start = false;
};

/// Grammar, loosest to tightest: `<->` (left), `->` (right), `|`, `&`,
/// prefix `~`, `[a]`, `<a>`. `#` starts a line comment.
Formula parse(std::string_view text, const ParseOptions& options);
inline Formula parse(std::string_view text, int agent_count) { return parse(text, ParseOptions{agent_count, false}); }

/// Minimal-parenthesis rendering; parse(render(f)) == f.
std::string render(const Formula& f);

}  // namespace confres
