#include "clause.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "formula.hpp"

namespace confres {

Clause Clause::initial(std::vector<Literal> disjuncts) {
  Clause c;
  c.kind_ = ClauseKind::Initial;
  c.disjuncts_ = std::move(disjuncts);
  return c;
}

Clause Clause::literal(std::vector<Literal> disjuncts) {
  Clause c;
  c.kind_ = ClauseKind::Literal;
  c.disjuncts_ = std::move(disjuncts);
  return c;
}

Clause Clause::box(Literal lhs, Agent agent, Literal rhs) {
  Clause c;
  c.kind_ = ClauseKind::PositiveModal;
  c.lhs_ = lhs;
  c.agent_ = agent;
  c.rhs_ = rhs;
  return c;
}

Clause Clause::not_box(Literal lhs, Agent agent, Literal rhs) {
  Clause c = box(lhs, agent, rhs);
  c.kind_ = ClauseKind::NegativeModal;
  return c;
}

bool Clause::contains(Literal l) const { return std::find(disjuncts_.begin(), disjuncts_.end(), l) != disjuncts_.end(); }

bool Clause::is_tautology() const {
  if (is_modal()) return false;
  for (Literal l : disjuncts_) {
    if (contains(l.complement())) return true;
  }
  return false;
}

Clause Clause::normalized() const {
  Clause c = *this;
  std::sort(c.disjuncts_.begin(), c.disjuncts_.end());
  c.disjuncts_.erase(std::unique(c.disjuncts_.begin(), c.disjuncts_.end()), c.disjuncts_.end());
  return c;
}

bool Clause::is_normalized() const {
  return std::adjacent_find(disjuncts_.begin(), disjuncts_.end(), [](Literal a, Literal b) { return !(a < b); }) ==
         disjuncts_.end();
}

void Clause::for_each_symbol(const std::function<void(Symbol)>& fn) const {
  if (is_modal()) {
    fn(lhs_.symbol());
    fn(rhs_.symbol());
    return;
  }
  for (Literal l : disjuncts_) fn(l.symbol());
}

std::size_t ClauseHash::operator()(const Clause& c) const noexcept {
  std::size_t h = static_cast<std::size_t>(c.kind()) * 0x9e3779b97f4a7c15ull;
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2); };
  if (c.is_modal()) {
    mix(c.lhs().code());
    mix(static_cast<std::size_t>(c.agent().id));
    mix(c.rhs().code());
  } else {
    for (Literal l : c.disjuncts()) mix(l.code());
  }
  return h;
}

std::size_t ClauseSet::add(Clause c, Justification why) {
  entries_.push_back(ClauseEntry{std::move(c), std::move(why), false});
  return entries_.size() - 1;
}

std::vector<Clause> ClauseSet::clauses() const {
  std::vector<Clause> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.clause);
  return out;
}

std::string render_clause(const Clause& c, const SymbolTable& symbols) {
  std::string out;
  switch (c.kind()) {
    case ClauseKind::Initial:
    case ClauseKind::Literal: {
      out = c.kind() == ClauseKind::Initial ? "start -> " : "true -> ";
      if (c.disjuncts().empty()) return out + "false";
      bool first = true;
      for (Literal l : c.disjuncts()) {
        if (!first) out += " | ";
        out += symbols.render(l);
        first = false;
      }
      return out;
    }
    case ClauseKind::PositiveModal:
      return symbols.render(c.lhs()) + " -> [" + std::to_string(c.agent().id) + "] " + symbols.render(c.rhs());
    case ClauseKind::NegativeModal:
      return symbols.render(c.lhs()) + " -> ~[" + std::to_string(c.agent().id) + "] " + symbols.render(c.rhs());
  }
  return out;
}

std::string ClauseSet::render(const Clause& c) const { return render_clause(c, symbols); }

std::string ClauseSet::to_text() const {
  std::string out;
  for (const auto& e : entries_) {
    out += render(e.clause);
    out += '\n';
  }
  return out;
}

namespace {

class LineReader {
 public:
  LineReader(std::string_view line, int line_no, SymbolTable& symbols) : s_(line), line_(line_no), symbols_(symbols) {}

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, static_cast<int>(pos_) + 1); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }
  bool accept(std::string_view tok) {
    skip_ws();
    if (s_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }
  void expect(std::string_view tok) {
    if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
  }
  std::string word() {
    skip_ws();
    const std::size_t begin = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (begin == pos_) fail("expected a symbol");
    return std::string(s_.substr(begin, pos_ - begin));
  }
  Literal literal() {
    const bool negative = accept("~");
    const std::string name = word();
    if (name == "true" || name == "false" || name == "start") fail("'" + name + "' is not a literal");
    return Literal(symbols_.intern(name), negative);
  }
  Agent agent() {
    skip_ws();
    const std::size_t begin = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (begin == pos_) fail("expected an agent index");
    const int id = std::stoi(std::string(s_.substr(begin, pos_ - begin)));
    if (id < 1) fail("agent index must be positive");
    return Agent{id};
  }

  Clause clause() {
    skip_ws();
    const std::size_t mark = pos_;
    const std::string head = s_.substr(pos_, 1) == "~" ? std::string() : word();
    if (head == "start" || head == "true") {
      expect("->");
      std::vector<Literal> lits;
      skip_ws();
      const std::size_t body = pos_;
      if (word_is("false")) {
        pos_ = body + 5;
      } else {
        lits.push_back(literal());
        while (accept("|")) lits.push_back(literal());
      }
      if (!at_end()) fail("trailing input");
      return head == "start" ? Clause::initial(std::move(lits)) : Clause::literal(std::move(lits));
    }
    pos_ = mark;
    const Literal lhs = literal();
    expect("->");
    const bool negative = accept("~");
    expect("[");
    const Agent a = agent();
    expect("]");
    const Literal rhs = literal();
    if (!at_end()) fail("trailing input");
    return negative ? Clause::not_box(lhs, a, rhs) : Clause::box(lhs, a, rhs);
  }

 private:
  bool word_is(std::string_view w) {
    if (s_.substr(pos_, w.size()) != w) return false;
    const std::size_t end = pos_ + w.size();
    return end == s_.size() || !(std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_');
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  int line_;
  SymbolTable& symbols_;
};

}  // namespace

ClauseSet parse_clauses(std::string_view text) {
  ClauseSet set;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    LineReader reader(line, line_no, set.symbols);
    if (!reader.at_end()) {
      Clause c = reader.clause();
      set.add(std::move(c), Justification::input());
    }
    start = end + 1;
  }
  return set;
}

}  // namespace confres
