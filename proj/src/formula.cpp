#include "formula.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace confres {

Formula Formula::make(Kind kind, std::string name, Agent agent, const Formula* l, const Formula* r) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->name = std::move(name);
  node->agent = agent;
  if (l) node->left = std::make_shared<const Formula>(*l);
  if (r) node->right = std::make_shared<const Formula>(*r);
  return Formula(std::move(node));
}

Formula Formula::truth() { return make(Kind::True, {}, {}, nullptr, nullptr); }
Formula Formula::falsity() { return make(Kind::False, {}, {}, nullptr, nullptr); }
Formula Formula::start() { return make(Kind::Start, {}, {}, nullptr, nullptr); }
Formula Formula::prop(std::string name) { return make(Kind::Prop, std::move(name), {}, nullptr, nullptr); }
Formula Formula::negation(Formula f) { return make(Kind::Not, {}, {}, &f, nullptr); }
Formula Formula::conj(Formula a, Formula b) { return make(Kind::And, {}, {}, &a, &b); }
Formula Formula::disj(Formula a, Formula b) { return make(Kind::Or, {}, {}, &a, &b); }
Formula Formula::implies(Formula a, Formula b) { return make(Kind::Implies, {}, {}, &a, &b); }
Formula Formula::iff(Formula a, Formula b) { return make(Kind::Iff, {}, {}, &a, &b); }
Formula Formula::box(Agent a, Formula f) { return make(Kind::Box, {}, a, &f, nullptr); }
Formula Formula::dia(Agent a, Formula f) { return make(Kind::Dia, {}, a, &f, nullptr); }

bool Formula::is_literal() const { return is(Kind::Prop) || (is(Kind::Not) && operand().is(Kind::Prop)); }

int Formula::modal_depth() const {
  switch (kind()) {
    case Kind::Not: return operand().modal_depth();
    case Kind::Box:
    case Kind::Dia: return 1 + operand().modal_depth();
    case Kind::And:
    case Kind::Or:
    case Kind::Implies:
    case Kind::Iff: return std::max(left().modal_depth(), right().modal_depth());
    default: return 0;
  }
}

std::size_t Formula::size() const {
  std::size_t n = 1;
  if (node_->left) n += left().size();
  if (node_->right) n += right().size();
  return n;
}

void Formula::collect_props(std::set<std::string>& out) const {
  if (is(Kind::Prop)) out.insert(name());
  if (node_->left) left().collect_props(out);
  if (node_->right) right().collect_props(out);
}

int Formula::max_agent() const {
  int m = (is(Kind::Box) || is(Kind::Dia)) ? agent().id : 0;
  if (node_->left) m = std::max(m, left().max_agent());
  if (node_->right) m = std::max(m, right().max_agent());
  return m;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.name() != b.name() || a.agent() != b.agent()) return false;
  if (static_cast<bool>(a.node_->left) != static_cast<bool>(b.node_->left)) return false;
  if (a.node_->left && !(a.left() == b.left())) return false;
  if (a.node_->right && !(a.right() == b.right())) return false;
  return true;
}

namespace {

enum class Tok { Ident, Int, True, False, Start, Not, And, Or, Imp, Iff, LBrack, RBrack, LAngle, RAngle, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

std::string describe(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Int: return "agent index";
    case Tok::True: return "'true'";
    case Tok::False: return "'false'";
    case Tok::Start: return "'start'";
    case Tok::Not: return "'~'";
    case Tok::And: return "'&'";
    case Tok::Or: return "'|'";
    case Tok::Imp: return "'->'";
    case Tok::Iff: return "'<->'";
    case Tok::LBrack: return "'['";
    case Tok::RBrack: return "']'";
    case Tok::LAngle: return "'<'";
    case Tok::RAngle: return "'>'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::End: return "end of input";
  }
  return "?";
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    const int l = line;
    const int cl = col;
    auto emit = [&](Tok k, std::size_t len) {
      out.push_back(Token{k, std::string(text.substr(i, len)), l, cl});
      advance(len);
    };
    if (text.substr(i, 3) == "<->") {
      emit(Tok::Iff, 3);
    } else if (text.substr(i, 2) == "->") {
      emit(Tok::Imp, 2);
    } else if (c == '~') {
      emit(Tok::Not, 1);
    } else if (c == '&') {
      emit(Tok::And, 1);
    } else if (c == '|') {
      emit(Tok::Or, 1);
    } else if (c == '[') {
      emit(Tok::LBrack, 1);
    } else if (c == ']') {
      emit(Tok::RBrack, 1);
    } else if (c == '<') {
      emit(Tok::LAngle, 1);
    } else if (c == '>') {
      emit(Tok::RAngle, 1);
    } else if (c == '(') {
      emit(Tok::LParen, 1);
    } else if (c == ')') {
      emit(Tok::RParen, 1);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t n = 0;
      while (i + n < text.size() && std::isdigit(static_cast<unsigned char>(text[i + n]))) ++n;
      emit(Tok::Int, n);
    } else if (c >= 'a' && c <= 'z') {
      std::size_t n = 0;
      while (i + n < text.size()) {
        const char d = text[i + n];
        if ((d >= 'a' && d <= 'z') || std::isdigit(static_cast<unsigned char>(d)) || d == '_') {
          ++n;
        } else {
          break;
        }
      }
      const auto word = text.substr(i, n);
      Tok k = Tok::Ident;
      if (word == "true") k = Tok::True;
      if (word == "false") k = Tok::False;
      if (word == "start") k = Tok::Start;
      emit(k, n);
    } else if (c == '_') {
      throw ParseError("identifiers starting with '_' are reserved", l, cl);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", l, cl);
    }
  }
  out.push_back(Token{Tok::End, {}, line, col});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, const ParseOptions& options) : tokens_(std::move(tokens)), options_(options) {}

  Formula parse_all() {
    Formula f = parse_iff();
    expect(Tok::End);
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }

  [[noreturn]] void fail(const std::string& msg, const Token& at) const { throw ParseError(msg, at.line, at.column); }

  const Token& expect(Tok k) {
    if (peek().kind != k) fail("expected " + describe(k) + ", found " + describe(peek().kind), peek());
    return take();
  }

  Formula parse_iff() {
    Formula f = parse_imp();
    while (peek().kind == Tok::Iff) {
      take();
      f = Formula::iff(f, parse_imp());
    }
    return f;
  }

  Formula parse_imp() {
    Formula f = parse_or();
    if (peek().kind == Tok::Imp) {
      take();
      return Formula::implies(f, parse_imp());
    }
    return f;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (peek().kind == Tok::Or) {
      take();
      f = Formula::disj(f, parse_and());
    }
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (peek().kind == Tok::And) {
      take();
      f = Formula::conj(f, parse_unary());
    }
    return f;
  }

  Agent parse_agent() {
    const Token& t = expect(Tok::Int);
    long value = 0;
    try {
      value = std::stol(t.text);
    } catch (const std::out_of_range&) {
      fail("agent index out of range", t);
    }
    if (value < 1 || value > options_.agent_count) {
      fail("agent index " + t.text + " out of range 1.." + std::to_string(options_.agent_count), t);
    }
    return Agent{static_cast<int>(value)};
  }

  Formula parse_unary() {
    switch (peek().kind) {
      case Tok::Not:
        take();
        return Formula::negation(parse_unary());
      case Tok::LBrack: {
        take();
        const Agent a = parse_agent();
        expect(Tok::RBrack);
        return Formula::box(a, parse_unary());
      }
      case Tok::LAngle: {
        take();
        const Agent a = parse_agent();
        expect(Tok::RAngle);
        return Formula::dia(a, parse_unary());
      }
      default: return parse_atom();
    }
  }

  Formula parse_atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::True: take(); return Formula::truth();
      case Tok::False: take(); return Formula::falsity();
      case Tok::Start:
        if (!options_.allow_start) fail("'start' is not allowed in input formulae", t);
        take();
        return Formula::start();
      case Tok::Ident: take(); return Formula::prop(t.text);
      case Tok::LParen: {
        take();
        Formula f = parse_iff();
        expect(Tok::RParen);
        return f;
      }
      default: fail("expected a formula, found " + describe(t.kind), t);
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  ParseOptions options_;
};

// Binding strength; larger binds tighter.
int level(Formula::Kind k) {
  using K = Formula::Kind;
  switch (k) {
    case K::Iff: return 1;
    case K::Implies: return 2;
    case K::Or: return 3;
    case K::And: return 4;
    case K::Not:
    case K::Box:
    case K::Dia: return 5;
    default: return 6;
  }
}

void render_into(const Formula& f, int min_level, std::string& out) {
  using K = Formula::Kind;
  const int lv = level(f.kind());
  const bool parens = lv < min_level;
  if (parens) out += '(';
  auto binary = [&](const char* op, int left_min, int right_min) {
    render_into(f.left(), left_min, out);
    out += op;
    render_into(f.right(), right_min, out);
  };
  switch (f.kind()) {
    case K::True: out += "true"; break;
    case K::False: out += "false"; break;
    case K::Start: out += "start"; break;
    case K::Prop: out += f.name(); break;
    case K::Not:
      out += '~';
      render_into(f.operand(), 5, out);
      break;
    case K::Box:
      out += "[" + std::to_string(f.agent().id) + "]";
      render_into(f.operand(), 5, out);
      break;
    case K::Dia:
      out += "<" + std::to_string(f.agent().id) + ">";
      render_into(f.operand(), 5, out);
      break;
    case K::And: binary(" & ", 4, 5); break;
    case K::Or: binary(" | ", 3, 4); break;
    case K::Implies: binary(" -> ", 3, 2); break;
    case K::Iff: binary(" <-> ", 1, 2); break;
  }
  if (parens) out += ')';
}

}  // namespace

Formula parse(std::string_view text, const ParseOptions& options) {
  if (options.agent_count < 1) throw std::invalid_argument("agent count must be positive");
  return Parser(tokenize(text), options).parse_all();
}

std::string render(const Formula& f) {
  std::string out;
  render_into(f, 0, out);
  return out;
}

}  // namespace confres
