#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace confres {

/// Index of an agent in A_n = {1, ..., n}.
struct Agent {
  int id = 1;

  friend auto operator<=>(const Agent&, const Agent&) = default;
};

using Symbol = std::uint32_t;

/// A propositional symbol or its negation, packed as 2*symbol + negated.
class Literal {
 public:
  constexpr Literal() = default;
  constexpr Literal(Symbol symbol, bool negative) : code_((symbol << 1) | (negative ? 1u : 0u)) {}

  static constexpr Literal from_code(std::uint32_t code) {
    Literal l;
    l.code_ = code;
    return l;
  }

  constexpr Symbol symbol() const { return code_ >> 1; }
  constexpr bool negative() const { return (code_ & 1u) != 0; }
  constexpr bool positive() const { return !negative(); }
  constexpr std::uint32_t code() const { return code_; }

  constexpr Literal complement() const { return from_code(code_ ^ 1u); }
  constexpr Literal operator~() const { return complement(); }

  friend constexpr auto operator<=>(const Literal&, const Literal&) = default;

 private:
  std::uint32_t code_ = 0;
};

constexpr Literal complement(Literal l) { return l.complement(); }

/// Modal literal: [a]l when positive, ~[a]l when negative.
struct ModalLiteral {
  bool positive = true;
  Agent agent;
  Literal inner;

  friend auto operator<=>(const ModalLiteral&, const ModalLiteral&) = default;
};

enum class SymbolKind {
  User,        // appears in the input formula
  Surrogate,   // _tN, introduced by renaming
  Definition,  // _w{a}_{p|n}{sym}, stands for <a>l
  Renaming,    // _dN, names a negated disjunction (literal-premise confluence rules)
};

struct SymbolInfo {
  std::string name;
  SymbolKind kind = SymbolKind::User;
  // Only meaningful for Definition symbols.
  Agent agent;
  Literal defined;
};

/// Interns symbol names and records which ones are generated.
class SymbolTable {
 public:
  /// Returns the symbol for `name`, creating it if needed. Reserved names
  /// following the definition-symbol encoding are registered as such.
  Symbol intern(std::string_view name);
  std::optional<Symbol> find(std::string_view name) const;

  /// Next unused `_tN`.
  Symbol fresh_surrogate();
  /// Next unused `_dN`.
  Symbol fresh_renaming();

  /// The definition symbol w^{a,l}; created on first request.
  Symbol definition(Agent agent, Literal l);
  std::optional<Symbol> find_definition(Agent agent, Literal l) const;

  const SymbolInfo& info(Symbol s) const { return symbols_.at(s); }
  const std::string& name(Symbol s) const { return symbols_.at(s).name; }
  bool is_definition(Symbol s) const { return symbols_.at(s).kind == SymbolKind::Definition; }
  std::size_t size() const { return symbols_.size(); }

  std::string render(Literal l) const;

  /// `_w{agent}_{p|n}{symbol}`.
  std::string definition_name(Agent agent, Literal l) const;

 private:
  Symbol add(std::string name, SymbolKind kind);

  std::vector<SymbolInfo> symbols_;
  std::unordered_map<std::string, Symbol> ids_;
  std::map<std::pair<int, std::uint32_t>, Symbol> definitions_;
  std::uint32_t next_surrogate_ = 0;
  std::uint32_t next_renaming_ = 0;
};

}  // namespace confres

template <>
struct std::hash<confres::Literal> {
  std::size_t operator()(const confres::Literal& l) const noexcept { return std::hash<std::uint32_t>{}(l.code()); }
};
