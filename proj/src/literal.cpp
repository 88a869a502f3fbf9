#include "literal.hpp"

#include <charconv>
#include <stdexcept>

namespace confres {

namespace {

// Parses `_w{agent}_{p|n}{symbol}`; returns agent, sign and inner name.
std::optional<std::tuple<int, bool, std::string_view>> split_definition_name(std::string_view name) {
  if (name.size() < 5 || name.substr(0, 2) != "_w") return std::nullopt;
  std::size_t pos = 2;
  int agent = 0;
  auto [ptr, ec] = std::from_chars(name.data() + pos, name.data() + name.size(), agent);
  if (ec != std::errc{} || agent < 1) return std::nullopt;
  pos = static_cast<std::size_t>(ptr - name.data());
  if (pos + 2 >= name.size() || name[pos] != '_') return std::nullopt;
  const char sign = name[pos + 1];
  if (sign != 'p' && sign != 'n') return std::nullopt;
  return std::make_tuple(agent, sign == 'n', name.substr(pos + 2));
}

}  // namespace

Symbol SymbolTable::add(std::string name, SymbolKind kind) {
  const auto id = static_cast<Symbol>(symbols_.size());
  ids_.emplace(name, id);
  symbols_.push_back(SymbolInfo{std::move(name), kind, Agent{}, Literal{}});
  return id;
}

std::optional<Symbol> SymbolTable::find(std::string_view name) const {
  auto it = ids_.find(std::string(name));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

Symbol SymbolTable::intern(std::string_view name) {
  if (auto s = find(name)) return *s;
  if (auto parts = split_definition_name(name)) {
    auto [agent, negative, inner] = *parts;
    const Symbol inner_symbol = intern(inner);
    if (is_definition(inner_symbol)) throw std::invalid_argument("nested definition symbol: " + std::string(name));
    const Literal l(inner_symbol, negative);
    const Symbol s = add(std::string(name), SymbolKind::Definition);
    symbols_[s].agent = Agent{agent};
    symbols_[s].defined = l;
    definitions_[{agent, l.code()}] = s;
    return s;
  }
  SymbolKind kind = SymbolKind::User;
  if (name.starts_with("_t")) kind = SymbolKind::Surrogate;
  if (name.starts_with("_d")) kind = SymbolKind::Renaming;
  return add(std::string(name), kind);
}

Symbol SymbolTable::fresh_surrogate() {
  for (;;) {
    std::string name = "_t" + std::to_string(next_surrogate_++);
    if (!find(name)) return add(std::move(name), SymbolKind::Surrogate);
  }
}

Symbol SymbolTable::fresh_renaming() {
  for (;;) {
    std::string name = "_d" + std::to_string(next_renaming_++);
    if (!find(name)) return add(std::move(name), SymbolKind::Renaming);
  }
}

std::string SymbolTable::definition_name(Agent agent, Literal l) const {
  return "_w" + std::to_string(agent.id) + "_" + (l.negative() ? "n" : "p") + name(l.symbol());
}

Symbol SymbolTable::definition(Agent agent, Literal l) {
  if (auto s = find_definition(agent, l)) return *s;
  if (is_definition(l.symbol())) throw std::invalid_argument("definition symbols may not be nested");
  const Symbol s = add(definition_name(agent, l), SymbolKind::Definition);
  symbols_[s].agent = agent;
  symbols_[s].defined = l;
  definitions_[{agent.id, l.code()}] = s;
  return s;
}

std::optional<Symbol> SymbolTable::find_definition(Agent agent, Literal l) const {
  auto it = definitions_.find({agent.id, l.code()});
  if (it == definitions_.end()) return std::nullopt;
  return it->second;
}

std::string SymbolTable::render(Literal l) const { return (l.negative() ? "~" : "") + name(l.symbol()); }

}  // namespace confres
