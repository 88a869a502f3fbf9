#include "logic.hpp"

#include <charconv>
#include <stdexcept>

namespace confres {

std::string RuleId::name() const {
  switch (kind) {
    case RuleKind::IRES1: return "IRES1";
    case RuleKind::IRES2: return "IRES2";
    case RuleKind::LRES: return "LRES";
    case RuleKind::MRES: return "MRES";
    case RuleKind::NEC1: return "NEC1";
    case RuleKind::NEC2: return "NEC2";
    case RuleKind::NEC3: return "NEC3";
    case RuleKind::Confluence: break;
  }
  return "RES[" + std::to_string(agent.id) + "]{" + std::to_string(pqrs[0]) + "," + std::to_string(pqrs[1]) + "," +
         std::to_string(pqrs[2]) + "," + std::to_string(pqrs[3]) + "}";
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::B: return "B";
    case Family::Ban: return "Ban";
    case Family::D: return "D";
    case Family::F: return "F";
    case Family::T: return "T";
    case Family::Five: return "5";
    case Family::G1: return "G1";
    case Family::G0111: return "G0111";
  }
  return "?";
}

std::optional<Family> family_from_name(std::string_view name) {
  for (Family f : {Family::B, Family::Ban, Family::D, Family::F, Family::T, Family::Five, Family::G1, Family::G0111}) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

std::string_view property_name(FrameProperty p) {
  switch (p) {
    case FrameProperty::Symmetric: return "symmetric";
    case FrameProperty::ModallyBanal: return "modally banal";
    case FrameProperty::Serial: return "serial";
    case FrameProperty::Functional: return "functional";
    case FrameProperty::Reflexive: return "reflexive";
    case FrameProperty::Euclidean: return "Euclidean";
    case FrameProperty::Convergent: return "convergent";
    case FrameProperty::ZeroOneOneOneConvergent: return "0,1,1,1-convergent";
  }
  return "?";
}

FrameProperty frame_property(Family f) {
  switch (f) {
    case Family::B: return FrameProperty::Symmetric;
    case Family::Ban: return FrameProperty::ModallyBanal;
    case Family::D: return FrameProperty::Serial;
    case Family::F: return FrameProperty::Functional;
    case Family::T: return FrameProperty::Reflexive;
    case Family::Five: return FrameProperty::Euclidean;
    case Family::G1: return FrameProperty::Convergent;
    case Family::G0111: return FrameProperty::ZeroOneOneOneConvergent;
  }
  throw std::logic_error("unknown family");
}

std::vector<Exponents> family_rules(Family f) {
  switch (f) {
    case Family::B: return {{0, 0, 1, 1}, {1, 1, 0, 0}};
    case Family::Ban: return {{0, 0, 1, 0}, {1, 0, 0, 0}};
    case Family::D: return {{0, 1, 0, 1}};
    case Family::F: return {{1, 0, 1, 0}};
    case Family::T: return {{0, 0, 0, 1}, {0, 1, 0, 0}};
    case Family::Five: return {{1, 0, 1, 1}, {1, 1, 1, 0}};
    case Family::G1: return {{1, 1, 1, 1}};
    case Family::G0111: return {{0, 1, 1, 1}, {1, 1, 0, 1}};
  }
  return {};
}

Exponents default_rule(Family f) {
  switch (f) {
    case Family::B: return {1, 1, 0, 0};
    case Family::Ban: return {1, 0, 0, 0};
    case Family::D: return {0, 1, 0, 1};
    case Family::F: return {1, 0, 1, 0};
    case Family::T: return {0, 1, 0, 0};
    case Family::Five: return {1, 0, 1, 1};
    case Family::G1: return {1, 1, 1, 1};
    case Family::G0111: return {0, 1, 1, 1};
  }
  return {};
}

bool concludes_with_definitions(const Exponents& e) {
  const auto [p, q, r, s] = e;
  return (r == 1 && s == 1) || (p == 1 && q == 1 && (r == 1 || s == 1));
}

bool takes_literal_premise(const Exponents& e) { return e[0] == 0 && e[1] == 0; }

const std::vector<Exponents>& all_confluence_rules() {
  static const std::vector<Exponents> rules = {
      {0, 0, 1, 1}, {1, 1, 0, 0}, {0, 0, 1, 0}, {1, 0, 0, 0}, {0, 1, 0, 1}, {1, 0, 1, 0}, {0, 0, 0, 1},
      {0, 1, 0, 0}, {1, 0, 1, 1}, {1, 1, 1, 0}, {1, 1, 1, 1}, {0, 1, 1, 1}, {1, 1, 0, 1},
  };
  return rules;
}

const std::set<Family>& LogicSpec::families(Agent a) const {
  static const std::set<Family> none;
  auto it = families_.find(a.id);
  return it == families_.end() ? none : it->second;
}

std::vector<Agent> LogicSpec::agents() const {
  std::vector<Agent> out;
  for (const auto& [id, fams] : families_) {
    if (!fams.empty()) out.push_back(Agent{id});
  }
  return out;
}

std::vector<RuleId> LogicSpec::enabled_rules(Agent a) const {
  std::vector<RuleId> out;
  for (Family f : families(a)) {
    const auto rules = all_rules_ ? family_rules(f) : std::vector<Exponents>{default_rule(f)};
    for (const auto& e : rules) {
      RuleId r = RuleId::res(a, e);
      bool dup = false;
      for (const auto& have : out) dup = dup || have == r;
      if (!dup) out.push_back(r);
    }
  }
  return out;
}

std::vector<FrameProperty> LogicSpec::frame_properties(Agent a) const {
  std::vector<FrameProperty> out;
  for (Family f : families(a)) out.push_back(frame_property(f));
  return out;
}

bool LogicSpec::needs_definitions(Agent a) const {
  for (const RuleId& r : enabled_rules(a)) {
    if (concludes_with_definitions(r.pqrs)) return true;
  }
  return false;
}

bool LogicSpec::is_plain_k() const { return agents().empty(); }

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace

LogicSpec LogicSpec::parse(std::string_view text) {
  LogicSpec spec;
  text = trim(text);
  if (text.empty()) return spec;
  for (auto group : split(text, ';')) {
    group = trim(group);
    if (group.empty()) continue;
    const auto colon = group.find(':');
    if (colon == std::string_view::npos) throw std::invalid_argument("logic: expected 'agent:families' in '" + std::string(group) + "'");
    const auto agent_text = trim(group.substr(0, colon));
    int agent = 0;
    auto [ptr, ec] = std::from_chars(agent_text.data(), agent_text.data() + agent_text.size(), agent);
    if (ec != std::errc{} || ptr != agent_text.data() + agent_text.size() || agent < 1) {
      throw std::invalid_argument("logic: bad agent index '" + std::string(agent_text) + "'");
    }
    // Listing an agent makes it known even when it is plain K.
    spec.families_[agent];
    for (auto name : split(group.substr(colon + 1), ',')) {
      name = trim(name);
      if (name == "K") continue;
      auto f = family_from_name(name);
      if (!f) throw std::invalid_argument("logic: unknown family '" + std::string(name) + "'");
      spec.add(Agent{agent}, *f);
    }
  }
  return spec;
}

std::string LogicSpec::to_string() const {
  std::string out;
  for (const auto& [id, fams] : families_) {
    if (!out.empty()) out += ';';
    out += std::to_string(id) + ":";
    if (fams.empty()) {
      out += "K";
      continue;
    }
    bool first = true;
    for (Family f : fams) {
      if (!first) out += ',';
      out += family_name(f);
      first = false;
    }
  }
  return out.empty() ? "K" : out;
}

}  // namespace confres
