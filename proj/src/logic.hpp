#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "literal.hpp"

namespace confres {

/// Axiom families G^{p,q,r,s} with p,q,r,s in {0,1}, grouped with their duals.
enum class Family { B, Ban, D, F, T, Five, G1, G0111 };

/// First-order frame conditions corresponding to each family.
enum class FrameProperty { Symmetric, ModallyBanal, Serial, Functional, Reflexive, Euclidean, Convergent, ZeroOneOneOneConvergent };

using Exponents = std::array<int, 4>;

enum class RuleKind { IRES1, IRES2, LRES, MRES, NEC1, NEC2, NEC3, Confluence };

struct RuleId {
  RuleKind kind = RuleKind::LRES;
  Agent agent;
  Exponents pqrs{};

  static RuleId k(RuleKind kind) { return RuleId{kind, Agent{}, {}}; }
  static RuleId k(RuleKind kind, Agent a) { return RuleId{kind, a, {}}; }
  static RuleId res(Agent a, Exponents e) { return RuleId{RuleKind::Confluence, a, e}; }

  /// `RES[a]{p,q,r,s}` for confluence rules, the bare rule name otherwise.
  std::string name() const;
  friend bool operator==(const RuleId& a, const RuleId& b) {
    if (a.kind != b.kind) return false;
    if (a.kind == RuleKind::Confluence) return a.agent == b.agent && a.pqrs == b.pqrs;
    return true;
  }
};

std::string_view family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);
std::string_view property_name(FrameProperty p);
FrameProperty frame_property(Family f);

/// Both Table-style rule exponents attached to a family (the premise-shape
/// rule first, then the dual).
std::vector<Exponents> family_rules(Family f);
/// The rule used by default for a family.
Exponents default_rule(Family f);
/// Whether the rule's conclusion mentions a definition symbol.
bool concludes_with_definitions(const Exponents& e);
/// True when the rule takes a literal clause as premise (RES^{0,0,r,s}).
bool takes_literal_premise(const Exponents& e);
/// The 13 confluence rules in table order.
const std::vector<Exponents>& all_confluence_rules();

/// Per-agent choice of confluence families. Agents not listed are plain K.
class LogicSpec {
 public:
  LogicSpec() = default;

  void add(Agent a, Family f) { families_[a.id].insert(f); }
  void set_all_rules(bool on) { all_rules_ = on; }
  bool all_rules() const { return all_rules_; }

  const std::set<Family>& families(Agent a) const;
  std::vector<Agent> agents() const;
  std::vector<RuleId> enabled_rules(Agent a) const;
  std::vector<FrameProperty> frame_properties(Agent a) const;
  /// Some enabled rule for `a` concludes with a definition symbol.
  bool needs_definitions(Agent a) const;
  bool is_plain_k() const;
  /// Largest agent index listed, including plain-K entries; 0 if none.
  int max_agent() const { return families_.empty() ? 0 : families_.rbegin()->first; }

  /// `agent ':' family (',' family)* (';' ...)*`, families K T D B Ban F 5 G1 G0111.
  static LogicSpec parse(std::string_view text);
  std::string to_string() const;

 private:
  std::map<int, std::set<Family>> families_;
  bool all_rules_ = false;
};

}  // namespace confres
