#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "hofcut/types.hpp"

namespace hofcut {

struct ThresholdClause {
  StatKey stat;
  Count threshold = 0;

  bool operator==(const ThresholdClause&) const = default;
};

/// Disjunction of strict greater-than clauses over career counts. A player
/// qualifies when any single count exceeds its threshold. Clause order is
/// preserved for display but has no semantic effect.
struct CutRule {
  Role role = Role::Batter;
  std::vector<ThresholdClause> clauses;

  bool operator==(const CutRule&) const = default;
};

/// Parses "H>2500 or HR>350" (also "K>2800|W>240"). Statistic keys are
/// case-insensitive; the role is inferred from the keys.
CutRule parse_rule(std::string_view text);

/// Same grammar with the role fixed up front; every key must belong to the
/// role's statistic schema.
CutRule parse_rule(std::string_view text, Role role);

/// Canonical form: "H>2500 or HR>350". parse_rule(print_rule(r)) == r.
std::string print_rule(const CutRule& rule);

/// True iff some clause's count strictly exceeds its threshold. Counts
/// absent from the totals read as zero.
bool evaluate(const CutRule& rule, const CareerTotals& totals);

/// First clause (in rule order) the totals qualify under, if any.
std::optional<StatKey> first_qualifying_stat(const CutRule& rule, const CareerTotals& totals);

/// Every player in the table for whom evaluate() is true, sorted by id.
std::set<PlayerId> rule_members(const CutRule& rule, const CareerTable& careers);

struct MarginReport {
  PlayerId player_id;
  std::vector<std::pair<StatKey, Count>> surplus;  // count - threshold, clause order
  bool qualifies = false;
  std::set<StatKey> qualifying_stats;

  Count max_surplus() const;
};

/// One report per requested player (all players when subset is empty),
/// sorted by max surplus descending, then player id.
std::vector<MarginReport> margins(const CutRule& rule, const CareerTable& careers,
                                  const std::optional<std::set<PlayerId>>& subset = std::nullopt);

MarginReport margin_report(const CutRule& rule, const CareerTotals& totals);

CutRule default_batting_rule();    // H>2500 or HR>350
CutRule default_pitching_rule();   // K>2800 or W>240
CutRule top_tier_batting_rule();   // H>3300 or HR>600
CutRule top_tier_pitching_rule();  // K>4000 or W>350
CutRule default_rule(Role role);
CutRule top_tier_rule(Role role);

}  // namespace hofcut
