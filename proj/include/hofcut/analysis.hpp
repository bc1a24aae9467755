#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hofcut/cutrule.hpp"
#include "hofcut/types.hpp"

namespace hofcut {

/// Disjoint split of cut membership against the elected Hall of Fame:
/// both = cut ∩ elected, cut_only = cut \ elected, elected_only = elected \ cut.
struct MembershipPartition {
  std::set<PlayerId> both;
  std::set<PlayerId> cut_only;
  std::set<PlayerId> elected_only;
};

MembershipPartition compare_memberships(const std::set<PlayerId>& cut,
                                        const std::set<PlayerId>& elected);

/// How many elected players appear among the top n of a single-statistic
/// ranking (descending, ties broken by player id). boundary_note records
/// ties at the rank-n value so divergence from other tie rules is auditable.
struct SelectivityResult {
  StatKey stat;
  std::size_t n = 0;
  std::size_t elected_in_top_n = 0;
  std::string boundary_note;
};

SelectivityResult single_stat_selectivity(const StatKey& stat, const CareerTable& careers,
                                          const std::set<PlayerId>& elected, std::size_t n);

struct RankedPlayer {
  PlayerId player_id;
  std::string name;
  Count value = 0;
};

/// Top n non-elected players by one statistic, descending.
std::vector<RankedPlayer> top_nonmember_table(const StatKey& stat, const CareerTable& careers,
                                              const std::set<PlayerId>& elected,
                                              const PlayerDirectory& directory, std::size_t n);

struct CategoryCounts {
  std::size_t both = 0;
  std::size_t cut_only = 0;
  std::size_t elected_only = 0;
};

/// Partition counts grouped by primary fielding position. Column sums over
/// positions equal the partition set sizes.
struct PositionBreakdown {
  std::map<Position, CategoryCounts> rows;

  CategoryCounts totals() const;
};

PositionBreakdown position_breakdown(const MembershipPartition& partition,
                                     const PlayerDirectory& directory);

/// Roster row for rule-membership listings (top-tier tables and the like).
struct RosterEntry {
  PlayerId player_id;
  std::string name;
  std::vector<std::pair<StatKey, Count>> values;  // one per rule clause
  StatKey qualified_by;
  std::optional<double> bwar;
};

/// Members of `rule`, one row per player with every clause statistic
/// filled in. Ordered by bwar descending when a ranking is supplied,
/// otherwise by the first qualifying statistic's value descending.
std::vector<RosterEntry> rule_roster(const CutRule& rule, const CareerTable& careers,
                                     const PlayerDirectory& directory,
                                     const std::map<PlayerId, double>* bwar = nullptr);

}  // namespace hofcut
