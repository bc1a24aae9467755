#include "hofcut/analysis.hpp"

#include <algorithm>

namespace hofcut {

namespace {

std::vector<const CareerTotals*> ranked_by_stat(const CareerTable& careers, const StatKey& stat) {
  std::vector<const CareerTotals*> order;
  order.reserve(careers.size());
  for (const auto& totals : careers.rows()) order.push_back(&totals);
  std::sort(order.begin(), order.end(), [&](const CareerTotals* a, const CareerTotals* b) {
    Count va = a->count(stat);
    Count vb = b->count(stat);
    if (va != vb) return va > vb;
    return a->player_id < b->player_id;
  });
  return order;
}

std::string display_name(const PlayerDirectory& directory, const PlayerId& id) {
  auto it = directory.find(id);
  return it == directory.end() ? id : it->second.full_name;
}

}  // namespace

MembershipPartition compare_memberships(const std::set<PlayerId>& cut,
                                        const std::set<PlayerId>& elected) {
  MembershipPartition part;
  std::set_intersection(cut.begin(), cut.end(), elected.begin(), elected.end(),
                        std::inserter(part.both, part.both.end()));
  std::set_difference(cut.begin(), cut.end(), elected.begin(), elected.end(),
                      std::inserter(part.cut_only, part.cut_only.end()));
  std::set_difference(elected.begin(), elected.end(), cut.begin(), cut.end(),
                      std::inserter(part.elected_only, part.elected_only.end()));
  return part;
}

SelectivityResult single_stat_selectivity(const StatKey& stat, const CareerTable& careers,
                                          const std::set<PlayerId>& elected, std::size_t n) {
  if (n < 1) throw std::invalid_argument("selectivity depth must be >= 1");

  auto order = ranked_by_stat(careers, stat);
  SelectivityResult result;
  result.stat = stat;
  result.n = n;

  std::size_t depth = std::min(n, order.size());
  for (std::size_t i = 0; i < depth; ++i) {
    if (elected.count(order[i]->player_id)) ++result.elected_in_top_n;
  }

  if (depth == 0) {
    result.boundary_note = "empty table";
  } else if (n > order.size()) {
    result.boundary_note = "depth exceeds population of " + std::to_string(order.size());
  } else {
    Count boundary = order[n - 1]->count(stat);
    std::size_t ties = 0;
    std::size_t ties_inside = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (order[i]->count(stat) == boundary) {
        ++ties;
        if (i < n) ++ties_inside;
      }
    }
    result.boundary_note = "rank-" + std::to_string(n) + " value " + std::to_string(boundary) +
                           "; " + std::to_string(ties) + " player(s) at this value, " +
                           std::to_string(ties_inside) + " inside top-" + std::to_string(n);
  }
  return result;
}

std::vector<RankedPlayer> top_nonmember_table(const StatKey& stat, const CareerTable& careers,
                                              const std::set<PlayerId>& elected,
                                              const PlayerDirectory& directory, std::size_t n) {
  if (n < 1) throw std::invalid_argument("table depth must be >= 1");
  std::vector<RankedPlayer> out;
  for (const CareerTotals* totals : ranked_by_stat(careers, stat)) {
    if (elected.count(totals->player_id)) continue;
    out.push_back(RankedPlayer{totals->player_id, display_name(directory, totals->player_id),
                               totals->count(stat)});
    if (out.size() == n) break;
  }
  return out;
}

CategoryCounts PositionBreakdown::totals() const {
  CategoryCounts sum;
  for (const auto& [pos, counts] : rows) {
    sum.both += counts.both;
    sum.cut_only += counts.cut_only;
    sum.elected_only += counts.elected_only;
  }
  return sum;
}

PositionBreakdown position_breakdown(const MembershipPartition& partition,
                                     const PlayerDirectory& directory) {
  PositionBreakdown breakdown;
  for (Position pos : kPositionOrder) breakdown.rows[pos];
  breakdown.rows[Position::Unknown];

  auto position_of = [&](const PlayerId& id) {
    auto it = directory.find(id);
    return it == directory.end() ? Position::Unknown : it->second.primary_position;
  };
  for (const auto& id : partition.both) ++breakdown.rows[position_of(id)].both;
  for (const auto& id : partition.cut_only) ++breakdown.rows[position_of(id)].cut_only;
  for (const auto& id : partition.elected_only) ++breakdown.rows[position_of(id)].elected_only;
  return breakdown;
}

std::vector<RosterEntry> rule_roster(const CutRule& rule, const CareerTable& careers,
                                     const PlayerDirectory& directory,
                                     const std::map<PlayerId, double>* bwar) {
  std::vector<RosterEntry> roster;
  for (const auto& totals : careers.rows()) {
    auto stat = first_qualifying_stat(rule, totals);
    if (!stat) continue;
    RosterEntry entry;
    entry.player_id = totals.player_id;
    entry.name = display_name(directory, totals.player_id);
    for (const auto& clause : rule.clauses) {
      entry.values.emplace_back(clause.stat, totals.count(clause.stat));
    }
    entry.qualified_by = *stat;
    if (bwar) {
      auto it = bwar->find(totals.player_id);
      if (it != bwar->end()) entry.bwar = it->second;
    }
    roster.push_back(std::move(entry));
  }

  auto value_of = [](const RosterEntry& e, const StatKey& stat) {
    for (const auto& [key, value] : e.values) {
      if (key == stat) return value;
    }
    return Count{0};
  };
  std::sort(roster.begin(), roster.end(), [&](const RosterEntry& a, const RosterEntry& b) {
    if (bwar) {
      double wa = a.bwar.value_or(-1e9);
      double wb = b.bwar.value_or(-1e9);
      if (wa != wb) return wa > wb;
    }
    Count va = value_of(a, a.qualified_by);
    Count vb = value_of(b, b.qualified_by);
    if (va != vb) return va > vb;
    return a.player_id < b.player_id;
  });
  return roster;
}

}  // namespace hofcut
