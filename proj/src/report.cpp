#include "hofcut/report.hpp"

#include <cstdlib>
#include <sstream>

#include "hofcut/csv.hpp"

namespace hofcut::report {

namespace {

std::string name_of(const PlayerDirectory& directory, const PlayerId& id) {
  auto it = directory.find(id);
  return it == directory.end() ? id : it->second.full_name;
}

std::string format_bwar(double value) {
  std::ostringstream out;
  out.precision(1);
  out << std::fixed << value;
  return out.str();
}

}  // namespace

std::optional<Format> format_from_string(std::string_view text) {
  if (text == "csv") return Format::Csv;
  if (text == "records") return Format::Records;
  return std::nullopt;
}

void emit(std::ostream& out, const TextTable& table, Format format) {
  if (format == Format::Csv) {
    csv::write_row(out, table.header);
    for (const auto& row : table.rows) csv::write_row(out, row);
    return;
  }
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < table.header.size() && i < row.size(); ++i) {
      out << table.header[i] << '=' << row[i] << '\n';
    }
    out << '\n';
  }
}

TextTable career_table(const CareerTable& careers, const PlayerDirectory& directory,
                       const std::vector<StatKey>& stats) {
  TextTable table;
  table.header = {"player_id", "name", "role", "position", "elected"};
  for (const auto& stat : stats) table.header.push_back(stat);
  for (const auto& totals : careers.rows()) {
    std::vector<std::string> row;
    row.push_back(totals.player_id);
    auto rec = directory.find(totals.player_id);
    if (rec != directory.end()) {
      row.push_back(rec->second.full_name);
      row.push_back(to_string(rec->second.role));
      row.push_back(to_string(rec->second.primary_position));
      row.push_back(rec->second.elected ? "true" : "false");
    } else {
      row.insert(row.end(), {totals.player_id, "", "Unknown", "false"});
    }
    for (const auto& stat : stats) row.push_back(std::to_string(totals.count(stat)));
    table.rows.push_back(std::move(row));
  }
  return table;
}

TextTable elected_table(const ElectedSets& elected, const PlayerDirectory& directory) {
  TextTable table;
  table.header = {"player_id", "name", "role", "position"};
  auto add = [&](const std::set<PlayerId>& ids) {
    for (const auto& id : ids) {
      auto rec = directory.find(id);
      table.rows.push_back({id, name_of(directory, id),
                            rec == directory.end() ? "" : to_string(rec->second.role),
                            rec == directory.end() ? "Unknown"
                                                   : to_string(rec->second.primary_position)});
    }
  };
  add(elected.batters);
  add(elected.pitchers);
  return table;
}

TextTable members_table(const CutRule& rule, const CareerTable& careers,
                        const PlayerDirectory& directory) {
  TextTable table;
  table.header = {"player_id", "name", "qualified_by"};
  for (const auto& clause : rule.clauses) table.header.push_back(clause.stat);
  for (const auto& totals : careers.rows()) {
    auto stat = first_qualifying_stat(rule, totals);
    if (!stat) continue;
    std::vector<std::string> row = {totals.player_id, name_of(directory, totals.player_id),
                                    *stat};
    for (const auto& clause : rule.clauses) {
      row.push_back(std::to_string(totals.count(clause.stat)));
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

TextTable margins_table(const CutRule& rule, const std::vector<MarginReport>& reports,
                        const PlayerDirectory& directory) {
  TextTable table;
  table.header = {"player_id", "name", "qualifies"};
  for (const auto& clause : rule.clauses) {
    table.header.push_back("surplus_" + clause.stat);
  }
  for (const auto& report : reports) {
    std::vector<std::string> row = {report.player_id, name_of(directory, report.player_id),
                                    report.qualifies ? "true" : "false"};
    for (const auto& [stat, surplus] : report.surplus) {
      row.push_back(std::to_string(surplus));
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

TextTable selectivity_table(const std::vector<SelectivityResult>& results) {
  TextTable table;
  table.header = {"stat", "n", "elected_in_top_n", "boundary_note"};
  for (const auto& result : results) {
    table.rows.push_back({result.stat, std::to_string(result.n),
                          std::to_string(result.elected_in_top_n), result.boundary_note});
  }
  return table;
}

TextTable landscape_matrix(const LandscapeGrid& landscape) {
  TextTable table;
  table.header.push_back("");
  for (Count v : landscape.grid.values_b) table.header.push_back(std::to_string(v));
  for (std::size_t i = 0; i < landscape.counts.size(); ++i) {
    std::vector<std::string> row;
    row.push_back(std::to_string(landscape.grid.values_a[i]));
    for (Count count : landscape.counts[i]) {
      // A trailing '*' marks cells within tolerance of the target size.
      bool near = std::llabs(count - landscape.target) <= landscape.tolerance;
      row.push_back(std::to_string(count) + (near ? "*" : ""));
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

TextTable landscape_flat(const LandscapeGrid& landscape) {
  TextTable table;
  table.header = {landscape.grid.stat_a, landscape.grid.stat_b, "count", "near_target"};
  for (std::size_t i = 0; i < landscape.counts.size(); ++i) {
    for (std::size_t j = 0; j < landscape.counts[i].size(); ++j) {
      Count count = landscape.counts[i][j];
      bool near = std::llabs(count - landscape.target) <= landscape.tolerance;
      table.rows.push_back({std::to_string(landscape.grid.values_a[i]),
                            std::to_string(landscape.grid.values_b[j]), std::to_string(count),
                            near ? "true" : "false"});
    }
  }
  return table;
}

TextTable sensitivity_table(const SensitivityReport& report, const CareerTable& careers,
                            const PlayerDirectory& directory,
                            const std::set<PlayerId>& elected) {
  TextTable table;
  table.header = {"change", "player_id", "name", report.changed_stat, "elected"};
  auto add = [&](const std::vector<PlayerId>& ids, const char* change) {
    for (const auto& id : ids) {
      const CareerTotals* totals = careers.find(id);
      table.rows.push_back({change, id, name_of(directory, id),
                            std::to_string(totals ? totals->count(report.changed_stat) : 0),
                            elected.count(id) ? "true" : "false"});
    }
  };
  add(report.players_removed, "removed");
  add(report.players_added, "added");
  return table;
}

TextTable partition_table(const MembershipPartition& partition,
                          const PlayerDirectory& directory) {
  TextTable table;
  table.header = {"category", "player_id", "name"};
  auto add = [&](const std::set<PlayerId>& ids, const char* category) {
    for (const auto& id : ids) {
      table.rows.push_back({category, id, name_of(directory, id)});
    }
  };
  add(partition.both, "both");
  add(partition.cut_only, "cut_only");
  add(partition.elected_only, "elected_only");
  return table;
}

TextTable positions_table(const PositionBreakdown& breakdown) {
  TextTable table;
  table.header = {"position", "category", "count"};
  for (const auto& [pos, counts] : breakdown.rows) {
    table.rows.push_back({to_string(pos), "both", std::to_string(counts.both)});
    table.rows.push_back({to_string(pos), "cut_only", std::to_string(counts.cut_only)});
    table.rows.push_back({to_string(pos), "elected_only", std::to_string(counts.elected_only)});
  }
  return table;
}

TextTable ranked_table(const StatKey& stat, const std::vector<RankedPlayer>& rows) {
  TextTable table;
  table.header = {"rank", "player_id", "name", stat};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    table.rows.push_back({std::to_string(i + 1), rows[i].player_id, rows[i].name,
                          std::to_string(rows[i].value)});
  }
  return table;
}

TextTable roster_table(const CutRule& rule, const std::vector<RosterEntry>& roster) {
  TextTable table;
  table.header = {"rank", "player_id", "name"};
  for (const auto& clause : rule.clauses) table.header.push_back(clause.stat);
  table.header.push_back("qualified_by");
  bool any_bwar = false;
  for (const auto& entry : roster) any_bwar = any_bwar || entry.bwar.has_value();
  if (any_bwar) table.header.push_back("bwar");

  for (std::size_t i = 0; i < roster.size(); ++i) {
    const auto& entry = roster[i];
    std::vector<std::string> row = {std::to_string(i + 1), entry.player_id, entry.name};
    for (const auto& [stat, value] : entry.values) row.push_back(std::to_string(value));
    row.push_back(entry.qualified_by);
    if (any_bwar) row.push_back(entry.bwar ? format_bwar(*entry.bwar) : "");
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace hofcut::report
