#include "hofcut/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_map>
#include <unordered_set>

#include "hofcut/csv.hpp"

namespace hofcut {

namespace {

// Appearances columns in kPositionOrder.
constexpr std::array<const char*, 10> kAppearanceColumns = {
    "G_p", "G_c", "G_1b", "G_2b", "G_3b", "G_ss", "G_lf", "G_cf", "G_rf", "G_dh"};

Count parse_count(const csv::Reader& reader, const std::vector<std::string>& fields,
                  std::size_t col, const std::string& column_name) {
  if (col >= fields.size()) return 0;  // short row: treat trailing cells as empty
  const std::string& cell = fields[col];
  if (cell.empty()) return 0;
  Count value = 0;
  auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (ec != std::errc() || ptr != cell.data() + cell.size()) {
    throw DataError(reader.file_name() + ":" + std::to_string(reader.record_line()) +
                    ": column '" + column_name + "': expected integer, got '" + cell + "'");
  }
  if (value < 0) {
    throw DataError(reader.file_name() + ":" + std::to_string(reader.record_line()) +
                    ": column '" + column_name + "': negative count '" + cell + "'");
  }
  return value;
}

int parse_year(const csv::Reader& reader, const std::vector<std::string>& fields,
               std::size_t col, const std::string& column_name) {
  return static_cast<int>(parse_count(reader, fields, col, column_name));
}

std::string field_or_empty(const std::vector<std::string>& fields, std::size_t col) {
  return col < fields.size() ? fields[col] : std::string();
}

std::size_t require_column(const csv::Reader& reader, const std::string& name) {
  auto col = reader.column(name);
  if (!col) {
    throw DataError(reader.file_name() + ": missing required column '" + name + "'");
  }
  return *col;
}

csv::Reader open_table(const std::filesystem::path& dir, const std::string& file) {
  auto path = dir / file;
  if (!std::filesystem::exists(path)) {
    throw DataError(file + ": not found in " + dir.string());
  }
  return csv::Reader(path);
}

std::vector<PersonRow> load_people(const std::filesystem::path& dir, FileStats& stats) {
  csv::Reader reader = open_table(dir, "People.csv");
  std::size_t id_col = require_column(reader, "playerID");
  std::size_t first_col = require_column(reader, "nameFirst");
  std::size_t last_col = require_column(reader, "nameLast");

  std::vector<PersonRow> rows;
  std::vector<std::string> fields;
  while (reader.next(fields)) {
    PersonRow row;
    row.player_id = field_or_empty(fields, id_col);
    if (row.player_id.empty()) continue;
    std::string first = csv::sanitize_utf8(field_or_empty(fields, first_col));
    std::string last = csv::sanitize_utf8(field_or_empty(fields, last_col));
    if (first.empty()) row.full_name = last;
    else if (last.empty()) row.full_name = first;
    else row.full_name = first + " " + last;
    rows.push_back(std::move(row));
    ++stats.rows;
  }
  return rows;
}

std::vector<SeasonRow> load_seasons(const std::filesystem::path& dir, const std::string& file,
                                    const std::vector<std::pair<std::string, StatKey>>& stat_columns,
                                    FileStats& stats) {
  csv::Reader reader = open_table(dir, file);
  std::size_t id_col = require_column(reader, "playerID");
  std::size_t year_col = require_column(reader, "yearID");
  std::size_t stint_col = require_column(reader, "stint");
  std::size_t lg_col = require_column(reader, "lgID");

  std::vector<std::pair<std::size_t, StatKey>> resolved;
  for (const auto& [column, key] : stat_columns) {
    resolved.emplace_back(require_column(reader, column), key);
  }

  std::vector<SeasonRow> rows;
  std::vector<std::string> fields;
  std::unordered_map<std::string, std::size_t> stat_names;  // column index -> name for errors
  while (reader.next(fields)) {
    SeasonRow row;
    row.player_id = field_or_empty(fields, id_col);
    if (row.player_id.empty()) continue;
    row.year = parse_year(reader, fields, year_col, "yearID");
    row.stint = static_cast<int>(parse_count(reader, fields, stint_col, "stint"));
    if (row.stint < 1) row.stint = 1;
    row.league_id = field_or_empty(fields, lg_col);
    for (std::size_t i = 0; i < resolved.size(); ++i) {
      row.counts[resolved[i].second] =
          parse_count(reader, fields, resolved[i].first, stat_columns[i].first);
    }
    rows.push_back(std::move(row));
    ++stats.rows;
  }
  return rows;
}

std::vector<AppearanceRow> load_appearances(const std::filesystem::path& dir, FileStats& stats) {
  csv::Reader reader = open_table(dir, "Appearances.csv");
  std::size_t id_col = require_column(reader, "playerID");
  std::size_t year_col = require_column(reader, "yearID");
  auto lg_col = reader.column("lgID");

  std::array<std::size_t, 10> pos_cols{};
  for (std::size_t i = 0; i < kAppearanceColumns.size(); ++i) {
    pos_cols[i] = require_column(reader, kAppearanceColumns[i]);
  }

  std::vector<AppearanceRow> rows;
  std::vector<std::string> fields;
  while (reader.next(fields)) {
    AppearanceRow row;
    row.player_id = field_or_empty(fields, id_col);
    if (row.player_id.empty()) continue;
    row.year = parse_year(reader, fields, year_col, "yearID");
    if (lg_col) row.league_id = field_or_empty(fields, *lg_col);
    for (std::size_t i = 0; i < pos_cols.size(); ++i) {
      row.games[i] = parse_count(reader, fields, pos_cols[i], kAppearanceColumns[i]);
    }
    rows.push_back(std::move(row));
    ++stats.rows;
  }
  return rows;
}

std::vector<HallOfFameRow> load_hall_of_fame(const std::filesystem::path& dir, FileStats& stats) {
  csv::Reader reader = open_table(dir, "HallOfFame.csv");
  std::size_t id_col = require_column(reader, "playerID");
  // Lahman names this column "yearid" (lower case), unlike every other table.
  auto year_col = reader.column("yearid");
  if (!year_col) year_col = reader.column("yearID");
  if (!year_col) {
    throw DataError(reader.file_name() + ": missing required column 'yearid'");
  }
  std::size_t voted_col = require_column(reader, "votedBy");
  std::size_t inducted_col = require_column(reader, "inducted");
  std::size_t category_col = require_column(reader, "category");

  std::vector<HallOfFameRow> rows;
  std::vector<std::string> fields;
  while (reader.next(fields)) {
    HallOfFameRow row;
    row.player_id = field_or_empty(fields, id_col);
    if (row.player_id.empty()) continue;
    row.year = parse_year(reader, fields, *year_col, "yearid");
    row.voted_by = field_or_empty(fields, voted_col);
    row.inducted = field_or_empty(fields, inducted_col) == "Y";
    row.category = field_or_empty(fields, category_col);
    rows.push_back(std::move(row));
    ++stats.rows;
  }
  return rows;
}

struct CareerAccumulator {
  std::unordered_map<PlayerId, std::map<StatKey, Count>> sums;

  void add(const SeasonRow& row) {
    auto& counts = sums[row.player_id];
    for (const auto& [key, value] : row.counts) {
      counts[key] += value;
    }
  }

  CareerTable finish() const {
    std::vector<CareerTotals> rows;
    rows.reserve(sums.size());
    for (const auto& [id, counts] : sums) {
      rows.push_back(CareerTotals{id, counts});
    }
    return CareerTable(std::move(rows));
  }
};

// Per-player inputs to the classification decision.
struct ClassifyInputs {
  std::array<Count, 10> appearance_games{};
  bool in_appearances = false;
  bool in_batting = false;
  bool in_pitching = false;
  Count batting_g = 0;
  Count pitching_g = 0;
  Count outs = 0;
};

Classification decide(const ClassifyInputs& in) {
  if (in.in_appearances) {
    Count total = 0;
    for (Count g : in.appearance_games) total += g;
    if (total > 0) {
      std::size_t best = 0;
      for (std::size_t i = 1; i < in.appearance_games.size(); ++i) {
        if (in.appearance_games[i] > in.appearance_games[best]) best = i;
      }
      Position pos = kPositionOrder[best];
      if (pos == Position::P) return {Role::Pitcher, Position::P};
      return {Role::Batter, pos};
    }
  }
  // No usable appearance data: infer from which career tables the player
  // shows up in. Two-way presence goes to Pitcher only when the pitching
  // workload is substantial.
  if (in.in_pitching && in.in_batting) {
    if (in.outs > 0 && 2 * in.pitching_g >= in.batting_g) {
      return {Role::Pitcher, Position::P};
    }
    return {Role::Batter, Position::Unknown};
  }
  if (in.in_pitching) return {Role::Pitcher, Position::P};
  return {Role::Batter, Position::Unknown};
}

ClassifyInputs collect_inputs(const RawDataset& raw, const PlayerId& id) {
  ClassifyInputs in;
  for (const auto& row : raw.appearances) {
    if (row.player_id != id) continue;
    in.in_appearances = true;
    for (std::size_t i = 0; i < row.games.size(); ++i) in.appearance_games[i] += row.games[i];
  }
  for (const auto& row : raw.batting) {
    if (row.player_id != id) continue;
    in.in_batting = true;
    auto it = row.counts.find("G");
    if (it != row.counts.end()) in.batting_g += it->second;
  }
  for (const auto& row : raw.pitching) {
    if (row.player_id != id) continue;
    in.in_pitching = true;
    auto g = row.counts.find("G");
    if (g != row.counts.end()) in.pitching_g += g->second;
    auto outs = row.counts.find("OUTS");
    if (outs != row.counts.end()) in.outs += outs->second;
  }
  return in;
}

}  // namespace

LeagueFilter IngestConfig::league_filter() const {
  if (included_leagues.empty()) return LeagueFilter::default_majors();
  LeagueFilter filter;
  filter.included.insert(included_leagues.begin(), included_leagues.end());
  return filter;
}

const PersonRow* RawDataset::find_person(const PlayerId& id) const {
  // Linear scan is fine for the occasional lookup; bulk callers index once.
  for (const auto& row : people) {
    if (row.player_id == id) return &row;
  }
  return nullptr;
}

RawDataset load_dataset(const std::filesystem::path& data_dir, const IngestConfig&) {
  if (!std::filesystem::is_directory(data_dir)) {
    throw DataError("data directory not found: " + data_dir.string());
  }
  RawDataset raw;
  raw.file_stats = {{"People.csv", 0},
                    {"Batting.csv", 0},
                    {"Pitching.csv", 0},
                    {"Appearances.csv", 0},
                    {"HallOfFame.csv", 0}};

  raw.people = load_people(data_dir, raw.file_stats[0]);
  raw.batting = load_seasons(data_dir, "Batting.csv",
                             {{"G", "G"},
                              {"AB", "AB"},
                              {"R", "R"},
                              {"H", "H"},
                              {"HR", "HR"},
                              {"RBI", "RBI"}},
                             raw.file_stats[1]);
  // SO and IPouts are exposed under the canonical keys K and OUTS.
  raw.pitching = load_seasons(data_dir, "Pitching.csv",
                              {{"G", "G"},
                               {"W", "W"},
                               {"SO", "K"},
                               {"SV", "SV"},
                               {"IPouts", "OUTS"}},
                              raw.file_stats[2]);
  raw.appearances = load_appearances(data_dir, raw.file_stats[3]);
  raw.hall_of_fame = load_hall_of_fame(data_dir, raw.file_stats[4]);
  return raw;
}

CareerTables build_careers(const RawDataset& raw, const LeagueFilter& filter) {
  if (filter.included.empty()) {
    throw std::invalid_argument("league filter must be non-empty");
  }
  CareerAccumulator batting;
  for (const auto& row : raw.batting) {
    if (filter.allows(row.league_id)) batting.add(row);
  }
  CareerAccumulator pitching;
  for (const auto& row : raw.pitching) {
    if (filter.allows(row.league_id)) pitching.add(row);
  }
  return CareerTables{batting.finish(), pitching.finish()};
}

Classification classify_player(const RawDataset& raw, const PlayerId& id) {
  return decide(collect_inputs(raw, id));
}

PlayerDirectory build_directory(const RawDataset& raw, const LeagueFilter& filter,
                                const CareerTables& careers) {
  // Bulk version of collect_inputs: one pass over each table.
  std::unordered_map<PlayerId, ClassifyInputs> inputs;
  for (const auto& row : raw.appearances) {
    auto& in = inputs[row.player_id];
    in.in_appearances = true;
    for (std::size_t i = 0; i < row.games.size(); ++i) in.appearance_games[i] += row.games[i];
  }
  for (const auto& row : raw.batting) {
    auto& in = inputs[row.player_id];
    in.in_batting = true;
    auto it = row.counts.find("G");
    if (it != row.counts.end()) in.batting_g += it->second;
  }
  for (const auto& row : raw.pitching) {
    auto& in = inputs[row.player_id];
    in.in_pitching = true;
    auto g = row.counts.find("G");
    if (g != row.counts.end()) in.pitching_g += g->second;
    auto outs = row.counts.find("OUTS");
    if (outs != row.counts.end()) in.outs += outs->second;
  }

  std::unordered_map<PlayerId, std::pair<int, int>> year_span;
  auto fold_years = [&](const std::vector<SeasonRow>& rows) {
    for (const auto& row : rows) {
      if (!filter.allows(row.league_id)) continue;
      auto [it, inserted] = year_span.emplace(row.player_id, std::make_pair(row.year, row.year));
      if (!inserted) {
        it->second.first = std::min(it->second.first, row.year);
        it->second.second = std::max(it->second.second, row.year);
      }
    }
  };
  fold_years(raw.batting);
  fold_years(raw.pitching);

  std::unordered_map<PlayerId, const PersonRow*> people;
  people.reserve(raw.people.size());
  for (const auto& row : raw.people) people.emplace(row.player_id, &row);

  PlayerDirectory directory;
  auto add_players = [&](const CareerTable& table) {
    for (const auto& totals : table.rows()) {
      if (directory.count(totals.player_id)) continue;
      PlayerRecord rec;
      rec.player_id = totals.player_id;
      auto person = people.find(totals.player_id);
      rec.full_name = person != people.end() ? person->second->full_name : totals.player_id;
      auto span = year_span.find(totals.player_id);
      if (span != year_span.end()) {
        rec.first_year = span->second.first;
        rec.last_year = span->second.second;
      }
      Classification cls = decide(inputs[totals.player_id]);
      rec.role = cls.role;
      rec.primary_position = cls.primary_position;
      directory.emplace(rec.player_id, std::move(rec));
    }
  };
  add_players(careers.batting);
  add_players(careers.pitching);
  return directory;
}

ElectedSets elected_players(const RawDataset& raw, const PlayerDirectory& directory,
                            const LeagueFilter&) {
  std::unordered_set<PlayerId> people;
  people.reserve(raw.people.size());
  for (const auto& row : raw.people) people.insert(row.player_id);

  ElectedSets out;
  std::set<PlayerId> seen;
  for (const auto& row : raw.hall_of_fame) {
    if (!row.inducted || row.category != "Player") continue;
    if (!seen.insert(row.player_id).second) continue;
    if (!people.count(row.player_id)) {
      out.warnings.push_back("elected player '" + row.player_id +
                             "' not found in People.csv; excluded");
      continue;
    }
    auto rec = directory.find(row.player_id);
    if (rec == directory.end()) continue;  // no retained major-league season
    if (rec->second.role == Role::Pitcher) out.pitchers.insert(row.player_id);
    else out.batters.insert(row.player_id);
  }
  return out;
}

void mark_elected(PlayerDirectory& directory, const ElectedSets& elected) {
  for (auto& [id, rec] : directory) {
    rec.elected = elected.batters.count(id) > 0 || elected.pitchers.count(id) > 0;
  }
}

CareerTable filter_by_role(const CareerTable& table, const PlayerDirectory& directory,
                           Role role) {
  std::vector<CareerTotals> rows;
  for (const auto& totals : table.rows()) {
    auto rec = directory.find(totals.player_id);
    if (rec != directory.end() && rec->second.role == role) rows.push_back(totals);
  }
  return CareerTable(std::move(rows));
}

Dataset ingest_all(const std::filesystem::path& data_dir, const IngestConfig& config) {
  RawDataset raw = load_dataset(data_dir, config);
  LeagueFilter filter = config.league_filter();

  Dataset ds;
  ds.careers = build_careers(raw, filter);
  ds.directory = build_directory(raw, filter, ds.careers);
  ds.elected = elected_players(raw, ds.directory, filter);
  mark_elected(ds.directory, ds.elected);
  ds.batters = filter_by_role(ds.careers.batting, ds.directory, Role::Batter);
  ds.pitchers = filter_by_role(ds.careers.pitching, ds.directory, Role::Pitcher);
  ds.file_stats = raw.file_stats;
  return ds;
}

std::map<PlayerId, double> load_bwar(const std::filesystem::path& path) {
  csv::Reader reader(path);
  std::size_t id_col = require_column(reader, "player_id");
  std::size_t bwar_col = require_column(reader, "bwar");
  std::map<PlayerId, double> out;
  std::vector<std::string> fields;
  while (reader.next(fields)) {
    const std::string id = field_or_empty(fields, id_col);
    const std::string value = field_or_empty(fields, bwar_col);
    if (id.empty() || value.empty()) continue;
    try {
      out[id] = std::stod(value);
    } catch (const std::exception&) {
      throw DataError(reader.file_name() + ":" + std::to_string(reader.record_line()) +
                      ": column 'bwar': expected number, got '" + value + "'");
    }
  }
  return out;
}

}  // namespace hofcut
