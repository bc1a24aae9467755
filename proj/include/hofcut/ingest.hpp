#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hofcut/types.hpp"

namespace hofcut {

/// One season stint for one player, with the count columns this toolkit
/// aggregates. Missing source cells are materialized as 0.
struct SeasonRow {
  PlayerId player_id;
  int year = 0;
  int stint = 1;
  std::string league_id;
  std::map<StatKey, Count> counts;
};

struct PersonRow {
  PlayerId player_id;
  std::string full_name;  // "nameFirst nameLast", UTF-8 sanitized
};

struct HallOfFameRow {
  PlayerId player_id;
  int year = 0;
  std::string voted_by;
  bool inducted = false;
  std::string category;
};

/// Career games per fielding position, indexed by kPositionOrder.
struct AppearanceRow {
  PlayerId player_id;
  int year = 0;
  std::string league_id;
  std::array<Count, 10> games{};
};

struct IngestConfig {
  std::filesystem::path data_dir;
  std::vector<std::string> included_leagues;  // empty -> default majors
  std::optional<std::filesystem::path> bwar_file;

  LeagueFilter league_filter() const;
};

struct FileStats {
  std::string file;
  std::size_t rows = 0;
};

struct RawDataset {
  std::vector<PersonRow> people;
  std::vector<SeasonRow> batting;
  std::vector<SeasonRow> pitching;
  std::vector<AppearanceRow> appearances;
  std::vector<HallOfFameRow> hall_of_fame;
  std::vector<FileStats> file_stats;

  const PersonRow* find_person(const PlayerId& id) const;
};

struct CareerTables {
  CareerTable batting;
  CareerTable pitching;
};

struct Classification {
  Role role = Role::Batter;
  Position primary_position = Position::Unknown;
};

/// Parses the five expected CSV files under `data_dir`. Missing files and
/// malformed count cells are fatal (DataError).
RawDataset load_dataset(const std::filesystem::path& data_dir,
                        const IngestConfig& config = {});

/// Sums retained season rows into per-player career totals. Stints within
/// a year are summed; rows whose league is outside the filter are dropped.
CareerTables build_careers(const RawDataset& raw, const LeagueFilter& filter);

/// Primary position = position with the most career games in Appearances,
/// ties broken by kPositionOrder; role = Pitcher iff that position is P.
/// Players absent from Appearances fall back to table-presence inference.
Classification classify_player(const RawDataset& raw, const PlayerId& id);

/// One PlayerRecord per player with at least one retained season.
PlayerDirectory build_directory(const RawDataset& raw, const LeagueFilter& filter,
                                const CareerTables& careers);

/// Players inducted into the Hall of Fame as players, restricted to those
/// with at least one retained major-league season, split by role.
ElectedSets elected_players(const RawDataset& raw, const PlayerDirectory& directory,
                            const LeagueFilter& filter);

/// Marks directory records whose id appears in the elected sets.
void mark_elected(PlayerDirectory& directory, const ElectedSets& elected);

/// Restricts a career table to players the directory assigns to `role`.
CareerTable filter_by_role(const CareerTable& table, const PlayerDirectory& directory,
                           Role role);

/// Everything downstream analysis needs, built in one pass.
struct Dataset {
  CareerTables careers;       // raw aggregation products
  CareerTable batters;        // batting counts of players classified Batter
  CareerTable pitchers;       // pitching counts of players classified Pitcher
  PlayerDirectory directory;  // elected flags stamped
  ElectedSets elected;
  std::vector<FileStats> file_stats;

  const CareerTable& population(Role role) const {
    return role == Role::Batter ? batters : pitchers;
  }
};

Dataset ingest_all(const std::filesystem::path& data_dir,
                   const IngestConfig& config = {});

/// Optional external ranking file with columns player_id,bwar.
std::map<PlayerId, double> load_bwar(const std::filesystem::path& path);

}  // namespace hofcut
