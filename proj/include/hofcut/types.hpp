#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace hofcut {

using Count = long long;
using PlayerId = std::string;
using StatKey = std::string;

/// Raised on unreadable or malformed input data. The message carries the
/// file name and, where applicable, line number and column name.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised on malformed rule expressions.
class RuleParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Role { Batter, Pitcher };

std::string to_string(Role role);
std::optional<Role> role_from_string(std::string_view text);

// Fielding positions in tie-break order: when two positions have equal
// career games, the earlier one in this enumeration wins.
enum class Position { P, C, B1, B2, B3, SS, LF, CF, RF, DH, Unknown };

inline constexpr std::array<Position, 10> kPositionOrder = {
    Position::P,  Position::C,  Position::B1, Position::B2, Position::B3,
    Position::SS, Position::LF, Position::CF, Position::RF, Position::DH};

std::string to_string(Position pos);
std::optional<Position> position_from_string(std::string_view text);

// Statistic schema. Career aggregation produces exactly these keys; the
// rule engine accepts any key listed here for the rule's role.
const std::vector<StatKey>& batting_stats();   // G AB R H HR RBI
const std::vector<StatKey>& pitching_stats();  // G W K SV OUTS

bool is_stat_for_role(const StatKey& stat, Role role);

/// Role implied by a statistic key. Empty optional means the key is not
/// recognized at all; keys shared by both schemas (G) report `ambiguous`.
struct StatRole {
  bool batting = false;
  bool pitching = false;
};
std::optional<StatRole> stat_role(const StatKey& stat);

/// Career totals for one player. Absent keys read as zero.
struct CareerTotals {
  PlayerId player_id;
  std::map<StatKey, Count> counts;

  Count count(const StatKey& stat) const {
    auto it = counts.find(stat);
    return it == counts.end() ? 0 : it->second;
  }
};

/// Immutable set of career totals, ordered by player id.
class CareerTable {
 public:
  CareerTable() = default;
  explicit CareerTable(std::vector<CareerTotals> rows);

  const std::vector<CareerTotals>& rows() const { return rows_; }
  const CareerTotals* find(const PlayerId& id) const;
  bool contains(const PlayerId& id) const { return find(id) != nullptr; }
  std::size_t size() const { return rows_.size(); }

 private:
  std::vector<CareerTotals> rows_;  // sorted by player_id
  std::unordered_map<PlayerId, std::size_t> index_;
};

struct PlayerRecord {
  PlayerId player_id;
  std::string full_name;
  int first_year = 0;
  int last_year = 0;
  Role role = Role::Batter;
  Position primary_position = Position::Unknown;
  bool elected = false;
};

// Ordered by player id so that every emitted listing is deterministic.
using PlayerDirectory = std::map<PlayerId, PlayerRecord>;

struct ElectedSets {
  std::set<PlayerId> batters;
  std::set<PlayerId> pitchers;
  std::vector<std::string> warnings;

  std::set<PlayerId> all() const;
  const std::set<PlayerId>& for_role(Role role) const {
    return role == Role::Batter ? batters : pitchers;
  }
};

/// Which league codes count as major-league play. Season rows outside the
/// filter do not contribute to career totals.
struct LeagueFilter {
  std::set<std::string> included;

  static LeagueFilter default_majors();
  bool allows(const std::string& league_id) const {
    return included.count(league_id) > 0;
  }
};

}  // namespace hofcut
