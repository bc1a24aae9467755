#include "hofcut/types.hpp"

#include <algorithm>

namespace hofcut {

std::string to_string(Role role) {
  return role == Role::Batter ? "batter" : "pitcher";
}

std::optional<Role> role_from_string(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "batter" || lower == "batters" || lower == "batting") return Role::Batter;
  if (lower == "pitcher" || lower == "pitchers" || lower == "pitching") return Role::Pitcher;
  return std::nullopt;
}

std::string to_string(Position pos) {
  switch (pos) {
    case Position::P: return "P";
    case Position::C: return "C";
    case Position::B1: return "1B";
    case Position::B2: return "2B";
    case Position::B3: return "3B";
    case Position::SS: return "SS";
    case Position::LF: return "LF";
    case Position::CF: return "CF";
    case Position::RF: return "RF";
    case Position::DH: return "DH";
    case Position::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::optional<Position> position_from_string(std::string_view text) {
  for (Position pos : kPositionOrder) {
    if (to_string(pos) == text) return pos;
  }
  if (text == "Unknown") return Position::Unknown;
  return std::nullopt;
}

const std::vector<StatKey>& batting_stats() {
  static const std::vector<StatKey> keys = {"G", "AB", "R", "H", "HR", "RBI"};
  return keys;
}

const std::vector<StatKey>& pitching_stats() {
  static const std::vector<StatKey> keys = {"G", "W", "K", "SV", "OUTS"};
  return keys;
}

bool is_stat_for_role(const StatKey& stat, Role role) {
  const auto& keys = role == Role::Batter ? batting_stats() : pitching_stats();
  return std::find(keys.begin(), keys.end(), stat) != keys.end();
}

std::optional<StatRole> stat_role(const StatKey& stat) {
  StatRole r;
  r.batting = is_stat_for_role(stat, Role::Batter);
  r.pitching = is_stat_for_role(stat, Role::Pitcher);
  if (!r.batting && !r.pitching) return std::nullopt;
  return r;
}

CareerTable::CareerTable(std::vector<CareerTotals> rows) : rows_(std::move(rows)) {
  std::sort(rows_.begin(), rows_.end(),
            [](const CareerTotals& a, const CareerTotals& b) {
              return a.player_id < b.player_id;
            });
  index_.reserve(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    index_.emplace(rows_[i].player_id, i);
  }
}

const CareerTotals* CareerTable::find(const PlayerId& id) const {
  auto it = index_.find(id);
  return it == index_.end() ? nullptr : &rows_[it->second];
}

std::set<PlayerId> ElectedSets::all() const {
  std::set<PlayerId> out(batters.begin(), batters.end());
  out.insert(pitchers.begin(), pitchers.end());
  return out;
}

LeagueFilter LeagueFilter::default_majors() {
  return LeagueFilter{{"NA", "NL", "AA", "UA", "PL", "FL", "AL"}};
}

}  // namespace hofcut
