#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hofcut/analysis.hpp"
#include "hofcut/cutrule.hpp"
#include "hofcut/ingest.hpp"
#include "hofcut/landscape.hpp"
#include "hofcut/types.hpp"

namespace hofcut::report {

enum class Format { Csv, Records };

std::optional<Format> format_from_string(std::string_view text);

/// Header plus rows of display strings; the common currency every
/// subcommand emits, either as CSV or as key=value records.
struct TextTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

void emit(std::ostream& out, const TextTable& table, Format format);

TextTable career_table(const CareerTable& careers, const PlayerDirectory& directory,
                       const std::vector<StatKey>& stats);

TextTable elected_table(const ElectedSets& elected, const PlayerDirectory& directory);

TextTable members_table(const CutRule& rule, const CareerTable& careers,
                        const PlayerDirectory& directory);

TextTable margins_table(const CutRule& rule, const std::vector<MarginReport>& reports,
                        const PlayerDirectory& directory);

TextTable selectivity_table(const std::vector<SelectivityResult>& results);

/// Matrix layout: first row holds the stat_b thresholds, first column the
/// stat_a thresholds, corner cell empty.
TextTable landscape_matrix(const LandscapeGrid& landscape);

/// Flat layout: one row per cell with a near-target flag.
TextTable landscape_flat(const LandscapeGrid& landscape);

TextTable sensitivity_table(const SensitivityReport& report, const CareerTable& careers,
                            const PlayerDirectory& directory,
                            const std::set<PlayerId>& elected);

TextTable partition_table(const MembershipPartition& partition,
                          const PlayerDirectory& directory);

TextTable positions_table(const PositionBreakdown& breakdown);

TextTable ranked_table(const StatKey& stat, const std::vector<RankedPlayer>& rows);

TextTable roster_table(const CutRule& rule, const std::vector<RosterEntry>& roster);

}  // namespace hofcut::report
