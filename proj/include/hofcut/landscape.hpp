#pragma once

#include <set>
#include <string>
#include <vector>

#include "hofcut/cutrule.hpp"
#include "hofcut/types.hpp"

namespace hofcut {

/// Grid of candidate threshold pairs for a two-statistic rule. Both value
/// lists must be non-empty and strictly increasing.
struct ThresholdGrid {
  StatKey stat_a;
  StatKey stat_b;
  std::vector<Count> values_a;
  std::vector<Count> values_b;

  void validate() const;
};

/// Membership counts for every cell of a ThresholdGrid. counts[i][j] is the
/// number of players passing "stat_a > values_a[i] or stat_b > values_b[j]".
struct LandscapeGrid {
  ThresholdGrid grid;
  std::vector<std::vector<Count>> counts;
  Count target = 0;
  Count tolerance = 0;

  Count at(std::size_t i, std::size_t j) const { return counts[i][j]; }
};

/// Sweeps every cell of the grid against the career table. Cells are
/// evaluated independently (optionally on several threads); the result is
/// identical under any schedule. Matrix monotonicity is checked before
/// returning.
LandscapeGrid sweep_landscape(const ThresholdGrid& grid, const CareerTable& careers,
                              Role role, Count target, Count tolerance,
                              unsigned threads = 0);

struct NearCell {
  std::size_t i = 0;
  std::size_t j = 0;
  Count count = 0;
};

/// Cells with |count - target| <= tolerance, sorted by distance from the
/// target, then by (i, j).
std::vector<NearCell> near_target_cells(const LandscapeGrid& landscape);

/// Effect of moving one clause threshold of `base` to `new_threshold`:
/// membership counts before and after, the exact player diff (ordered by
/// the changed statistic, descending), and how many of the changed players
/// are in the elected set.
struct SensitivityReport {
  CutRule base_rule;
  StatKey changed_stat;
  Count old_threshold = 0;
  Count new_threshold = 0;
  std::size_t old_count = 0;
  std::size_t new_count = 0;
  std::vector<PlayerId> players_added;
  std::vector<PlayerId> players_removed;
  std::size_t elected_among_changed = 0;
};

SensitivityReport threshold_sensitivity(const CutRule& base, const StatKey& stat,
                                        Count new_threshold, const CareerTable& careers,
                                        const std::set<PlayerId>& elected);

ThresholdGrid default_batting_grid();   // H 2000..3200 step 100, HR 200..500 step 25
ThresholdGrid default_pitching_grid();  // K 2000..3600 step 100, W 180..300 step 10
ThresholdGrid default_grid(Role role);

inline constexpr Count kDefaultNearTolerance = 10;

}  // namespace hofcut
