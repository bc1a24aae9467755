#include "hofcut/landscape.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

namespace hofcut {

namespace {

bool strictly_increasing(const std::vector<Count>& values) {
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] <= values[i - 1]) return false;
  }
  return true;
}

std::vector<Count> range_values(Count start, Count stop, Count step) {
  std::vector<Count> values;
  for (Count v = start; v <= stop; v += step) values.push_back(v);
  return values;
}

void check_monotone(const LandscapeGrid& landscape, std::size_t total_players) {
  const auto& counts = landscape.counts;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    for (std::size_t j = 0; j < counts[i].size(); ++j) {
      if (counts[i][j] < 0 || counts[i][j] > static_cast<Count>(total_players)) {
        throw std::logic_error("landscape cell out of range");
      }
      if (i > 0 && counts[i][j] > counts[i - 1][j]) {
        throw std::logic_error("landscape counts increase along stat_a axis");
      }
      if (j > 0 && counts[i][j] > counts[i][j - 1]) {
        throw std::logic_error("landscape counts increase along stat_b axis");
      }
    }
  }
}

}  // namespace

void ThresholdGrid::validate() const {
  if (stat_a.empty() || stat_b.empty() || stat_a == stat_b) {
    throw std::invalid_argument("grid requires two distinct statistics");
  }
  if (values_a.empty() || values_b.empty()) {
    throw std::invalid_argument("grid threshold lists must be non-empty");
  }
  if (!strictly_increasing(values_a) || !strictly_increasing(values_b)) {
    throw std::invalid_argument("grid threshold lists must be strictly increasing");
  }
  if (values_a.front() < 0 || values_b.front() < 0) {
    throw std::invalid_argument("grid thresholds must be nonnegative");
  }
}

LandscapeGrid sweep_landscape(const ThresholdGrid& grid, const CareerTable& careers,
                              Role role, Count target, Count tolerance,
                              unsigned threads) {
  grid.validate();
  for (const StatKey& stat : {grid.stat_a, grid.stat_b}) {
    if (!is_stat_for_role(stat, role)) {
      throw std::invalid_argument("unknown statistic '" + stat + "' for " + to_string(role) +
                                  " landscape");
    }
  }
  if (tolerance < 0 || target < 0) {
    throw std::invalid_argument("target and tolerance must be nonnegative");
  }

  LandscapeGrid landscape;
  landscape.grid = grid;
  landscape.target = target;
  landscape.tolerance = tolerance;
  const std::size_t rows = grid.values_a.size();
  const std::size_t cols = grid.values_b.size();
  landscape.counts.assign(rows, std::vector<Count>(cols, 0));

  // Each row is an independent unit of work writing to its own slots, so
  // any thread schedule produces the same matrix.
  auto sweep_rows = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        CutRule rule{role,
                     {{grid.stat_a, grid.values_a[i]}, {grid.stat_b, grid.values_b[j]}}};
        Count n = 0;
        for (const auto& totals : careers.rows()) {
          if (evaluate(rule, totals)) ++n;
        }
        landscape.counts[i][j] = n;
      }
    }
  };

  unsigned worker_count = threads;
  if (worker_count == 0) {
    worker_count = std::max(1u, std::thread::hardware_concurrency());
  }
  worker_count = std::min<unsigned>(worker_count, static_cast<unsigned>(rows));

  if (worker_count <= 1) {
    sweep_rows(0, rows);
  } else {
    std::vector<std::thread> workers;
    workers.reserve(worker_count);
    const std::size_t chunk = (rows + worker_count - 1) / worker_count;
    for (unsigned w = 0; w < worker_count; ++w) {
      std::size_t begin = w * chunk;
      std::size_t end = std::min(rows, begin + chunk);
      if (begin >= end) break;
      workers.emplace_back(sweep_rows, begin, end);
    }
    for (auto& worker : workers) worker.join();
  }

  check_monotone(landscape, careers.size());
  return landscape;
}

std::vector<NearCell> near_target_cells(const LandscapeGrid& landscape) {
  std::vector<NearCell> cells;
  for (std::size_t i = 0; i < landscape.counts.size(); ++i) {
    for (std::size_t j = 0; j < landscape.counts[i].size(); ++j) {
      Count count = landscape.counts[i][j];
      if (std::llabs(count - landscape.target) <= landscape.tolerance) {
        cells.push_back(NearCell{i, j, count});
      }
    }
  }
  std::sort(cells.begin(), cells.end(), [&](const NearCell& a, const NearCell& b) {
    Count da = std::llabs(a.count - landscape.target);
    Count db = std::llabs(b.count - landscape.target);
    if (da != db) return da < db;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  });
  return cells;
}

SensitivityReport threshold_sensitivity(const CutRule& base, const StatKey& stat,
                                        Count new_threshold, const CareerTable& careers,
                                        const std::set<PlayerId>& elected) {
  auto clause = std::find_if(base.clauses.begin(), base.clauses.end(),
                             [&](const ThresholdClause& c) { return c.stat == stat; });
  if (clause == base.clauses.end()) {
    throw std::invalid_argument("statistic '" + stat + "' is not a clause of the rule");
  }
  if (new_threshold < 0) {
    throw std::invalid_argument("threshold must be nonnegative");
  }

  CutRule moved = base;
  for (auto& c : moved.clauses) {
    if (c.stat == stat) c.threshold = new_threshold;
  }

  std::set<PlayerId> before = rule_members(base, careers);
  std::set<PlayerId> after = rule_members(moved, careers);

  SensitivityReport report;
  report.base_rule = base;
  report.changed_stat = stat;
  report.old_threshold = clause->threshold;
  report.new_threshold = new_threshold;
  report.old_count = before.size();
  report.new_count = after.size();

  std::vector<PlayerId> added;
  std::vector<PlayerId> removed;
  std::set_difference(after.begin(), after.end(), before.begin(), before.end(),
                      std::back_inserter(added));
  std::set_difference(before.begin(), before.end(), after.begin(), after.end(),
                      std::back_inserter(removed));

  // A single threshold move is monotone: it can only add or only remove.
  if (new_threshold > clause->threshold && !added.empty()) {
    throw std::logic_error("raising a threshold added members");
  }
  if (new_threshold < clause->threshold && !removed.empty()) {
    throw std::logic_error("lowering a threshold removed members");
  }
  if (report.new_count != report.old_count + added.size() - removed.size()) {
    throw std::logic_error("sensitivity diff does not reconcile with counts");
  }

  auto by_changed_stat = [&](const PlayerId& a, const PlayerId& b) {
    Count va = careers.find(a)->count(stat);
    Count vb = careers.find(b)->count(stat);
    if (va != vb) return va > vb;
    return a < b;
  };
  std::sort(added.begin(), added.end(), by_changed_stat);
  std::sort(removed.begin(), removed.end(), by_changed_stat);

  for (const auto& id : added) {
    if (elected.count(id)) ++report.elected_among_changed;
  }
  for (const auto& id : removed) {
    if (elected.count(id)) ++report.elected_among_changed;
  }
  report.players_added = std::move(added);
  report.players_removed = std::move(removed);
  return report;
}

ThresholdGrid default_batting_grid() {
  return ThresholdGrid{"H", "HR", range_values(2000, 3200, 100), range_values(200, 500, 25)};
}

ThresholdGrid default_pitching_grid() {
  return ThresholdGrid{"K", "W", range_values(2000, 3600, 100), range_values(180, 300, 10)};
}

ThresholdGrid default_grid(Role role) {
  return role == Role::Batter ? default_batting_grid() : default_pitching_grid();
}

}  // namespace hofcut
