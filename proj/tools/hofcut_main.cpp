// hofcut: career-count ingestion and Hall of Fame cut analysis over
// Lahman-style CSV data. One subcommand per analysis unit; every file
// output gets a manifest recording inputs, outputs, and configuration.
#include <cctype>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <CLI11.hpp>

#include "hofcut/analysis.hpp"
#include "hofcut/cutrule.hpp"
#include "hofcut/ingest.hpp"
#include "hofcut/landscape.hpp"
#include "hofcut/manifest.hpp"
#include "hofcut/report.hpp"
#include "hofcut/types.hpp"

namespace {

using namespace hofcut;

constexpr std::array<const char*, 5> kDataFiles = {
    "People.csv", "Batting.csv", "Pitching.csv", "Appearances.csv", "HallOfFame.csv"};

struct Options {
  // global
  std::string data_dir;
  std::vector<std::string> leagues;
  std::string out;
  std::string format = "csv";

  // shared by rule-driven subcommands
  std::string rule_text;
  std::string role_text;

  // careers
  std::string table = "batting";

  // margins
  std::vector<std::string> players;

  // selectivity / table
  std::vector<std::string> stats;
  long long top_n = 0;

  // landscape
  std::string grid_a;
  std::string grid_b;
  long long target = -1;
  long long tolerance = kDefaultNearTolerance;
  unsigned threads = 0;
  std::string layout = "matrix";

  // sensitivity
  std::string stat;
  long long new_threshold = -1;

  // table
  std::string kind;
  std::string bwar_file;
};

Role resolve_role(const Options& opt) {
  if (!opt.role_text.empty()) {
    auto role = role_from_string(opt.role_text);
    if (!role) throw std::invalid_argument("unknown role '" + opt.role_text + "'");
    return *role;
  }
  if (!opt.rule_text.empty()) {
    return parse_rule(opt.rule_text).role;
  }
  return Role::Batter;
}

CutRule resolve_rule(const Options& opt, Role role) {
  if (opt.rule_text.empty()) return default_rule(role);
  if (!opt.role_text.empty()) return parse_rule(opt.rule_text, role);
  return parse_rule(opt.rule_text);
}

report::Format resolve_format(const Options& opt) {
  auto format = report::format_from_string(opt.format);
  if (!format) throw std::invalid_argument("unknown format '" + opt.format + "'");
  return *format;
}

// "start:stop:step" or a comma-separated list of thresholds.
std::vector<Count> parse_grid_values(const std::string& text) {
  std::vector<Count> values;
  char delim = text.find(':') != std::string::npos ? ':' : ',';
  std::vector<Count> parts;
  std::stringstream stream(text);
  std::string piece;
  while (std::getline(stream, piece, delim)) {
    std::size_t used = 0;
    Count value = std::stoll(piece, &used);
    if (used != piece.size()) throw std::invalid_argument("bad grid value '" + piece + "'");
    parts.push_back(value);
  }
  if (delim == ':') {
    if (parts.size() != 3) {
      throw std::invalid_argument("grid range must be start:stop:step, got '" + text + "'");
    }
    auto [start, stop, step] = std::tuple{parts[0], parts[1], parts[2]};
    if (step <= 0 || stop < start) {
      throw std::invalid_argument("grid range must be ascending with positive step");
    }
    for (Count v = start; v <= stop; v += step) values.push_back(v);
    return values;
  }
  return parts;
}

Dataset open_dataset(const Options& opt, RunManifest& manifest) {
  IngestConfig config;
  config.data_dir = opt.data_dir;
  config.included_leagues = opt.leagues;
  Dataset ds = ingest_all(opt.data_dir, config);
  for (const char* file : kDataFiles) {
    manifest.add_input(std::filesystem::path(opt.data_dir) / file);
  }
  manifest.config["data_dir"] = opt.data_dir;
  std::string leagues;
  for (const auto& code : config.league_filter().included) {
    if (!leagues.empty()) leagues += ",";
    leagues += code;
  }
  manifest.config["leagues"] = leagues;
  manifest.config["format"] = opt.format;
  for (const auto& warning : ds.elected.warnings) {
    std::cerr << "hofcut: warning: " << warning << "\n";
  }
  return ds;
}

int emit_result(const Options& opt, const report::TextTable& table, RunManifest& manifest) {
  report::Format format = resolve_format(opt);
  if (opt.out.empty()) {
    report::emit(std::cout, table, format);
    return 0;
  }
  {
    std::ofstream file(opt.out, std::ios::binary);
    if (!file.is_open()) throw DataError("cannot write output file: " + opt.out);
    report::emit(file, table, format);
  }
  manifest.add_output(opt.out);
  std::filesystem::path manifest_path = opt.out + ".manifest.json";
  manifest.write(manifest_path);
  std::cerr << "hofcut: wrote " << opt.out << " and " << manifest_path.string() << "\n";
  return 0;
}

int run_careers(const Options& opt, RunManifest& manifest) {
  auto role = role_from_string(opt.table);
  if (!role) throw std::invalid_argument("unknown table '" + opt.table + "'");
  Dataset ds = open_dataset(opt, manifest);
  manifest.config["table"] = opt.table;
  const auto& stats = *role == Role::Batter ? batting_stats() : pitching_stats();
  auto table = report::career_table(ds.population(*role), ds.directory, stats);
  std::cerr << "hofcut careers: " << table.rows.size() << " " << to_string(*role)
            << " career rows\n";
  return emit_result(opt, table, manifest);
}

int run_elected(const Options& opt, RunManifest& manifest) {
  Dataset ds = open_dataset(opt, manifest);
  auto table = report::elected_table(ds.elected, ds.directory);
  std::cerr << "hofcut elected: " << ds.elected.batters.size() << " batters, "
            << ds.elected.pitchers.size() << " pitchers\n";
  return emit_result(opt, table, manifest);
}

int run_evaluate(const Options& opt, RunManifest& manifest) {
  Role role = resolve_role(opt);
  CutRule rule = resolve_rule(opt, role);
  Dataset ds = open_dataset(opt, manifest);
  manifest.config["rule"] = print_rule(rule);
  manifest.config["role"] = to_string(rule.role);
  const CareerTable& population = ds.population(rule.role);
  auto table = report::members_table(rule, population, ds.directory);
  std::cerr << "hofcut evaluate: " << table.rows.size() << " of " << population.size()
            << " " << to_string(rule.role) << "s pass rule [" << print_rule(rule) << "]\n";
  return emit_result(opt, table, manifest);
}

int run_margins(const Options& opt, RunManifest& manifest) {
  Role role = resolve_role(opt);
  CutRule rule = resolve_rule(opt, role);
  Dataset ds = open_dataset(opt, manifest);
  manifest.config["rule"] = print_rule(rule);
  manifest.config["role"] = to_string(rule.role);
  std::optional<std::set<PlayerId>> subset;
  if (!opt.players.empty()) {
    subset.emplace(opt.players.begin(), opt.players.end());
    std::string joined;
    for (const auto& id : *subset) joined += (joined.empty() ? "" : ",") + id;
    manifest.config["players"] = joined;
  }
  auto reports = margins(rule, ds.population(rule.role), subset);
  auto table = report::margins_table(rule, reports, ds.directory);
  std::cerr << "hofcut margins: " << reports.size() << " players against ["
            << print_rule(rule) << "]\n";
  return emit_result(opt, table, manifest);
}

int run_selectivity(const Options& opt, RunManifest& manifest) {
  Role role = resolve_role(opt);
  Dataset ds = open_dataset(opt, manifest);
  manifest.config["role"] = to_string(role);
  std::vector<StatKey> stats(opt.stats.begin(), opt.stats.end());
  if (stats.empty()) {
    stats = role == Role::Batter ? std::vector<StatKey>{"H", "R", "RBI", "HR"}
                                 : std::vector<StatKey>{"W", "K", "OUTS"};
  }
  const auto& elected_ids = ds.elected.for_role(role);
  std::size_t n = opt.top_n > 0 ? static_cast<std::size_t>(opt.top_n) : elected_ids.size();
  manifest.config["top_n"] = std::to_string(n);
  std::vector<SelectivityResult> results;
  for (const auto& stat : stats) {
    if (!is_stat_for_role(stat, role)) {
      throw std::invalid_argument("unknown statistic '" + stat + "' for " + to_string(role) +
                                  " selectivity");
    }
    results.push_back(single_stat_selectivity(stat, ds.population(role), elected_ids, n));
  }
  auto table = report::selectivity_table(results);
  std::cerr << "hofcut selectivity: top-" << n << " over " << results.size()
            << " statistic(s), " << elected_ids.size() << " elected " << to_string(role)
            << "s\n";
  return emit_result(opt, table, manifest);
}

int run_landscape(const Options& opt, RunManifest& manifest) {
  Role role = resolve_role(opt);
  Dataset ds = open_dataset(opt, manifest);
  manifest.config["role"] = to_string(role);

  ThresholdGrid grid = default_grid(role);
  if (!opt.stats.empty()) {
    if (opt.stats.size() != 2) {
      throw std::invalid_argument("landscape needs exactly two statistics, e.g. --stats H,HR");
    }
    grid.stat_a = opt.stats[0];
    grid.stat_b = opt.stats[1];
  }
  ThresholdGrid defaults = default_grid(role);
  if (!opt.grid_a.empty()) grid.values_a = parse_grid_values(opt.grid_a);
  else if (grid.stat_a != defaults.stat_a) {
    throw std::invalid_argument("--grid-a required for statistic '" + grid.stat_a + "'");
  }
  if (!opt.grid_b.empty()) grid.values_b = parse_grid_values(opt.grid_b);
  else if (grid.stat_b != defaults.stat_b) {
    throw std::invalid_argument("--grid-b required for statistic '" + grid.stat_b + "'");
  }

  Count target = opt.target >= 0 ? opt.target
                                 : static_cast<Count>(ds.elected.for_role(role).size());
  auto landscape = sweep_landscape(grid, ds.population(role), role, target, opt.tolerance,
                                   opt.threads);
  manifest.config["stats"] = grid.stat_a + "," + grid.stat_b;
  manifest.config["target"] = std::to_string(target);
  manifest.config["tolerance"] = std::to_string(opt.tolerance);
  manifest.config["layout"] = opt.layout;

  auto near = near_target_cells(landscape);
  std::cerr << "hofcut landscape: " << grid.values_a.size() << "x" << grid.values_b.size()
            << " cells over " << ds.population(role).size() << " " << to_string(role)
            << "s; " << near.size() << " cell(s) within " << opt.tolerance << " of target "
            << target << "\n";

  auto table = opt.layout == "flat" ? report::landscape_flat(landscape)
                                    : report::landscape_matrix(landscape);
  return emit_result(opt, table, manifest);
}

int run_sensitivity(const Options& opt, RunManifest& manifest) {
  Role role = resolve_role(opt);
  CutRule rule = resolve_rule(opt, role);
  if (opt.stat.empty() || opt.new_threshold < 0) {
    throw std::invalid_argument("sensitivity requires --stat and --new-threshold");
  }
  Dataset ds = open_dataset(opt, manifest);
  StatKey stat = opt.stat;
  for (auto& c : stat) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  auto report = threshold_sensitivity(rule, stat, opt.new_threshold, ds.population(rule.role),
                                      ds.elected.for_role(rule.role));
  manifest.config["rule"] = print_rule(rule);
  manifest.config["role"] = to_string(rule.role);
  manifest.config["stat"] = stat;
  manifest.config["new_threshold"] = std::to_string(opt.new_threshold);
  std::cerr << "hofcut sensitivity: " << stat << " " << report.old_threshold << " -> "
            << report.new_threshold << ": members " << report.old_count << " -> "
            << report.new_count << " (+" << report.players_added.size() << "/-"
            << report.players_removed.size() << ", " << report.elected_among_changed
            << " elected among changed)\n";
  auto table = report::sensitivity_table(report, ds.population(rule.role), ds.directory,
                                         ds.elected.for_role(rule.role));
  return emit_result(opt, table, manifest);
}

int run_compare(const Options& opt, RunManifest& manifest) {
  Role role = resolve_role(opt);
  CutRule rule = resolve_rule(opt, role);
  Dataset ds = open_dataset(opt, manifest);
  manifest.config["rule"] = print_rule(rule);
  manifest.config["role"] = to_string(rule.role);
  auto cut = rule_members(rule, ds.population(rule.role));
  auto partition = compare_memberships(cut, ds.elected.for_role(rule.role));
  std::cerr << "hofcut compare: both " << partition.both.size() << ", cut-only "
            << partition.cut_only.size() << ", elected-only " << partition.elected_only.size()
            << " [" << print_rule(rule) << "]\n";
  auto table = report::partition_table(partition, ds.directory);
  return emit_result(opt, table, manifest);
}

int run_positions(const Options& opt, RunManifest& manifest) {
  Role role = resolve_role(opt);
  CutRule rule = resolve_rule(opt, role);
  Dataset ds = open_dataset(opt, manifest);
  manifest.config["rule"] = print_rule(rule);
  manifest.config["role"] = to_string(rule.role);
  auto cut = rule_members(rule, ds.population(rule.role));
  auto partition = compare_memberships(cut, ds.elected.for_role(rule.role));
  auto breakdown = position_breakdown(partition, ds.directory);
  auto totals = breakdown.totals();
  std::cerr << "hofcut positions: both " << totals.both << ", cut-only " << totals.cut_only
            << ", elected-only " << totals.elected_only << " across positions\n";
  auto table = report::positions_table(breakdown);
  return emit_result(opt, table, manifest);
}

int run_table(const Options& opt, RunManifest& manifest) {
  Role role = resolve_role(opt);
  Dataset ds = open_dataset(opt, manifest);
  manifest.config["role"] = to_string(role);
  manifest.config["kind"] = opt.kind;

  if (opt.kind == "nonmembers") {
    StatKey stat = opt.stat.empty() ? (role == Role::Batter ? "H" : "K") : opt.stat;
    for (auto& c : stat) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    std::size_t n = opt.top_n > 0 ? static_cast<std::size_t>(opt.top_n) : 25;
    manifest.config["stat"] = stat;
    manifest.config["top_n"] = std::to_string(n);
    if (!is_stat_for_role(stat, role)) {
      throw std::invalid_argument("unknown statistic '" + stat + "' for " + to_string(role) +
                                  " tables");
    }
    auto rows = top_nonmember_table(stat, ds.population(role), ds.elected.for_role(role),
                                    ds.directory, n);
    std::cerr << "hofcut table: top " << rows.size() << " non-elected " << to_string(role)
              << "s by " << stat << "\n";
    return emit_result(opt, report::ranked_table(stat, rows), manifest);
  }
  if (opt.kind == "toptier") {
    CutRule rule = opt.rule_text.empty() ? top_tier_rule(role) : resolve_rule(opt, role);
    manifest.config["rule"] = print_rule(rule);
    std::map<PlayerId, double> bwar;
    const std::map<PlayerId, double>* bwar_ptr = nullptr;
    if (!opt.bwar_file.empty()) {
      bwar = load_bwar(opt.bwar_file);
      manifest.add_input(opt.bwar_file);
      manifest.config["bwar_file"] = opt.bwar_file;
      bwar_ptr = &bwar;
    }
    auto roster = rule_roster(rule, ds.population(role), ds.directory, bwar_ptr);
    if (opt.top_n > 0 && roster.size() > static_cast<std::size_t>(opt.top_n)) {
      roster.resize(static_cast<std::size_t>(opt.top_n));
    }
    std::cerr << "hofcut table: " << roster.size() << " " << to_string(role)
              << "s pass [" << print_rule(rule) << "]\n";
    return emit_result(opt, report::roster_table(rule, roster), manifest);
  }
  throw std::invalid_argument("unknown table kind '" + opt.kind + "'");
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Hall of Fame Cut analysis over Lahman-style career data"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value config file; command-line flags take precedence");

  app.add_option("--data-dir", opt.data_dir, "Directory holding the five Lahman-style CSVs")
      ->envname("HOFCUT_DATA_DIR")
      ->required();
  app.add_option("--leagues", opt.leagues,
                 "League codes counted as major league (default NA,NL,AA,UA,PL,FL,AL)")
      ->delimiter(',');
  app.add_option("--out", opt.out, "Write the table here instead of stdout (also writes "
                                   "<out>.manifest.json)");
  app.add_option("--format", opt.format, "Output encoding")
      ->check(CLI::IsMember({"csv", "records"}));

  auto add_rule_flags = [&](CLI::App* sub) {
    sub->add_option("--rule", opt.rule_text, "Cut rule, e.g. \"H>2500 or HR>350\"");
    sub->add_option("--role", opt.role_text, "batter or pitcher");
  };

  auto* careers = app.add_subcommand("careers", "Emit the aggregated career table");
  careers->add_option("--table", opt.table, "batting or pitching")
      ->check(CLI::IsMember({"batting", "pitching"}));

  app.add_subcommand("elected", "List elected Hall of Famers with retained careers");

  auto* evaluate = app.add_subcommand("evaluate", "List players passing a cut rule");
  add_rule_flags(evaluate);

  auto* margins_cmd = app.add_subcommand("margins", "Per-player surplus over each threshold");
  add_rule_flags(margins_cmd);
  margins_cmd->add_option("--players", opt.players, "Player ids (default: everyone)")
      ->delimiter(',');

  auto* selectivity = app.add_subcommand("selectivity",
                                         "Elected players among the top-n by one statistic");
  selectivity->add_option("--stats", opt.stats, "Statistics to rank by")->delimiter(',');
  selectivity->add_option("--role", opt.role_text, "batter or pitcher");
  selectivity->add_option("--top-n", opt.top_n, "Ranking depth (default: elected count)");

  auto* landscape = app.add_subcommand("landscape",
                                       "Membership counts over a grid of threshold pairs");
  landscape->add_option("--stats", opt.stats, "Two statistics, e.g. H,HR")->delimiter(',');
  landscape->add_option("--role", opt.role_text, "batter or pitcher");
  landscape->add_option("--grid-a", opt.grid_a, "start:stop:step or comma list");
  landscape->add_option("--grid-b", opt.grid_b, "start:stop:step or comma list");
  landscape->add_option("--target", opt.target, "Membership size to flag (default: elected count)");
  landscape->add_option("--tolerance", opt.tolerance, "Near-target tolerance");
  landscape->add_option("--threads", opt.threads, "Worker threads (0 = hardware)");
  landscape->add_option("--layout", opt.layout, "matrix or flat")
      ->check(CLI::IsMember({"matrix", "flat"}));

  auto* sensitivity = app.add_subcommand("sensitivity",
                                         "Exact membership diff when one threshold moves");
  add_rule_flags(sensitivity);
  sensitivity->add_option("--stat", opt.stat, "Clause statistic to move")->required();
  sensitivity->add_option("--new-threshold", opt.new_threshold, "New threshold value")
      ->required();

  auto* compare = app.add_subcommand("compare", "Cut membership vs the elected Hall of Fame");
  add_rule_flags(compare);

  auto* positions = app.add_subcommand("positions",
                                       "Cut/elected partition grouped by fielding position");
  add_rule_flags(positions);

  auto* table_cmd = app.add_subcommand("table", "Ranked reference tables");
  table_cmd->add_option("--kind", opt.kind, "nonmembers or toptier")
      ->check(CLI::IsMember({"nonmembers", "toptier"}))
      ->required();
  table_cmd->add_option("--stat", opt.stat, "Ranking statistic for nonmembers");
  table_cmd->add_option("--top-n", opt.top_n, "Row limit (nonmembers default 25)");
  add_rule_flags(table_cmd);
  table_cmd->add_option("--bwar-file", opt.bwar_file,
                        "CSV of player_id,bwar used to order top-tier rosters");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  RunManifest manifest;
  manifest.argv.assign(argv, argv + argc);
  try {
    CLI::App* sub = app.get_subcommands().front();
    manifest.command = sub->get_name();
    if (sub->get_name() == "careers") return run_careers(opt, manifest);
    if (sub->get_name() == "elected") return run_elected(opt, manifest);
    if (sub->get_name() == "evaluate") return run_evaluate(opt, manifest);
    if (sub->get_name() == "margins") return run_margins(opt, manifest);
    if (sub->get_name() == "selectivity") return run_selectivity(opt, manifest);
    if (sub->get_name() == "landscape") return run_landscape(opt, manifest);
    if (sub->get_name() == "sensitivity") return run_sensitivity(opt, manifest);
    if (sub->get_name() == "compare") return run_compare(opt, manifest);
    if (sub->get_name() == "positions") return run_positions(opt, manifest);
    if (sub->get_name() == "table") return run_table(opt, manifest);
    std::cerr << "hofcut: unknown subcommand\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "hofcut: error: " << e.what() << "\n";
    return 1;
  }
}
