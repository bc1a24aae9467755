// Black-box tests for the hofcut executable: spawn the real binary, capture
// stdout/stderr/exit code, and parse its CSV back with an independent splitter.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "support.hpp"

namespace {

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string shell_quote(const std::string& text) {
  std::string quoted = "'";
  for (char c : text) {
    if (c == '\'') quoted += "'\\''";
    else quoted += c;
  }
  quoted += "'";
  return quoted;
}

// Runs the CLI under `env_spec` (default: HOFCUT_DATA_DIR scrubbed so tests
// are hermetic) and captures both streams.
RunResult run_cli(const std::vector<std::string>& args,
                  const std::string& env_spec = "env -u HOFCUT_DATA_DIR") {
  static testsupport::TempDir capture;
  auto out_file = capture.path() / "stdout.txt";
  auto err_file = capture.path() / "stderr.txt";
  std::string cmd = env_spec + " " + shell_quote(HOFCUT_CLI_PATH);
  for (const auto& arg : args) cmd += " " + shell_quote(arg);
  cmd += " >" + shell_quote(out_file.string()) + " 2>" + shell_quote(err_file.string());
  int raw = std::system(cmd.c_str());
  RunResult result;
  result.code = (raw != -1 && WIFEXITED(raw)) ? WEXITSTATUS(raw) : -1;
  result.out = testsupport::read_file(out_file);
  result.err = testsupport::read_file(err_file);
  return result;
}

std::string fixture() { return testsupport::fixture_dir().string(); }

// Minimal quote-aware CSV splitting, independent of the library under test.
std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  bool in_quotes = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (in_quotes) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        in_quotes = false;
      } else {
        field += c;
      }
    } else if (c == '"' && field.empty()) {
      in_quotes = true;
    } else if (c == ',') {
      fields.push_back(field);
      field.clear();
    } else {
      field += c;
    }
  }
  fields.push_back(field);
  return fields;
}

struct Csv {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::size_t col(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (header[i] == name) return i;
    }
    REQUIRE_MESSAGE(false, "no column " << name);
    return 0;
  }

  const std::vector<std::string>& row_for(const std::string& player_id) const {
    std::size_t id = col("player_id");
    for (const auto& row : rows) {
      if (row[id] == player_id) return row;
    }
    REQUIRE_MESSAGE(false, "no row for " << player_id);
    static const std::vector<std::string> kNone;
    return kNone;
  }
};

Csv parse_csv(const std::string& text) {
  Csv csv;
  std::size_t start = 0;
  bool first = true;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    std::string line = text.substr(start, end - start);
    start = end + 1;
    if (line.empty()) continue;
    if (first) {
      csv.header = split_csv(line);
      first = false;
    } else {
      csv.rows.push_back(split_csv(line));
    }
  }
  return csv;
}

std::size_t count_substr(const std::string& text, const std::string& needle) {
  std::size_t count = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + needle.size())) {
    ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("careers emits one row per player in the role population") {
  auto run = run_cli({"careers", "--data-dir", fixture()});
  REQUIRE(run.code == 0);
  auto csv = parse_csv(run.out);
  std::vector<std::string> expected_header = {"player_id", "name", "role",
                                              "position",  "elected", "G",
                                              "AB",        "R",       "H",
                                              "HR",        "RBI"};
  CHECK(csv.header == expected_header);
  CHECK(csv.rows.size() == 13);
  const auto& b01 = csv.row_for("b01");
  CHECK(b01[csv.col("name")] == "Hank Hammer");
  CHECK(b01[csv.col("H")] == "3504");
  CHECK(b01[csv.col("elected")] == "true");
  CHECK(run.err.find("13 batter career rows") != std::string::npos);

  auto pitching = run_cli({"careers", "--data-dir", fixture(), "--table", "pitching"});
  REQUIRE(pitching.code == 0);
  auto pcsv = parse_csv(pitching.out);
  CHECK(pcsv.rows.size() == 6);
  const auto& p05 = pcsv.row_for("p05");
  CHECK(p05[pcsv.col("K")] == "2000");
  CHECK(p05[pcsv.col("W")] == "180");
  CHECK(p05[pcsv.col("OUTS")] == "11000");
}

TEST_CASE("evaluate lists default-rule members with a summary on stderr") {
  auto run = run_cli({"evaluate", "--data-dir", fixture()});
  REQUIRE(run.code == 0);
  auto csv = parse_csv(run.out);
  std::vector<std::string> expected_header = {"player_id", "name", "qualified_by", "H", "HR"};
  CHECK(csv.header == expected_header);
  REQUIRE(csv.rows.size() == 6);
  std::vector<std::string> ids;
  for (const auto& row : csv.rows) ids.push_back(row[0]);
  std::vector<std::string> expected_ids = {"b01", "b02", "b03", "b04", "b07", "b10"};
  CHECK(ids == expected_ids);
  CHECK(csv.row_for("b02")[csv.col("qualified_by")] == "HR");
  CHECK(run.err.find("6 of 13 batters pass rule [H>2500 or HR>350]") != std::string::npos);
}

TEST_CASE("rule text drives role inference") {
  auto pitchers = run_cli({"evaluate", "--data-dir", fixture(), "--rule", "K>2800 or W>240"});
  REQUIRE(pitchers.code == 0);
  auto csv = parse_csv(pitchers.out);
  REQUIRE(csv.rows.size() == 3);
  CHECK(csv.rows[0][0] == "p01");
  CHECK(csv.rows[1][0] == "p02");
  CHECK(csv.rows[2][0] == "p03");

  auto savers = run_cli({"evaluate", "--data-dir", fixture(), "--rule", "SV>500"});
  REQUIRE(savers.code == 0);
  auto scsv = parse_csv(savers.out);
  REQUIRE(scsv.rows.size() == 1);
  CHECK(scsv.rows[0][0] == "p04");
}

TEST_CASE("usage problems exit 2, runtime problems exit 1") {
  std::string dir = fixture();
  CHECK(run_cli({"frobnicate", "--data-dir", dir}).code == 2);        // unknown subcommand
  CHECK(run_cli({"careers", "--data-dir", dir, "--bogus"}).code == 2);  // unknown flag
  CHECK(run_cli({"careers", "--data-dir", dir, "--table", "golf"}).code == 2);
  CHECK(run_cli({"careers", "--data-dir", dir, "--format", "yaml"}).code == 2);
  CHECK(run_cli({"table", "--data-dir", dir}).code == 2);  // --kind is required
  CHECK(run_cli({"sensitivity", "--data-dir", dir, "--stat", "H"}).code == 2);

  auto no_dir = run_cli({"careers"});
  CHECK(no_dir.code == 2);
  CHECK(no_dir.err.find("--data-dir") != std::string::npos);

  auto bad_dir = run_cli({"careers", "--data-dir", "/no/such/dir"});
  CHECK(bad_dir.code == 1);
  CHECK(bad_dir.err.find("hofcut: error:") != std::string::npos);

  auto bad_rule = run_cli({"evaluate", "--data-dir", dir, "--rule", "H>>10"});
  CHECK(bad_rule.code == 1);
  CHECK(bad_rule.err.find("hofcut: error:") != std::string::npos);

  auto bad_id = run_cli({"margins", "--data-dir", dir, "--players", "zz,b01"});
  CHECK(bad_id.code == 1);
  CHECK(bad_id.err.find("zz") != std::string::npos);

  auto bad_grid = run_cli({"landscape", "--data-dir", dir, "--grid-a", "3000:2000:100"});
  CHECK(bad_grid.code == 1);

  auto bad_stat = run_cli({"selectivity", "--data-dir", dir, "--stats", "ERA"});
  CHECK(bad_stat.code == 1);
}

TEST_CASE("help exits zero and lists the subcommands") {
  auto run = run_cli({"--help"});
  CHECK(run.code == 0);
  for (const char* name : {"careers", "evaluate", "landscape", "sensitivity", "table"}) {
    CAPTURE(name);
    CHECK(run.out.find(name) != std::string::npos);
  }
}

TEST_CASE("HOFCUT_DATA_DIR substitutes for --data-dir") {
  auto flagged = run_cli({"careers", "--data-dir", fixture()});
  auto via_env = run_cli({"careers"}, "env HOFCUT_DATA_DIR=" + shell_quote(fixture()));
  REQUIRE(via_env.code == 0);
  CHECK(via_env.out == flagged.out);
}

TEST_CASE("config file fills options; flags beat config; config beats env") {
  testsupport::TempDir tmp;
  auto cfg = tmp.write("hofcut.cfg",
                       "data-dir=" + fixture() + "\n"
                       "format=records\n");

  auto from_cfg = run_cli({"--config", cfg.string(), "careers"});
  REQUIRE(from_cfg.code == 0);
  CHECK(from_cfg.out.find("player_id=b01") != std::string::npos);  // records format

  auto flag_wins = run_cli({"--config", cfg.string(), "--format", "csv", "careers"});
  REQUIRE(flag_wins.code == 0);
  CHECK(flag_wins.out.rfind("player_id,name,", 0) == 0);  // csv header line

  auto cfg_beats_env = run_cli({"--config", cfg.string(), "careers"},
                               "env HOFCUT_DATA_DIR=/no/such/dir");
  CHECK(cfg_beats_env.code == 0);
}

TEST_CASE("records format emits key=value blocks") {
  auto run = run_cli({"evaluate", "--data-dir", fixture(), "--format", "records"});
  REQUIRE(run.code == 0);
  CHECK(run.out.find("player_id=b01\n") != std::string::npos);
  CHECK(run.out.find("qualified_by=HR\n") != std::string::npos);
  CHECK(run.out.find("\n\n") != std::string::npos);  // blank line between records
}

TEST_CASE("--out writes the table and a deterministic manifest") {
  testsupport::TempDir tmp;
  auto out_path = (tmp.path() / "members.csv").string();
  std::vector<std::string> args = {"evaluate", "--data-dir", fixture(), "--out", out_path};

  auto first = run_cli(args);
  REQUIRE(first.code == 0);
  CHECK(first.out.empty());
  CHECK(first.err.find("wrote") != std::string::npos);

  std::string table_first = testsupport::read_file(out_path);
  std::string manifest_first = testsupport::read_file(out_path + ".manifest.json");
  CHECK(table_first.rfind("player_id,name,qualified_by,H,HR\n", 0) == 0);
  CHECK(parse_csv(table_first).rows.size() == 6);

  CHECK(manifest_first.find("\"tool\": \"hofcut\"") != std::string::npos);
  CHECK(manifest_first.find("\"command\": \"evaluate\"") != std::string::npos);
  CHECK(manifest_first.find("People.csv") != std::string::npos);
  CHECK(count_substr(manifest_first, "fnv1a64:") == 6);  // five inputs + one output

  auto second = run_cli(args);
  REQUIRE(second.code == 0);
  CHECK(testsupport::read_file(out_path) == table_first);
  CHECK(testsupport::read_file(out_path + ".manifest.json") == manifest_first);
}

TEST_CASE("every subcommand emits rectangular CSV") {
  struct Case {
    std::vector<std::string> args;
    std::size_t rows;
  };
  std::vector<Case> cases = {
      {{"careers"}, 13},
      {{"careers", "--table", "pitching"}, 6},
      {{"elected"}, 9},
      {{"evaluate"}, 6},
      {{"margins", "--players", "b04,b05"}, 2},
      {{"selectivity"}, 4},
      {{"selectivity", "--role", "pitcher"}, 3},
      {{"landscape"}, 13},
      {{"landscape", "--layout", "flat"}, 169},
      {{"sensitivity", "--stat", "H", "--new-threshold", "2600"}, 2},
      {{"compare"}, 9},
      {{"positions"}, 33},
      {{"table", "--kind", "nonmembers", "--top-n", "5"}, 5},
      {{"table", "--kind", "toptier"}, 2},
  };
  for (auto test_case : cases) {
    std::string label = test_case.args[0];
    CAPTURE(label);
    test_case.args.push_back("--data-dir");
    test_case.args.push_back(fixture());
    auto run = run_cli(test_case.args);
    REQUIRE(run.code == 0);
    auto csv = parse_csv(run.out);
    CHECK(csv.rows.size() == test_case.rows);
    for (const auto& row : csv.rows) {
      CHECK(row.size() == csv.header.size());
    }
  }

  // An empty result is still a well-formed table.
  auto empty = run_cli({"table", "--kind", "toptier", "--role", "pitcher",
                        "--data-dir", fixture()});
  REQUIRE(empty.code == 0);
  CHECK(parse_csv(empty.out).rows.empty());
}

TEST_CASE("landscape grids come from flags and near-target cells are starred") {
  auto matrix = run_cli({"landscape", "--data-dir", fixture(), "--stats", "H,HR",
                         "--grid-a", "2000,2500", "--grid-b", "350,400",
                         "--target", "6", "--tolerance", "0"});
  REQUIRE(matrix.code == 0);
  auto mcsv = parse_csv(matrix.out);
  std::vector<std::string> expected_header = {"", "350", "400"};
  CHECK(mcsv.header == expected_header);
  REQUIRE(mcsv.rows.size() == 2);
  std::vector<std::string> row0 = {"2000", "9", "9"};
  std::vector<std::string> row1 = {"2500", "6*", "5"};
  CHECK(mcsv.rows[0] == row0);
  CHECK(mcsv.rows[1] == row1);

  auto flat = run_cli({"landscape", "--data-dir", fixture(), "--stats", "H,HR",
                       "--grid-a", "2000,2500", "--grid-b", "350,400",
                       "--target", "6", "--tolerance", "0", "--layout", "flat"});
  REQUIRE(flat.code == 0);
  auto fcsv = parse_csv(flat.out);
  REQUIRE(fcsv.rows.size() == 4);
  std::vector<std::string> near_row = {"2500", "350", "6", "true"};
  CHECK(fcsv.rows[2] == near_row);

  auto range = run_cli({"landscape", "--data-dir", fixture(), "--stats", "H,HR",
                        "--grid-a", "2000:3000:500", "--grid-b", "300,400",
                        "--target", "0", "--tolerance", "0"});
  REQUIRE(range.code == 0);
  auto rcsv = parse_csv(range.out);
  REQUIRE(rcsv.rows.size() == 3);  // 2000, 2500, 3000
  std::vector<std::string> last_row = {"3000", "5", "2"};
  CHECK(rcsv.rows[2] == last_row);
}

TEST_CASE("sensitivity reports the exact membership diff") {
  auto run = run_cli({"sensitivity", "--data-dir", fixture(), "--stat", "H",
                      "--new-threshold", "2600"});
  REQUIRE(run.code == 0);
  auto csv = parse_csv(run.out);
  std::vector<std::string> expected_header = {"change", "player_id", "name", "H", "elected"};
  CHECK(csv.header == expected_header);
  REQUIRE(csv.rows.size() == 2);
  std::vector<std::string> row0 = {"removed", "b03", "Connie Contact", "2600", "true"};
  std::vector<std::string> row1 = {"removed", "b04", "Max Margin", "2505", "false"};
  CHECK(csv.rows[0] == row0);
  CHECK(csv.rows[1] == row1);
  CHECK(run.err.find("members 6 -> 4") != std::string::npos);
  CHECK(run.err.find("(+0/-2, 1 elected among changed)") != std::string::npos);
}

TEST_CASE("a custom league filter changes the population") {
  auto run = run_cli({"careers", "--data-dir", fixture(), "--leagues", "NNL,NAL"});
  REQUIRE(run.code == 0);
  auto csv = parse_csv(run.out);
  REQUIRE(csv.rows.size() == 1);
  CHECK(csv.rows[0][csv.col("player_id")] == "n01");
  CHECK(csv.rows[0][csv.col("H")] == "225");
}

TEST_CASE("toptier tables accept an external ranking file") {
  testsupport::TempDir tmp;
  auto bwar = tmp.write("bwar.csv", "player_id,bwar\nb02,50.5\nb01,10.1\n");
  auto run = run_cli({"table", "--kind", "toptier", "--data-dir", fixture(),
                      "--bwar-file", bwar.string()});
  REQUIRE(run.code == 0);
  auto csv = parse_csv(run.out);
  REQUIRE(csv.rows.size() == 2);
  CHECK(csv.rows[0][csv.col("player_id")] == "b02");  // higher bwar first
  CHECK(csv.rows[0][csv.col("bwar")] == "50.5");
  CHECK(csv.rows[1][csv.col("player_id")] == "b01");

  auto bad = tmp.write("bad.csv", "player_id,bwar\nb02,many\n");
  CHECK(run_cli({"table", "--kind", "toptier", "--data-dir", fixture(),
                 "--bwar-file", bad.string()}).code == 1);
}
