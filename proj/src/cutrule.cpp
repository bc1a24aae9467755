#include "hofcut/cutrule.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace hofcut {

namespace {

struct Token {
  enum Kind { Stat, Gt, Int, Or, End } kind;
  std::string text;
  Count value = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ >= text_.size()) return {Token::End, ""};
    char c = text_[pos_];
    if (c == '|') {
      ++pos_;
      return {Token::Or, "|"};
    }
    if (c == '>') {
      ++pos_;
      return {Token::Gt, ">"};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      Token t{Token::Int, std::string(text_.substr(start, pos_ - start))};
      std::from_chars(t.text.data(), t.text.data() + t.text.size(), t.value);
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string word(text_.substr(start, pos_ - start));
      std::string upper = word;
      std::transform(upper.begin(), upper.end(), upper.begin(),
                     [](unsigned char ch) { return static_cast<char>(std::toupper(ch)); });
      if (upper == "OR") return {Token::Or, word};
      return {Token::Stat, upper};
    }
    throw RuleParseError(std::string("unexpected character '") + c + "' in rule expression");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::vector<ThresholdClause> parse_clauses(std::string_view text) {
  Lexer lexer(text);
  std::vector<ThresholdClause> clauses;
  while (true) {
    Token stat = lexer.next();
    if (stat.kind == Token::End && clauses.empty()) {
      throw RuleParseError("empty rule expression");
    }
    if (stat.kind != Token::Stat) {
      throw RuleParseError("expected statistic name, got '" + stat.text + "'");
    }
    Token gt = lexer.next();
    if (gt.kind != Token::Gt) {
      throw RuleParseError("expected '>' after '" + stat.text + "'");
    }
    Token num = lexer.next();
    if (num.kind != Token::Int) {
      throw RuleParseError("expected integer threshold after '" + stat.text + ">', got '" +
                           num.text + "'");
    }
    for (const auto& clause : clauses) {
      if (clause.stat == stat.text) {
        throw RuleParseError("duplicate statistic '" + stat.text + "' in rule");
      }
    }
    clauses.push_back(ThresholdClause{stat.text, num.value});

    Token sep = lexer.next();
    if (sep.kind == Token::End) break;
    if (sep.kind != Token::Or) {
      throw RuleParseError("expected 'or' between clauses, got '" + sep.text + "'");
    }
  }
  return clauses;
}

Role infer_role(const std::vector<ThresholdClause>& clauses) {
  bool batting_ok = true;
  bool pitching_ok = true;
  for (const auto& clause : clauses) {
    auto roles = stat_role(clause.stat);
    if (!roles) {
      throw RuleParseError("unknown statistic '" + clause.stat + "'");
    }
    batting_ok = batting_ok && roles->batting;
    pitching_ok = pitching_ok && roles->pitching;
  }
  if (batting_ok && pitching_ok) {
    throw RuleParseError(
        "cannot infer role from the rule's statistics; specify batter or pitcher explicitly");
  }
  if (!batting_ok && !pitching_ok) {
    throw RuleParseError("rule mixes batting and pitching statistics");
  }
  return batting_ok ? Role::Batter : Role::Pitcher;
}

}  // namespace

CutRule parse_rule(std::string_view text) {
  CutRule rule;
  rule.clauses = parse_clauses(text);
  rule.role = infer_role(rule.clauses);
  return rule;
}

CutRule parse_rule(std::string_view text, Role role) {
  CutRule rule;
  rule.clauses = parse_clauses(text);
  rule.role = role;
  for (const auto& clause : rule.clauses) {
    if (!is_stat_for_role(clause.stat, role)) {
      throw RuleParseError("unknown statistic '" + clause.stat + "' for " + to_string(role) +
                           " rules");
    }
  }
  return rule;
}

std::string print_rule(const CutRule& rule) {
  std::string out;
  for (std::size_t i = 0; i < rule.clauses.size(); ++i) {
    if (i > 0) out += " or ";
    out += rule.clauses[i].stat;
    out += '>';
    out += std::to_string(rule.clauses[i].threshold);
  }
  return out;
}

bool evaluate(const CutRule& rule, const CareerTotals& totals) {
  for (const auto& clause : rule.clauses) {
    if (totals.count(clause.stat) > clause.threshold) return true;
  }
  return false;
}

std::optional<StatKey> first_qualifying_stat(const CutRule& rule, const CareerTotals& totals) {
  for (const auto& clause : rule.clauses) {
    if (totals.count(clause.stat) > clause.threshold) return clause.stat;
  }
  return std::nullopt;
}

std::set<PlayerId> rule_members(const CutRule& rule, const CareerTable& careers) {
  std::set<PlayerId> members;
  for (const auto& totals : careers.rows()) {
    if (evaluate(rule, totals)) members.insert(totals.player_id);
  }
  return members;
}

Count MarginReport::max_surplus() const {
  Count best = 0;
  bool first = true;
  for (const auto& [stat, value] : surplus) {
    if (first || value > best) best = value;
    first = false;
  }
  return best;
}

MarginReport margin_report(const CutRule& rule, const CareerTotals& totals) {
  MarginReport report;
  report.player_id = totals.player_id;
  for (const auto& clause : rule.clauses) {
    Count s = totals.count(clause.stat) - clause.threshold;
    report.surplus.emplace_back(clause.stat, s);
    if (s > 0) report.qualifying_stats.insert(clause.stat);
  }
  report.qualifies = !report.qualifying_stats.empty();
  return report;
}

std::vector<MarginReport> margins(const CutRule& rule, const CareerTable& careers,
                                  const std::optional<std::set<PlayerId>>& subset) {
  if (subset) {
    std::vector<PlayerId> unknown;
    for (const auto& id : *subset) {
      if (!careers.contains(id)) unknown.push_back(id);
    }
    if (!unknown.empty()) {
      std::string msg = "unknown player ids:";
      for (const auto& id : unknown) msg += " " + id;
      throw std::invalid_argument(msg);
    }
  }

  std::vector<MarginReport> reports;
  for (const auto& totals : careers.rows()) {
    if (subset && !subset->count(totals.player_id)) continue;
    reports.push_back(margin_report(rule, totals));
  }
  std::sort(reports.begin(), reports.end(), [](const MarginReport& a, const MarginReport& b) {
    Count sa = a.max_surplus();
    Count sb = b.max_surplus();
    if (sa != sb) return sa > sb;
    return a.player_id < b.player_id;
  });
  return reports;
}

CutRule default_batting_rule() {
  return CutRule{Role::Batter, {{"H", 2500}, {"HR", 350}}};
}

CutRule default_pitching_rule() {
  return CutRule{Role::Pitcher, {{"K", 2800}, {"W", 240}}};
}

CutRule top_tier_batting_rule() {
  return CutRule{Role::Batter, {{"H", 3300}, {"HR", 600}}};
}

CutRule top_tier_pitching_rule() {
  return CutRule{Role::Pitcher, {{"K", 4000}, {"W", 350}}};
}

CutRule default_rule(Role role) {
  return role == Role::Batter ? default_batting_rule() : default_pitching_rule();
}

CutRule top_tier_rule(Role role) {
  return role == Role::Batter ? top_tier_batting_rule() : top_tier_pitching_rule();
}

}  // namespace hofcut
