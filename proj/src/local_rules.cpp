#include "hurwitz/local_rules.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"

#ifndef HURWITZ_DEFAULT_RULES_PATH
#define HURWITZ_DEFAULT_RULES_PATH "data/local_rules.json"
#endif

namespace hurwitz {

SignVector parse_signs(const std::string& s) {
  SignVector out;
  for (char c : s) {
    if (c == '+')
      out.push_back(Sign::plus);
    else if (c == '-')
      out.push_back(Sign::minus);
    else
      throw std::invalid_argument("signs: expected a string over '+-'");
  }
  return out;
}

std::string format_signs(const SignVector& s) {
  std::string out;
  for (Sign v : s) out += sign_char(v);
  return out;
}

namespace {

Sign parse_one_sign(const std::string& s) {
  if (s == "+") return Sign::plus;
  if (s == "-") return Sign::minus;
  throw RuleTableError("rule table: bad sign '" + s + "'");
}

ParityReq parse_parity(const std::string& s) {
  if (s == "even") return ParityReq::even;
  if (s == "odd") return ParityReq::odd;
  if (s == "any") return ParityReq::any;
  throw RuleTableError("rule table: bad parity '" + s + "'");
}

bool parity_ok(ParityReq req, int weight) {
  return req == ParityReq::any || weight % 2 == static_cast<int>(req);
}

VertexFamily parse_family(const std::string& s) {
  if (s == "lone_odd") return VertexFamily::lone_odd;
  if (s == "sides_odd") return VertexFamily::sides_odd;
  if (s == "all_even") return VertexFamily::all_even;
  if (s == "conjugated") return VertexFamily::conjugated;
  throw RuleTableError("rule table: bad family '" + s + "'");
}

}  // namespace

bool LocalRule::matches(Sign s, int lone_weight, int side_a, int side_b,
                        bool sides_conjugated) const {
  if (s != branch_sign || sides_conjugated != conjugated_sides) return false;
  // Conjugation is only defined on equal-weight pairs.
  if (conjugated_sides && side_a != side_b) return false;
  if (!parity_ok(lone_parity, lone_weight)) return false;
  return (parity_ok(side_parity_a, side_a) && parity_ok(side_parity_b, side_b)) ||
         (parity_ok(side_parity_a, side_b) && parity_ok(side_parity_b, side_a));
}

LocalRuleTable LocalRuleTable::from_json_text(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw RuleTableError(std::string("rule table: parse error: ") + e.what());
  }
  LocalRuleTable table;
  if (!doc.contains("rules") || !doc["rules"].is_array())
    throw RuleTableError("rule table: missing 'rules' array");
  for (const auto& entry : doc["rules"]) {
    LocalRule rule;
    rule.branch_sign = parse_one_sign(entry.at("branch_sign").get<std::string>());
    rule.family = parse_family(entry.at("family").get<std::string>());
    rule.conjugated_sides = entry.at("conjugated_sides").get<bool>();
    rule.lone_parity = parse_parity(entry.at("lone_parity").get<std::string>());
    const auto& sides = entry.at("side_parities");
    rule.side_parity_a = parse_parity(sides.at(0).get<std::string>());
    rule.side_parity_b = parse_parity(sides.at(1).get<std::string>());
    if (!entry.at("lone_sign").is_null())
      rule.lone_sign = parse_one_sign(entry.at("lone_sign").get<std::string>());
    if (!entry.at("even_side_sign").is_null())
      rule.even_side_sign = parse_one_sign(entry.at("even_side_sign").get<std::string>());
    table.rules_.push_back(rule);
  }
  if (table.rules_.empty()) throw RuleTableError("rule table: no rules");
  return table;
}

LocalRuleTable LocalRuleTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw RuleTableError("rule table: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json_text(buf.str());
}

const LocalRule& LocalRuleTable::match(Sign branch_sign, int lone_weight,
                                       int side_a, int side_b,
                                       bool sides_conjugated) const {
  const LocalRule* found = nullptr;
  for (const LocalRule& rule : rules_) {
    if (!rule.matches(branch_sign, lone_weight, side_a, side_b, sides_conjugated))
      continue;
    if (found)
      throw RuleTableError("rule table: ambiguous vertex match");
    found = &rule;
  }
  if (!found) throw RuleTableError("rule table: no rule matches vertex");
  return *found;
}

std::string default_rule_path() {
  if (const char* env = std::getenv("HURWITZ_RULES_PATH"); env && *env)
    return env;
  return HURWITZ_DEFAULT_RULES_PATH;
}

LocalRuleTable default_rule_table() { return LocalRuleTable::load(default_rule_path()); }

}  // namespace hurwitz
