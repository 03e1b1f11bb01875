#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hurwitz {

enum class Sign : int { plus = 0, minus = 1 };

inline Sign flip(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }
inline char sign_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

/// Positional signs of the simple branch points x_1 < ... < x_r.
using SignVector = std::vector<Sign>;

SignVector parse_signs(const std::string& s);  // string over "+-"
std::string format_signs(const SignVector& s);

/// The four admissible-vertex families per branch-point sign.
enum class VertexFamily { lone_odd, sides_odd, all_even, conjugated };

/// Parity requirement on one edge weight: even, odd, or unconstrained.
enum class ParityReq : int { even = 0, odd = 1, any = 2 };

/// One admissible local picture: parities of the lone and side edges, whether
/// the side pair is conjugated, and the forced signs on the even edges that
/// carry one. Stored for the base orientation; a mirrored vertex matches the
/// same rule with the same decorations.
struct LocalRule {
  Sign branch_sign = Sign::plus;
  VertexFamily family = VertexFamily::lone_odd;
  ParityReq lone_parity = ParityReq::any;
  ParityReq side_parity_a = ParityReq::any;  // side parities match unordered
  ParityReq side_parity_b = ParityReq::any;
  bool conjugated_sides = false;
  std::optional<Sign> lone_sign;       // sign of the lone edge if even
  std::optional<Sign> even_side_sign;  // sign of each even side edge

  bool matches(Sign s, int lone_weight, int side_a, int side_b,
               bool sides_conjugated) const;
};

struct RuleTableError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The eight local pictures, loaded from a JSON data file. Matching is
/// required to be unambiguous: a vertex that matches zero or two rules
/// reports a table defect.
class LocalRuleTable {
 public:
  static LocalRuleTable load(const std::string& path);
  static LocalRuleTable from_json_text(const std::string& text);

  const std::vector<LocalRule>& rules() const { return rules_; }

  /// The unique rule for the vertex data, or throws RuleTableError if the
  /// table matches it zero or several times.
  const LocalRule& match(Sign branch_sign, int lone_weight, int side_a,
                         int side_b, bool sides_conjugated) const;

 private:
  std::vector<LocalRule> rules_;
};

/// Loads the table from HURWITZ_RULES_PATH if set, else from the path baked
/// in at configure time.
LocalRuleTable default_rule_table();
std::string default_rule_path();

}  // namespace hurwitz
