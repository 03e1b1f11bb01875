#pragma once

#include <map>
#include <vector>

#include "hurwitz/local_rules.hpp"
#include "hurwitz/monodromy.hpp"

namespace hurwitz {

/// A monodromy graph with real decoration: the subset I of conjugated wieners
/// and forks, and a sign for every even interior edge not inside a conjugated
/// wiener (the set EE). Ends carry no signs. The branch signs the decoration
/// was enumerated against ride along for the bridge construction.
class SignedCover {
 public:
  SignedCover(MonodromyGraph graph, SignVector branch_signs,
              std::vector<WfPair> conjugated, std::map<int, Sign> edge_signs);

  const MonodromyGraph& graph() const { return graph_; }
  const SignVector& branch_signs() const { return branch_signs_; }
  const std::vector<WfPair>& conjugated() const { return conjugated_; }
  std::vector<WfPair> conjugated_wieners() const;  // I' = I intersect W
  const std::map<int, Sign>& edge_signs() const { return edge_signs_; }

  bool edge_conjugated(int edge_id) const;

  std::string canonical_encoding() const;
  nlohmann::json to_json() const;
  std::string to_dot(const std::string& name = "cover") const;

 private:
  MonodromyGraph graph_;
  SignVector branch_signs_;
  std::vector<WfPair> conjugated_;
  std::map<int, Sign> edge_signs_;
};

/// All decorations (I, S) of the graph that are admissible for the branch
/// signs under the rule table, each exactly once. Given I, the table forces
/// every sign, so the decorations are exactly the consistent subsets of WF.
std::vector<SignedCover> decorations(const MonodromyGraph& graph,
                                     const SignVector& branch_signs,
                                     const LocalRuleTable& table);

/// m = 2^{|EE|} / 2^{|WF|} * prod over conjugated wieners of the common
/// weight.
Rational multiplicity_signed(const SignedCover& cover);

/// Sum of multiplicity_signed over all covers and decorations. The r == 0
/// degenerate case counts 1: one real class of weight 1 for odd degree, two
/// classes of weight 1/2 for even degree.
Rational real_tropical_double_hurwitz(int g, const Partition& lambda,
                                      const Partition& nu,
                                      const SignVector& branch_signs,
                                      const LocalRuleTable& table);

/// Marked count from an unmarked one: |Aut(mu)| * h.
Rational marked_number(const Rational& h, const ProfileTuple& mu);

}  // namespace hurwitz
