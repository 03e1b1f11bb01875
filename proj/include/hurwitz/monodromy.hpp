#pragma once

#include <array>
#include <string>
#include <vector>

#include "hurwitz/partition.hpp"
#include "hurwitz/rational.hpp"

#include "json.hpp"

namespace hurwitz {

enum class EdgeRole { left_end, interior, right_end };
enum class VertexKind { cut, join };

/// One weighted edge of a combinatorial cover of the line. Levels run from 0
/// (the -infinity boundary) to r+1 (+infinity); inner vertices sit at levels
/// 1..r, one per level. A left end with to_level == r+1 is the degenerate
/// bare cover (r == 0), which is simultaneously the nu end.
struct GraphEdge {
  int id = 0;
  int weight = 0;
  int from_level = 0;
  int to_level = 0;
  EdgeRole role = EdgeRole::interior;

  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

/// An unordered pair of parallel interior edges of equal weight (wiener) or
/// of equal-weight ends attached to the same inner vertex (balanced fork).
struct WfPair {
  int edge_a = 0;  // canonical edge ids, edge_a < edge_b
  int edge_b = 0;
  bool is_wiener = false;

  friend bool operator==(const WfPair&, const WfPair&) = default;
  friend auto operator<=>(const WfPair&, const WfPair&) = default;
};

/// A combinatorial tropical cover of the caterpillar line: r levels, one
/// 3-valent inner vertex per level, weighted edges balanced at every vertex.
class MonodromyGraph {
 public:
  MonodromyGraph(int d, int g, std::vector<VertexKind> kinds,
                 std::vector<GraphEdge> edges);

  int degree() const { return d_; }
  int genus() const { return g_; }
  int levels() const { return r_; }
  const std::vector<VertexKind>& vertex_kinds() const { return kinds_; }
  const std::vector<GraphEdge>& edges() const { return edges_; }
  const GraphEdge& edge(int id) const { return edges_[static_cast<size_t>(id)]; }

  Partition left_profile() const;
  Partition right_profile() const;

  /// The three edges at an inner vertex: the lone edge on one side and the
  /// two parallel side edges on the other. `kind` tells which side is which.
  struct VertexStar {
    int level = 0;
    VertexKind kind = VertexKind::cut;
    int lone_edge = 0;             // single in-edge (cut) or out-edge (join)
    std::array<int, 2> side_edges{};  // the pair, lower id first
  };
  VertexStar star(int level) const;

  std::vector<WfPair> wieners() const;
  std::vector<WfPair> balanced_forks() const;
  std::vector<WfPair> wieners_and_forks() const;

  /// |Aut| = 2^{|WF|}: level-preserving cover automorphisms are generated by
  /// swapping the two edges of a wiener or fork.
  BigInt automorphism_count() const;

  /// Byte-comparable encoding, equal exactly for isomorphic covers. The edge
  /// multiset (role, from, to, weight) determines the cover up to
  /// isomorphism since all residual relabeling freedom is within equal
  /// descriptors.
  std::string canonical_encoding() const;

  BigInt interior_weight_product() const;

  // Validity predicates (used by the property suite; construction enforces
  // them already).
  bool balanced_at_every_vertex() const;
  bool constant_level_degree() const;  // total weight d across every level gap
  int first_betti_number() const;

  nlohmann::json to_json() const;
  std::string to_dot(const std::string& name = "cover") const;

 private:
  int d_ = 0;
  int g_ = 0;
  int r_ = 0;
  std::vector<VertexKind> kinds_;
  std::vector<GraphEdge> edges_;  // canonical order; id == index
};

/// All covers of genus g with end profiles lambda and nu, one representative
/// per isomorphism class. r < 0 gives the empty list; r == 0 gives the bare
/// edge (only possible for lambda == nu == (d)).
std::vector<MonodromyGraph> enumerate_covers(int g, const Partition& lambda,
                                             const Partition& nu);

/// Sum over isomorphism classes of (prod of interior edge weights) / |Aut|,
/// evaluated by materializing the covers. The degenerate r == 0 cover
/// contributes 1/d.
Rational complex_tropical_by_enumeration(int g, const Partition& lambda,
                                         const Partition& nu);

/// Same number, computed by a memoized sweep over (level, open-edge state)
/// without materializing covers.
Rational complex_tropical_double_hurwitz(int g, const Partition& lambda,
                                         const Partition& nu);

}  // namespace hurwitz
