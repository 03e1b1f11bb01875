#pragma once

#include "hurwitz/signed_cover.hpp"

namespace hurwitz {

/// Local real cover counts over a 3-holed sphere with profiles (d), (d) and
/// (1,...,1). For even d the two fixed points of the source either lie on
/// arcs joining the two d-circles directly (arc case) or on arcs running into
/// the trivially-ramified boundary (endpoints case).
enum class Case53 { odd, even_arc, even_endpoints };

struct LocalCase53 {
  int degree = 0;
  Case53 kind = Case53::odd;
};

/// Closed forms: odd 2^{(d-1)/2}((d-1)/2)!, arc 2^{d/2-1}(d/2)!,
/// endpoints 2^{(d-2)/2}((d-2)/2)!. Throws std::invalid_argument on a
/// parity mismatch.
Rational local_h53(const LocalCase53& c);
inline Rational local_h53(int d, Case53 kind) { return local_h53({d, kind}); }

/// Leaf-marking count: equals the local number for odd d and twice it for
/// even d.
BigInt alpha53(const LocalCase53& c);
inline BigInt alpha53(int d, Case53 kind) { return alpha53({d, kind}); }

/// The two cyclic orders of the three branch points on the real circle;
/// local values coincide, only the admissible sign pictures differ.
enum class Orientation { negative_branch, positive_branch };

/// Profiles (d), (a,b), (2,1,...,1); the case split is the same family
/// classification the rule table uses.
struct LocalCase54 {
  int degree = 0;
  int side_a = 0;
  int side_b = 0;
  VertexFamily family = VertexFamily::lone_odd;
  Orientation orientation = Orientation::negative_branch;
};

/// Closed forms: lone_odd 2^{(d-3)/2}((d-3)/2)!, sides_odd
/// 2^{(d-2)/2}((d-2)/2)!, all_even 2^{(d-2)/2}((d-4)/2)!, conjugated
/// 2^{(d-2)/2}((d-2)/2)!. Throws std::invalid_argument on an inconsistent
/// (d, a, b, family).
Rational local_h54(const LocalCase54& c);
inline Rational local_h54(int d, int a, int b, VertexFamily family,
                          Orientation orientation = Orientation::negative_branch) {
  return local_h54({d, a, b, family, orientation});
}

/// Leaf-marking count at a 3-valent vertex; equal to the local number in all
/// four families.
BigInt alpha54(const LocalCase54& c);

/// An edge of the shrunk cover together with its subdivision track: one
/// trivial vertex for every inner level the edge crosses. Even fixed edges
/// carry one fixed-point sign per segment.
struct UnshrunkEdge {
  int base_id = 0;
  bool conjugated = false;
  int partner = -1;
  std::vector<int> crossed_levels;
  std::vector<Sign> segment_signs;
};

/// A real tropical cover of the caterpillar line with the contracted ends
/// re-grown: the shrunk shadow plus, per edge, the subdivision data the
/// shadow forgets. Carries no metric lengths; no count depends on them.
struct UnshrunkCover {
  MonodromyGraph graph;
  SignVector branch_signs;
  std::vector<WfPair> conjugated_pairs;
  std::vector<UnshrunkEdge> edges;  // indexed by canonical edge id
};

/// Re-grows ends at every inner level an edge crosses and extends the
/// involution; unique up to end markings. Fixed-point signs on even fixed
/// ends are forced by the rule matched at their vertex.
UnshrunkCover expand(const SignedCover& cover, const LocalRuleTable& table);

/// Contracts the subdivision tracks back to the signed cover; inverse of
/// expand up to canonical encoding.
SignedCover shrink(const UnshrunkCover& cover);

/// The automorphism-weighted product of local real and complex cover counts
/// over all vertices and conjugate pairs, times 2^{|EE|} for the even fixed
/// edges. Returns 0 if a vertex picture is inadmissible for the branch
/// signs; throws RuleTableError for configurations outside the tabulated
/// cases.
Rational general_multiplicity(const UnshrunkCover& cover,
                              const LocalRuleTable& table);

}  // namespace hurwitz
