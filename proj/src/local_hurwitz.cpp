#include "hurwitz/local_hurwitz.hpp"

#include <algorithm>
#include <stdexcept>

namespace hurwitz {
namespace {

BigInt two_pow_times_factorial(int two_exponent, int fact_arg) {
  return pow2(static_cast<unsigned>(two_exponent)) *
         factorial(static_cast<unsigned>(fact_arg));
}

}  // namespace

Rational local_h53(const LocalCase53& c) {
  const int d = c.degree;
  if (d < 1) throw std::invalid_argument("local_h53: degree must be >= 1");
  switch (c.kind) {
    case Case53::odd:
      if (d % 2 == 0) throw std::invalid_argument("local_h53: odd case needs odd degree");
      return Rational(two_pow_times_factorial((d - 1) / 2, (d - 1) / 2));
    case Case53::even_arc:
      if (d % 2 != 0) throw std::invalid_argument("local_h53: even case needs even degree");
      return Rational(two_pow_times_factorial(d / 2 - 1, d / 2));
    case Case53::even_endpoints:
      if (d % 2 != 0) throw std::invalid_argument("local_h53: even case needs even degree");
      return Rational(two_pow_times_factorial((d - 2) / 2, (d - 2) / 2));
  }
  throw std::invalid_argument("local_h53: bad case");
}

BigInt alpha53(const LocalCase53& c) {
  Rational h = local_h53(c);
  if (c.kind != Case53::odd) h *= 2;
  return h.get_num();
}

Rational local_h54(const LocalCase54& c) {
  const int d = c.degree, a = c.side_a, b = c.side_b;
  if (a < 1 || b < 1 || a + b != d)
    throw std::invalid_argument("local_h54: sides must be positive and sum to the degree");
  switch (c.family) {
    case VertexFamily::lone_odd:
      if (d % 2 == 0 || (a % 2) == (b % 2))
        throw std::invalid_argument("local_h54: lone_odd needs odd degree");
      return Rational(two_pow_times_factorial((d - 3) / 2, (d - 3) / 2));
    case VertexFamily::sides_odd:
      if (d % 2 != 0 || a % 2 == 0 || b % 2 == 0)
        throw std::invalid_argument("local_h54: sides_odd needs even degree, odd sides");
      return Rational(two_pow_times_factorial((d - 2) / 2, (d - 2) / 2));
    case VertexFamily::all_even:
      if (d % 2 != 0 || a % 2 != 0 || b % 2 != 0 || d < 4)
        throw std::invalid_argument("local_h54: all_even needs even degree and sides, d >= 4");
      return Rational(two_pow_times_factorial((d - 2) / 2, (d - 4) / 2));
    case VertexFamily::conjugated:
      if (a != b) throw std::invalid_argument("local_h54: conjugated needs equal sides");
      return Rational(two_pow_times_factorial((d - 2) / 2, (d - 2) / 2));
  }
  throw std::invalid_argument("local_h54: bad family");
}

BigInt alpha54(const LocalCase54& c) { return local_h54(c).get_num(); }

namespace {

std::vector<int> crossed_levels_of(const GraphEdge& e, int r) {
  std::vector<int> out;
  for (int t = e.from_level + 1; t <= std::min(e.to_level - 1, r); t++)
    if (t >= 1) out.push_back(t);
  return out;
}

// The rule matched at a vertex, with the side-pair conjugation read off the
// decoration.
const LocalRule& vertex_rule(const MonodromyGraph& graph, const SignVector& s,
                             const std::vector<WfPair>& conjugated, int level,
                             const LocalRuleTable& table,
                             MonodromyGraph::VertexStar* star_out) {
  const auto star = graph.star(level);
  const GraphEdge& lone = graph.edge(star.lone_edge);
  const GraphEdge& side_a = graph.edge(star.side_edges[0]);
  const GraphEdge& side_b = graph.edge(star.side_edges[1]);
  const bool conj = std::any_of(conjugated.begin(), conjugated.end(), [&](const WfPair& p) {
    return (p.edge_a == side_a.id && p.edge_b == side_b.id) ||
           (p.edge_a == side_b.id && p.edge_b == side_a.id);
  });
  if (star_out) *star_out = star;
  return table.match(s[static_cast<size_t>(level - 1)], lone.weight, side_a.weight,
                     side_b.weight, conj);
}

}  // namespace

UnshrunkCover expand(const SignedCover& cover, const LocalRuleTable& table) {
  const MonodromyGraph& graph = cover.graph();
  const int r = graph.levels();
  UnshrunkCover u{graph, cover.branch_signs(), cover.conjugated(), {}};
  u.edges.resize(graph.edges().size());

  for (const GraphEdge& e : graph.edges()) {
    UnshrunkEdge& ue = u.edges[static_cast<size_t>(e.id)];
    ue.base_id = e.id;
    ue.conjugated = cover.edge_conjugated(e.id);
    if (ue.conjugated) {
      for (const WfPair& p : cover.conjugated())
        if (p.edge_a == e.id || p.edge_b == e.id)
          ue.partner = p.edge_a == e.id ? p.edge_b : p.edge_a;
    }
    ue.crossed_levels = crossed_levels_of(e, r);
    if (ue.conjugated || e.weight % 2 != 0 || r == 0) continue;

    Sign sign;
    if (e.role == EdgeRole::interior) {
      sign = cover.edge_signs().at(e.id);
    } else {
      // An even fixed end: its fixed point is forced by the rule matched at
      // the one inner vertex it touches.
      const int level = e.role == EdgeRole::left_end ? e.to_level : e.from_level;
      MonodromyGraph::VertexStar star;
      const LocalRule& rule =
          vertex_rule(graph, u.branch_signs, u.conjugated_pairs, level, table, &star);
      const std::optional<Sign>& forced =
          star.lone_edge == e.id ? rule.lone_sign : rule.even_side_sign;
      if (!forced)
        throw RuleTableError("rule table: no fixed point forced on an even end");
      sign = *forced;
    }
    ue.segment_signs.assign(ue.crossed_levels.size() + 1, sign);
  }
  return u;
}

SignedCover shrink(const UnshrunkCover& cover) {
  std::map<int, Sign> signs;
  for (const UnshrunkEdge& ue : cover.edges) {
    const GraphEdge& e = cover.graph.edge(ue.base_id);
    if (ue.conjugated || e.weight % 2 != 0 || cover.graph.levels() == 0) continue;
    if (ue.segment_signs.empty())
      throw std::invalid_argument("shrink: even fixed edge without signs");
    // Trivial vertices never change the chosen fixed point, so a subdivided
    // edge shrinks to a single well-defined sign.
    for (Sign s : ue.segment_signs)
      if (s != ue.segment_signs.front())
        throw std::invalid_argument("shrink: inconsistent fixed points along an edge");
    if (e.role == EdgeRole::interior) signs.emplace(e.id, ue.segment_signs.front());
  }
  return SignedCover(cover.graph, cover.branch_signs, cover.conjugated_pairs, signs);
}

Rational general_multiplicity(const UnshrunkCover& cover,
                              const LocalRuleTable& table) {
  const MonodromyGraph& graph = cover.graph;
  const int r = graph.levels();
  if (r == 0) return Rational(1);

  const SignVector& s = cover.branch_signs;
  auto branch_sign = [&](int level) { return s[static_cast<size_t>(level - 1)]; };
  auto sign_at = [&](const UnshrunkEdge& ue, int level) {
    const GraphEdge& e = graph.edge(ue.base_id);
    return level == e.from_level ? ue.segment_signs.front() : ue.segment_signs.back();
  };

  long ee_count = 0;         // even fixed edges of the unshrunk curve
  Rational local_product(1);  // local real/complex cover counts, leaf factors
  BigInt conj_weights = 1;    // one weight per conjugate edge pair
  BigInt aut = pow2(static_cast<unsigned>(graph.wieners_and_forks().size()));

  // 3-valent vertices: one per level, always fixed.
  for (int level = 1; level <= r; level++) {
    MonodromyGraph::VertexStar star;
    const LocalRule& rule =
        vertex_rule(graph, s, cover.conjugated_pairs, level, table, &star);
    const GraphEdge& lone = graph.edge(star.lone_edge);

    // The refined local count is zero unless the chosen fixed points match
    // the admissible picture.
    if (rule.lone_sign && lone.weight % 2 == 0) {
      const UnshrunkEdge& ue = cover.edges[static_cast<size_t>(lone.id)];
      if (!ue.conjugated && sign_at(ue, level) != *rule.lone_sign) return Rational(0);
    }
    if (rule.even_side_sign) {
      for (int side_id : star.side_edges) {
        const GraphEdge& side = graph.edge(side_id);
        if (side.weight % 2 != 0) continue;
        const UnshrunkEdge& ue = cover.edges[static_cast<size_t>(side_id)];
        if (!ue.conjugated && sign_at(ue, level) != *rule.even_side_sign)
          return Rational(0);
      }
    }

    const GraphEdge& side_a = graph.edge(star.side_edges[0]);
    const GraphEdge& side_b = graph.edge(star.side_edges[1]);
    LocalCase54 c{lone.weight, side_a.weight, side_b.weight, rule.family,
                  branch_sign(level) == Sign::minus ? Orientation::negative_branch
                                                    : Orientation::positive_branch};
    local_product *= local_h54(c);
    aut *= alpha54(c);

    // The simply-ramified end at this vertex has weight 2: one even fixed
    // leaf edge, whose leaf disc carries two half-weight real structures.
    ee_count += 1;
    local_product /= 2;
  }

  // Subdivision tracks.
  for (const UnshrunkEdge& ue : cover.edges) {
    const GraphEdge& e = graph.edge(ue.base_id);
    const int segments = static_cast<int>(ue.crossed_levels.size()) + 1;
    if (ue.conjugated) {
      if (ue.partner < ue.base_id) continue;  // one pass per pair
      for (int i = 0; i < segments; i++) conj_weights *= e.weight;
      for (int level : ue.crossed_levels) {
        (void)level;
        // Conjugate pair of trivial vertices: marked local complex count.
        local_product *= factorial(static_cast<unsigned>(e.weight - 1));
        aut *= factorial(static_cast<unsigned>(e.weight));
      }
      if (e.role != EdgeRole::interior)
        local_product /= e.weight;  // conjugate pair of leaf discs
      continue;
    }
    if (e.weight % 2 != 0) {
      for (int level : ue.crossed_levels) {
        (void)level;
        local_product *= local_h53(e.weight, Case53::odd);
        aut *= alpha53(e.weight, Case53::odd);
      }
      continue;
    }
    if (static_cast<int>(ue.segment_signs.size()) != segments)
      throw std::invalid_argument("general_multiplicity: missing segment signs");
    ee_count += segments;
    for (size_t i = 0; i < ue.crossed_levels.size(); i++) {
      if (ue.segment_signs[i] != ue.segment_signs[i + 1]) return Rational(0);
      const Case53 kind = ue.segment_signs[i] == branch_sign(ue.crossed_levels[i])
                              ? Case53::even_endpoints
                              : Case53::even_arc;
      local_product *= local_h53(e.weight, kind);
      aut *= alpha53(e.weight, kind);
    }
    if (e.role != EdgeRole::interior) local_product /= 2;  // even fixed leaf disc
  }

  return pow2_rational(ee_count) * local_product * Rational(conj_weights) / Rational(aut);
}

}  // namespace hurwitz
