#include "hurwitz/signed_cover.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hurwitz {

SignedCover::SignedCover(MonodromyGraph graph, SignVector branch_signs,
                         std::vector<WfPair> conjugated,
                         std::map<int, Sign> edge_signs)
    : graph_(std::move(graph)), branch_signs_(std::move(branch_signs)),
      conjugated_(std::move(conjugated)), edge_signs_(std::move(edge_signs)) {
  for (WfPair& p : conjugated_)
    if (p.edge_b < p.edge_a) std::swap(p.edge_a, p.edge_b);
  std::sort(conjugated_.begin(), conjugated_.end());
}

std::vector<WfPair> SignedCover::conjugated_wieners() const {
  std::vector<WfPair> out;
  for (const WfPair& p : conjugated_)
    if (p.is_wiener) out.push_back(p);
  return out;
}

bool SignedCover::edge_conjugated(int edge_id) const {
  for (const WfPair& p : conjugated_)
    if (p.edge_a == edge_id || p.edge_b == edge_id) return true;
  return false;
}

std::string SignedCover::canonical_encoding() const {
  std::ostringstream os;
  os << graph_.canonical_encoding() << "|I:";
  for (const WfPair& p : conjugated_) os << "(" << p.edge_a << "," << p.edge_b << ")";
  os << "|S:";
  for (const auto& [id, sign] : edge_signs_) os << id << sign_char(sign) << ";";
  return os.str();
}

nlohmann::json SignedCover::to_json() const {
  nlohmann::json j = graph_.to_json();
  j["branch_signs"] = format_signs(branch_signs_);
  j["conjugated"] = nlohmann::json::array();
  for (const WfPair& p : conjugated_)
    j["conjugated"].push_back({p.edge_a, p.edge_b});
  j["edge_signs"] = nlohmann::json::object();
  for (const auto& [id, sign] : edge_signs_)
    j["edge_signs"][std::to_string(id)] = std::string(1, sign_char(sign));
  return j;
}

std::string SignedCover::to_dot(const std::string& name) const {
  // Drawing convention: conjugated pairs bold, sign '-' dashed, sign '+' and
  // unsigned edges solid.
  std::ostringstream os;
  const int r = graph_.levels();
  os << "digraph " << name << " {\n  rankdir=LR;\n";
  os << "  src [label=\"-inf\", shape=plaintext];\n";
  os << "  snk [label=\"+inf\", shape=plaintext];\n";
  for (int level = 1; level <= r; level++)
    os << "  v" << level << " [label=\"v" << level << " ("
       << sign_char(branch_signs_[static_cast<size_t>(level - 1)]) << ")\", shape=circle];\n";
  auto node = [&](int level) -> std::string {
    if (level == 0) return "src";
    if (level == r + 1) return "snk";
    return "v" + std::to_string(level);
  };
  for (const GraphEdge& e : graph_.edges()) {
    std::string style = "solid";
    if (edge_conjugated(e.id))
      style = "bold";
    else if (auto it = edge_signs_.find(e.id); it != edge_signs_.end() && it->second == Sign::minus)
      style = "dashed";
    os << "  " << node(e.from_level) << " -> " << node(e.to_level) << " [label=\""
       << e.weight << "\", style=" << style << "];\n";
  }
  os << "}\n";
  return os.str();
}

namespace {

// Sign constraints accumulated over the vertices; every even interior edge
// outside a conjugated wiener receives one from each endpoint.
struct Constraints {
  std::map<int, Sign> signs;
  bool ok = true;

  void require(int edge_id, Sign s) {
    if (!ok) return;
    auto [it, inserted] = signs.emplace(edge_id, s);
    if (!inserted && it->second != s) ok = false;
  }
};

}  // namespace

std::vector<SignedCover> decorations(const MonodromyGraph& graph,
                                     const SignVector& branch_signs,
                                     const LocalRuleTable& table) {
  const int r = graph.levels();
  if (static_cast<int>(branch_signs.size()) != r)
    throw std::invalid_argument("decorations: sign vector length != r");

  std::vector<SignedCover> out;
  const std::vector<WfPair> wf = graph.wieners_and_forks();
  if (r == 0) {
    out.push_back(SignedCover(graph, branch_signs, {}, {}));
    return out;
  }

  for (unsigned mask = 0; mask < (1u << wf.size()); mask++) {
    std::vector<WfPair> chosen;
    for (size_t i = 0; i < wf.size(); i++)
      if (mask & (1u << i)) chosen.push_back(wf[i]);

    Constraints constraints;
    for (int level = 1; level <= r && constraints.ok; level++) {
      const auto star = graph.star(level);
      const GraphEdge& lone = graph.edge(star.lone_edge);
      const GraphEdge& side_a = graph.edge(star.side_edges[0]);
      const GraphEdge& side_b = graph.edge(star.side_edges[1]);
      const bool conj = std::any_of(chosen.begin(), chosen.end(), [&](const WfPair& p) {
        return (p.edge_a == side_a.id && p.edge_b == side_b.id) ||
               (p.edge_a == side_b.id && p.edge_b == side_a.id);
      });
      const Sign s = branch_signs[static_cast<size_t>(level - 1)];
      const LocalRule& rule = table.match(s, lone.weight, side_a.weight,
                                          side_b.weight, conj);
      if (rule.lone_sign) {
        if (lone.weight % 2 != 0)
          throw RuleTableError("rule table: sign prescribed on an odd lone edge");
        if (lone.role == EdgeRole::interior) constraints.require(lone.id, *rule.lone_sign);
      }
      if (rule.even_side_sign) {
        if (conj)
          throw RuleTableError("rule table: sign prescribed on a conjugated pair");
        for (const GraphEdge* side : {&side_a, &side_b}) {
          if (side->weight % 2 != 0) continue;
          if (side->role == EdgeRole::interior)
            constraints.require(side->id, *rule.even_side_sign);
        }
      }
    }
    if (!constraints.ok) continue;

    // Every even interior edge outside a conjugated wiener must have been
    // forced; each such edge is the lone or a side edge of both endpoints.
    for (const GraphEdge& e : graph.edges()) {
      if (e.role != EdgeRole::interior || e.weight % 2 != 0) continue;
      bool in_conj_wiener = std::any_of(chosen.begin(), chosen.end(), [&](const WfPair& p) {
        return p.is_wiener && (p.edge_a == e.id || p.edge_b == e.id);
      });
      if (in_conj_wiener) {
        if (constraints.signs.count(e.id))
          throw std::logic_error("decorations: sign on a conjugated wiener edge");
        continue;
      }
      if (!constraints.signs.count(e.id))
        throw std::logic_error("decorations: unconstrained even interior edge");
    }

    out.push_back(SignedCover(graph, branch_signs, chosen, constraints.signs));
  }
  return out;
}

Rational multiplicity_signed(const SignedCover& cover) {
  const long ee = static_cast<long>(cover.edge_signs().size());
  const long wfs = static_cast<long>(cover.graph().wieners_and_forks().size());
  Rational m = pow2_rational(ee - wfs);
  for (const WfPair& p : cover.conjugated_wieners())
    m *= cover.graph().edge(p.edge_a).weight;
  return m;
}

Rational real_tropical_double_hurwitz(int g, const Partition& lambda,
                                      const Partition& nu,
                                      const SignVector& branch_signs,
                                      const LocalRuleTable& table) {
  if (lambda.degree() != nu.degree())
    throw std::invalid_argument("profiles of different degrees");
  const int r = 2 * g - 2 + lambda.length() + nu.length();
  if (r < 0) return Rational(0);
  if (static_cast<int>(branch_signs.size()) != r)
    throw std::invalid_argument("sign vector length != r");
  if (r == 0) return Rational(1);

  Rational total(0);
  for (const MonodromyGraph& cover : enumerate_covers(g, lambda, nu))
    for (const SignedCover& decorated : decorations(cover, branch_signs, table))
      total += multiplicity_signed(decorated);
  return total;
}

Rational marked_number(const Rational& h, const ProfileTuple& mu) {
  return Rational(aut_count(mu)) * h;
}

}  // namespace hurwitz
