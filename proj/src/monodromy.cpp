#include "hurwitz/monodromy.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hurwitz {
namespace {

int role_rank(EdgeRole r) {
  switch (r) {
    case EdgeRole::left_end: return 0;
    case EdgeRole::interior: return 1;
    case EdgeRole::right_end: return 2;
  }
  return 3;
}

const char* role_name(EdgeRole r) {
  switch (r) {
    case EdgeRole::left_end: return "left_end";
    case EdgeRole::interior: return "interior";
    case EdgeRole::right_end: return "right_end";
  }
  return "?";
}

std::array<int, 4> descriptor(const GraphEdge& e) {
  return {role_rank(e.role), e.from_level, e.to_level, e.weight};
}

}  // namespace

MonodromyGraph::MonodromyGraph(int d, int g, std::vector<VertexKind> kinds,
                               std::vector<GraphEdge> edges)
    : d_(d), g_(g), r_(static_cast<int>(kinds.size())), kinds_(std::move(kinds)),
      edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end(),
            [](const GraphEdge& a, const GraphEdge& b) {
              return descriptor(a) < descriptor(b);
            });
  for (size_t i = 0; i < edges_.size(); i++) edges_[i].id = static_cast<int>(i);
}

Partition MonodromyGraph::left_profile() const {
  std::vector<int> w;
  for (const GraphEdge& e : edges_)
    if (e.role == EdgeRole::left_end) w.push_back(e.weight);
  return Partition(std::move(w));
}

Partition MonodromyGraph::right_profile() const {
  std::vector<int> w;
  for (const GraphEdge& e : edges_)
    if (e.role == EdgeRole::right_end || (e.role == EdgeRole::left_end && e.to_level == r_ + 1))
      w.push_back(e.weight);
  return Partition(std::move(w));
}

MonodromyGraph::VertexStar MonodromyGraph::star(int level) const {
  VertexStar s;
  s.level = level;
  s.kind = kinds_[static_cast<size_t>(level - 1)];
  std::vector<int> in, out;
  for (const GraphEdge& e : edges_) {
    if (e.to_level == level) in.push_back(e.id);
    if (e.from_level == level) out.push_back(e.id);
  }
  if (s.kind == VertexKind::cut) {
    if (in.size() != 1 || out.size() != 2) throw std::logic_error("bad cut star");
    s.lone_edge = in[0];
    s.side_edges = {out[0], out[1]};
  } else {
    if (in.size() != 2 || out.size() != 1) throw std::logic_error("bad join star");
    s.lone_edge = out[0];
    s.side_edges = {in[0], in[1]};
  }
  return s;
}

std::vector<WfPair> MonodromyGraph::wieners() const {
  // Parallel interior edges share both endpoint vertices; 3-valence caps any
  // parallel family at two, so equal descriptors pair up directly.
  std::vector<WfPair> out;
  for (size_t i = 0; i + 1 < edges_.size(); i++) {
    const GraphEdge& a = edges_[i];
    const GraphEdge& b = edges_[i + 1];
    if (a.role == EdgeRole::interior && descriptor(a) == descriptor(b))
      out.push_back(WfPair{a.id, b.id, true});
  }
  return out;
}

std::vector<WfPair> MonodromyGraph::balanced_forks() const {
  std::vector<WfPair> out;
  for (size_t i = 0; i + 1 < edges_.size(); i++) {
    const GraphEdge& a = edges_[i];
    const GraphEdge& b = edges_[i + 1];
    if (descriptor(a) != descriptor(b)) continue;
    if (a.role == EdgeRole::left_end && a.to_level <= r_)
      out.push_back(WfPair{a.id, b.id, false});  // two lambda ends, same join
    if (a.role == EdgeRole::right_end)
      out.push_back(WfPair{a.id, b.id, false});  // two nu ends, same cut
  }
  return out;
}

std::vector<WfPair> MonodromyGraph::wieners_and_forks() const {
  std::vector<WfPair> wf = wieners();
  std::vector<WfPair> f = balanced_forks();
  wf.insert(wf.end(), f.begin(), f.end());
  std::sort(wf.begin(), wf.end());
  return wf;
}

BigInt MonodromyGraph::automorphism_count() const {
  return pow2(static_cast<unsigned>(wieners_and_forks().size()));
}

std::string MonodromyGraph::canonical_encoding() const {
  std::ostringstream os;
  os << "d" << d_ << "g" << g_ << "r" << r_ << ":";
  for (VertexKind k : kinds_) os << (k == VertexKind::cut ? 'c' : 'j');
  for (const GraphEdge& e : edges_)
    os << ";" << role_rank(e.role) << "," << e.from_level << "," << e.to_level
       << "," << e.weight;
  return os.str();
}

BigInt MonodromyGraph::interior_weight_product() const {
  BigInt p = 1;
  for (const GraphEdge& e : edges_)
    if (e.role == EdgeRole::interior) p *= e.weight;
  return p;
}

bool MonodromyGraph::balanced_at_every_vertex() const {
  for (int level = 1; level <= r_; level++) {
    int in = 0, out = 0;
    for (const GraphEdge& e : edges_) {
      if (e.to_level == level) in += e.weight;
      if (e.from_level == level) out += e.weight;
    }
    if (in != out) return false;
  }
  return true;
}

bool MonodromyGraph::constant_level_degree() const {
  // Total weight crossing each gap (t, t+1) must be d.
  for (int t = 0; t <= r_; t++) {
    int w = 0;
    for (const GraphEdge& e : edges_)
      if (e.from_level <= t && e.to_level >= t + 1) w += e.weight;
    if (w != d_) return false;
  }
  return true;
}

int MonodromyGraph::first_betti_number() const {
  int interior = 0;
  for (const GraphEdge& e : edges_)
    if (e.role == EdgeRole::interior) interior++;
  if (r_ == 0) return 0;
  return interior - r_ + 1;
}

nlohmann::json MonodromyGraph::to_json() const {
  nlohmann::json j;
  j["d"] = d_;
  j["g"] = g_;
  j["levels"] = r_;
  j["vertices"] = nlohmann::json::array();
  for (int level = 1; level <= r_; level++)
    j["vertices"].push_back(
        {{"level", level},
         {"kind", kinds_[static_cast<size_t>(level - 1)] == VertexKind::cut ? "cut" : "join"}});
  j["edges"] = nlohmann::json::array();
  for (const GraphEdge& e : edges_)
    j["edges"].push_back({{"id", e.id},
                          {"weight", e.weight},
                          {"from_level", e.from_level},
                          {"to_level", e.to_level},
                          {"role", role_name(e.role)}});
  return j;
}

std::string MonodromyGraph::to_dot(const std::string& name) const {
  std::ostringstream os;
  os << "digraph " << name << " {\n  rankdir=LR;\n";
  os << "  src [label=\"-inf\", shape=plaintext];\n";
  os << "  snk [label=\"+inf\", shape=plaintext];\n";
  for (int level = 1; level <= r_; level++)
    os << "  v" << level << " [label=\"v" << level << "\", shape=circle];\n";
  auto node = [&](int level) -> std::string {
    if (level == 0) return "src";
    if (level == r_ + 1) return "snk";
    return "v" + std::to_string(level);
  };
  for (const GraphEdge& e : edges_)
    os << "  " << node(e.from_level) << " -> " << node(e.to_level)
       << " [label=\"" << e.weight << "\"];\n";
  os << "}\n";
  return os.str();
}

namespace {

// Sweep state: open edges carry (creation level, weight) plus the index of
// the record being built; two open edges are interchangeable for choice
// purposes exactly when their (creation level, weight) descriptors agree.
struct OpenEdge {
  int created = 0;
  int weight = 0;
  int record = 0;
};

struct EdgeRecord {
  int weight = 0;
  int from_level = 0;
  int to_level = 0;  // -1 while open
};

struct Sweep {
  int d = 0, g = 0, r = 0;
  std::vector<int> nu_sorted;  // decreasing
  std::vector<MonodromyGraph>* out = nullptr;

  std::vector<EdgeRecord> records;
  std::vector<VertexKind> kinds;

  void finalize(const std::vector<OpenEdge>& open) {
    std::vector<int> weights;
    for (const OpenEdge& e : open) weights.push_back(e.weight);
    std::sort(weights.begin(), weights.end(), std::greater<int>());
    if (weights != nu_sorted) return;
    // Connectivity: inner vertices linked through interior edges; every end
    // must touch a vertex (a pass-through left end is its own component).
    if (r > 0) {
      std::vector<int> parent(static_cast<size_t>(r));
      std::iota(parent.begin(), parent.end(), 0);
      std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
          parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
          x = parent[static_cast<size_t>(x)];
        }
        return x;
      };
      for (const EdgeRecord& rec : records) {
        if (rec.from_level == 0 && rec.to_level < 0) return;  // stray line
        if (rec.from_level >= 1 && rec.to_level >= 1 && rec.to_level <= r)
          parent[static_cast<size_t>(find(rec.from_level - 1))] = find(rec.to_level - 1);
      }
      int root = find(0);
      for (int v = 1; v < r; v++)
        if (find(v) != root) return;
    }
    std::vector<GraphEdge> edges;
    for (const EdgeRecord& rec : records) {
      GraphEdge e;
      e.weight = rec.weight;
      e.from_level = rec.from_level;
      e.to_level = rec.to_level < 0 ? r + 1 : rec.to_level;
      if (rec.from_level == 0)
        e.role = EdgeRole::left_end;
      else if (e.to_level == r + 1)
        e.role = EdgeRole::right_end;
      else
        e.role = EdgeRole::interior;
      edges.push_back(e);
    }
    out->push_back(MonodromyGraph(d, g, kinds, std::move(edges)));
  }

  void step(int level, std::vector<OpenEdge>& open) {
    if (level > r) {
      finalize(open);
      return;
    }
    const int rem_after = r - level;  // vertices left after this one
    const int target = static_cast<int>(nu_sorted.size());
    auto feasible = [&](int count_after) {
      int diff = target - count_after;
      if (diff < 0) diff = -diff;
      return diff <= rem_after && (target - count_after - rem_after) % 2 == 0;
    };

    // Cuts: one choice per distinct (descriptor, split).
    for (size_t i = 0; i < open.size(); i++) {
      bool dup = false;
      for (size_t k = 0; k < i; k++)
        if (open[k].created == open[i].created && open[k].weight == open[i].weight) {
          dup = true;
          break;
        }
      if (dup) continue;
      const OpenEdge cur = open[i];
      if (cur.weight < 2) continue;
      if (!feasible(static_cast<int>(open.size()) + 1)) continue;
      for (int a = 1; 2 * a <= cur.weight; a++) {
        records[static_cast<size_t>(cur.record)].to_level = level;
        kinds.push_back(VertexKind::cut);
        std::vector<OpenEdge> next;
        next.reserve(open.size() + 1);
        for (size_t k = 0; k < open.size(); k++)
          if (k != i) next.push_back(open[k]);
        for (int w : {a, cur.weight - a}) {
          next.push_back(OpenEdge{level, w, static_cast<int>(records.size())});
          records.push_back(EdgeRecord{w, level, -1});
        }
        step(level + 1, next);
        records.pop_back();
        records.pop_back();
        kinds.pop_back();
        records[static_cast<size_t>(cur.record)].to_level = -1;
      }
    }

    // Joins: one choice per distinct unordered descriptor pair.
    if (open.size() >= 2 && feasible(static_cast<int>(open.size()) - 1)) {
      std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> seen;
      for (size_t i = 0; i < open.size(); i++) {
        for (size_t j = i + 1; j < open.size(); j++) {
          std::pair<int, int> da{open[i].created, open[i].weight};
          std::pair<int, int> db{open[j].created, open[j].weight};
          if (db < da) std::swap(da, db);
          if (std::find(seen.begin(), seen.end(), std::make_pair(da, db)) != seen.end())
            continue;
          seen.push_back({da, db});
          records[static_cast<size_t>(open[i].record)].to_level = level;
          records[static_cast<size_t>(open[j].record)].to_level = level;
          kinds.push_back(VertexKind::join);
          std::vector<OpenEdge> next;
          next.reserve(open.size() - 1);
          for (size_t k = 0; k < open.size(); k++)
            if (k != i && k != j) next.push_back(open[k]);
          int w = open[i].weight + open[j].weight;
          next.push_back(OpenEdge{level, w, static_cast<int>(records.size())});
          records.push_back(EdgeRecord{w, level, -1});
          step(level + 1, next);
          records.pop_back();
          kinds.pop_back();
          records[static_cast<size_t>(open[i].record)].to_level = -1;
          records[static_cast<size_t>(open[j].record)].to_level = -1;
        }
      }
    }
  }
};

}  // namespace

std::vector<MonodromyGraph> enumerate_covers(int g, const Partition& lambda,
                                             const Partition& nu) {
  if (lambda.degree() != nu.degree())
    throw std::invalid_argument("enumerate_covers: profiles of different degrees");
  if (g < 0) throw std::invalid_argument("enumerate_covers: negative genus");
  std::vector<MonodromyGraph> out;
  const int r = 2 * g - 2 + lambda.length() + nu.length();
  if (r < 0) return out;

  Sweep sweep;
  sweep.d = lambda.degree();
  sweep.g = g;
  sweep.r = r;
  sweep.nu_sorted = nu.parts();
  sweep.out = &out;

  std::vector<OpenEdge> open;
  for (int w : lambda.parts()) {
    open.push_back(OpenEdge{0, w, static_cast<int>(sweep.records.size())});
    sweep.records.push_back(EdgeRecord{w, 0, -1});
  }
  sweep.step(1, open);
  return out;
}

Rational complex_tropical_by_enumeration(int g, const Partition& lambda,
                                         const Partition& nu) {
  const int r = 2 * g - 2 + lambda.length() + nu.length();
  if (lambda.degree() != nu.degree())
    throw std::invalid_argument("profiles of different degrees");
  if (r < 0) return Rational(0);
  if (r == 0) {
    // The bare cover has d cyclic automorphisms; its class counts 1/d.
    if (lambda == nu && lambda.length() == 1) return Rational(1, lambda.degree());
    return Rational(0);
  }
  Rational total(0);
  for (const MonodromyGraph& cover : enumerate_covers(g, lambda, nu))
    total += Rational(cover.interior_weight_product()) /
             Rational(cover.automorphism_count());
  return total;
}

}  // namespace hurwitz
