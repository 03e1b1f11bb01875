#include <set>

#include "doctest.h"
#include "hurwitz/factorization.hpp"
#include "hurwitz/monodromy.hpp"

using namespace hurwitz;

namespace {

// Interior edge weights, sorted, as a cheap shape fingerprint.
std::vector<int> interior_weights(const MonodromyGraph& g) {
  std::vector<int> w;
  for (const GraphEdge& e : g.edges())
    if (e.role == EdgeRole::interior) w.push_back(e.weight);
  std::sort(w.begin(), w.end());
  return w;
}

}  // namespace

TEST_CASE("the two covers for lambda=(5), nu=(3,1,1)") {
  const auto covers = enumerate_covers(0, Partition({5}), Partition({3, 1, 1}));
  REQUIRE(covers.size() == 2);
  CHECK(covers[0].canonical_encoding() != covers[1].canonical_encoding());

  // (5) -> (4,1) -> (3,1,1): interior edge of weight 4, no wiener or fork.
  // (5) -> (3,2) -> (3,1,1): interior edge of weight 2 and a balanced fork
  // on the two weight-1 ends; only the latter has a nontrivial automorphism.
  bool saw_four = false, saw_two = false;
  for (const MonodromyGraph& g : covers) {
    CHECK(g.levels() == 2);
    CHECK(g.left_profile() == Partition({5}));
    CHECK(g.right_profile() == Partition({3, 1, 1}));
    if (interior_weights(g) == std::vector<int>{4}) {
      saw_four = true;
      CHECK(g.wieners_and_forks().empty());
      CHECK(g.automorphism_count() == 1);
    }
    if (interior_weights(g) == std::vector<int>{2}) {
      saw_two = true;
      REQUIRE(g.balanced_forks().size() == 1);
      CHECK(g.wieners().empty());
      CHECK(g.automorphism_count() == 2);
      CHECK(g.edge(g.balanced_forks()[0].edge_a).weight == 1);
    }
  }
  CHECK(saw_four);
  CHECK(saw_two);
}

TEST_CASE("degenerate bare cover") {
  for (int d = 1; d <= 6; d++) {
    const auto covers = enumerate_covers(0, Partition({d}), Partition({d}));
    REQUIRE(covers.size() == 1);
    CHECK(covers[0].levels() == 0);
    CHECK(covers[0].automorphism_count() == 1);
    CHECK(covers[0].first_betti_number() == 0);
  }
  CHECK(enumerate_covers(0, Partition({5}), Partition({5}))[0].canonical_encoding() ==
        "d5g0r0:;0,0,1,5");
  CHECK(enumerate_covers(0, Partition({1}), Partition({1})).size() == 1);
}

TEST_CASE("wiener cover: lambda=(2), nu=(2), genus 1") {
  const auto covers = enumerate_covers(1, Partition({2}), Partition({2}));
  REQUIRE(covers.size() == 1);
  const MonodromyGraph& g = covers[0];
  REQUIRE(g.wieners().size() == 1);
  CHECK(g.edge(g.wieners()[0].edge_a).weight == 1);
  CHECK(g.automorphism_count() == 2);
  CHECK(g.first_betti_number() == 1);
  CHECK(complex_tropical_double_hurwitz(1, Partition({2}), Partition({2})) == Rational(1, 2));
}

TEST_CASE("canonical encoding ignores input edge order") {
  std::vector<GraphEdge> edges = {
      {0, 5, 0, 1, EdgeRole::left_end},   {0, 3, 1, 3, EdgeRole::right_end},
      {0, 2, 1, 2, EdgeRole::interior},   {0, 1, 2, 3, EdgeRole::right_end},
      {0, 1, 2, 3, EdgeRole::right_end},
  };
  MonodromyGraph a(5, 0, {VertexKind::cut, VertexKind::cut}, edges);
  std::reverse(edges.begin(), edges.end());
  MonodromyGraph b(5, 0, {VertexKind::cut, VertexKind::cut}, edges);
  CHECK(a.canonical_encoding() == b.canonical_encoding());
}

TEST_CASE("disconnected sweeps are rejected") {
  // (2,1) -> (2,1) at genus 0 has r = 2; a weight-1 line passing both levels
  // disconnected from the rest must not be produced.
  for (const MonodromyGraph& g : enumerate_covers(0, Partition({2, 1}), Partition({2, 1}))) {
    for (const GraphEdge& e : g.edges())
      CHECK_FALSE((e.from_level == 0 && e.to_level == g.levels() + 1));
  }
  CHECK(complex_tropical_double_hurwitz(0, Partition({2, 1}), Partition({2, 1})) == 4);
}

TEST_CASE("structural invariants on a sweep") {
  for (int d = 1; d <= 6; d++) {
    const auto parts = enumerate_partitions(d);
    for (const Partition& lam : parts) {
      for (const Partition& nu : parts) {
        for (int g = 0;; g++) {
          const int r = 2 * g - 2 + lam.length() + nu.length();
          if (r > 5) break;
          if (r < 0) continue;
          std::set<std::string> encodings;
          for (const MonodromyGraph& cover : enumerate_covers(g, lam, nu)) {
            CHECK(cover.balanced_at_every_vertex());
            CHECK(cover.constant_level_degree());
            CHECK(cover.first_betti_number() == g);
            CHECK(cover.left_profile() == lam);
            CHECK(cover.right_profile() == nu);
            CHECK(encodings.insert(cover.canonical_encoding()).second);
          }
        }
      }
    }
  }
}

TEST_CASE("tropical count: enumeration, memoized sweep and oracle agree") {
  CHECK(complex_tropical_double_hurwitz(0, Partition({5}), Partition({3, 1, 1})) == 5);
  CHECK(complex_tropical_by_enumeration(0, Partition({5}), Partition({3, 1, 1})) == 5);
  CHECK(complex_tropical_double_hurwitz(0, Partition({1}), Partition({1})) == 1);
  for (int d = 1; d <= 6; d++)
    CHECK(complex_tropical_double_hurwitz(0, Partition({d}), Partition({d})) ==
          Rational(1, d));

  for (int d = 1; d <= 5; d++) {
    const auto parts = enumerate_partitions(d);
    for (const Partition& lam : parts) {
      for (const Partition& nu : parts) {
        for (int g = 0;; g++) {
          const int r = 2 * g - 2 + lam.length() + nu.length();
          if (r > 5) break;
          if (r < 0) continue;
          const Rational by_dp = complex_tropical_double_hurwitz(g, lam, nu);
          CHECK(by_dp == complex_tropical_by_enumeration(g, lam, nu));
          CHECK(by_dp == complex_double_hurwitz_oracle(g, lam, nu));
        }
      }
    }
  }
}

TEST_CASE("one-part closed forms") {
  // For lambda = (d) and genus 0 the count has a classical closed form:
  // r! * d^(r-1) / |Aut(nu)| with r = l(nu) - 1.
  for (int d = 2; d <= 7; d++) {
    for (const Partition& nu : enumerate_partitions(d)) {
      const int r = nu.length() - 1;
      if (r < 1) continue;
      BigInt numerator = factorial(static_cast<unsigned>(r));
      for (int i = 0; i < r - 1; i++) numerator *= d;
      CHECK(complex_tropical_double_hurwitz(0, Partition({d}), nu) ==
            Rational(numerator) / Rational(aut_count(nu)));
    }
  }
  // Diagonal genus 1: d (d^2 - 1) / 12.
  for (int d = 2; d <= 8; d++) {
    Rational expected(BigInt(d) * (BigInt(d) * d - 1), 12);
    expected.canonicalize();
    CHECK(complex_tropical_double_hurwitz(1, Partition({d}), Partition({d})) == expected);
  }
}

TEST_CASE("json and dot emission") {
  const auto covers = enumerate_covers(0, Partition({5}), Partition({3, 1, 1}));
  const nlohmann::json j = covers[0].to_json();
  CHECK(j["d"] == 5);
  CHECK(j["g"] == 0);
  CHECK(j["levels"] == 2);
  CHECK(j["edges"].size() == covers[0].edges().size());
  CHECK(j["vertices"].size() == 2);
  for (const auto& e : j["edges"]) {
    CHECK(e.contains("id"));
    CHECK(e.contains("weight"));
    CHECK(e.contains("from_level"));
    CHECK(e.contains("to_level"));
    CHECK(e.contains("role"));
  }
  CHECK(covers[0].to_dot().find("digraph") == 0);
  CHECK(covers[0].to_dot().find("rankdir=LR") != std::string::npos);
}
