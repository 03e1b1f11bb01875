#include <random>

#include "doctest.h"
#include "hurwitz/factorization.hpp"

using namespace hurwitz;

namespace {

Partition ones(int d) { return Partition(std::vector<int>(static_cast<size_t>(d), 1)); }

}  // namespace

TEST_CASE("triple Hurwitz pin: ((d),(d),(1,...,1)) counts 1/d") {
  for (int d = 2; d <= 6; d++) {
    ProfileTuple mu({Partition({d}), Partition({d}), ones(d)});
    CHECK(complex_hurwitz_sphere(0, mu) == Rational(1, d));
  }
}

TEST_CASE("double Hurwitz oracle pins") {
  // r = 0: the (d-1)! d-cycles pair with their inverses, weighted by 1/d!.
  for (int d = 1; d <= 6; d++)
    CHECK(complex_double_hurwitz_oracle(0, Partition({d}), Partition({d})) == Rational(1, d));
  CHECK(complex_double_hurwitz_oracle(0, Partition({5}), Partition({3, 1, 1})) == 5);
  CHECK(complex_double_hurwitz_oracle(0, Partition({1}), Partition({1})) == 1);
  CHECK_THROWS_AS(complex_double_hurwitz_oracle(0, Partition({2}), Partition({3})),
                  std::invalid_argument);

  // r < 0 only happens for negative genus input; the count vanishes.
  bool vanishing = false;
  CHECK(complex_double_hurwitz_oracle(-1, Partition({1}), Partition({1}), {}, &vanishing) == 0);
  CHECK(vanishing);
  CHECK(complex_double_hurwitz_oracle(0, Partition({1, 1, 1}), Partition({3})) == 1);
}

TEST_CASE("trivial covers") {
  CHECK(complex_hurwitz_sphere(0, ProfileTuple({Partition({1})})) == 1);
  CHECK(count_factorizations(ProfileTuple({Partition({1})})).raw_count == 1);
}

TEST_CASE("degree ceiling is a hard error") {
  ProfileTuple mu({Partition({8}), Partition({8})});
  CHECK_THROWS_AS(count_factorizations(mu), DegreeCeilingExceeded);
  OracleOptions raised{8, 1};
  CHECK(complex_hurwitz_sphere(0, mu, raised) == Rational(1, 8));
}

TEST_CASE("reordering the profile tuple never changes the count") {
  std::mt19937 rng(20240601);
  for (int d = 2; d <= 5; d++) {
    const auto parts = enumerate_partitions(d);
    for (int trial = 0; trial < 6; trial++) {
      std::vector<Partition> profiles;
      const int n = 3 + static_cast<int>(rng() % 2);
      for (int i = 0; i < n; i++)
        profiles.push_back(parts[rng() % parts.size()]);
      const Rational reference =
          count_factorizations(ProfileTuple(profiles)).value();
      for (int shuffle = 0; shuffle < 4; shuffle++) {
        std::shuffle(profiles.begin(), profiles.end(), rng);
        CHECK(count_factorizations(ProfileTuple(profiles)).value() == reference);
      }
    }
  }
}

TEST_CASE("Riemann-Hurwitz failure means zero, consistency means the raw count") {
  for (int d = 2; d <= 4; d++) {
    const auto parts = enumerate_partitions(d);
    std::vector<std::vector<Partition>> tuples;
    for (const Partition& a : parts)
      for (const Partition& b : parts) {
        tuples.push_back({a, b});
        for (const Partition& c : parts) tuples.push_back({a, b, c});
      }
    for (const auto& profiles : tuples) {
      ProfileTuple mu(profiles);
      long defect = 0;
      for (const Partition& p : profiles) defect += d - p.length();
      if (defect % 2 != 0) {
        // Odd total defect: no orientable cover at all, the search agrees.
        CHECK(count_factorizations(mu).raw_count == 0);
      }
      for (int g = 0; g <= 2; g++) {
        bool vanishing = false;
        const Rational v = complex_hurwitz_sphere(g, mu, {}, &vanishing);
        if (riemann_hurwitz_consistent(g, mu)) {
          CHECK(v == count_factorizations(mu).value());
        } else {
          CHECK(vanishing);
          CHECK(v == 0);
        }
      }
    }
  }
}

TEST_CASE("worker count does not change the count") {
  ProfileTuple mu({Partition({3, 2}), Partition({2, 2, 1}), Partition({2, 1, 1, 1}),
                   Partition({2, 1, 1, 1})});
  const BigInt serial = count_factorizations(mu, OracleOptions{7, 1}).raw_count;
  CHECK(count_factorizations(mu, OracleOptions{7, 4}).raw_count == serial);
}
