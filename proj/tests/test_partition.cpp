#include <set>

#include "doctest.h"
#include "hurwitz/partition.hpp"

using namespace hurwitz;

namespace {

// Independent oracle: weakly decreasing positive sequences summing to d,
// generated by a different recursion than the library's.
void brute_partitions(int rest, int max_part, std::vector<int>& cur,
                      std::vector<std::vector<int>>& out) {
  if (rest == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = 1; p <= std::min(rest, max_part); p++) {
    cur.push_back(p);
    brute_partitions(rest - p, p, cur, out);
    cur.pop_back();
  }
}

size_t brute_count(int d) {
  std::vector<int> cur;
  std::vector<std::vector<int>> out;
  brute_partitions(d, d, cur, out);
  return out.size();
}

}  // namespace

TEST_CASE("partition normalization and validation") {
  CHECK(Partition({1, 3, 1}).parts() == std::vector<int>{3, 1, 1});
  CHECK(Partition({5}).degree() == 5);
  CHECK(Partition({3, 1, 1}).length() == 3);
  CHECK(Partition::parse("1,3,1") == Partition({3, 1, 1}));
  CHECK_THROWS_AS(Partition({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Partition(std::vector<int>{}), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("3,x"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse(""), std::invalid_argument);
}

TEST_CASE("enumerate_partitions counts, order and uniqueness") {
  CHECK_THROWS_AS(enumerate_partitions(0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_partitions(-3), std::invalid_argument);

  CHECK(enumerate_partitions(1) == std::vector<Partition>{Partition({1})});
  CHECK(enumerate_partitions(4).size() == 5);
  CHECK(enumerate_partitions(6).size() == 11);

  for (int d = 1; d <= 12; d++) {
    const auto all = enumerate_partitions(d);
    CHECK(all.size() == brute_count(d));
    std::set<Partition> seen;
    for (const Partition& p : all) {
      CHECK(p.degree() == d);
      CHECK(seen.insert(p).second);
    }
    // Lexicographically decreasing canonical order.
    for (size_t i = 0; i + 1 < all.size(); i++)
      CHECK(all[i].parts() > all[i + 1].parts());
    CHECK(all.front() == Partition({d}));
  }
}

TEST_CASE("aut_count of single profiles") {
  CHECK(aut_count(Partition({3, 1, 1})) == 2);
  CHECK(aut_count(Partition({1, 1, 1, 1})) == 24);
  CHECK(aut_count(Partition({2, 1, 1})) == 2);
  CHECK(aut_count(Partition({5})) == 1);

  // |Aut(mu)| divides l(mu)! (it is a Young subgroup order).
  for (int d = 1; d <= 10; d++)
    for (const Partition& p : enumerate_partitions(d))
      CHECK(factorial(static_cast<unsigned>(p.length())) % aut_count(p) == 0);
}

TEST_CASE("profile tuples") {
  ProfileTuple t({Partition({5}), Partition({3, 1, 1})});
  CHECK(aut_count(t) == 2);
  ProfileTuple big({Partition({5}), Partition({3, 1, 1}), Partition({2, 1, 1, 1}),
                    Partition({2, 1, 1, 1})});
  CHECK(aut_count(big) == 72);
  CHECK(aut_count(ProfileTuple({Partition({1}), Partition({1})})) == 1);
  CHECK_THROWS_AS(ProfileTuple({Partition({2}), Partition({3})}), std::invalid_argument);
}
