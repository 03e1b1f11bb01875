#pragma once

#include <string>
#include <vector>

#include "hurwitz/rational.hpp"

namespace hurwitz {

/// A ramification profile: positive integer parts, stored weakly decreasing.
/// Value type with structural equality; the canonical (sorted) form is what
/// every other module relies on for hashing and deduplication.
class Partition {
 public:
  Partition() = default;  // empty sentinel; not a valid profile
  explicit Partition(std::vector<int> parts);

  /// Parses comma-separated parts in any order, e.g. "1,3,1" -> (3,1,1).
  static Partition parse(const std::string& csv);

  int degree() const { return degree_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  const std::vector<int>& parts() const { return parts_; }
  int part(int i) const { return parts_[static_cast<size_t>(i)]; }

  std::string to_string() const;  // "(3,1,1)"

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int degree_ = 0;
};

/// All partitions of d, each exactly once, in lexicographically decreasing
/// order: (d), (d-1,1), ..., (1,...,1). Throws std::invalid_argument for
/// d < 1.
std::vector<Partition> enumerate_partitions(int d);

/// |Aut(mu)| for a single profile: the product of factorials of the
/// part-value multiplicities.
BigInt aut_count(const Partition& mu);

/// An ordered list of profiles of one common degree.
class ProfileTuple {
 public:
  explicit ProfileTuple(std::vector<Partition> profiles);

  int degree() const { return degree_; }
  int size() const { return static_cast<int>(profiles_.size()); }
  const std::vector<Partition>& profiles() const { return profiles_; }
  const Partition& operator[](int i) const {
    return profiles_[static_cast<size_t>(i)];
  }

 private:
  std::vector<Partition> profiles_;
  int degree_ = 0;
};

BigInt aut_count(const ProfileTuple& mu);

}  // namespace hurwitz
