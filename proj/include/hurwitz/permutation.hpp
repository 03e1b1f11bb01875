#pragma once

#include <span>
#include <vector>

#include "hurwitz/partition.hpp"

namespace hurwitz {

/// A permutation of {0, ..., d-1}.
class Perm {
 public:
  explicit Perm(std::vector<int> images);
  static Perm identity(int d);

  /// Builds from 1-based disjoint cycles, e.g. {{1,2},{3,4,5}} on degree d.
  static Perm from_cycles(int d, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<size_t>(i)]; }
  const std::vector<int>& images() const { return images_; }

  /// Composition in application order: (a.then(b))(x) = b(a(x)).
  Perm then(const Perm& next) const;
  Perm inverse() const;
  bool is_identity() const;

  friend bool operator==(const Perm&, const Perm&) = default;

 private:
  std::vector<int> images_;
};

/// Cycle lengths as a canonical partition of the degree.
Partition cycle_type(const Perm& sigma);

/// True iff the group generated by the permutations acts transitively on
/// {0, ..., d-1}. Orbit of 0 computed by BFS.
bool is_transitive(std::span<const Perm> perms, int d);

/// Canonical class representative: cycles filled left to right,
/// e.g. (3,2) -> (0 1 2)(3 4).
Perm class_representative(const Partition& type);

/// Every permutation of the given cycle type.
std::vector<Perm> conjugacy_class(const Partition& type);

/// d! / prod(k^{m_k} m_k!).
BigInt conjugacy_class_size(const Partition& type);

}  // namespace hurwitz
