#include "hurwitz/permutation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace hurwitz {

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= degree() || seen[static_cast<size_t>(v)])
      throw std::invalid_argument("perm: not a bijection");
    seen[static_cast<size_t>(v)] = true;
  }
}

Perm Perm::identity(int d) {
  std::vector<int> img(static_cast<size_t>(d));
  std::iota(img.begin(), img.end(), 0);
  return Perm(std::move(img));
}

Perm Perm::from_cycles(int d, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> img(static_cast<size_t>(d));
  std::iota(img.begin(), img.end(), 0);
  for (const auto& c : cycles) {
    for (size_t i = 0; i < c.size(); i++) {
      int from = c[i] - 1;
      int to = c[(i + 1) % c.size()] - 1;
      if (from < 0 || from >= d) throw std::invalid_argument("perm: cycle entry out of range");
      img[static_cast<size_t>(from)] = to;
    }
  }
  return Perm(std::move(img));
}

Perm Perm::then(const Perm& next) const {
  std::vector<int> img(images_.size());
  for (size_t i = 0; i < images_.size(); i++)
    img[i] = next.images_[static_cast<size_t>(images_[i])];
  return Perm(std::move(img));
}

Perm Perm::inverse() const {
  std::vector<int> img(images_.size());
  for (size_t i = 0; i < images_.size(); i++)
    img[static_cast<size_t>(images_[i])] = static_cast<int>(i);
  return Perm(std::move(img));
}

bool Perm::is_identity() const {
  for (size_t i = 0; i < images_.size(); i++)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

Partition cycle_type(const Perm& sigma) {
  int d = sigma.degree();
  std::vector<bool> seen(static_cast<size_t>(d), false);
  std::vector<int> lengths;
  for (int i = 0; i < d; i++) {
    if (seen[static_cast<size_t>(i)]) continue;
    int len = 0, j = i;
    do {
      seen[static_cast<size_t>(j)] = true;
      j = sigma(j);
      len++;
    } while (j != i);
    lengths.push_back(len);
  }
  return Partition(std::move(lengths));
}

bool is_transitive(std::span<const Perm> perms, int d) {
  if (d <= 1) return true;
  std::vector<bool> reached(static_cast<size_t>(d), false);
  std::vector<int> stack = {0};
  reached[0] = true;
  int count = 1;
  // Forward images suffice: each generator's functional graph is a disjoint
  // union of cycles, so forward reachability already closes under inverses.
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (const Perm& p : perms) {
      int y = p(x);
      if (!reached[static_cast<size_t>(y)]) {
        reached[static_cast<size_t>(y)] = true;
        stack.push_back(y);
        count++;
      }
    }
  }
  return count == d;
}

Perm class_representative(const Partition& type) {
  std::vector<std::vector<int>> cycles;
  int next = 1;
  for (int len : type.parts()) {
    std::vector<int> c(static_cast<size_t>(len));
    std::iota(c.begin(), c.end(), next);
    next += len;
    cycles.push_back(std::move(c));
  }
  return Perm::from_cycles(type.degree(), cycles);
}

std::vector<Perm> conjugacy_class(const Partition& type) {
  int d = type.degree();
  std::vector<int> img(static_cast<size_t>(d));
  std::iota(img.begin(), img.end(), 0);
  std::vector<Perm> out;
  do {
    Perm p{std::vector<int>(img)};
    if (cycle_type(p) == type) out.push_back(std::move(p));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

BigInt conjugacy_class_size(const Partition& type) {
  std::map<int, unsigned> mult;
  for (int p : type.parts()) mult[p]++;
  BigInt z = 1;
  for (const auto& [len, m] : mult) {
    for (unsigned i = 0; i < m; i++) z *= len;
    z *= factorial(m);
  }
  return factorial(static_cast<unsigned>(type.degree())) / z;
}

}  // namespace hurwitz
