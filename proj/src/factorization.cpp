#include "hurwitz/factorization.hpp"

#include <algorithm>
#include <cstdint>
#include <future>
#include <stdexcept>
#include <vector>

#include "hurwitz/permutation.hpp"

namespace hurwitz {
namespace {

constexpr int kHardDegreeCap = 12;

// Flat fixed-size permutation for the search hot path.
struct SPerm {
  uint8_t img[kHardDegreeCap];
};

SPerm to_sperm(const Perm& p) {
  SPerm s{};
  for (int i = 0; i < p.degree(); i++) s.img[i] = static_cast<uint8_t>(p(i));
  return s;
}

// Application order: first a, then b.
inline SPerm compose(const SPerm& a, const SPerm& b, int d) {
  SPerm r{};
  for (int i = 0; i < d; i++) r.img[i] = b.img[a.img[i]];
  return r;
}

inline SPerm inverse(const SPerm& a, int d) {
  SPerm r{};
  for (int i = 0; i < d; i++) r.img[a.img[i]] = static_cast<uint8_t>(i);
  return r;
}

// Cycle type of p, compared against parts sorted decreasingly.
bool type_matches(const SPerm& p, int d, const std::vector<uint8_t>& target) {
  uint8_t lengths[kHardDegreeCap];
  int count = 0;
  bool seen[kHardDegreeCap] = {};
  for (int i = 0; i < d; i++) {
    if (seen[i]) continue;
    int len = 0, j = i;
    do {
      seen[j] = true;
      j = p.img[j];
      len++;
    } while (j != i);
    lengths[count++] = static_cast<uint8_t>(len);
  }
  if (count != static_cast<int>(target.size())) return false;
  std::sort(lengths, lengths + count, std::greater<uint8_t>());
  for (int i = 0; i < count; i++)
    if (lengths[i] != target[static_cast<size_t>(i)]) return false;
  return true;
}

bool transitive(const std::vector<const SPerm*>& gens, int d) {
  if (d <= 1) return true;
  bool reached[kHardDegreeCap] = {};
  uint8_t stack[kHardDegreeCap];
  int top = 0, count = 1;
  reached[0] = true;
  stack[top++] = 0;
  while (top > 0) {
    int x = stack[--top];
    for (const SPerm* g : gens) {
      int y = g->img[x];
      if (!reached[y]) {
        reached[y] = true;
        stack[top++] = static_cast<uint8_t>(y);
        if (++count == d) return true;
      }
    }
  }
  return false;
}

struct Search {
  int d = 0;
  std::vector<std::vector<SPerm>> free_classes;  // one per free slot
  SPerm first;                                   // fixed class representative
  std::vector<uint8_t> last_type;                // forced factor's target type

  // Tuple layout: first, free..., last(forced). `chosen` holds the free picks.
  uint64_t dfs(int slot, const SPerm& prefix,
               std::vector<const SPerm*>& chosen) const {
    if (slot == static_cast<int>(free_classes.size())) {
      SPerm forced = inverse(prefix, d);
      if (!type_matches(forced, d, last_type)) return 0;
      std::vector<const SPerm*> gens;
      gens.reserve(chosen.size() + 2);
      gens.push_back(&first);
      for (const SPerm* c : chosen) gens.push_back(c);
      gens.push_back(&forced);
      return transitive(gens, d) ? 1 : 0;
    }
    uint64_t total = 0;
    for (const SPerm& cand : free_classes[static_cast<size_t>(slot)]) {
      chosen.push_back(&cand);
      total += dfs(slot + 1, compose(prefix, cand, d), chosen);
      chosen.pop_back();
    }
    return total;
  }
};

}  // namespace

FactorizationCount count_factorizations(const ProfileTuple& mu,
                                        const OracleOptions& opts) {
  const int d = mu.degree();
  if (d > opts.max_degree)
    throw DegreeCeilingExceeded("degree " + std::to_string(d) +
                                " exceeds the configured ceiling " +
                                std::to_string(opts.max_degree));
  if (d > kHardDegreeCap)
    throw DegreeCeilingExceeded("degree beyond the compiled-in cap");

  const int n = mu.size();
  if (n == 1) {
    // A single factor must itself be the identity and act transitively.
    bool ok = (mu[0] == Partition(std::vector<int>(static_cast<size_t>(d), 1))) && d == 1;
    return FactorizationCount{ok ? BigInt(1) : BigInt(0), d};
  }

  // Fixing the first factor as a class representative costs a factor of
  // |class|; forcing the last as the inverse of the partial product removes
  // another full class from the search. Pick the two largest classes for
  // those roles.
  std::vector<BigInt> sizes(static_cast<size_t>(n));
  for (int i = 0; i < n; i++) sizes[static_cast<size_t>(i)] = conjugacy_class_size(mu[i]);
  int i_first = 0;
  for (int i = 1; i < n; i++)
    if (sizes[static_cast<size_t>(i)] > sizes[static_cast<size_t>(i_first)]) i_first = i;
  int i_last = -1;
  for (int i = 0; i < n; i++) {
    if (i == i_first) continue;
    if (i_last < 0 || sizes[static_cast<size_t>(i)] > sizes[static_cast<size_t>(i_last)]) i_last = i;
  }

  Search search;
  search.d = d;
  search.first = to_sperm(class_representative(mu[i_first]));
  for (int p : mu[i_last].parts())
    search.last_type.push_back(static_cast<uint8_t>(p));

  std::vector<int> free_slots;
  for (int i = 0; i < n; i++)
    if (i != i_first && i != i_last) free_slots.push_back(i);
  for (int i : free_slots) {
    std::vector<SPerm> cls;
    for (const Perm& p : conjugacy_class(mu[i])) cls.push_back(to_sperm(p));
    search.free_classes.push_back(std::move(cls));
  }

  BigInt leaves = 0;
  const int threads = std::max(1, opts.threads);
  if (search.free_classes.empty() || threads == 1) {
    std::vector<const SPerm*> chosen;
    leaves = static_cast<unsigned long>(search.dfs(0, search.first, chosen));
  } else {
    // Split the first free class across workers; per-chunk counts add up
    // independently of scheduling, so the result is worker-count invariant.
    const auto& top = search.free_classes[0];
    size_t chunk = (top.size() + static_cast<size_t>(threads) - 1) / static_cast<size_t>(threads);
    std::vector<std::future<uint64_t>> futures;
    for (size_t begin = 0; begin < top.size(); begin += chunk) {
      size_t end = std::min(top.size(), begin + chunk);
      futures.push_back(std::async(std::launch::async, [&search, begin, end]() {
        uint64_t total = 0;
        std::vector<const SPerm*> chosen;
        for (size_t i = begin; i < end; i++) {
          chosen.push_back(&search.free_classes[0][i]);
          total += search.dfs(1, compose(search.first, search.free_classes[0][i], search.d),
                              chosen);
          chosen.pop_back();
        }
        return total;
      }));
    }
    for (auto& f : futures) leaves += static_cast<unsigned long>(f.get());
  }

  return FactorizationCount{sizes[static_cast<size_t>(i_first)] * leaves, d};
}

bool riemann_hurwitz_consistent(int g, const ProfileTuple& mu) {
  if (g < 0) return false;
  long defect = 0;  // sum of (d - l(mu_i))
  for (const Partition& p : mu.profiles()) defect += mu.degree() - p.length();
  return defect == 2L * mu.degree() - 2 + 2L * g;
}

Rational complex_hurwitz_sphere(int g, const ProfileTuple& mu,
                                const OracleOptions& opts, bool* vanishing) {
  if (vanishing) *vanishing = false;
  if (!riemann_hurwitz_consistent(g, mu)) {
    if (vanishing) *vanishing = true;
    return Rational(0);
  }
  return count_factorizations(mu, opts).value();
}

int simple_branch_count(int g, const Partition& lambda, const Partition& nu) {
  return 2 * g - 2 + lambda.length() + nu.length();
}

Rational complex_double_hurwitz_oracle(int g, const Partition& lambda,
                                       const Partition& nu,
                                       const OracleOptions& opts,
                                       bool* vanishing) {
  if (lambda.degree() != nu.degree())
    throw std::invalid_argument("double Hurwitz: profiles of different degrees");
  if (vanishing) *vanishing = false;
  const int r = simple_branch_count(g, lambda, nu);
  const int d = lambda.degree();
  if (r < 0 || (r > 0 && d < 2)) {
    if (vanishing) *vanishing = true;
    return Rational(0);
  }
  std::vector<Partition> profiles = {lambda, nu};
  if (r > 0) {
    std::vector<int> simple = {2};
    for (int i = 0; i < d - 2; i++) simple.push_back(1);
    for (int i = 0; i < r; i++) profiles.push_back(Partition(simple));
  }
  return complex_hurwitz_sphere(g, ProfileTuple(std::move(profiles)), opts, vanishing);
}

}  // namespace hurwitz
