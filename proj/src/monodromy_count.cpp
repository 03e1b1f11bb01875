#include <algorithm>
#include <array>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "hurwitz/monodromy.hpp"

namespace hurwitz {
namespace {

// Open-edge state for the counting-only sweep. The count kept is the
// lambda-marked one (ends over -infinity distinguishable); dividing by
// |Aut(lambda)| at the end recovers the isomorphism-class sum. Elements:
//   kLambda  an unconsumed lambda end;  consuming it contributes factor 1
//   kSingle  an internal open edge;     consuming it contributes its weight
//   kTwin    the two equal halves of one cut, still both open; joining the
//            pair makes a wiener (factor w^2 / 2), and a pair surviving to
//            the right boundary is a balanced fork (factor 1/2)
// Elements are grouped into connected components so the final sweep keeps
// only connected covers. Twins always share a component, so a component is
// just a multiset of elements and states compare canonically after sorting.
enum Kind : int { kLambda = 0, kSingle = 1, kTwin = 2 };

using Element = std::array<int, 2>;  // {kind, weight}
using Component = std::vector<Element>;
using State = std::vector<Component>;

State canonical(State s) {
  for (Component& c : s) std::sort(c.begin(), c.end());
  std::sort(s.begin(), s.end());
  return s;
}

std::string key_of(int level, const State& s) {
  std::ostringstream os;
  os << level;
  for (const Component& c : s) {
    os << "|";
    for (const Element& e : c) os << e[0] << "." << e[1] << ",";
  }
  return os.str();
}

int open_edge_count(const State& s) {
  int n = 0;
  for (const Component& c : s)
    for (const Element& e : c) n += (e[0] == kTwin) ? 2 : 1;
  return n;
}

struct Counter {
  int r = 0;
  std::vector<int> nu_sorted;  // decreasing
  std::map<std::string, Rational> memo;

  Rational final_value(const State& s) {
    if (s.size() != 1) return Rational(0);
    std::vector<int> weights;
    int twins = 0;
    for (const Element& e : s[0]) {
      if (e[0] == kLambda) return Rational(0);
      weights.push_back(e[1]);
      if (e[0] == kTwin) {
        weights.push_back(e[1]);
        twins++;
      }
    }
    std::sort(weights.begin(), weights.end(), std::greater<int>());
    if (weights != nu_sorted) return Rational(0);
    return pow2_rational(-twins);
  }

  Rational count(int level, const State& s) {
    if (level > r) return final_value(s);
    {
      // Parity/distance pruning against the target end count.
      int diff = static_cast<int>(nu_sorted.size()) - open_edge_count(s);
      int rem = r - level + 1;
      if (diff < 0) diff = -diff;
      if (diff > rem) return Rational(0);
    }
    const std::string key = key_of(level, s);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    Rational total(0);

    // Cuts and twin self-joins: one open edge (or twin pair) per position.
    for (size_t ci = 0; ci < s.size(); ci++) {
      for (size_t ei = 0; ei < s[ci].size(); ei++) {
        const Element e = s[ci][ei];
        const int w = e[1];
        if (e[0] == kTwin) {
          // Join the pair into a wiener.
          State next = s;
          next[ci].erase(next[ci].begin() + static_cast<long>(ei));
          next[ci].push_back({kSingle, 2 * w});
          Rational wiener_factor(BigInt(w) * w, 2);
          wiener_factor.canonicalize();
          total += wiener_factor * count(level + 1, canonical(std::move(next)));
        }
        const Rational cut_factor = (e[0] == kLambda) ? Rational(1) : Rational(w);
        for (int a = 1; 2 * a <= w; a++) {
          State next = s;
          next[ci].erase(next[ci].begin() + static_cast<long>(ei));
          if (2 * a == w) {
            next[ci].push_back({kTwin, a});
          } else {
            next[ci].push_back({kSingle, a});
            next[ci].push_back({kSingle, w - a});
          }
          if (e[0] == kTwin) next[ci].push_back({kSingle, w});  // partner survives
          total += cut_factor * count(level + 1, canonical(std::move(next)));
        }
      }
    }

    // Joins of two distinct open edges, by position pair.
    auto join_factor = [](const Element& e) {
      return e[0] == kLambda ? Rational(1) : Rational(e[1]);
    };
    for (size_t ci = 0; ci < s.size(); ci++) {
      for (size_t ei = 0; ei < s[ci].size(); ei++) {
        for (size_t cj = ci; cj < s.size(); cj++) {
          for (size_t ej = (cj == ci ? ei + 1 : 0); ej < s[cj].size(); ej++) {
            const Element e1 = s[ci][ei];
            const Element e2 = s[cj][ej];
            State next = s;
            // Remove in descending position order to keep indices valid.
            if (cj == ci) {
              next[ci].erase(next[ci].begin() + static_cast<long>(ej));
              next[ci].erase(next[ci].begin() + static_cast<long>(ei));
            } else {
              next[cj].erase(next[cj].begin() + static_cast<long>(ej));
              next[ci].erase(next[ci].begin() + static_cast<long>(ei));
            }
            if (e1[0] == kTwin) next[ci].push_back({kSingle, e1[1]});
            if (e2[0] == kTwin) next[cj].push_back({kSingle, e2[1]});
            if (cj != ci) {
              // Merge components.
              next[ci].insert(next[ci].end(), next[cj].begin(), next[cj].end());
              next.erase(next.begin() + static_cast<long>(cj));
            }
            next[ci].push_back({kSingle, e1[1] + e2[1]});
            total += join_factor(e1) * join_factor(e2) *
                     count(level + 1, canonical(std::move(next)));
          }
        }
      }
    }

    memo.emplace(key, total);
    return total;
  }
};

}  // namespace

Rational complex_tropical_double_hurwitz(int g, const Partition& lambda,
                                         const Partition& nu) {
  if (lambda.degree() != nu.degree())
    throw std::invalid_argument("profiles of different degrees");
  if (g < 0) throw std::invalid_argument("negative genus");
  const int r = 2 * g - 2 + lambda.length() + nu.length();
  if (r < 0) return Rational(0);
  if (r == 0) return Rational(1, lambda.degree());

  Counter counter;
  counter.r = r;
  counter.nu_sorted = nu.parts();

  State initial;
  for (int w : lambda.parts()) initial.push_back(Component{{kLambda, w}});
  Rational marked = counter.count(1, canonical(std::move(initial)));
  return marked / Rational(aut_count(lambda));
}

}  // namespace hurwitz
