#include "hurwitz/checks.hpp"

#include <set>
#include <sstream>

#include "hurwitz/factorization.hpp"
#include "hurwitz/local_hurwitz.hpp"
#include "hurwitz/monodromy.hpp"
#include "hurwitz/signed_cover.hpp"

namespace hurwitz {
namespace {

struct Reporter {
  std::ostringstream out;
  bool ok = true;

  void line(bool passed, const std::string& what) {
    out << (passed ? "check " : "FAIL ") << what << "\n";
    if (!passed) ok = false;
  }
};

std::vector<SignVector> all_sign_vectors(int r) {
  std::vector<SignVector> out;
  for (unsigned mask = 0; mask < (1u << r); mask++) {
    SignVector s;
    for (int i = 0; i < r; i++)
      s.push_back(mask & (1u << i) ? Sign::minus : Sign::plus);
    out.push_back(std::move(s));
  }
  return out;
}

void pinned_examples(const LocalRuleTable& table, Reporter& rep) {
  const Partition lam({5}), nu({3, 1, 1});
  const Rational pp = real_tropical_double_hurwitz(0, lam, nu, parse_signs("++"), table);
  const Rational mp = real_tropical_double_hurwitz(0, lam, nu, parse_signs("-+"), table);
  rep.line(pp == 1 && mp == 3,
           "pinned signed counts: (5),(3,1,1) -> ++: " + format_rational(pp) +
               " (want 1), -+: " + format_rational(mp) + " (want 3)");
}

void triple_pins(int max_d, const OracleOptions& oracle, Reporter& rep) {
  bool all = true;
  std::string detail;
  for (int d = 2; d <= max_d; d++) {
    std::vector<int> ones(static_cast<size_t>(d), 1);
    ProfileTuple mu({Partition({d}), Partition({d}), Partition(ones)});
    Rational v = complex_hurwitz_sphere(0, mu, oracle);
    if (v != Rational(1, d)) all = false;
    detail += " d=" + std::to_string(d) + ":" + format_rational(v);
  }
  rep.line(all, "triple counts ((d),(d),(1..1)) equal 1/d for d=2.." +
                    std::to_string(max_d) + ":" + detail);
}

// Every (g, lambda, nu) with the given ceilings; f gets (g, lambda, nu, r).
template <typename F>
void sweep_cases(int max_d, int max_r, F&& f) {
  for (int d = 1; d <= max_d; d++) {
    const std::vector<Partition> parts = enumerate_partitions(d);
    for (const Partition& lam : parts) {
      for (const Partition& nu : parts) {
        for (int g = 0;; g++) {
          const int r = 2 * g - 2 + lam.length() + nu.length();
          if (r > max_r) break;
          if (r < 0) continue;
          f(g, lam, nu, r);
        }
      }
    }
  }
}

void oracle_equivalence(const CheckOptions& opts, Reporter& rep) {
  OracleOptions oracle{std::max(7, opts.sweep_degree), opts.threads};
  long cases = 0, failures = 0;
  sweep_cases(opts.sweep_degree, opts.max_r, [&](int g, const Partition& lam,
                                                 const Partition& nu, int) {
    const Rational truth = complex_double_hurwitz_oracle(g, lam, nu, oracle);
    const Rational counted = complex_tropical_double_hurwitz(g, lam, nu);
    const Rational enumerated = complex_tropical_by_enumeration(g, lam, nu);
    cases++;
    if (truth != counted || truth != enumerated) failures++;
  });
  rep.line(failures == 0, "oracle equivalence: tropical == factorization count on " +
                              std::to_string(cases) + " cases (d <= " +
                              std::to_string(opts.sweep_degree) + ", r <= " +
                              std::to_string(opts.max_r) + ")");
}

void marked_relation(const CheckOptions& opts, Reporter& rep) {
  OracleOptions oracle{std::max(7, opts.sweep_degree), opts.threads};
  long cases = 0, failures = 0;
  sweep_cases(std::min(4, opts.sweep_degree), opts.max_r,
              [&](int g, const Partition& lam, const Partition& nu, int r) {
                const int d = lam.degree();
                if (r > 0 && d < 2) return;
                std::vector<Partition> profiles = {lam, nu};
                std::vector<int> simple = {2};
                for (int i = 0; i < d - 2; i++) simple.push_back(1);
                for (int i = 0; i < r; i++) profiles.push_back(Partition(simple));
                ProfileTuple mu(std::move(profiles));
                const Rational unmarked = complex_double_hurwitz_oracle(g, lam, nu, oracle);
                const Rational via_tropical =
                    marked_number(complex_tropical_double_hurwitz(g, lam, nu), mu);
                cases++;
                if (via_tropical != Rational(aut_count(mu)) * unmarked) failures++;
              });
  rep.line(failures == 0,
           "marked/unmarked relation holds across " + std::to_string(cases) + " cases");
}

void structural_invariants(const CheckOptions& opts, Reporter& rep) {
  long graphs = 0, failures = 0;
  sweep_cases(opts.sweep_degree, opts.max_r,
              [&](int g, const Partition& lam, const Partition& nu, int) {
                std::set<std::string> encodings;
                for (const MonodromyGraph& cover : enumerate_covers(g, lam, nu)) {
                  graphs++;
                  if (!cover.balanced_at_every_vertex() || !cover.constant_level_degree() ||
                      cover.first_betti_number() != g ||
                      cover.left_profile() != lam || cover.right_profile() != nu ||
                      !encodings.insert(cover.canonical_encoding()).second)
                    failures++;
                }
              });
  rep.line(failures == 0, "structural invariants on " + std::to_string(graphs) +
                              " enumerated covers (balance, level degree, betti, "
                              "canonical uniqueness)");
}

void multiplicity_bridge(const LocalRuleTable& table, const CheckOptions& opts,
                         Reporter& rep) {
  long covers = 0, failures = 0;
  sweep_cases(opts.bridge_degree, opts.bridge_max_r,
              [&](int g, const Partition& lam, const Partition& nu, int r) {
                for (const MonodromyGraph& cover : enumerate_covers(g, lam, nu)) {
                  for (const SignVector& s : all_sign_vectors(r)) {
                    for (const SignedCover& decorated : decorations(cover, s, table)) {
                      covers++;
                      const UnshrunkCover grown = expand(decorated, table);
                      if (general_multiplicity(grown, table) != multiplicity_signed(decorated))
                        failures++;
                      if (shrink(grown).canonical_encoding() != decorated.canonical_encoding())
                        failures++;
                    }
                  }
                }
              });
  rep.line(failures == 0, "multiplicity bridge: grown count equals signed count on " +
                              std::to_string(covers) + " decorated covers (d <= " +
                              std::to_string(opts.bridge_degree) + ", r <= " +
                              std::to_string(opts.bridge_max_r) + ", all sign vectors)");
}

void local_closed_forms(const CheckOptions& opts, Reporter& rep) {
  (void)opts;
  bool all = true;
  // Formula-vs-table identity: recompute 2^k k! by plain iteration.
  auto slow = [](int two, int fact) {
    BigInt v = 1;
    for (int i = 0; i < two; i++) v *= 2;
    for (int i = 2; i <= fact; i++) v *= i;
    return Rational(v);
  };
  for (int d = 1; d <= 10; d++) {
    if (d % 2 == 1) {
      if (local_h53(d, Case53::odd) != slow((d - 1) / 2, (d - 1) / 2)) all = false;
    } else {
      if (local_h53(d, Case53::even_arc) != slow(d / 2 - 1, d / 2)) all = false;
      if (local_h53(d, Case53::even_endpoints) != slow((d - 2) / 2, (d - 2) / 2)) all = false;
    }
    for (int a = 1; 2 * a <= d; a++) {
      const int b = d - a;
      if (d % 2 == 1) {
        if (local_h54(d, a, b, VertexFamily::lone_odd) != slow((d - 3) / 2, (d - 3) / 2))
          all = false;
      } else if (a % 2 == 1 && b % 2 == 1) {
        if (local_h54(d, a, b, VertexFamily::sides_odd) != slow((d - 2) / 2, (d - 2) / 2))
          all = false;
      } else if (a % 2 == 0 && b % 2 == 0) {
        if (local_h54(d, a, b, VertexFamily::all_even) != slow((d - 2) / 2, (d - 4) / 2))
          all = false;
      }
      if (a == b &&
          local_h54(d, a, b, VertexFamily::conjugated) != slow((d - 2) / 2, (d - 2) / 2))
        all = false;
    }
  }
  rep.line(all, "local closed forms match their formulas for d <= 10");

  // Weighted local covers over ((d),(d),(1,...,1)) sum to 1: one class of
  // weight 1 for odd d, two classes of weight 1/2 for even d.
  bool sums = true;
  for (int d = 1; d <= 8; d++) {
    Rational total(0);
    if (d % 2 == 1) {
      total = local_h53(d, Case53::odd) / Rational(alpha53(d, Case53::odd));
    } else {
      total = local_h53(d, Case53::even_arc) / Rational(alpha53(d, Case53::even_arc)) +
              local_h53(d, Case53::even_endpoints) /
                  Rational(alpha53(d, Case53::even_endpoints));
    }
    if (total != 1) sums = false;
  }
  rep.line(sums, "weighted local real covers sum to 1 for d <= 8");
}

void rule_table_shape(const LocalRuleTable& table, Reporter& rep) {
  // Every parity/conjugation pattern a balanced vertex can show must match
  // exactly one rule per branch sign; match() throws otherwise.
  bool all = true;
  std::string detail;
  try {
    for (Sign s : {Sign::plus, Sign::minus}) {
      for (int d = 2; d <= 9; d++) {
        for (int a = 1; 2 * a <= d; a++) {
          table.match(s, d, a, d - a, false);
          if (2 * a == d) table.match(s, d, a, a, true);
        }
      }
    }
  } catch (const RuleTableError& e) {
    all = false;
    detail = std::string(": ") + e.what();
  }
  rep.line(all, "rule table matches every balanced vertex pattern exactly once" + detail);
}

}  // namespace

CheckReport run_self_checks(const LocalRuleTable& table, const CheckOptions& opts) {
  Reporter rep;
  OracleOptions oracle{7, opts.threads};
  try {
    rule_table_shape(table, rep);
    pinned_examples(table, rep);
    triple_pins(std::min(6, std::max(2, opts.sweep_degree)), oracle, rep);
    local_closed_forms(opts, rep);
    structural_invariants(opts, rep);
    oracle_equivalence(opts, rep);
    marked_relation(opts, rep);
    multiplicity_bridge(table, opts, rep);
  } catch (const std::exception& e) {
    rep.line(false, std::string("unexpected error: ") + e.what());
  }
  rep.out << (rep.ok ? "all checks passed" : "CHECKS FAILED") << "\n";
  return CheckReport{rep.ok, rep.out.str()};
}

}  // namespace hurwitz
