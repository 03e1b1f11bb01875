#pragma once

#include <string>

#include "hurwitz/local_rules.hpp"

namespace hurwitz {

struct CheckOptions {
  int sweep_degree = 5;   // oracle-equality sweep goes up to this degree
  int bridge_degree = 5;  // multiplicity-bridge sweep ceiling
  int max_r = 6;          // simple-branch-point ceiling for the sweeps
  int bridge_max_r = 4;
  int threads = 1;
};

struct CheckReport {
  bool ok = true;
  std::string text;  // deterministic: contains no timings or machine state
};

/// Runs the cross-validation suite against the given rule table: pinned
/// reference values, oracle-vs-tropical equality, the expand/shrink
/// multiplicity bridge, marked/unmarked consistency, structural graph
/// invariants and the local closed-form identities.
CheckReport run_self_checks(const LocalRuleTable& table, const CheckOptions& opts);

}  // namespace hurwitz
