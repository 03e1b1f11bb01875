#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "hurwitz/checks.hpp"
#include "hurwitz/factorization.hpp"
#include "hurwitz/local_hurwitz.hpp"
#include "hurwitz/monodromy.hpp"
#include "hurwitz/result_cache.hpp"
#include "hurwitz/signed_cover.hpp"

namespace {

using namespace hurwitz;

// Exit codes: 0 ok, 1 failed check, 2 malformed input, 3 sign/r mismatch,
// 4 degree ceiling exceeded, 5 environment or internal error.
enum ExitCode {
  kOk = 0,
  kCheckFailed = 1,
  kMalformedInput = 2,
  kSignMismatch = 3,
  kCeilingExceeded = 4,
  kOtherError = 5
};

struct SignLengthError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int g = 0;
  std::string lambda_csv;
  std::string nu_csv;
  std::string signs;
  std::string format = "text";
  int max_degree = 7;
  int threads = 1;
  std::string cache_path;
  std::string rules_path;
};

std::string canonical_csv(const Partition& p) {
  std::string s;
  for (size_t i = 0; i < p.parts().size(); i++) {
    if (i) s += ",";
    s += std::to_string(p.parts()[i]);
  }
  return s;
}

nlohmann::json json_int(const BigInt& v) {
  if (v.fits_slong_p()) return nlohmann::json(v.get_si());
  return nlohmann::json(v.get_str());
}

nlohmann::json json_rational(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return {{"num", json_int(c.get_num())}, {"den", json_int(c.get_den())}};
}

LocalRuleTable load_rules(const Options& opt) {
  if (!opt.rules_path.empty()) return LocalRuleTable::load(opt.rules_path);
  return default_rule_table();
}

// Sign vectors of length r in lexicographic order with '+' before '-'.
std::vector<SignVector> lexicographic_sign_vectors(int r) {
  std::vector<SignVector> out;
  for (unsigned long mask = 0; mask < (1ul << r); mask++) {
    SignVector s;
    for (int i = r - 1; i >= 0; i--)
      s.push_back(mask & (1ul << i) ? Sign::minus : Sign::plus);
    out.push_back(std::move(s));
  }
  return out;
}

struct ScalarJob {
  std::string command;
  int g = 0;
  Partition lambda;
  Partition nu;
  std::string signs;  // empty unless command == "real"
};

Rational compute_scalar(const ScalarJob& job, const Options& opt,
                        const LocalRuleTable* table) {
  std::optional<ResultCache> cache;
  if (!opt.cache_path.empty()) cache.emplace(opt.cache_path);
  const std::string key = cache_key(job.command, job.g, canonical_csv(job.lambda),
                                    canonical_csv(job.nu), job.signs);
  if (cache)
    if (auto hit = cache->lookup(key)) return *hit;

  Rational value;
  if (job.command == "complex") {
    if (job.lambda.degree() > opt.max_degree)
      throw DegreeCeilingExceeded("degree exceeds the configured ceiling");
    value = complex_tropical_double_hurwitz(job.g, job.lambda, job.nu);
  } else if (job.command == "oracle") {
    value = complex_double_hurwitz_oracle(job.g, job.lambda, job.nu,
                                          OracleOptions{opt.max_degree, opt.threads});
  } else {
    if (job.lambda.degree() > opt.max_degree)
      throw DegreeCeilingExceeded("degree exceeds the configured ceiling");
    value = real_tropical_double_hurwitz(job.g, job.lambda, job.nu,
                                         parse_signs(job.signs), *table);
  }
  if (cache) cache->store(key, value);
  return value;
}

void emit_scalar(const ScalarJob& job, const Rational& value, const Options& opt) {
  if (opt.format == "json") {
    nlohmann::json j{{"command", job.command},
                     {"g", job.g},
                     {"lambda", job.lambda.parts()},
                     {"nu", job.nu.parts()},
                     {"value", json_rational(value)}};
    if (!job.signs.empty()) j["signs"] = job.signs;
    std::cout << j.dump() << "\n";
  } else if (opt.format == "csv") {
    std::cout << "command,g,lambda,nu,signs,value\n";
    std::cout << job.command << "," << job.g << ",\"" << canonical_csv(job.lambda)
              << "\",\"" << canonical_csv(job.nu) << "\"," << job.signs << ","
              << format_rational(value) << "\n";
  } else {
    std::cout << format_rational(value) << "\n";
  }
}

int run_scalar(const std::string& command, const Options& opt) {
  ScalarJob job;
  job.command = command;
  job.g = opt.g;
  job.lambda = Partition::parse(opt.lambda_csv);
  job.nu = Partition::parse(opt.nu_csv);
  if (job.lambda.degree() != job.nu.degree())
    throw std::invalid_argument("lambda and nu must have equal degree");

  LocalRuleTable table;
  if (command == "real") {
    const int r = simple_branch_count(job.g, job.lambda, job.nu);
    SignVector signs = parse_signs(opt.signs);
    if (static_cast<int>(signs.size()) != std::max(r, 0))
      throw SignLengthError("sign vector length " + std::to_string(signs.size()) +
                            " does not match r = " + std::to_string(r));
    if (r < 0) {
      emit_scalar(job, Rational(0), opt);
      return kOk;
    }
    job.signs = format_signs(signs);
    table = load_rules(opt);
  }
  emit_scalar(job, compute_scalar(job, opt, &table), opt);
  return kOk;
}

int run_real_all(const Options& opt) {
  Partition lambda = Partition::parse(opt.lambda_csv);
  Partition nu = Partition::parse(opt.nu_csv);
  if (lambda.degree() != nu.degree())
    throw std::invalid_argument("lambda and nu must have equal degree");
  const int r = simple_branch_count(opt.g, lambda, nu);
  const LocalRuleTable table = load_rules(opt);

  std::vector<std::pair<std::string, Rational>> rows;
  if (r >= 0) {
    if (lambda.degree() > opt.max_degree)
      throw DegreeCeilingExceeded("degree exceeds the configured ceiling");
    for (const SignVector& s : lexicographic_sign_vectors(r)) {
      ScalarJob job{"real", opt.g, lambda, nu, format_signs(s)};
      rows.push_back({job.signs, compute_scalar(job, opt, &table)});
    }
  }

  if (opt.format == "json") {
    nlohmann::json j{{"command", "real-all"},
                     {"g", opt.g},
                     {"lambda", lambda.parts()},
                     {"nu", nu.parts()},
                     {"values", nlohmann::json::array()}};
    for (const auto& [signs, value] : rows)
      j["values"].push_back({{"signs", signs}, {"value", json_rational(value)}});
    std::cout << j.dump() << "\n";
  } else if (opt.format == "csv") {
    std::cout << "signs,value\n";
    for (const auto& [signs, value] : rows)
      std::cout << signs << "," << format_rational(value) << "\n";
  } else {
    for (const auto& [signs, value] : rows)
      std::cout << (signs.empty() ? "()" : signs) << " " << format_rational(value) << "\n";
  }
  return kOk;
}

int run_enumerate(const Options& opt) {
  Partition lambda = Partition::parse(opt.lambda_csv);
  Partition nu = Partition::parse(opt.nu_csv);
  if (lambda.degree() != nu.degree())
    throw std::invalid_argument("lambda and nu must have equal degree");
  if (lambda.degree() > opt.max_degree)
    throw DegreeCeilingExceeded("degree exceeds the configured ceiling");
  const int r = simple_branch_count(opt.g, lambda, nu);

  std::optional<SignVector> signs;
  if (!opt.signs.empty()) signs = parse_signs(opt.signs);
  if (signs && static_cast<int>(signs->size()) != std::max(r, 0))
    throw SignLengthError("sign vector length does not match r = " + std::to_string(r));

  const std::vector<MonodromyGraph> covers =
      r < 0 ? std::vector<MonodromyGraph>{} : enumerate_covers(opt.g, lambda, nu);

  const bool dot = opt.format == "dot";
  if (!dot && opt.format != "json" && opt.format != "text")
    throw std::invalid_argument("enumerate supports --format json|dot");

  if (!signs) {
    if (dot) {
      for (size_t i = 0; i < covers.size(); i++)
        std::cout << covers[i].to_dot("cover_" + std::to_string(i));
    } else {
      nlohmann::json j{{"count", covers.size()}, {"covers", nlohmann::json::array()}};
      for (const MonodromyGraph& cover : covers) j["covers"].push_back(cover.to_json());
      std::cout << j.dump() << "\n";
    }
    return kOk;
  }

  const LocalRuleTable table = load_rules(opt);
  std::vector<SignedCover> decorated;
  for (const MonodromyGraph& cover : covers)
    for (SignedCover& c : decorations(cover, *signs, table))
      decorated.push_back(std::move(c));
  if (dot) {
    for (size_t i = 0; i < decorated.size(); i++)
      std::cout << decorated[i].to_dot("cover_" + std::to_string(i));
  } else {
    nlohmann::json j{{"count", decorated.size()}, {"covers", nlohmann::json::array()}};
    for (const SignedCover& c : decorated) {
      nlohmann::json entry = c.to_json();
      entry["multiplicity"] = json_rational(multiplicity_signed(c));
      j["covers"].push_back(entry);
    }
    std::cout << j.dump() << "\n";
  }
  return kOk;
}

int run_check(const Options& opt) {
  const LocalRuleTable table = load_rules(opt);
  CheckOptions copts;
  copts.sweep_degree = std::min(std::max(opt.max_degree, 2), 6);
  copts.bridge_degree = std::min(copts.sweep_degree, 5);
  copts.threads = opt.threads;
  const CheckReport report = run_self_checks(table, copts);
  std::cout << report.text;
  return report.ok ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact complex and signed-real tropical double Hurwitz numbers of the line"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* cmd, bool needs_profiles) {
    if (needs_profiles) {
      cmd->add_option("-g", opt.g, "genus of the source curve")->required();
      cmd->add_option("-l,--lambda", opt.lambda_csv, "profile over -infinity, e.g. 3,1,1")
          ->required();
      cmd->add_option("-n,--nu", opt.nu_csv, "profile over +infinity")->required();
    }
    cmd->add_option("--format", opt.format, "output format: text|json|csv|dot");
    cmd->add_option("--max-degree", opt.max_degree, "degree ceiling (hard error beyond)")
        ->envname("HURWITZ_MAX_DEGREE");
    cmd->add_option("--threads", opt.threads, "worker cap for the factorization search")
        ->envname("HURWITZ_THREADS");
    cmd->add_option("--cache", opt.cache_path, "append-only result cache file")
        ->envname("HURWITZ_CACHE");
    cmd->add_option("--rules", opt.rules_path, "local rule table JSON")
        ->envname("HURWITZ_RULES_PATH");
  };

  CLI::App* complex_cmd = app.add_subcommand("complex", "tropical count of complex covers");
  add_common(complex_cmd, true);
  CLI::App* oracle_cmd =
      app.add_subcommand("oracle", "symmetric-group factorization count (ground truth)");
  add_common(oracle_cmd, true);
  CLI::App* real_cmd = app.add_subcommand("real", "signed real count for one sign vector");
  add_common(real_cmd, true);
  real_cmd->add_option("-s,--signs", opt.signs, "branch point signs, a string over +-");
  CLI::App* real_all_cmd =
      app.add_subcommand("real-all", "signed real counts for all 2^r sign vectors");
  add_common(real_all_cmd, true);
  CLI::App* enum_cmd = app.add_subcommand("enumerate", "emit covers as json or dot");
  add_common(enum_cmd, true);
  enum_cmd->add_option("-s,--signs", opt.signs, "decorate for these branch point signs");
  CLI::App* check_cmd =
      app.add_subcommand("check", "run the cross-validation suite; nonzero exit on failure");
  add_common(check_cmd, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (complex_cmd->parsed()) return run_scalar("complex", opt);
    if (oracle_cmd->parsed()) return run_scalar("oracle", opt);
    if (real_cmd->parsed()) return run_scalar("real", opt);
    if (real_all_cmd->parsed()) return run_real_all(opt);
    if (enum_cmd->parsed()) return run_enumerate(opt);
    if (check_cmd->parsed()) return run_check(opt);
  } catch (const SignLengthError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSignMismatch;
  } catch (const DegreeCeilingExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCeilingExceeded;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMalformedInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kOtherError;
  }
  return kOk;
}
