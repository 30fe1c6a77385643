#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>

#include "skewbisub/bisubmodularity.hpp"
#include "skewbisub/desk_oracles.hpp"
#include "skewbisub/errors.hpp"
#include "skewbisub/generator.hpp"
#include "skewbisub/instance_io.hpp"
#include "skewbisub/lovasz.hpp"
#include "skewbisub/minimizer.hpp"

namespace skewbisub::cli {

namespace {

std::unique_ptr<ValueOracle> load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open instance file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError("'" + path + "' is not valid JSON: " + e.what());
  }
  return instance_from_json(doc);
}

FractionalPoint load_point(const std::string& text, const ValueOracle& f) {
  FractionalPoint x = [&] {
    try {
      return FractionalPoint::parse(text, f.alpha());
    } catch (const InvalidArgument& e) {
      throw FormatError(std::string("--point: ") + e.what());
    }
  }();
  if (x.size() != f.arity()) {
    throw FormatError("--point has " + std::to_string(x.size()) +
                      " coordinates, instance arity is " +
                      std::to_string(f.arity()));
  }
  return x;
}

StepRule parse_step(const std::string& text) {
  const auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  double gamma = 0.0;
  if (colon != std::string::npos) {
    try {
      std::size_t used = 0;
      gamma = std::stod(text.substr(colon + 1), &used);
      if (used != text.size() - colon - 1 || !(gamma > 0)) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw FormatError("--step: invalid step size in '" + text + "'");
    }
  }
  if (kind == "diminishing") return StepRule::diminishing(gamma);
  if (kind == "fixed") {
    if (colon == std::string::npos) throw FormatError("--step: fixed needs a size, e.g. fixed:0.05");
    return StepRule::fixed(gamma);
  }
  throw FormatError("--step: expected 'fixed:G', 'diminishing' or 'diminishing:G0', got '" +
                    text + "'");
}

void emit(std::ostream& out, const json& doc) { out << doc.dump() << '\n'; }

// Extension vs closure at `trials` random points; returns the first mismatch.
std::optional<json> compare_closure(const ValueOracle& f, std::size_t trials,
                                    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    const FractionalPoint x = random_box_point(f.arity(), f.alpha(), rng);
    const Rational lovasz = extension_value(f, x);
    const Rational closure = convex_closure(f, x).value;
    if (lovasz != closure) {
      return json{{"trial", t}, {"point", x.str()},
                  {"f_L", to_string(lovasz)}, {"f_minus", to_string(closure)}};
    }
  }
  return std::nullopt;
}

int cmd_check(const std::string& path, std::ostream& out) {
  const auto f = load_instance(path);
  if (const auto witness = check_alpha_bisubmodular(*f)) {
    json doc = to_json(*witness);
    doc["result"] = "violation";
    emit(out, doc);
    return kPropertyViolated;
  }
  emit(out, json{{"result", "alpha-bisubmodular"}});
  return kSuccess;
}

int cmd_decompose(const std::string& path, const std::string& point, std::ostream& out) {
  const auto f = load_instance(path);
  emit(out, to_json(decompose(load_point(point, *f))));
  return kSuccess;
}

int cmd_eval(const std::string& path, const std::string& point, std::ostream& out) {
  const auto f = load_instance(path);
  emit(out, json{{"f_L", to_string(extension_value(*f, load_point(point, *f)))}});
  return kSuccess;
}

int cmd_minimize(const std::string& path, std::optional<std::size_t> iters,
                 std::uint64_t seed, const std::string& step,
                 const std::string& tolerance, bool random_start, std::ostream& out) {
  const auto f = load_instance(path);
  MinimizeConfig cfg;
  cfg.max_iters = iters;
  cfg.seed = seed;
  cfg.random_start = random_start;
  cfg.step = parse_step(step);
  try {
    cfg.tolerance = parse_rational(tolerance);
  } catch (const FormatError& e) {
    throw FormatError(std::string("--tolerance: ") + e.what());
  }
  if (sgn(cfg.tolerance) < 0) throw FormatError("--tolerance must be >= 0");
  if (iters && *iters == 0) throw FormatError("--iters must be >= 1");
  f->reset_call_count();
  emit(out, to_json(minimize(*f, cfg)));
  return kSuccess;
}

int cmd_verify_closure(const std::string& path, std::size_t trials, std::uint64_t seed,
                       std::ostream& out) {
  const auto f = load_instance(path);
  if (const auto mismatch = compare_closure(*f, trials, seed)) {
    emit(out, json{{"result", "fail"}, {"trials", trials}, {"first_discrepancy", *mismatch}});
    return kPropertyViolated;
  }
  emit(out, json{{"result", "pass"}, {"trials", trials}});
  return kSuccess;
}

int cmd_verify_all(const std::string& path, std::size_t trials, std::uint64_t seed,
                   std::ostream& out) {
  const auto f = load_instance(path);
  const std::size_t n = f->arity();
  json checks = json::array();
  bool all_pass = true;
  auto record = [&](const char* name, const char* status, json detail = json::object()) {
    detail["name"] = name;
    detail["status"] = status;
    checks.push_back(std::move(detail));
    if (std::string(status) == "fail") all_pass = false;
  };

  if (const auto witness = check_alpha_bisubmodular(*f)) {
    record("alpha_bisubmodular", "fail", json{{"witness", to_json(*witness)}});
  } else {
    record("alpha_bisubmodular", "pass");
  }

  {
    std::mt19937_64 rng(seed);
    std::optional<std::string> defect;
    for (std::size_t t = 0; t < trials && !defect; ++t) {
      const FractionalPoint x = random_box_point(n, f->alpha(), rng);
      defect = find_decomposition_defect(decompose(x), x);
      if (defect) break;
      const ChainDecomposition chain = random_chain_distribution(n, rng);
      const FractionalPoint mean(marginals(chain, f->alpha()), f->alpha());
      if (!(decompose(mean) == chain)) defect = "round trip failed at " + mean.str();
    }
    if (defect) {
      record("decomposition_roundtrip", "fail", json{{"detail", *defect}});
    } else {
      record("decomposition_roundtrip", "pass", json{{"trials", trials}});
    }
  }

  if (n <= 6) {
    const std::size_t count = labeling_count(n);
    bool holds = true;
    for (std::size_t i = 0; i < count && holds; ++i) {
      for (std::size_t k = 0; k < count && holds; ++k) {
        holds = vector_identity_holds(labeling_at(i, n), labeling_at(k, n), f->alpha());
      }
    }
    record("vector_identity", holds ? "pass" : "fail", json{{"pairs", count * count}});
  } else {
    record("vector_identity", "skipped", json{{"reason", "n > 6"}});
  }

  if (n <= 5) {
    if (const auto mismatch = compare_closure(*f, trials, seed)) {
      record("extension_equals_closure", "fail", json{{"first_discrepancy", *mismatch}});
    } else {
      record("extension_equals_closure", "pass", json{{"trials", trials}});
    }
  } else {
    record("extension_equals_closure", "skipped", json{{"reason", "n > 5"}});
  }

  json brute_json;
  json minimize_json;
  if (n <= 8) {
    const BruteForceMin brute = brute_force_min(*f);
    f->reset_call_count();
    const MinimizeReport report = minimize(*f, MinimizeConfig{});
    brute_json = json{{"minimizer", brute.minimizer.str()}, {"value", to_string(brute.value)}};
    minimize_json = to_json(report);
    record("minimize_matches_brute_force", report.value == brute.value ? "pass" : "fail");
  } else {
    record("minimize_matches_brute_force", "skipped", json{{"reason", "n > 8"}});
  }

  json doc{{"result", all_pass ? "pass" : "fail"}, {"checks", std::move(checks)}};
  if (!brute_json.is_null()) {
    doc["brute_force"] = std::move(brute_json);
    doc["minimize"] = std::move(minimize_json);
  }
  emit(out, doc);
  return all_pass ? kSuccess : kPropertyViolated;
}

int cmd_generate(std::size_t n, const std::string& alpha, std::size_t terms,
                 std::size_t max_scope, std::uint64_t seed, std::int64_t lo,
                 std::int64_t hi, std::ostream& out) {
  Alpha a = [&] {
    try {
      return Alpha::parse(alpha);
    } catch (const Error& e) {
      throw FormatError(std::string("--alpha: ") + e.what());
    }
  }();
  GeneratorOptions options;
  options.value_min = lo;
  options.value_max = hi;
  SumFunction f = [&] {
    try {
      return generate_instance(n, a, terms, max_scope, seed, options);
    } catch (const InvalidArgument& e) {
      throw FormatError(e.what());
    }
  }();
  emit(out, to_json(f));
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimize skew bisubmodular functions through their Lovasz extension",
               "skewbisub"};
  app.require_subcommand(1);

  std::string path, point, step = "diminishing", tolerance = "0", alpha;
  std::uint64_t seed = 0;
  std::size_t trials = 20, n = 0, terms = 0, max_scope = 2;
  std::size_t iters_value = 0;
  std::int64_t lo = -10, hi = 10;
  bool random_start = false;

  auto* check = app.add_subcommand("check", "Test alpha-bisubmodularity exhaustively");
  check->add_option("file", path, "Instance JSON")->required();

  auto* dec = app.add_subcommand("decompose", "Chain decomposition of a box point");
  dec->add_option("file", path, "Instance JSON")->required();
  dec->add_option("--point", point, "Comma-separated rationals, e.g. 3/5,-1/5")->required();

  auto* eval = app.add_subcommand("eval", "Evaluate the Lovasz extension");
  eval->add_option("file", path, "Instance JSON")->required();
  eval->add_option("--point", point, "Comma-separated rationals")->required();

  auto* mini = app.add_subcommand("minimize", "Projected subgradient minimization");
  mini->add_option("file", path, "Instance JSON")->required();
  auto* iters_opt = mini->add_option("--iters", iters_value, "Iteration budget (default 200 n^2)");
  mini->add_option("--seed", seed, "Seed for --random-start");
  mini->add_option("--step", step, "fixed:G | diminishing | diminishing:G0");
  mini->add_option("--tolerance", tolerance, "Early-stop gap (rational, default 0)");
  mini->add_flag("--random-start", random_start, "Start from a random box point");

  auto* vclosure = app.add_subcommand("verify-closure", "Compare f^L with the LP convex closure");
  vclosure->add_option("file", path, "Instance JSON")->required();
  vclosure->add_option("--trials", trials, "Random points");
  vclosure->add_option("--seed", seed, "Sampling seed");

  auto* vall = app.add_subcommand("verify-all", "Run every desk-scale verification");
  vall->add_option("file", path, "Instance JSON")->required();
  vall->add_option("--trials", trials, "Random points per randomized check");
  vall->add_option("--seed", seed, "Sampling seed");

  auto* gen = app.add_subcommand("generate", "Emit a random alpha-bisubmodular sum instance");
  gen->add_option("--n", n, "Arity")->required();
  gen->add_option("--alpha", alpha, "Skew parameter in (0,1]")->required();
  gen->add_option("--terms", terms, "Number of terms")->required();
  gen->add_option("--seed", seed, "Generator seed");
  gen->add_option("--max-scope", max_scope, "Largest term arity (1 or 2)");
  gen->add_option("--min", lo, "Smallest table entry");
  gen->add_option("--max", hi, "Largest table entry");

  std::vector<const char*> argv{"skewbisub"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (*check) return cmd_check(path, out);
    if (*dec) return cmd_decompose(path, point, out);
    if (*eval) return cmd_eval(path, point, out);
    if (*mini) {
      std::optional<std::size_t> iters;
      if (iters_opt->count() > 0) iters = iters_value;
      return cmd_minimize(path, iters, seed, step, tolerance, random_start, out);
    }
    if (*vclosure) return cmd_verify_closure(path, trials, seed, out);
    if (*vall) return cmd_verify_all(path, trials, seed, out);
    if (*gen) return cmd_generate(n, alpha, terms, max_scope, seed, lo, hi, out);
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return kUsageError;
}

}  // namespace skewbisub::cli
