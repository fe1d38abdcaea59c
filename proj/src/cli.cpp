#include "covercount/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include "covercount/version.hpp"

namespace covercount {

namespace {

std::string iso_timestamp() {
  auto now = std::chrono::system_clock::now();
  std::time_t tt = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&tt, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Json load_json(const std::string& path) {
  if (path == "-") return Json::parse(std::cin);
  std::ifstream in(path);
  if (!in) throw InvalidSpec("cannot open " + path);
  return Json::parse(in);
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoi(item));
  }
  return out;
}

void append_journal(const std::string& path, const std::string& command,
                    const std::vector<std::string>& argv, const Json* spec, std::uint64_t seed,
                    const Json& params, const Json& result) {
  if (path.empty()) return;
  Json record;
  record["timestamp"] = iso_timestamp();
  record["command"] = command;
  Json args = Json::array();
  for (const auto& a : argv) args.push_back(a);
  record["argv"] = args;
  record["spec"] = spec ? *spec : Json(nullptr);
  record["seed"] = seed;
  record["params"] = params;
  record["result"] = result;
  record["version"] = kVersion;
  std::ofstream out(path, std::ios::app);
  if (!out) throw Error("cannot open journal " + path);
  out << record.dump() << "\n";
}

struct VerifyOptions {
  int trials = 1;
  std::uint64_t seed = 0;
  ToleranceSet params;
  std::string precision_name = "double";
};

void print_validation(const ValidationResult& val, std::ostream& out) {
  if (val.ok) {
    const DerivedProblem& d = *val.derived;
    out << "OK: d=" << d.d << " t=" << d.t << " k=" << d.k << " b=" << d.b
        << " genus=" << d.cyclic.genus << "\n";
  } else {
    out << "INVALID (" << val.violations.size() << " violation"
        << (val.violations.size() == 1 ? "" : "s") << "):\n";
    for (const auto& v : val.violations)
      out << "  [" << to_string(v.tag) << "] " << v.message << "\n";
  }
}

}  // namespace

Json replay_record(const Json& record) {
  const std::string command = record.at("command").get<std::string>();
  if (command == "validate") {
    return to_json(validate_problem(problem_spec_from_json(record.at("spec"))));
  }
  if (command == "count") {
    return to_json(cover_count(problem_spec_from_json(record.at("spec"))));
  }
  if (command == "theta") {
    return to_json(theta_characteristic(problem_spec_from_json(record.at("spec"))));
  }
  if (command == "enumerate") {
    const Json& p = record.at("params");
    CyclicData base;
    base.r = p.at("r").get<int>();
    for (const auto& x : p.at("xi")) base.xi.push_back(x.get<int>());
    Json result = Json::array();
    for (const auto& spec : enumerate_problems(base, p.at("dmax").get<int>()))
      result.push_back(to_json(spec));
    return result;
  }
  if (command == "verify") {
    const Json& p = record.at("params");
    ProblemSpec spec = problem_spec_from_json(record.at("spec"));
    ToleranceSet params = tolerance_from_json(p.at("tolerances"));
    auto reports = verify_count(spec, p.at("trials").get<int>(),
                                record.at("seed").get<std::uint64_t>(), params);
    Json result = Json::array();
    for (const auto& rep : reports) result.push_back(to_json(rep));
    return result;
  }
  throw Error("replay_record: unknown command " + command);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Z/rZ-equivariant covers of the projective line: validate, count, verify"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::string journal;
  app.add_option("--journal", journal, "append a JSON-lines run record to this file");

  std::string spec_path;
  bool as_json = false;

  auto* validate_cmd = app.add_subcommand("validate", "check a problem spec against every constraint");
  validate_cmd->add_option("spec", spec_path, "problem spec JSON file ('-' for stdin)")->required();
  validate_cmd->add_flag("--json", as_json, "emit the result as JSON");

  auto* count_cmd = app.add_subcommand("count", "evaluate the closed-form cover count");
  count_cmd->add_option("spec", spec_path, "problem spec JSON file ('-' for stdin)")->required();
  count_cmd->add_flag("--json", as_json, "emit the result as JSON");

  auto* theta_cmd = app.add_subcommand("theta", "theta characteristic of an r=2 all-odd cover");
  theta_cmd->add_option("spec", spec_path, "problem spec JSON file ('-' for stdin)")->required();
  theta_cmd->add_flag("--json", as_json, "emit the result as JSON");

  int enum_r = 2, enum_dmax = 1;
  std::string enum_xi;
  auto* enum_cmd = app.add_subcommand("enumerate", "list every valid spec over a base up to a degree bound");
  enum_cmd->add_option("--r", enum_r, "cyclic order")->required();
  enum_cmd->add_option("--xi", enum_xi, "comma-separated monodromy vector, e.g. 1,1,1,1")->required();
  enum_cmd->add_option("--dmax", enum_dmax, "maximum degree")->required();
  enum_cmd->add_flag("--json", as_json, "emit the result as JSON");

  VerifyOptions vo;
  auto* verify_cmd = app.add_subcommand("verify", "solve the intersection system and compare counts");
  verify_cmd->add_option("spec", spec_path, "problem spec JSON file ('-' for stdin)")->required();
  verify_cmd->add_option("--trials", vo.trials, "independent lambda samples");
  verify_cmd->add_option("--seed", vo.seed, "base RNG seed");
  verify_cmd->add_option("--threads", vo.params.threads, "path-tracking threads")
      ->envname("COVERCOUNT_THREADS");
  verify_cmd->add_option("--precision", vo.precision_name, "double | extended")
      ->envname("COVERCOUNT_PRECISION");
  verify_cmd->add_option("--residual-tol", vo.params.residual_tol, "final Newton residual bound")
      ->envname("COVERCOUNT_RESIDUAL_TOL");
  verify_cmd->add_option("--dedup-radius", vo.params.dedup_radius, "solution clustering radius")
      ->envname("COVERCOUNT_DEDUP_RADIUS");
  verify_cmd->add_option("--singular-tol", vo.params.singular_tol, "reciprocal condition floor")
      ->envname("COVERCOUNT_SINGULAR_TOL");
  verify_cmd->add_option("--divergence-norm", vo.params.divergence_norm, "path truncation norm")
      ->envname("COVERCOUNT_DIVERGENCE_NORM");
  verify_cmd->add_option("--step-budget", vo.params.step_budget, "predictor attempts per path")
      ->envname("COVERCOUNT_STEP_BUDGET");
  verify_cmd->add_option("--cluster-radius", vo.params.cluster_radius, "branch-point clustering radius")
      ->envname("COVERCOUNT_CLUSTER_RADIUS");
  verify_cmd->add_flag("--json", as_json, "emit the reports as JSON");

  std::vector<const char*> argv;
  argv.push_back("covercount");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*validate_cmd) {
      Json spec_json = load_json(spec_path);
      ProblemSpec spec = problem_spec_from_json(spec_json);
      ValidationResult val = validate_problem(spec);
      Json result = to_json(val);
      if (as_json)
        out << result.dump() << "\n";
      else
        print_validation(val, out);
      append_journal(journal, "validate", args, &spec_json, 0, Json::object(), result);
      return val.ok ? kExitOk : kExitBadSpec;
    }

    if (*count_cmd) {
      Json spec_json = load_json(spec_path);
      ProblemSpec spec = problem_spec_from_json(spec_json);
      CountBreakdown breakdown = cover_count(spec);
      Json result = to_json(breakdown);
      if (as_json)
        out << result.dump() << "\n";
      else
        out << "segre = " << breakdown.segre.str() << "\nrho   = " << breakdown.rho.str()
            << "\ntotal = " << breakdown.total.str() << "\n";
      append_journal(journal, "count", args, &spec_json, 0, Json::object(), result);
      return kExitOk;
    }

    if (*theta_cmd) {
      Json spec_json = load_json(spec_path);
      ProblemSpec spec = problem_spec_from_json(spec_json);
      FormalDivisor divisor = theta_characteristic(spec);
      Json result = to_json(divisor);
      if (as_json) {
        out << result.dump() << "\n";
      } else {
        out << "Theta = " << divisor.h_coeff << "*H";
        for (size_t i = 0; i < divisor.point_coeffs.size(); ++i)
          out << (divisor.point_coeffs[i] >= 0 ? " + " : " - ") << std::abs(divisor.point_coeffs[i])
              << "*P" << i + 1;
        out << "  (degree " << divisor.degree() << ")\n";
      }
      append_journal(journal, "theta", args, &spec_json, 0, Json::object(), result);
      return kExitOk;
    }

    if (*enum_cmd) {
      CyclicData base;
      base.r = enum_r;
      base.xi = parse_int_list(enum_xi);
      auto specs = enumerate_problems(base, enum_dmax);
      Json result = Json::array();
      for (const auto& spec : specs) result.push_back(to_json(spec));
      if (as_json) {
        out << result.dump() << "\n";
      } else {
        for (const auto& spec : specs) out << canonical_spec_string(spec) << "\n";
        out << "# " << specs.size() << " specs\n";
      }
      Json params;
      params["r"] = enum_r;
      Json xi_json = Json::array();
      for (int x : base.xi) xi_json.push_back(x);
      params["xi"] = xi_json;
      params["dmax"] = enum_dmax;
      append_journal(journal, "enumerate", args, nullptr, 0, params, result);
      return kExitOk;
    }

    if (*verify_cmd) {
      Json spec_json = load_json(spec_path);
      ProblemSpec spec = problem_spec_from_json(spec_json);
      vo.params.precision =
          vo.precision_name == "extended" ? Precision::kExtended : Precision::kDouble;
      auto reports = verify_count(spec, vo.trials, vo.seed, vo.params);
      Json result = Json::array();
      for (const auto& rep : reports) result.push_back(to_json(rep));
      if (as_json) {
        out << result.dump() << "\n";
      } else {
        for (size_t i = 0; i < reports.size(); ++i) {
          const VerifyReport& rep = reports[i];
          if (!rep.error.empty()) {
            out << "trial " << i << ": ERROR " << rep.error << "\n";
          } else {
            out << "trial " << i << ": " << (rep.pass ? "PASS" : "FAIL") << " accepted="
                << rep.accepted << " expected=" << rep.expected.str() << " residual="
                << rep.max_residual << " rcond=" << rep.min_rcond << " (" << rep.wall_ms
                << " ms)\n";
          }
        }
      }
      Json params;
      params["trials"] = vo.trials;
      params["tolerances"] = to_json(vo.params);
      append_journal(journal, "verify", args, &spec_json, vo.seed, params, result);
      bool any_error = false, all_pass = true;
      for (const auto& rep : reports) {
        if (!rep.error.empty()) any_error = true;
        if (!rep.pass) all_pass = false;
      }
      if (any_error) return kExitSolverError;
      return all_pass ? kExitOk : kExitFail;
    }
  } catch (const Json::exception& e) {
    err << "error: malformed JSON: " << e.what() << "\n";
    return kExitBadSpec;
  } catch (const InvalidSpec& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadSpec;
  } catch (const HypothesesNotMet& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadSpec;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitSolverError;
  }
  return kExitUsage;
}

}  // namespace covercount
