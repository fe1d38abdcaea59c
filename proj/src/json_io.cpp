#include "covercount/json_io.hpp"

#include <algorithm>

namespace covercount {

namespace {

Json int_list(const std::vector<int>& v) {
  Json arr = Json::array();
  for (int x : v) arr.push_back(x);
  return arr;
}

std::vector<int> int_list_from(const Json& j, const char* what) {
  if (!j.is_array()) throw InvalidSpec(std::string("expected array for ") + what);
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw InvalidSpec(std::string("expected integer entries in ") + what);
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace

Json to_json(const ProblemSpec& spec) {
  std::vector<int> sorted_b = spec.B;
  std::sort(sorted_b.begin(), sorted_b.end());
  Json j;
  j["r"] = spec.base.r;
  j["xi"] = int_list(spec.base.xi);
  j["ord"] = int_list(spec.ord);
  j["B"] = int_list(sorted_b);
  j["t0"] = spec.t0;
  j["tinf"] = spec.tinf;
  return j;
}

ProblemSpec problem_spec_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidSpec("spec JSON must be an object");
  for (const char* key : {"r", "xi", "ord", "B", "t0", "tinf"})
    if (!j.contains(key)) throw InvalidSpec(std::string("spec JSON missing field ") + key);
  ProblemSpec spec;
  if (!j["r"].is_number_integer()) throw InvalidSpec("spec field r must be an integer");
  spec.base.r = j["r"].get<int>();
  spec.base.xi = int_list_from(j["xi"], "xi");
  spec.ord = int_list_from(j["ord"], "ord");
  spec.B = int_list_from(j["B"], "B");
  std::sort(spec.B.begin(), spec.B.end());
  if (!j["t0"].is_number_integer() || !j["tinf"].is_number_integer())
    throw InvalidSpec("spec fields t0/tinf must be integers");
  spec.t0 = j["t0"].get<int>();
  spec.tinf = j["tinf"].get<int>();
  return spec;
}

Json to_json(const ValidationResult& val) {
  Json j;
  j["ok"] = val.ok;
  Json violations = Json::array();
  for (const auto& v : val.violations) {
    Json entry;
    entry["tag"] = to_string(v.tag);
    entry["message"] = v.message;
    violations.push_back(entry);
  }
  j["violations"] = violations;
  if (val.derived) {
    const DerivedProblem& d = *val.derived;
    Json der;
    der["d"] = d.d;
    der["t"] = d.t;
    der["k"] = d.k;
    der["b"] = d.b;
    der["genus"] = d.cyclic.genus;
    der["f"] = int_list(d.cyclic.f);
    der["e"] = int_list(d.cyclic.e);
    der["ram"] = int_list(d.ram);
    der["L"] = int_list(d.L);
    der["c"] = int_list(d.c);
    j["derived"] = der;
  } else {
    j["derived"] = nullptr;
  }
  return j;
}

Json to_json(const CountBreakdown& breakdown) {
  Json j;
  j["segre"] = breakdown.segre.str();
  j["rho"] = breakdown.rho.str();
  j["total"] = breakdown.total.str();
  return j;
}

Json to_json(const FormalDivisor& divisor) {
  Json j;
  j["hCoeff"] = divisor.h_coeff;
  j["pointCoeffs"] = int_list(divisor.point_coeffs);
  j["degree"] = divisor.degree();
  return j;
}

Json to_json(const Complex& z) {
  Json j = Json::array();
  j.push_back(z.real());
  j.push_back(z.imag());
  return j;
}

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw InvalidSpec("complex value must be [re, im]");
  return Complex(j[0].get<double>(), j[1].get<double>());
}

Json to_json(const CoverFunction<Complex>& cf) {
  Json j;
  Json lam = Json::array();
  for (const auto& l : cf.lambda) lam.push_back(to_json(l));
  j["lambda"] = lam;
  j["ord"] = int_list(cf.ord);
  auto poly_list = [](const Poly<Complex>& p, int nominal) {
    Json arr = Json::array();
    for (int i = 0; i <= nominal; ++i) arr.push_back(to_json(p.coeff(i)));
    return arr;
  };
  j["p0"] = poly_list(cf.p0, cf.nominal_deg0());
  j["pinf"] = poly_list(cf.pinf, cf.nominal_deg_inf());
  j["r"] = cf.r;
  return j;
}

Json to_json(const CoverFunction<Rational>& cf) {
  Json j;
  Json lam = Json::array();
  for (const auto& l : cf.lambda) lam.push_back(l.str());
  j["lambda"] = lam;
  j["ord"] = int_list(cf.ord);
  auto poly_list = [](const Poly<Rational>& p, int nominal) {
    Json arr = Json::array();
    for (int i = 0; i <= nominal; ++i) arr.push_back(p.coeff(i).str());
    return arr;
  };
  j["p0"] = poly_list(cf.p0, cf.nominal_deg0());
  j["pinf"] = poly_list(cf.pinf, cf.nominal_deg_inf());
  j["r"] = cf.r;
  return j;
}

Json to_json(const BranchProfile& profile) {
  Json j;
  Json entries = Json::array();
  for (const auto& e : profile.entries) {
    Json entry;
    if (e.at_infinity)
      entry["point"] = "inf";
    else
      entry["point"] = to_json(e.point);
    entry["index"] = e.index;
    entries.push_back(entry);
  }
  j["entries"] = entries;
  j["extraneousPossible"] = profile.extraneous_possible;
  return j;
}

Json to_json(const ToleranceSet& params) {
  Json j;
  j["residualTol"] = params.residual_tol;
  j["dedupRadius"] = params.dedup_radius;
  j["singularTol"] = params.singular_tol;
  j["divergenceNorm"] = params.divergence_norm;
  j["stepBudget"] = params.step_budget;
  j["clusterRadius"] = params.cluster_radius;
  j["precision"] = params.precision == Precision::kExtended ? "extended" : "double";
  j["threads"] = params.threads;
  return j;
}

ToleranceSet tolerance_from_json(const Json& j) {
  ToleranceSet params;
  if (j.contains("residualTol")) params.residual_tol = j["residualTol"].get<double>();
  if (j.contains("dedupRadius")) params.dedup_radius = j["dedupRadius"].get<double>();
  if (j.contains("singularTol")) params.singular_tol = j["singularTol"].get<double>();
  if (j.contains("divergenceNorm")) params.divergence_norm = j["divergenceNorm"].get<double>();
  if (j.contains("stepBudget")) params.step_budget = j["stepBudget"].get<long>();
  if (j.contains("clusterRadius")) params.cluster_radius = j["clusterRadius"].get<double>();
  if (j.contains("precision"))
    params.precision =
        j["precision"].get<std::string>() == "extended" ? Precision::kExtended : Precision::kDouble;
  if (j.contains("threads")) params.threads = j["threads"].get<int>();
  return params;
}

Json to_json(const VerifyReport& report) {
  Json j;
  j["specHash"] = report.spec_hash;
  j["seed"] = report.seed;
  Json lam = Json::array();
  for (const auto& l : report.lambda) lam.push_back(to_json(l));
  j["lambda"] = lam;
  j["pathsTracked"] = report.paths_tracked;
  j["pathsDiverged"] = report.paths_diverged;
  j["pathsFailed"] = report.paths_failed;
  j["rawSolutions"] = report.raw_solutions;
  Json rejected;
  rejected["outsideU"] = report.rejected_outside_u;
  rejected["profileMismatch"] = report.rejected_profile;
  rejected["duplicate"] = report.rejected_duplicate;
  rejected["singularJacobian"] = report.rejected_singular;
  j["rejected"] = rejected;
  j["accepted"] = report.accepted;
  j["expected"] = report.expected.str();
  j["maxResidual"] = report.max_residual;
  j["minRcond"] = report.min_rcond;
  j["pass"] = report.pass;
  j["error"] = report.error;
  j["tolerances"] = to_json(report.params);
  return j;
}

Json to_json(const RationalPoly& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.str());
  return arr;
}

RationalPoly rational_poly_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidSpec("polynomial JSON must be an array of rational strings");
  std::vector<Rational> c;
  for (const auto& v : j) {
    if (v.is_string())
      c.emplace_back(v.get<std::string>());
    else if (v.is_number_integer())
      c.emplace_back(v.get<long>());
    else
      throw InvalidSpec("polynomial coefficients must be rational strings or integers");
  }
  return RationalPoly(std::move(c));
}

}  // namespace covercount
