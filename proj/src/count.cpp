#include "covercount/count.hpp"

namespace covercount {

namespace {

DerivedProblem require_valid(const ProblemSpec& spec) {
  ValidationResult val = validate_problem(spec);
  if (!val.ok)
    throw InvalidSpec("cover_count: spec invalid: " +
                      (val.violations.empty() ? std::string("unknown") : val.violations.front().message));
  return *val.derived;
}

BigInt segre_from(const ProblemSpec& spec, const DerivedProblem& der) {
  return binomial(der.t / spec.base.r, spec.t0 / spec.base.r);
}

BigInt rho_from(const DerivedProblem& der) {
  BigInt acc = 1;
  for (size_t i = 0; i < der.L.size(); ++i) acc *= pow_bigint(der.L[i], der.c[i]);
  acc *= factorial(der.k);
  for (int c : der.c) acc /= factorial(c);  // exact: multinomial coefficient times the power product
  return acc;
}

}  // namespace

BigInt segre_degree(const ProblemSpec& spec) {
  DerivedProblem der = require_valid(spec);
  return segre_from(spec, der);
}

BigInt rho_degree(const ProblemSpec& spec) {
  DerivedProblem der = require_valid(spec);
  return rho_from(der);
}

CountBreakdown cover_count(const ProblemSpec& spec) {
  DerivedProblem der = require_valid(spec);
  CountBreakdown out;
  out.segre = segre_from(spec, der);
  out.rho = rho_from(der);
  out.total = out.segre * out.rho;
  return out;
}

}  // namespace covercount
