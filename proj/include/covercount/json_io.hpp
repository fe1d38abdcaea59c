#pragma once

#include <json.hpp>

#include "covercount/count.hpp"
#include "covercount/problem.hpp"
#include "covercount/rampoly.hpp"
#include "covercount/solver.hpp"

namespace covercount {

/// Insertion-ordered JSON: the wire formats fix their field order.
using Json = nlohmann::ordered_json;

Json to_json(const ProblemSpec& spec);
ProblemSpec problem_spec_from_json(const Json& j);

Json to_json(const ValidationResult& val);
Json to_json(const CountBreakdown& breakdown);
Json to_json(const FormalDivisor& divisor);

Json to_json(const Complex& z);
Complex complex_from_json(const Json& j);

Json to_json(const CoverFunction<Complex>& cf);
Json to_json(const CoverFunction<Rational>& cf);
Json to_json(const BranchProfile& profile);

Json to_json(const ToleranceSet& params);
ToleranceSet tolerance_from_json(const Json& j);

/// Deterministic payload: excludes wall-clock timing so that identical runs
/// serialize to identical bytes.
Json to_json(const VerifyReport& report);

Json to_json(const RationalPoly& p);
RationalPoly rational_poly_from_json(const Json& j);

}  // namespace covercount
