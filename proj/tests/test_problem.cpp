#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "covercount/problem.hpp"

using namespace covercount;

namespace {

ProblemSpec hyperelliptic_g1() {
  ProblemSpec spec;
  spec.base = {2, {1, 1, 1, 1}};
  spec.ord = {-1, -1, -1, -1};
  spec.B = {3, 3};
  spec.t0 = 4;
  spec.tinf = 0;
  return spec;
}

ProblemSpec mixed_g1() {
  ProblemSpec spec;
  spec.base = {2, {1, 1, 1, 1}};
  spec.ord = {3, -1, -1, -1};
  spec.B = {3, 3};
  spec.t0 = 2;
  spec.tinf = 2;
  return spec;
}

ProblemSpec r3_spec() {
  ProblemSpec spec;
  spec.base = {3, {1, 1, 2, 2}};
  spec.ord = {-2, -2, 2, -1};
  spec.B = {2, 3};
  spec.t0 = 3;
  spec.tinf = 0;
  return spec;
}

bool has_violation(const ValidationResult& val, ConstraintTag tag) {
  return std::any_of(val.violations.begin(), val.violations.end(),
                     [tag](const Violation& v) { return v.tag == tag; });
}

}  // namespace

TEST_CASE("derive_invariants on the hyperelliptic locus") {
  DerivedCyclic d = derive_invariants({2, {1, 1, 1, 1, 1, 1}});
  CHECK(d.f == std::vector<int>{1, 1, 1, 1, 1, 1});
  CHECK(d.e == std::vector<int>{2, 2, 2, 2, 2, 2});
  CHECK(d.genus == 2);

  CHECK(derive_invariants({2, {1, 1, 1, 1}}).genus == 1);

  DerivedCyclic r3 = derive_invariants({3, {1, 1, 2, 2}});
  CHECK(r3.f == std::vector<int>{1, 1, 1, 1});
  CHECK(r3.genus == 2);
}

TEST_CASE("derive_invariants across cyclic orders") {
  CHECK(derive_invariants({4, {1, 1, 1, 1}}).genus == 3);
  CHECK(derive_invariants({4, {2, 1, 1}}).genus == 1);
  CHECK(derive_invariants({5, {1, 1, 3}}).genus == 2);
  CHECK(derive_invariants({2, std::vector<int>(8, 1)}).genus == 3);
  CHECK(derive_invariants({6, {2, 3, 1}}).genus == 1);
  CHECK(derive_invariants({10, {5, 2, 2, 1}}).genus == 6);
  CHECK(derive_invariants({12, {4, 6, 1, 1}}).genus == 7);

  DerivedCyclic mixed = derive_invariants({10, {5, 5, 6, 4}});
  CHECK(mixed.f == std::vector<int>{5, 5, 2, 2});
  CHECK(mixed.e == std::vector<int>{2, 2, 5, 5});
  CHECK(mixed.genus == 4);
  for (size_t i = 0; i < mixed.f.size(); ++i) CHECK(mixed.f[i] * mixed.e[i] == 10);
}

TEST_CASE("derive_invariants rejects invalid bases") {
  CHECK_THROWS_AS(derive_invariants({2, {1, 1, 1}}), InvalidSpec);   // sum odd
  CHECK_THROWS_AS(derive_invariants({2, {1, 1}}), InvalidSpec);      // m < 3
  CHECK_THROWS_AS(derive_invariants({4, {2, 2, 2, 2}}), InvalidSpec);  // gcd 2
  CHECK_THROWS_AS(derive_invariants({1, {0, 0, 0}}), InvalidSpec);   // r < 2
}

TEST_CASE("validate accepts the worked examples") {
  ValidationResult val = validate_problem(hyperelliptic_g1());
  REQUIRE(val.ok);
  CHECK(val.derived->d == 4);
  CHECK(val.derived->b == 4);
  CHECK(val.derived->t == 4);
  CHECK(val.derived->k == 2);
  CHECK(val.derived->cyclic.genus == 1);
  CHECK(val.derived->L == std::vector<int>{2});
  CHECK(val.derived->c == std::vector<int>{2});
  CHECK(val.derived->ram == std::vector<int>{1, 1, 1, 1});

  ValidationResult r3 = validate_problem(r3_spec());
  REQUIRE(r3.ok);
  CHECK(r3.derived->d == 5);
  CHECK(r3.derived->L == std::vector<int>{1, 2});
  CHECK(r3.derived->c == std::vector<int>{1, 1});

  CHECK(validate_problem(mixed_g1()).ok);
}

TEST_CASE("validate reports the divisibility violation") {
  ProblemSpec spec = hyperelliptic_g1();
  spec.t0 = 3;
  ValidationResult val = validate_problem(spec);
  CHECK(!val.ok);
  CHECK(has_violation(val, ConstraintTag::kDivisibility));
}

TEST_CASE("validate reports every violated constraint with its tag") {
  ProblemSpec spec = hyperelliptic_g1();
  spec.ord = {-2, -1, -1, -1};  // breaks congruence, Eq2, Eq4
  ValidationResult val = validate_problem(spec);
  CHECK(!val.ok);
  CHECK(has_violation(val, ConstraintTag::kCongruence));
  CHECK(has_violation(val, ConstraintTag::kEq2));

  spec = hyperelliptic_g1();
  spec.B = {3, 3, 3};
  val = validate_problem(spec);
  CHECK(has_violation(val, ConstraintTag::kEq3));

  spec = hyperelliptic_g1();
  spec.B = {2, 2};  // breaks Eq4 and Eq5
  val = validate_problem(spec);
  CHECK(has_violation(val, ConstraintTag::kEq4));
  CHECK(has_violation(val, ConstraintTag::kEq5));

  spec = hyperelliptic_g1();
  spec.ord = {0, -1, -1, -1};
  val = validate_problem(spec);
  CHECK(has_violation(val, ConstraintTag::kStructure));

  spec = hyperelliptic_g1();
  spec.base.xi = {1, 1, 1, 2};  // r=2 range violation
  val = validate_problem(spec);
  CHECK(has_violation(val, ConstraintTag::kBase));
}

TEST_CASE("enumerate contains the worked specs") {
  CyclicData base{2, {1, 1, 1, 1}};
  auto specs4 = enumerate_problems(base, 4);
  ProblemSpec target = hyperelliptic_g1();
  bool found = std::any_of(specs4.begin(), specs4.end(), [&](const ProblemSpec& s) {
    return s.ord == target.ord && s.B == target.B && s.t0 == target.t0 && s.tinf == target.tinf;
  });
  CHECK(found);

  CHECK(enumerate_problems(base, 0).empty());

  auto specs5 = enumerate_problems(base, 5);
  ProblemSpec mixed = mixed_g1();
  found = std::any_of(specs5.begin(), specs5.end(), [&](const ProblemSpec& s) {
    return s.ord == mixed.ord && s.B == mixed.B && s.t0 == mixed.t0 && s.tinf == mixed.tinf;
  });
  CHECK(found);
}

TEST_CASE("enumerate output is valid, ordered, and deterministic") {
  for (CyclicData base : {CyclicData{2, {1, 1, 1, 1}}, CyclicData{3, {1, 1, 2, 2}}}) {
    auto specs = enumerate_problems(base, 6);
    CHECK(!specs.empty());
    for (const auto& spec : specs) {
      ValidationResult val = validate_problem(spec);
      CHECK(val.ok);
      // leading-coefficient balance, implied by the degree equation
      long long ord_sum = 0;
      for (int o : spec.ord) ord_sum += o;
      CHECK(ord_sum == spec.tinf - spec.t0);
      // B kept sorted
      CHECK(std::is_sorted(spec.B.begin(), spec.B.end()));
    }
    for (size_t i = 1; i < specs.size(); ++i) CHECK(!spec_less(specs[i], specs[i - 1]));
    auto again = enumerate_problems(base, 6);
    REQUIRE(specs.size() == again.size());
    for (size_t i = 0; i < specs.size(); ++i) {
      CHECK(specs[i].ord == again[i].ord);
      CHECK(specs[i].B == again[i].B);
      CHECK(specs[i].t0 == again[i].t0);
    }
  }
}

TEST_CASE("lift exponents") {
  CHECK(lift_exponents(hyperelliptic_g1()) == std::vector<int>{-1, -1, -1, -1});
  CHECK(lift_exponents(mixed_g1()) == std::vector<int>{1, -1, -1, -1});
  CHECK(lift_exponents(r3_spec()) == std::vector<int>{-1, -1, 0, -1});

  ProblemSpec bad = hyperelliptic_g1();
  bad.ord = {-2, -1, -1, -1};
  CHECK_THROWS_AS(lift_exponents(bad), CongruenceViolated);
}

TEST_CASE("lift composed with its inverse is the identity") {
  CyclicData base{3, {1, 1, 2, 2}};
  for (const auto& spec : enumerate_problems(base, 6)) {
    auto lift = lift_exponents(spec);
    for (size_t i = 0; i < lift.size(); ++i)
      CHECK(lift[i] * spec.base.r + spec.base.xi[i] == spec.ord[i]);
  }
}

TEST_CASE("theta characteristic worked examples") {
  FormalDivisor d1 = theta_characteristic(hyperelliptic_g1());
  CHECK(d1.h_coeff == 0);
  CHECK(d1.point_coeffs == std::vector<int>{0, 0, 0, 0});
  CHECK(d1.degree() == 0);

  FormalDivisor d2 = theta_characteristic(mixed_g1());
  CHECK(d2.h_coeff == 1);
  CHECK(d2.point_coeffs == std::vector<int>{-2, 0, 0, 0});
  CHECK(d2.degree() == 0);

  // Effective theta: g=2, all points over infinity, one order 3.
  ProblemSpec mp;
  mp.base = {2, {1, 1, 1, 1, 1, 1}};
  mp.ord = {-3, -1, -1, -1, -1, -1};
  mp.B = {3, 3, 3, 3};
  mp.t0 = 8;
  mp.tinf = 0;
  REQUIRE(validate_problem(mp).ok);
  FormalDivisor d3 = theta_characteristic(mp);
  CHECK(d3.h_coeff == 0);
  CHECK(d3.point_coeffs == std::vector<int>{1, 0, 0, 0, 0, 0});
  for (int c : d3.point_coeffs) CHECK(c >= 0);  // effective
  CHECK(d3.degree() == 1);                      // g - 1
}

TEST_CASE("theta characteristic rejects specs outside its hypotheses") {
  CHECK_THROWS_AS(theta_characteristic(r3_spec()), HypothesesNotMet);  // r = 3

  ProblemSpec even_ord;  // |ord| even somewhere
  even_ord.base = {2, {1, 1, 1, 1}};
  even_ord.ord = {2, -2, -1, -1};  // fails congruence -> validation failure
  even_ord.B = {3, 3};
  even_ord.t0 = 4;
  even_ord.tinf = 0;
  CHECK_THROWS_AS(theta_characteristic(even_ord), HypothesesNotMet);

  ProblemSpec b4;  // some b_j != 3
  b4.base = {2, {1, 1, 1, 1}};
  b4.ord = {-1, -1, -1, -1};
  b4.B = {2, 4};
  b4.t0 = 4;
  b4.tinf = 0;
  REQUIRE(validate_problem(b4).ok);
  CHECK_THROWS_AS(theta_characteristic(b4), HypothesesNotMet);
}

TEST_CASE("theta degree is always g - 1 over enumerated all-odd covers") {
  CyclicData base{2, {1, 1, 1, 1}};
  int checked = 0;
  for (const auto& spec : enumerate_problems(base, 8)) {
    bool all_odd = std::all_of(spec.ord.begin(), spec.ord.end(),
                               [](int o) { return std::abs(o) % 2 == 1; });
    bool all_three = std::all_of(spec.B.begin(), spec.B.end(), [](int b) { return b == 3; });
    if (!all_odd || !all_three) continue;
    FormalDivisor div = theta_characteristic(spec);
    int genus = validate_problem(spec).derived->cyclic.genus;
    CHECK(div.degree() == genus - 1);
    ++checked;
  }
  CHECK(checked > 0);
}

TEST_CASE("canonical spec string") {
  CHECK(canonical_spec_string(hyperelliptic_g1()) ==
        "{\"r\":2,\"xi\":[1,1,1,1],\"ord\":[-1,-1,-1,-1],\"B\":[3,3],\"t0\":4,\"tinf\":0}");
}
