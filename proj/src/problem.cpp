#include "covercount/problem.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace covercount {

namespace {

int gcd_int(int a, int b) { return std::gcd(a, b); }

/// Mathematical mod: result in [0, r).
int mod_pos(long long v, int r) {
  long long m = v % r;
  if (m < 0) m += r;
  return static_cast<int>(m);
}

void push(std::vector<Violation>& out, ConstraintTag tag, std::string msg) {
  out.push_back(Violation{tag, std::move(msg)});
}

/// Partitions of total into exactly parts values >= 1, emitted as
/// non-decreasing sequences in lexicographic order.
void partitions_into(int total, int parts, int min_part, std::vector<int>& cur,
                     std::vector<std::vector<int>>& out) {
  if (parts == 1) {
    if (total >= min_part) {
      cur.push_back(total);
      out.push_back(cur);
      cur.pop_back();
    }
    return;
  }
  for (int v = min_part; v * parts <= total; ++v) {
    cur.push_back(v);
    partitions_into(total - v, parts - 1, v, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::string to_string(ConstraintTag tag) {
  switch (tag) {
    case ConstraintTag::kStructure: return "structure";
    case ConstraintTag::kBase: return "base";
    case ConstraintTag::kEq2: return "eq2";
    case ConstraintTag::kEq3: return "eq3";
    case ConstraintTag::kEq4: return "eq4";
    case ConstraintTag::kEq5: return "eq5";
    case ConstraintTag::kCongruence: return "congruence";
    case ConstraintTag::kDivisibility: return "divisibility";
  }
  return "unknown";
}

std::vector<Violation> validate_cyclic(const CyclicData& base) {
  std::vector<Violation> out;
  if (base.r < 2) push(out, ConstraintTag::kBase, "r must be at least 2");
  if (base.m() < 3) push(out, ConstraintTag::kBase, "need at least 3 branch points (m >= 3)");
  long long sum = 0;
  int g = base.r > 0 ? base.r : 0;
  for (size_t i = 0; i < base.xi.size(); ++i) {
    int x = base.xi[i];
    if (base.r >= 2 && (x < 1 || x > base.r - 1)) {
      std::ostringstream msg;
      msg << "xi[" << i << "] = " << x << " outside 1.." << base.r - 1;
      push(out, ConstraintTag::kBase, msg.str());
    }
    sum += x;
    g = gcd_int(g, x);
  }
  if (base.r >= 2 && base.m() >= 1 && mod_pos(sum, base.r) != 0)
    push(out, ConstraintTag::kBase, "sum of xi not divisible by r");
  if (base.r >= 2 && !base.xi.empty() && g != 1)
    push(out, ConstraintTag::kBase, "gcd(xi_1..xi_m, r) != 1 (cover disconnected)");
  return out;
}

DerivedCyclic derive_invariants(const CyclicData& base) {
  auto bad = validate_cyclic(base);
  if (!bad.empty()) throw InvalidSpec("derive_invariants: " + bad.front().message);
  DerivedCyclic out;
  long long fsum = 0;
  for (int x : base.xi) {
    int f = gcd_int(x, base.r);
    out.f.push_back(f);
    out.e.push_back(base.r / f);
    fsum += f;
  }
  long long rhs = static_cast<long long>(base.r) * (base.m() - 2) - fsum;  // = 2g - 2
  if (rhs % 2 != 0) throw NonIntegralGenus("derive_invariants: r(m-2) - sum f_i is odd");
  if (rhs < -2) throw NegativeGenus("derive_invariants: genus would be negative");
  out.genus = static_cast<int>((rhs + 2) / 2);
  return out;
}

ValidationResult validate_problem(const ProblemSpec& spec) {
  ValidationResult res;
  res.violations = validate_cyclic(spec.base);

  const int m = spec.base.m();
  const int r = spec.base.r;

  if (static_cast<int>(spec.ord.size()) != m)
    push(res.violations, ConstraintTag::kStructure, "ord length differs from xi length");
  for (size_t i = 0; i < spec.ord.size(); ++i)
    if (spec.ord[i] == 0) {
      std::ostringstream msg;
      msg << "ord[" << i << "] is zero; every lambda_i maps to 0 or infinity";
      push(res.violations, ConstraintTag::kStructure, msg.str());
    }
  for (size_t j = 0; j < spec.B.size(); ++j)
    if (spec.B[j] < 2) {
      std::ostringstream msg;
      msg << "B[" << j << "] = " << spec.B[j] << " is not a ramification index (>= 2)";
      push(res.violations, ConstraintTag::kStructure, msg.str());
    }
  if (spec.t0 < 0) push(res.violations, ConstraintTag::kStructure, "t0 negative");
  if (spec.tinf < 0) push(res.violations, ConstraintTag::kStructure, "tinf negative");

  if (!res.violations.empty() && (static_cast<int>(spec.ord.size()) != m || r < 2)) {
    // Cannot evaluate the numeric constraints without a consistent shape.
    res.ok = false;
    return res;
  }

  DerivedCyclic cyc;
  bool have_cyclic = false;
  try {
    cyc = derive_invariants(spec.base);
    have_cyclic = true;
  } catch (const Error& e) {
    push(res.violations, ConstraintTag::kBase, e.what());
  }

  for (int i = 0; i < m && i < static_cast<int>(spec.ord.size()); ++i) {
    if (mod_pos(spec.ord[static_cast<size_t>(i)] - spec.base.xi[static_cast<size_t>(i)], r) != 0) {
      std::ostringstream msg;
      msg << "ord[" << i << "] = " << spec.ord[static_cast<size_t>(i)] << " incongruent to xi["
          << i << "] = " << spec.base.xi[static_cast<size_t>(i)] << " mod " << r;
      push(res.violations, ConstraintTag::kCongruence, msg.str());
    }
  }

  if (spec.t0 % r != 0) push(res.violations, ConstraintTag::kDivisibility, "r does not divide t0");
  if (spec.tinf % r != 0) push(res.violations, ConstraintTag::kDivisibility, "r does not divide tinf");

  long long zero_side = spec.t0, inf_side = spec.tinf;
  long long abs_ord_sum = 0;
  for (int o : spec.ord) {
    if (o > 0) zero_side += o;
    if (o < 0) inf_side += -o;
    abs_ord_sum += std::abs(o);
  }
  if (zero_side != inf_side) {
    std::ostringstream msg;
    msg << "degree mismatch: t0 + sum_{S0} ord = " << zero_side
        << " but tinf + sum_{Sinf} |ord| = " << inf_side;
    push(res.violations, ConstraintTag::kEq2, msg.str());
  }
  const long long d = zero_side;

  const int k = static_cast<int>(spec.B.size());
  if (k != m - 2) {
    std::ostringstream msg;
    msg << "k = " << k << " but m - 2 = " << m - 2;
    push(res.violations, ConstraintTag::kEq3, msg.str());
  }

  long long bsum = 0;   // sum (b_j - 1)
  long long b2sum = 0;  // sum (b_j - 2)
  for (int bj : spec.B) {
    bsum += bj - 1;
    b2sum += bj - 2;
  }

  if (have_cyclic) {
    long long fsum = 0;
    for (int f : cyc.f) fsum += f;
    // Riemann-Hurwitz in the upstairs-index convention: sum (ram_i - 1) f_i
    // equals sum |ord_i| - sum f_i whenever the congruence holds.
    long long lhs = 2LL * cyc.genus + 2 * d - 2;
    long long rhs = (abs_ord_sum - fsum) + static_cast<long long>(r) * bsum;
    if (lhs != rhs) {
      std::ostringstream msg;
      msg << "Riemann-Hurwitz mismatch: 2g + 2d - 2 = " << lhs
          << " but ramification total = " << rhs;
      push(res.violations, ConstraintTag::kEq4, msg.str());
    }
  }

  if (static_cast<long long>(spec.t0) + spec.tinf != static_cast<long long>(r) * b2sum) {
    std::ostringstream msg;
    msg << "t = " << spec.t0 + spec.tinf << " but r * sum(b_j - 2) = " << r * b2sum;
    push(res.violations, ConstraintTag::kEq5, msg.str());
  }

  res.ok = res.violations.empty();
  if (res.ok) {
    DerivedProblem der;
    der.cyclic = cyc;
    der.d = static_cast<int>(d);
    der.t = spec.t0 + spec.tinf;
    der.k = k;
    der.b = static_cast<int>(bsum);
    for (int i = 0; i < m; ++i)
      der.ram.push_back(std::abs(spec.ord[static_cast<size_t>(i)]) / cyc.f[static_cast<size_t>(i)]);
    std::vector<int> sorted_b = spec.B;
    std::sort(sorted_b.begin(), sorted_b.end());
    for (int bj : sorted_b) {
      int ell = bj - 1;
      if (!der.L.empty() && der.L.back() == ell) {
        der.c.back() += 1;
      } else {
        der.L.push_back(ell);
        der.c.push_back(1);
      }
    }
    res.derived = std::move(der);
  }
  return res;
}

bool spec_less(const ProblemSpec& a, const ProblemSpec& b) {
  auto deg = [](const ProblemSpec& s) {
    long long d = s.t0;
    for (int o : s.ord)
      if (o > 0) d += o;
    return d;
  };
  long long da = deg(a), db = deg(b);
  if (da != db) return da < db;
  if (a.ord != b.ord) return a.ord < b.ord;
  std::vector<int> Ba = a.B, Bb = b.B;
  std::sort(Ba.begin(), Ba.end());
  std::sort(Bb.begin(), Bb.end());
  if (Ba != Bb) return Ba < Bb;
  return a.t0 < b.t0;
}

std::vector<ProblemSpec> enumerate_problems(const CyclicData& base, int d_max) {
  std::vector<ProblemSpec> out;
  if (d_max < 1) return out;
  DerivedCyclic cyc = derive_invariants(base);
  const int m = base.m();
  const int r = base.r;
  const int k = m - 2;
  long long fsum = 0;
  for (int f : cyc.f) fsum += f;

  for (int d = 1; d <= d_max; ++d) {
    // Candidate orders at each marked point: congruent to xi_i mod r,
    // nonzero, bounded by the degree.
    std::vector<std::vector<int>> choices(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
      for (int v = -d; v <= d; ++v) {
        if (v == 0) continue;
        if (mod_pos(v - base.xi[static_cast<size_t>(i)], r) == 0)
          choices[static_cast<size_t>(i)].push_back(v);
      }
      if (choices[static_cast<size_t>(i)].empty()) break;
    }
    if (std::any_of(choices.begin(), choices.end(),
                    [](const std::vector<int>& c) { return c.empty(); }))
      continue;

    std::vector<size_t> idx(static_cast<size_t>(m), 0);
    while (true) {
      long long pos_sum = 0, abs_sum = 0;
      for (int i = 0; i < m; ++i) {
        int v = choices[static_cast<size_t>(i)][idx[static_cast<size_t>(i)]];
        if (v > 0) pos_sum += v;
        abs_sum += std::abs(v);
      }
      long long t0 = d - pos_sum;
      long long tinf = d - (abs_sum - pos_sum);
      if (t0 >= 0 && tinf >= 0 && t0 % r == 0 && tinf % r == 0) {
        long long bnum = 2LL * cyc.genus + 2 * d - 2 - (abs_sum - fsum);
        if (bnum >= 0 && bnum % r == 0) {
          long long b = bnum / r;
          if (b >= k && b - k == (t0 + tinf) / r) {
            std::vector<std::vector<int>> parts;
            std::vector<int> cur;
            partitions_into(static_cast<int>(b), k, 1, cur, parts);
            for (const auto& p : parts) {
              ProblemSpec spec;
              spec.base = base;
              for (int i = 0; i < m; ++i)
                spec.ord.push_back(choices[static_cast<size_t>(i)][idx[static_cast<size_t>(i)]]);
              for (int part : p) spec.B.push_back(part + 1);
              spec.t0 = static_cast<int>(t0);
              spec.tinf = static_cast<int>(tinf);
              out.push_back(std::move(spec));
            }
          }
        }
      }
      // Odometer with the leftmost component most significant.
      int pos = m - 1;
      while (pos >= 0) {
        if (++idx[static_cast<size_t>(pos)] < choices[static_cast<size_t>(pos)].size()) break;
        idx[static_cast<size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
  }
  return out;
}

std::vector<int> lift_exponents(const ProblemSpec& spec) {
  const int r = spec.base.r;
  if (r < 2 || spec.ord.size() != spec.base.xi.size())
    throw InvalidSpec("lift_exponents: malformed spec");
  std::vector<int> out;
  out.reserve(spec.ord.size());
  for (size_t i = 0; i < spec.ord.size(); ++i) {
    int diff = spec.ord[i] - spec.base.xi[i];
    if (mod_pos(diff, r) != 0) {
      std::ostringstream msg;
      msg << "lift_exponents: ord[" << i << "] - xi[" << i << "] = " << diff
          << " not divisible by r = " << r;
      throw CongruenceViolated(msg.str());
    }
    out.push_back(diff / r);
  }
  return out;
}

std::string canonical_spec_string(const ProblemSpec& spec) {
  std::ostringstream os;
  auto list = [&os](const std::vector<int>& v) {
    os << '[';
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) os << ',';
      os << v[i];
    }
    os << ']';
  };
  std::vector<int> sorted_b = spec.B;
  std::sort(sorted_b.begin(), sorted_b.end());
  os << "{\"r\":" << spec.base.r << ",\"xi\":";
  list(spec.base.xi);
  os << ",\"ord\":";
  list(spec.ord);
  os << ",\"B\":";
  list(sorted_b);
  os << ",\"t0\":" << spec.t0 << ",\"tinf\":" << spec.tinf << "}";
  return os.str();
}

FormalDivisor theta_characteristic(const ProblemSpec& spec) {
  ValidationResult val = validate_problem(spec);
  if (!val.ok)
    throw HypothesesNotMet("theta_characteristic: spec fails validation: " +
                           (val.violations.empty() ? std::string("unknown") : val.violations.front().message));
  if (spec.base.r != 2) throw HypothesesNotMet("theta_characteristic: requires r = 2");
  for (int x : spec.base.xi)
    if (x != 1) throw HypothesesNotMet("theta_characteristic: requires all xi_i = 1");
  for (int o : spec.ord)
    if (std::abs(o) % 2 == 0) throw HypothesesNotMet("theta_characteristic: requires all |ord_i| odd");
  for (int bj : spec.B)
    if (bj != 3) throw HypothesesNotMet("theta_characteristic: requires all b_j = 3");

  FormalDivisor div;
  const int k = static_cast<int>(spec.B.size());
  div.h_coeff = k - spec.t0 / 2;
  for (int o : spec.ord) {
    int w = (std::abs(o) - 1) / 2;
    div.point_coeffs.push_back(o < 0 ? w : -(w + 1));
  }
  const int genus = val.derived->cyclic.genus;
  if (div.degree() != genus - 1)
    throw Error("theta_characteristic: internal degree check failed");
  return div;
}

}  // namespace covercount
