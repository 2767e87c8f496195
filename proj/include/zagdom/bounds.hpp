#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "json.hpp"
#include "zagdom/bignat.hpp"
#include "zagdom/errors.hpp"

namespace zagdom {

// Closed-form extremal values of the multiplicative Zagreb indices over trees
// with n vertices and domination number gamma, as exact integers. All regime
// boundaries are integer comparisons (3*gamma vs n, n+3) -- an off-by-one at a
// boundary would silently break the equality characterizations.

enum class TheoremTag { kPi1Lower, kPi2Upper, kPi1Upper, kPi2Lower };

enum class Regime {
  kGeneral,        // bounds valid for every feasible gamma
  kGammaLeThird,   // 3*gamma <= n: star-chain family D governs
  kGammaCeilThird, // gamma = ceil(n/3), 3*gamma > n: the path governs
  kGammaMid,       // 3*gamma >= n+3: degree-{1,2,3} family L governs
};

inline const char* to_string(TheoremTag tag) {
  switch (tag) {
    case TheoremTag::kPi1Lower: return "PI1_LOWER";
    case TheoremTag::kPi2Upper: return "PI2_UPPER";
    case TheoremTag::kPi1Upper: return "PI1_UPPER";
    case TheoremTag::kPi2Lower: return "PI2_LOWER";
  }
  return "?";
}

inline const char* to_string(Regime regime) {
  switch (regime) {
    case Regime::kGeneral: return "GENERAL";
    case Regime::kGammaLeThird: return "GAMMA_LE_N3";
    case Regime::kGammaCeilThird: return "GAMMA_CEIL_N3";
    case Regime::kGammaMid: return "GAMMA_MID";
  }
  return "?";
}

struct BoundValue {
  BigNat value;
  TheoremTag theorem_tag;
  Regime regime;
};

inline nlohmann::ordered_json to_json_value(const BoundValue& b) {
  return {{"value", b.value.str()},
          {"theorem_tag", to_string(b.theorem_tag)},
          {"regime", to_string(b.regime)}};
}

namespace detail {

inline void require_feasible_gamma(int n, int gamma) {
  if (n < 2 || gamma < 1 || 2 * gamma > n) {
    throw InfeasibleGamma("need n >= 2 and 1 <= gamma <= n/2, got n=" + std::to_string(n) +
                          " gamma=" + std::to_string(gamma));
  }
}

inline Regime upper_bound_regime(int n, int gamma) {
  if (3 * gamma <= n) return Regime::kGammaLeThird;
  if (3 * gamma >= n + 3) return Regime::kGammaMid;
  return Regime::kGammaCeilThird;  // 3*gamma in {n+1, n+2} <=> gamma = ceil(n/3), 3 !| n
}

}  // namespace detail

// pi1 >= 4^(gamma-1) * (n-gamma)^2, equality exactly at T(n,gamma).
inline BoundValue pi1_lower(int n, int gamma) {
  detail::require_feasible_gamma(n, gamma);
  BigNat value = big_pow(4, static_cast<unsigned long long>(gamma - 1));
  value *= BigNat(n - gamma) * (n - gamma);
  return {value, TheoremTag::kPi1Lower, Regime::kGeneral};
}

// pi2 <= 4^(gamma-1) * (n-gamma)^(n-gamma), equality exactly at T(n,gamma).
inline BoundValue pi2_upper(int n, int gamma) {
  detail::require_feasible_gamma(n, gamma);
  BigNat value = big_pow(4, static_cast<unsigned long long>(gamma - 1));
  value *= big_pow(static_cast<unsigned long long>(n - gamma),
                   static_cast<unsigned long long>(n - gamma));
  return {value, TheoremTag::kPi2Upper, Regime::kGeneral};
}

// Sharp upper bound on pi1, piecewise in gamma.
inline BoundValue pi1_upper(int n, int gamma) {
  detail::require_feasible_gamma(n, gamma);
  Regime regime = detail::upper_bound_regime(n, gamma);
  BigNat value;
  switch (regime) {
    case Regime::kGammaLeThird: {
      unsigned long long q = static_cast<unsigned long long>((n - gamma) / gamma);
      long long count_q = 2LL * gamma - n + static_cast<long long>(gamma) * static_cast<long long>(q);
      long long count_q1 = n - gamma - static_cast<long long>(gamma) * static_cast<long long>(q);
      value = big_pow(4, static_cast<unsigned long long>(2 * gamma - 2));
      value *= big_pow(q, static_cast<unsigned long long>(2 * count_q));
      value *= big_pow(q + 1, static_cast<unsigned long long>(2 * count_q1));
      break;
    }
    case Regime::kGammaCeilThird:
      value = big_pow(4, static_cast<unsigned long long>(n - 2));
      break;
    default:
      value = big_pow(4, static_cast<unsigned long long>(3 * n - 6 * gamma + 2));
      value *= big_pow(9, static_cast<unsigned long long>(3 * gamma - n - 2));
      break;
  }
  return {value, TheoremTag::kPi1Upper, regime};
}

// The (q+1)-degree-class exponent of the sharp pi2 lower bound in the
// gamma <= n/3 regime. The degree-consistent exponent (q+1)*(n-gamma-gamma*q)
// is what members of D(n,gamma) actually realize -- each of the
// n-gamma-gamma*q vertices of degree q+1 contributes (q+1)^(q+1) to the vertex
// form -- and is the shipped default. The as-printed variant uses
// q*(n-gamma-gamma*q); it never exceeds the consistent one, so it stays a
// valid (non-sharp) lower bound, and the harness reports which variant the
// family attains.
enum class Pi2LowerVariant { kDegreeConsistent, kAsPrinted };

inline BoundValue pi2_lower(int n, int gamma,
                            Pi2LowerVariant variant = Pi2LowerVariant::kDegreeConsistent) {
  detail::require_feasible_gamma(n, gamma);
  Regime regime = detail::upper_bound_regime(n, gamma);
  BigNat value;
  switch (regime) {
    case Regime::kGammaLeThird: {
      unsigned long long q = static_cast<unsigned long long>((n - gamma) / gamma);
      unsigned long long count_q = static_cast<unsigned long long>(
          2LL * gamma - n + static_cast<long long>(gamma) * static_cast<long long>(q));
      unsigned long long count_q1 = static_cast<unsigned long long>(
          n - gamma - static_cast<long long>(gamma) * static_cast<long long>(q));
      unsigned long long q1_exponent =
          (variant == Pi2LowerVariant::kDegreeConsistent) ? (q + 1) * count_q1 : q * count_q1;
      value = big_pow(4, static_cast<unsigned long long>(2 * gamma - 2));
      value *= big_pow(q, q * count_q);
      value *= big_pow(q + 1, q1_exponent);
      break;
    }
    case Regime::kGammaCeilThird:
      value = big_pow(4, static_cast<unsigned long long>(n - 2));
      break;
    default:
      value = big_pow(4, static_cast<unsigned long long>(3 * n - 6 * gamma + 2));
      value *= big_pow(27, static_cast<unsigned long long>(3 * gamma - n - 2));
      break;
  }
  return {value, TheoremTag::kPi2Lower, regime};
}

// Exact-arithmetic monotonicity checks behind the bound proofs:
//   f(x) = x/(x+m) strictly increases and g(x) = x^x/(x+m)^(x+m) strictly
// decreases for x, m > 0. Samples are grouped by m and compared pairwise along
// ascending x by cross-multiplication, so no rounding is involved.
struct MonotonicitySample {
  long long x;
  long long m;
};

inline bool check_monotonicity_props(const std::vector<MonotonicitySample>& samples) {
  std::vector<MonotonicitySample> sorted = samples;
  for (const auto& s : sorted) {
    if (s.x <= 0 || s.m <= 0) {
      throw DomainError("samples must be positive, got x=" + std::to_string(s.x) +
                        " m=" + std::to_string(s.m));
    }
  }
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    return a.m != b.m ? a.m < b.m : a.x < b.x;
  });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    const auto& lo = sorted[i - 1];
    const auto& hi = sorted[i];
    if (lo.m != hi.m || lo.x == hi.x) continue;
    // f increasing: x1*(x2+m) < x2*(x1+m)
    BigNat lhs_f = BigNat(lo.x) * (hi.x + lo.m);
    BigNat rhs_f = BigNat(hi.x) * (lo.x + lo.m);
    if (!(lhs_f < rhs_f)) return false;
    // g decreasing: x1^x1*(x2+m)^(x2+m) > x2^x2*(x1+m)^(x1+m)
    BigNat lhs_g = big_pow(static_cast<unsigned long long>(lo.x),
                           static_cast<unsigned long long>(lo.x)) *
                   big_pow(static_cast<unsigned long long>(hi.x + lo.m),
                           static_cast<unsigned long long>(hi.x + lo.m));
    BigNat rhs_g = big_pow(static_cast<unsigned long long>(hi.x),
                           static_cast<unsigned long long>(hi.x)) *
                   big_pow(static_cast<unsigned long long>(lo.x + lo.m),
                           static_cast<unsigned long long>(lo.x + lo.m));
    if (!(lhs_g > rhs_g)) return false;
  }
  return true;
}

}  // namespace zagdom
