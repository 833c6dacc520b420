#pragma once

// Closed-form sufficient conditions for preservation and the symbol families
// built from them.

#include <cmath>
#include <cstdint>

#include "wcomp/criterion.hpp"

namespace wcomp {

// Threshold on |omega| for the alpha = 0 family with |phi| <= |omega|.
inline const double kSqrt2Minus1 = std::sqrt(2.0) - 1.0;
// Lower bound on K for the quadratic family preserving P_1.
inline const double kQuadraticFamilyK = 2.0 + std::sqrt(5.0);

// A + B + AB < 1 for A = ||omega||, B = ||phi|| in [0,1); sufficient for
// every alpha in [0,1]. Throws std::invalid_argument outside [0,1).
bool norm_condition_examples(double omega_norm, double phi_norm);

// phi(z) = z(a z + b), omega(z) = z(c z + d) with c = -ab/K,
// d = (1 - (a^2 + b^2))/K, bundled with alpha = 1. Requires a, b nonzero,
// |a| + |b| = 1 and K > 2 + sqrt(5). Coefficients are zero-padded to deg.
OperatorSymbols example3_symbols(double a, double b, double K, int deg = 2);

// Unique positive root of 2x^4 + 8x^3 + 12x^2 - 1, by bisection on [0, 1].
double s0_root();
double s0_polynomial(double x);

struct NegativeAlphaVerdict {
  // -alpha[(A+B+AB)^2 + 4AB] + (A+B+AB)^2 - 1
  double lhs = 0.0;
  bool holds = false;
  // 2M^4 + 8M^3 + 12M^2 - 1 with M = max(A, B); negative implies `holds`.
  double simplified_lhs = 0.0;
  bool simplified_holds = false;
};

// Requires alpha in (-1, 0) and A, B in [0, 1).
NegativeAlphaVerdict negative_alpha_condition(double omega_norm, double phi_norm, double alpha);

// Gates of the pointwise families: |phi| <= |omega| < bound, or with the roles swapped.
bool alpha0_family_gate(double larger_norm);
bool negative_alpha_family_gate(double larger_norm);

// Random symbols inside each family's sufficient region. All draws are
// deterministic in seed and satisfy the gate with a relative safety gap.
OperatorSymbols draw_norm_family(std::uint64_t seed, int deg = 6);        // alpha in [0,1], A+B+AB < 1
OperatorSymbols draw_alpha0_family(std::uint64_t seed, int deg = 6);      // alpha = 0, |phi| <= |omega| < sqrt2 - 1
OperatorSymbols draw_negative_alpha_family(std::uint64_t seed, int deg = 6);  // alpha in (-1,0), below s0

// Generic symbols for property checks: alpha from random_alpha, omega and
// phi Schwarz polynomials with sup norms uniform in [0.05, 0.95].
OperatorSymbols draw_random_symbols(std::uint64_t seed, int deg = 5);
// Point with |z| <= r_max, uniform in area.
cplx random_disk_point(std::uint64_t seed, double r_max = 0.999);

}  // namespace wcomp
