#include "wcomp/examples.hpp"

#include <algorithm>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "wcomp/numerics.hpp"

namespace wcomp {

namespace {

void require_unit_interval(double x, const char* name) {
  if (!(x >= 0.0 && x < 1.0)) {
    std::ostringstream msg;
    msg << name << " must lie in [0,1), got " << x;
    throw std::invalid_argument(msg.str());
  }
}

// Schwarz polynomial with sup norm `norm` (0 gives the zero polynomial).
TaylorPoly schwarz_with_norm(std::uint64_t seed, int deg, double norm) {
  if (norm <= 0.0) {
    return TaylorPoly::constant(0.0, deg);
  }
  return random_schwarz(seed, deg, 1.0 - norm);
}

// Analytic g with sup |g| <= 0.9, g(0) not necessarily 0.
TaylorPoly bounded_factor(std::uint64_t seed, int deg) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const cplx c0 = std::polar(0.4 * unit(rng), 2.0 * std::numbers::pi * unit(rng));
  return random_schwarz(seed ^ 0x9e3779b97f4a7c15ULL, deg, 0.5) + TaylorPoly::constant(c0);
}

// Pair (larger, smaller) with |smaller| <= 0.9 |larger| pointwise and ||larger|| = norm.
std::pair<TaylorPoly, TaylorPoly> dominated_pair(std::uint64_t seed, int deg, double norm) {
  auto larger = schwarz_with_norm(seed, deg, norm);
  const auto g = bounded_factor(seed + 17, std::max(1, deg / 2));
  auto smaller = multiply(larger, g, larger.degree() + g.degree());
  return {std::move(larger), std::move(smaller)};
}

}  // namespace

bool norm_condition_examples(double omega_norm, double phi_norm) {
  require_unit_interval(omega_norm, "||omega||");
  require_unit_interval(phi_norm, "||phi||");
  return omega_norm + phi_norm + omega_norm * phi_norm < 1.0;
}

OperatorSymbols example3_symbols(double a, double b, double K, int deg) {
  if (a == 0.0 || b == 0.0) {
    throw std::invalid_argument("example3_symbols: a and b must be nonzero");
  }
  if (std::abs(std::abs(a) + std::abs(b) - 1.0) > 1e-12) {
    throw std::invalid_argument("example3_symbols: |a| + |b| must equal 1");
  }
  if (!(K > kQuadraticFamilyK)) {
    std::ostringstream msg;
    msg << "example3_symbols: K must exceed 2 + sqrt(5) = " << kQuadraticFamilyK << ", got " << K;
    throw std::invalid_argument(msg.str());
  }
  if (deg < 2) {
    throw std::invalid_argument("example3_symbols: degree must be at least 2");
  }
  const double c = -a * b / K;
  const double d = (1.0 - (a * a + b * b)) / K;

  // Bounds the sufficiency argument rests on.
  if (std::abs(c) + std::abs(d) > 1.0 / K + 1e-15) {
    throw std::logic_error("example3_symbols: |c| + |d| exceeds 1/K");
  }
  const auto phi = TaylorPoly({0.0, b, a}).truncated(deg);
  const auto omega = TaylorPoly({0.0, d, c}).truncated(deg);
  for (const auto& z : DiskGrid::interior(8, 64, 0.999).samples()) {
    const cplx w = omega(z);
    const double x = z.real();
    if (std::abs(w.imag()) > std::abs(2.0 * c * x + d) + 1e-15 || std::abs(w) > std::abs(c) + std::abs(d) + 1e-15) {
      std::ostringstream msg;
      msg << "example3_symbols: intermediate bound violated at z = " << z;
      throw std::logic_error(msg.str());
    }
  }
  return OperatorSymbols(AlphaParam(1.0, 0.0), omega, phi);
}

double s0_polynomial(double x) { return ((2.0 * x + 8.0) * x + 12.0) * x * x - 1.0; }

double s0_root() {
  // P(0) = -1 < 0 < 21 = P(1) and P is increasing on (0, inf).
  return bisect(s0_polynomial, 0.0, 1.0, 1e-15);
}

NegativeAlphaVerdict negative_alpha_condition(double omega_norm, double phi_norm, double alpha) {
  if (!(alpha > -1.0 && alpha < 0.0)) {
    std::ostringstream msg;
    msg << "negative_alpha_condition: alpha must lie in (-1, 0), got " << alpha;
    throw std::invalid_argument(msg.str());
  }
  require_unit_interval(omega_norm, "||omega||");
  require_unit_interval(phi_norm, "||phi||");
  const double A = omega_norm;
  const double B = phi_norm;
  const double s = A + B + A * B;
  NegativeAlphaVerdict out;
  out.lhs = -alpha * (s * s + 4.0 * A * B) + s * s - 1.0;
  out.holds = out.lhs < 0.0;
  out.simplified_lhs = s0_polynomial(std::max(A, B));
  out.simplified_holds = out.simplified_lhs < 0.0;
  return out;
}

bool alpha0_family_gate(double larger_norm) { return larger_norm >= 0.0 && larger_norm < kSqrt2Minus1; }

bool negative_alpha_family_gate(double larger_norm) { return larger_norm >= 0.0 && larger_norm < s0_root(); }

OperatorSymbols draw_norm_family(std::uint64_t seed, int deg) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double alpha = unit(rng);
  const double A = 0.05 + 0.85 * unit(rng);
  const double B = 0.95 * (1.0 - A) / (1.0 + A) * (0.1 + 0.9 * unit(rng));
  // One region A + B + AB < 1 covers every alpha in [0, 1].
  auto omega = schwarz_with_norm(seed * 2 + 1, deg, A);
  auto phi = schwarz_with_norm(seed * 2 + 2, deg, B);
  return OperatorSymbols(AlphaParam(alpha, 0.0), std::move(omega), std::move(phi));
}

OperatorSymbols draw_alpha0_family(std::uint64_t seed, int deg) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double norm = kSqrt2Minus1 * (0.05 + 0.9 * unit(rng));
  auto [omega, phi] = dominated_pair(seed * 3 + 1, deg, norm);
  return OperatorSymbols(AlphaParam(0.0, 0.0), std::move(omega), std::move(phi));
}

OperatorSymbols draw_negative_alpha_family(std::uint64_t seed, int deg) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double alpha = -(0.01 + 0.98 * unit(rng));
  const double norm = s0_root() * (0.05 + 0.9 * unit(rng));
  const bool omega_dominates = unit(rng) < 0.5;
  auto [larger, smaller] = dominated_pair(seed * 5 + 1, deg, norm);
  if (omega_dominates) {
    return OperatorSymbols(AlphaParam(alpha, 0.0), std::move(larger), std::move(smaller));
  }
  return OperatorSymbols(AlphaParam(alpha, 0.0), std::move(smaller), std::move(larger));
}

OperatorSymbols draw_random_symbols(std::uint64_t seed, int deg) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const auto alpha = random_alpha(rng());
  const double omega_norm = 0.05 + 0.9 * unit(rng);
  const double phi_norm = 0.05 + 0.9 * unit(rng);
  auto omega = schwarz_with_norm(rng(), deg, omega_norm);
  auto phi = schwarz_with_norm(rng(), deg, phi_norm);
  return OperatorSymbols(alpha, std::move(omega), std::move(phi));
}

cplx random_disk_point(std::uint64_t seed, double r_max) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double r = r_max * std::sqrt(unit(rng));
  return std::polar(r, 2.0 * std::numbers::pi * unit(rng));
}

}  // namespace wcomp
