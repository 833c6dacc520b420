#include "wcomp/verification.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "wcomp/dynamics.hpp"
#include "wcomp/examples.hpp"

namespace wcomp {

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

using ClaimFn = std::function<Outcome(std::mt19937_64&)>;

std::string fmt(double x) {
  std::ostringstream out;
  out.precision(6);
  out << x;
  return out.str();
}

TaylorPoly random_member(const AlphaParam& alpha, std::mt19937_64& rng, int deg = kDefaultDegree) {
  std::uniform_real_distribution<double> margin(0.1, 0.9);
  return member_from_schwarz(alpha, random_schwarz(rng(), 6, margin(rng)), deg);
}

Outcome claim_s0(std::mt19937_64&) {
  const double s0 = s0_root();
  const double residual = std::abs(s0_polynomial(s0));
  const bool ok = std::abs(s0 - 0.2648) < 5e-3 && residual < 1e-10;
  return {ok, "s0 = " + fmt(s0) + ", residual " + fmt(residual)};
}

Outcome claim_thresholds(std::mt19937_64&) {
  int flips = 0;
  int total = 0;
  auto expect = [&](bool below, bool above) {
    total += 2;
    flips += below ? 0 : 1;
    flips += above ? 1 : 0;
  };
  // below threshold -> gate closed for K, open for norm gates
  const double lo = 1.0 - 1e-3;
  const double hi = 1.0 + 1e-3;
  auto k_gate = [](double K) {
    try {
      example3_symbols(0.5, 0.5, K);
      return true;
    } catch (const std::invalid_argument&) {
      return false;
    }
  };
  expect(k_gate(kQuadraticFamilyK * lo), k_gate(kQuadraticFamilyK * hi));
  expect(!alpha0_family_gate(kSqrt2Minus1 * lo), !alpha0_family_gate(kSqrt2Minus1 * hi));
  const double s0 = s0_root();
  expect(!negative_alpha_family_gate(s0 * lo), !negative_alpha_family_gate(s0 * hi));
  for (double A : {0.1, 0.3, 0.5, 0.8}) {
    const double B = (1.0 - A) / (1.0 + A);
    expect(!norm_condition_examples(A, B * lo), !norm_condition_examples(A, B * hi));
  }
  return {flips == total, std::to_string(flips) + "/" + std::to_string(total) + " gate sides correct"};
}

Outcome claim_oracle(std::mt19937_64& rng) {
  int checked = 0;
  int agree = 0;
  while (checked < 500) {
    const auto sym = draw_random_symbols(rng());
    const cplx z = random_disk_point(rng());
    const double m = criterion_margin(sym, z);
    if (std::abs(m) <= 1e-6) continue;
    ++checked;
    agree += (m > 0.0) == (lambda_oracle(sym, z) < 1.0) ? 1 : 0;
  }
  return {agree == checked, std::to_string(agree) + "/" + std::to_string(checked) + " sign agreements"};
}

Outcome claim_alpha0(std::mt19937_64& rng) {
  const AlphaParam zero(0.0, 0.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int checked = 0;
  int agree = 0;
  while (checked < 1000) {
    const cplx w = random_disk_point(rng(), 1.0);
    const cplx p = random_disk_point(rng(), 1.0);
    const double m = margin_from_values(zero, w, p);
    const double s = alpha0_criterion(w, p);
    if (std::abs(m) <= 1e-6) continue;
    ++checked;
    agree += (m > 0.0) == (s > 0.0) ? 1 : 0;
  }
  return {agree == checked, std::to_string(agree) + "/" + std::to_string(checked) + " sign agreements"};
}

Outcome claim_identities(std::mt19937_64& rng) {
  double worst_split = 0.0;
  double worst_eq3 = 0.0;
  double worst_p = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const auto alpha = random_alpha(rng());
    const cplx w = random_disk_point(rng(), 1.0);
    const cplx a = alpha.value();
    const cplx q = q_value(alpha, w);
    worst_split = std::max(worst_split, std::abs(q - q_value_split(alpha, w)));
    const cplx psi = (1.0 + a * w) / (1.0 - w);
    worst_eq3 = std::max(worst_eq3, std::abs(-q - (std::norm(1.0 - w) * psi + (std::norm(w) - 1.0))));
    worst_p = std::max(worst_p, std::abs(p_value(alpha, w) - p_value_split(alpha, w)));
  }
  const bool ok = worst_split <= 1e-12 && worst_eq3 <= 1e-12 && worst_p <= 1e-12;
  return {ok, "max deviations: q split " + fmt(worst_split) + ", -q identity " + fmt(worst_eq3) + ", P forms " +
                  fmt(worst_p)};
}

Outcome claim_quadratic(std::mt19937_64&) {
  const auto sym = example3_symbols(0.5, 0.5, 5.0);
  const auto report = check_preservation(sym, default_criterion_grid());
  return {report.verdict == Verdict::kPass,
          std::string(to_string(report.verdict)) + ", min margin " + fmt(report.min_margin)};
}

Outcome claim_families(std::mt19937_64& rng) {
  const auto grid = default_criterion_grid();
  int passed = 0;
  int total = 0;
  double worst = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 20; ++i) {
    const OperatorSymbols draws[] = {draw_norm_family(rng()), draw_norm_family(rng()), draw_alpha0_family(rng()),
                                     draw_negative_alpha_family(rng())};
    for (const auto& sym : draws) {
      const auto report = check_preservation(sym, grid);
      worst = std::min(worst, report.min_margin);
      passed += report.verdict == Verdict::kPass ? 1 : 0;
      ++total;
    }
  }
  return {passed == total, std::to_string(passed) + "/" + std::to_string(total) + " PASS, worst margin " + fmt(worst)};
}

Outcome claim_coefficients(std::mt19937_64& rng) {
  int violations = 0;
  for (int i = 0; i < 200; ++i) {
    const auto alpha = random_alpha(rng());
    if (!coefficient_bound_check(alpha, random_member(alpha, rng)).holds()) ++violations;
  }
  double worst_equality = 0.0;
  for (int i = 0; i < 32; ++i) {
    const auto alpha = random_alpha(rng());
    const auto f = extreme_point(alpha, std::polar(1.0, 2.0 * std::numbers::pi * i / 32.0));
    const double bound = std::abs(1.0 + alpha.value());
    for (int n = 1; n <= f.degree(); ++n) {
      worst_equality = std::max(worst_equality, std::abs(std::abs(f.coeff(n)) - bound));
    }
  }
  return {violations == 0 && worst_equality <= 1e-9,
          std::to_string(violations) + " violations in 200 members; extreme-point equality gap " +
              fmt(worst_equality)};
}

Outcome claim_growth(std::mt19937_64& rng) {
  const auto grid = member_grid();
  int failures = 0;
  for (int i = 0; i < 50; ++i) {
    const auto alpha = random_alpha(rng());
    if (!growth_bound_check(alpha, random_member(alpha, rng), grid).holds()) ++failures;
  }
  return {failures == 0, std::to_string(failures) + " of 50 members violate the growth estimate"};
}

Outcome claim_convexity(std::mt19937_64& rng) {
  const auto grid = member_grid();
  int failures = 0;
  for (int i = 0; i < 50; ++i) {
    const auto alpha = random_alpha(rng());
    const auto f = random_member(alpha, rng);
    const auto g = random_member(alpha, rng);
    for (double t : {0.25, 0.5, 0.75}) {
      if (!check_membership(alpha, t * f + (1.0 - t) * g, grid).is_member) ++failures;
    }
  }
  return {failures == 0, std::to_string(failures) + " of 150 convex combinations left P_alpha"};
}

Outcome claim_composition(std::mt19937_64& rng) {
  const auto grid = member_grid();
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int correct = 0;
  for (int i = 0; i < 20; ++i) {
    const auto alpha = random_alpha(rng());
    auto phi = random_schwarz(rng(), 4, 0.5);
    const bool shifted = i % 2 == 1;
    if (shifted) {
      phi += TaylorPoly::constant(std::polar(0.05 + 0.3 * unit(rng), 2.0 * std::numbers::pi * unit(rng)));
    }
    const auto image = compose(extreme_point(alpha, 1.0), phi, kDefaultDegree);
    const bool member = check_membership(alpha, image, grid).is_member;
    correct += member != shifted ? 1 : 0;
  }
  return {correct == 20, std::to_string(correct) + "/20 classified as expected"};
}

Outcome claim_inner_phi(std::mt19937_64& rng) {
  const auto grid = default_criterion_grid();
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int rejected = 0;
  for (int i = 0; i < 10; ++i) {
    const auto alpha = random_alpha(rng());
    const auto phi = random_blaschke(rng(), 1 + i % 3);
    const auto omega = random_schwarz(rng(), 4, 0.9 * (1.0 - unit(rng)));
    const auto report = check_preservation(OperatorSymbols(alpha, omega, phi), grid);
    const bool near_boundary = std::abs(report.witness) >= grid.boundary_radii.front();
    rejected += report.verdict != Verdict::kPass && report.min_margin < 0.0 && near_boundary ? 1 : 0;
  }
  return {rejected == 10, std::to_string(rejected) + "/10 inner-phi operators rejected near the boundary"};
}

Outcome claim_inner_omega(std::mt19937_64& rng) {
  const auto grid = default_criterion_grid();
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int rejected = 0;
  for (int i = 0; i < 10; ++i) {
    const AlphaParam alpha(-0.95 + 1.95 * unit(rng), 0.0);
    const auto omega = random_blaschke(rng(), 1 + i % 3);
    const auto phi = random_schwarz(rng(), 4, 0.9 * (1.0 - unit(rng)));
    const auto report = check_preservation(OperatorSymbols(alpha, omega, phi), grid);
    const bool near_boundary = std::abs(report.witness) >= grid.boundary_radii.front();
    rejected += report.verdict != Verdict::kPass && report.min_margin < 0.0 && near_boundary ? 1 : 0;
  }
  return {rejected == 10, std::to_string(rejected) + "/10 inner-omega operators (real alpha) rejected"};
}

Outcome claim_fixed_point(std::mt19937_64&) {
  const AlphaParam half(0.5, 0.0);
  const OperatorSymbols sym(half, TaylorPoly({0.0, 0.125}), TaylorPoly({0.0, 0.25}));
  const auto a = iterate_to_fixed_point(sym, extreme_point(half, 1.0));
  const auto b = iterate_to_fixed_point(sym, extreme_point(half, -1.0));
  const double gap = coeff_distance(a.limit(), b.limit());
  const bool weighted_ok = a.converged && a.steps < 200 && a.residuals.back() < 1e-10 && b.converged && gap < 1e-9;

  const OperatorSymbols plain(half, TaylorPoly({0.0}), TaylorPoly({0.0, 0.5}));
  const auto c = iterate_to_fixed_point(plain, extreme_point(half, 1.0));
  double worst = 0.0;
  for (int k = 1; k <= c.limit().degree(); ++k) worst = std::max(worst, std::abs(c.limit().coeff(k)));
  const bool plain_ok = c.converged && worst < 1e-9 && std::abs(c.limit().coeff(0) - 1.0) < 1e-9;
  return {weighted_ok && plain_ok, std::to_string(a.steps) + " steps, start gap " + fmt(gap) +
                                       "; composition-only limit max |c_k| " + fmt(worst)};
}

Outcome claim_rotation(std::mt19937_64& rng) {
  const auto rc = classify_rotation(TaylorPoly({0.0, -1.0}));
  if (rc.kind != RotationKind::kRootOfUnity || rc.order != 2) {
    return {false, "phi(z) = -z not classified as ROOT_OF_UNITY(2)"};
  }
  const auto z_squared = TaylorPoly({0.0, 0.0, 1.0});
  int correct = 0;
  for (int i = 0; i < 50; ++i) {
    const auto alpha = random_alpha(rng());
    const auto g = random_member(alpha, rng, 32);
    const bool even = i % 2 == 0;
    const auto f = even ? compose(g, z_squared, kDefaultDegree) : g;
    correct += in_rotation_fixed_set(rc, f) == even ? 1 : 0;
  }
  return {correct == 50, std::to_string(correct) + "/50 fixed-set decisions correct"};
}

struct Claim {
  ClaimInfo info;
  ClaimFn run;
};

const std::vector<Claim>& claims() {
  static const std::vector<Claim> all = {
      {{"s0-root", "s0 ~ 0.2648 is the positive root of 2x^4+8x^3+12x^2-1"}, claim_s0},
      {{"thresholds", "gates flip across sqrt2-1, 2+sqrt5, s0 and A+B+AB=1"}, claim_thresholds},
      {{"oracle-equivalence", "criterion margin sign matches sup_lambda |omega_lambda| < 1"}, claim_oracle},
      {{"alpha0-factorization", "alpha=0 criterion equals |1-w||phi|+|w| < 1"}, claim_alpha0},
      {{"identities", "q real/imag split, -q identity, two forms of P"}, claim_identities},
      {{"quadratic-family", "phi=z(z+1)/2, K=5 preserves P_1"}, claim_quadratic},
      {{"example-families", "norm, alpha=0 and negative-alpha families preserve P_alpha"}, claim_families},
      {{"coefficient-bound", "|a_n| <= |1+alpha|, sharp at extreme points"}, claim_coefficients},
      {{"growth-bound", "(1-|alpha z|)/(1+|z|) <= |f| <= (1+|alpha z|)/(1-|z|)"}, claim_growth},
      {{"convexity", "convex combinations of members are members"}, claim_convexity},
      {{"composition-schwarz", "C_phi(h_alpha) in P_alpha iff phi(0) = 0"}, claim_composition},
      {{"inner-phi", "inner phi with omega != 0 never preserves"}, claim_inner_phi},
      {{"inner-omega", "real alpha, inner omega with phi != 0 never preserves"}, claim_inner_omega},
      {{"fixed-point", "iteration reaches the unique fixed point"}, claim_fixed_point},
      {{"rotation-fixed-set", "phi=-z fixes exactly the even members"}, claim_rotation},
  };
  return all;
}

}  // namespace

const std::vector<ClaimInfo>& verification_claims() {
  static const std::vector<ClaimInfo> infos = [] {
    std::vector<ClaimInfo> out;
    for (const auto& c : claims()) out.push_back(c.info);
    return out;
  }();
  return infos;
}

std::vector<ClaimResult> run_verification(std::uint64_t seed, const std::vector<std::string>& only) {
  for (const auto& id : only) {
    const auto& all = claims();
    if (std::none_of(all.begin(), all.end(), [&](const Claim& c) { return c.info.id == id; })) {
      throw std::invalid_argument("unknown claim id \"" + id + "\"");
    }
  }
  std::vector<ClaimResult> out;
  for (const auto& c : claims()) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.info.id) == only.end()) continue;
    // Each claim gets its own stream so that --only does not shift the draws.
    std::mt19937_64 rng(seed ^ std::hash<std::string>{}(c.info.id));
    const auto start = std::chrono::steady_clock::now();
    ClaimResult r{c.info.id, c.info.claim, false, "", 0.0};
    try {
      const auto outcome = c.run(rng);
      r.passed = outcome.passed;
      r.detail = outcome.detail;
    } catch (const std::exception& e) {
      r.detail = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace wcomp
