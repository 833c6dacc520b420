// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "wcomp/examples.hpp"
#include "wcomp/verification.hpp"

using namespace wcomp;

namespace {

constexpr std::uint64_t kSeed = 20240601;

struct Result {
  bool passed;
  std::string detail;
};

Result claims(const std::vector<std::string>& ids) {
  bool ok = true;
  std::string detail;
  for (const auto& r : run_verification(kSeed, ids)) {
    ok = ok && r.passed;
    if (!detail.empty()) detail += "; ";
    detail += r.id + ": " + r.detail;
  }
  return {ok, detail};
}

Result s0_criterion() {
  const auto start = std::chrono::steady_clock::now();
  const double s0 = s0_root();
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  const double residual = std::abs(s0_polynomial(s0));
  const bool ok = std::abs(s0 - 0.2648) < 5e-3 && residual < 1e-10 && ms < 1.0;
  std::ostringstream out;
  out << "s0 = " << std::setprecision(10) << s0 << ", residual " << residual << ", " << ms << " ms";
  return {ok, out.str()};
}

Result thresholds_criterion() {
  const bool exact = kSqrt2Minus1 == std::sqrt(2.0) - 1.0 && kQuadraticFamilyK == 2.0 + std::sqrt(5.0);
  auto r = claims({"thresholds"});
  return {exact && r.passed, std::string(exact ? "closed forms exact" : "closed forms differ") + "; " + r.detail};
}

Result default_grid_reaches_boundary() {
  const auto grid = default_criterion_grid();
  const bool ok = !grid.boundary_radii.empty() && grid.boundary_radii.back() == 1.0 - std::ldexp(1.0, -20);
  return {ok, ok ? "grid reaches 1 - 2^-20" : "default grid misses 1 - 2^-20"};
}

struct Criterion {
  int number;
  const char* name;
  double limit_seconds;  // 0: no runtime limit
  std::function<Result()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "s0 reproduction", 0.0, s0_criterion},
      {2, "threshold reproduction", 1.0, thresholds_criterion},
      {3, "oracle equivalence", 30.0, [] { return claims({"oracle-equivalence"}); }},
      {4, "alpha=0 factorization", 5.0, [] { return claims({"alpha0-factorization"}); }},
      {5, "identity suite", 0.0, [] { return claims({"identities"}); }},
      {6, "closed-form examples end-to-end", 60.0,
       [] {
         const auto grid = default_grid_reaches_boundary();
         auto r = claims({"quadratic-family", "example-families"});
         return Result{grid.passed && r.passed, grid.detail + "; " + r.detail};
       }},
      {7, "coefficient, growth, convexity", 0.0,
       [] { return claims({"coefficient-bound", "growth-bound", "convexity"}); }},
      {8, "composition and inner-symbol structure", 0.0,
       [] { return claims({"composition-schwarz", "inner-phi", "inner-omega"}); }},
      {9, "fixed points and rotations", 0.0, [] { return claims({"fixed-point", "rotation-fixed-set"}); }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Result r{false, ""};
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r.detail = std::string("error: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0.0 && seconds >= c.limit_seconds) {
      r.passed = false;
      r.detail += "; over the " + std::to_string(c.limit_seconds) + " s limit";
    }
    failures += r.passed ? 0 : 1;
    std::cout << (r.passed ? "PASS" : "FAIL") << "  criterion " << c.number << " (" << c.name << ", " << std::fixed
              << std::setprecision(3) << seconds << " s): " << std::defaultfloat << r.detail << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
