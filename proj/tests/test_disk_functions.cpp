#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "wcomp/disk_functions.hpp"

using namespace wcomp;

namespace {

// Brute-force max modulus on the circle, independent of sup_norm's refinement.
double scan_max_modulus(const DiskFunction& f, int n) {
  double best = 0.0;
  for (int i = 0; i < n; ++i) {
    best = std::max(best, std::abs(eval(f, std::polar(1.0, 2.0 * std::numbers::pi * i / n))));
  }
  return best;
}

TaylorPoly random_poly(std::mt19937_64& rng, int deg) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<cplx> cs;
  for (int k = 0; k <= deg; ++k) cs.emplace_back(normal(rng), normal(rng));
  return TaylorPoly(std::move(cs));
}

double l1(const TaylorPoly& f) {
  double s = 0.0;
  for (const auto& c : f.coeffs()) s += std::abs(c);
  return s;
}

}  // namespace

TEST_CASE("eval") {
  SUBCASE("truncated h_alpha series at the origin") {
    const cplx alpha{0.3, -0.2};
    CHECK(eval(TaylorPoly({1.0, 1.0 + alpha}), 0.0) == cplx{1.0});
  }
  SUBCASE("identity Blaschke factor") {
    const auto b = BlaschkeProduct({0.0});
    const cplx v = eval(b, cplx{0.0, 0.5});
    CHECK(v.real() == doctest::Approx(0.0));
    CHECK(v.imag() == doctest::Approx(0.5));
  }
  SUBCASE("hand-evaluated polynomial") {
    CHECK(std::abs(eval(TaylorPoly({0.0, 0.5}), 0.8) - 0.4) < 1e-15);
  }
  SUBCASE("Blaschke factor with nonzero zero") {
    const cplx a{0.3, 0.4};
    const cplx z{-0.2, 0.1};
    const auto b = BlaschkeProduct({a}, 0.7);
    const cplx expected = std::polar(1.0, 0.7) * (z - a) / (1.0 - std::conj(a) * z);
    CHECK(std::abs(b(z) - expected) < 1e-15);
  }
}

TEST_CASE("constructors reject invalid input") {
  CHECK_THROWS_AS(BlaschkeProduct({cplx{1.0, 0.0}}), std::invalid_argument);
  CHECK_THROWS_AS(BlaschkeProduct({cplx{0.0, 1.5}}), std::invalid_argument);
  CHECK_THROWS_AS(TaylorPoly({cplx{std::nan(""), 0.0}}), std::invalid_argument);
  CHECK(TaylorPoly(std::vector<cplx>{}).degree() == 0);
}

TEST_CASE("compose") {
  SUBCASE("identity outer") {
    const auto g = TaylorPoly({0.0, 0.3, cplx{0.1, 0.2}, -0.05});
    CHECK(compose(TaylorPoly::identity(5), g, 2) == g.truncated(2));
  }
  SUBCASE("identity inner") {
    const auto g = TaylorPoly({1.0, 0.3, cplx{0.1, 0.2}, -0.05});
    CHECK(coeff_distance(compose(g, TaylorPoly::identity(), 5), g.truncated(5)) < 1e-15);
  }
  SUBCASE("(z/2) + (z/2)^2") {
    const auto out = compose(TaylorPoly({0.0, 1.0, 1.0}), TaylorPoly({0.0, 0.5}), 2);
    CHECK(out == TaylorPoly({0.0, 0.5, 0.25}));
  }
  SUBCASE("rejects negative degree") {
    CHECK_THROWS_AS(compose(TaylorPoly::identity(), TaylorPoly::identity(), -1), std::invalid_argument);
  }
}

TEST_CASE("multiply") {
  const auto f = TaylorPoly({1.0, cplx{0.2, 0.3}, -0.4});
  CHECK(multiply(f, TaylorPoly::constant(1.0), 2) == f.truncated(2));
  CHECK(multiply(TaylorPoly({0.0, 1.0}), TaylorPoly({0.0, 1.0}), 2) == TaylorPoly({0.0, 0.0, 1.0}));
  CHECK(multiply(TaylorPoly({1.0, 1.0}), TaylorPoly({1.0, -1.0}), 2) == TaylorPoly({1.0, 0.0, -1.0}));
  CHECK_THROWS_AS(multiply(f, f, -1), std::invalid_argument);
}

TEST_CASE("reciprocal and divide") {
  const auto f = TaylorPoly({2.0, cplx{0.5, -0.25}, 0.1});
  const auto inv = reciprocal(f, 20);
  const auto one = multiply(f, inv, 20);
  CHECK(coeff_distance(one, TaylorPoly::constant(1.0, 20)) < 1e-15);
  CHECK_THROWS_AS(reciprocal(TaylorPoly({0.0, 1.0}), 4), std::domain_error);
  // (1 - z^2)/(1 - z) = 1 + z
  CHECK(coeff_distance(divide(TaylorPoly({1.0, 0.0, -1.0}), TaylorPoly({1.0, -1.0}), 6), TaylorPoly({1.0, 1.0})) <
        1e-15);
}

TEST_CASE("compose and multiply agree with pointwise evaluation") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    const int deg = 12;
    const auto f = random_poly(rng, 4);
    auto g = random_poly(rng, 3);
    // Small inner constant term keeps the composed series well inside the outer's range.
    g = g - TaylorPoly::constant(g.coeff(0)) + TaylorPoly::constant(0.1 * g.coeff(0));
    const auto fg = compose(f, g, deg);
    const auto prod = multiply(f, g, deg);
    // Bounds on the dropped tails: sum_k |f_k| |g|_1^k and |f|_1 |g|_1.
    double c_compose = 0.0;
    for (int k = 0; k <= f.degree(); ++k) c_compose += std::abs(f.coeff(k)) * std::pow(l1(g), k);
    const double c_multiply = l1(f) * l1(g);
    for (int i = 0; i < 50; ++i) {
      const cplx z = std::polar(0.5 * std::sqrt(unit(rng)), 2.0 * std::numbers::pi * unit(rng));
      CHECK(std::abs(fg(z) - f(g(z))) < c_compose * std::pow(0.5, deg + 1) + 1e-12);
      CHECK(std::abs(prod(z) - f(z) * g(z)) < c_multiply * std::pow(0.5, deg + 1) + 1e-12);
    }
  }
}

TEST_CASE("Blaschke Taylor expansion matches evaluation") {
  const auto b = BlaschkeProduct({0.0, cplx{0.4, -0.3}, cplx{-0.5, 0.1}}, 1.1);
  const auto series = b.to_taylor(200);
  for (const cplx z : {cplx{0.2, 0.1}, cplx{-0.5, 0.3}, cplx{0.0, 0.8}}) {
    CHECK(std::abs(series(z) - b(z)) < 1e-12);
  }
}

TEST_CASE("sup_norm") {
  SUBCASE("monomial") { CHECK(std::abs(sup_norm(TaylorPoly({0.0, 0.5})) - 0.5) < 1e-9); }
  SUBCASE("Blaschke products have norm 1") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      CHECK(std::abs(sup_norm(random_blaschke(seed, 3, 0.8)) - 1.0) < 1e-12);
    }
  }
  SUBCASE("z(z+1)/2 peaks at theta = 0") {
    const TaylorPoly f({0.0, 0.5, 0.5});
    const double oracle = scan_max_modulus(f, 200000);
    CHECK(oracle == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(std::abs(sup_norm(f) - 1.0) < 1e-12);
  }
  SUBCASE("refinement never overshoots the brute-force scan by more than roundoff") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 5; ++i) {
      const auto f = random_poly(rng, 6);
      const double scan = scan_max_modulus(f, 400000);
      const double est = sup_norm(f);
      CHECK(est >= scan - 1e-9);
      CHECK(est <= scan * (1.0 + 1e-9));
    }
  }
  SUBCASE("homogeneity") {
    std::mt19937_64 rng(9);
    const auto f = random_poly(rng, 5);
    const cplx c{-0.7, 1.3};
    CHECK(sup_norm(f * c) == doctest::Approx(std::abs(c) * sup_norm(f)).epsilon(1e-12));
  }
  SUBCASE("coarse grid still refines") {
    CHECK(std::abs(sup_norm(TaylorPoly({0.0, 0.5, 0.5}), DiskGrid::circle(7)) - 1.0) < 1e-9);
  }
  SUBCASE("empty grid") { CHECK_THROWS_AS(sup_norm(TaylorPoly({0.0, 1.0}), DiskGrid{}), std::invalid_argument); }
}

TEST_CASE("Blaschke boundary samples are unimodular") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto b = random_blaschke(seed, 4, 0.9);
    double worst = 0.0;
    for (int i = 0; i < 1024; ++i) {
      worst = std::max(worst, std::abs(std::abs(b(std::polar(1.0, 2.0 * std::numbers::pi * i / 1024))) - 1.0));
    }
    CHECK(worst < 1e-12);
  }
}

TEST_CASE("Schwarz-Pick bound for Blaschke products vanishing at 0") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto b = random_blaschke(seed, 3, 0.7);
    for (int i = 0; i < 100; ++i) {
      const cplx z = std::polar(unit(rng), 2.0 * std::numbers::pi * unit(rng));
      CHECK(std::abs(b(z)) <= std::abs(z) + 1e-12);
    }
  }
}

TEST_CASE("is_schwarz") {
  CHECK(is_schwarz(TaylorPoly({0.0, 1.0})).is_schwarz);
  const auto shifted = is_schwarz(TaylorPoly({0.5, 1.0}));
  CHECK_FALSE(shifted.is_schwarz);
  CHECK(shifted.value_at_zero == doctest::Approx(0.5));
  // Quadratic family with a = b = 1/2, K = 5: |c| + |d| = 3/20 <= 1/K.
  const auto report = is_schwarz(TaylorPoly({0.0, 0.1, -0.05}));
  CHECK(report.is_schwarz);
  CHECK(report.sup <= 0.2);
  CHECK_FALSE(is_schwarz(TaylorPoly({0.0, 0.8, 0.3})).is_schwarz);
  CHECK(is_schwarz(BlaschkeProduct({0.0, 0.5})).is_schwarz);
  CHECK_FALSE(is_schwarz(BlaschkeProduct({0.5})).is_schwarz);
}

TEST_CASE("random_schwarz") {
  CHECK_THROWS_AS(random_schwarz(1, 4, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(random_schwarz(1, 4, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(random_schwarz(1, 0, 0.5), std::invalid_argument);
  CHECK(random_schwarz(42, 6, 0.3) == random_schwarz(42, 6, 0.3));
  CHECK_FALSE(random_schwarz(42, 6, 0.3) == random_schwarz(43, 6, 0.3));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = random_schwarz(seed, 4, 0.5);
    CHECK(is_schwarz(g).is_schwarz);
    CHECK(g.coeff(0) == cplx{0.0});
  }
  const auto g = random_schwarz(7, 4, 0.1);
  CHECK(sup_norm(g) <= 0.9 + 1e-12);
  CHECK(scan_max_modulus(g, 100000) <= 0.9 + 1e-12);
}

TEST_CASE("DiskGrid") {
  const auto grid = DiskGrid::make(16, 32, 20);
  CHECK(grid.radii.size() == 16);
  CHECK(grid.boundary_radii.size() == 20);
  CHECK(grid.boundary_radii.back() == 1.0 - std::ldexp(1.0, -20));
  CHECK(grid.sample_count() == 36 * 32);
  CHECK(grid.samples().size() == grid.sample_count());
  CHECK_NOTHROW(grid.validate());
  DiskGrid bad = grid;
  bad.radii.push_back(1.0);
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = grid;
  bad.angles.push_back(bad.angles.front());
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  for (double r : grid.all_radii()) CHECK(r < 1.0);
}
