#include "wcomp/criterion.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "wcomp/numerics.hpp"

namespace wcomp {

namespace {

// Below this sup-norm a symbol is treated as identically zero.
constexpr double kZeroNorm = 1e-9;

void require_schwarz(const DiskFunction& f, const char* name, double tol) {
  const auto report = is_schwarz(f, tol);
  if (!report.is_schwarz) {
    std::ostringstream msg;
    msg << name << " is not a Schwarz function (|" << name << "(0)| = " << report.value_at_zero
        << ", sup = " << report.sup << ")";
    throw std::invalid_argument(msg.str());
  }
}

bool radial_limit_unimodular(const DiskFunction& f, double theta, const std::vector<double>& radii) {
  for (double r : radii) {
    if (!(std::abs(eval(f, std::polar(r, theta))) > 1.0 - 10.0 * (1.0 - r))) {
      return false;
    }
  }
  return !radii.empty();
}

}  // namespace

OperatorSymbols::OperatorSymbols(AlphaParam alpha, DiskFunction omega, DiskFunction phi, double tol)
    : alpha_(alpha), omega_(std::move(omega)), phi_(std::move(phi)) {
  require_schwarz(omega_, "omega", tol);
  require_schwarz(phi_, "phi", tol);
}

cplx OperatorSymbols::psi_at(cplx z) const { return h_alpha(alpha_, omega_at(z)); }

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "PASS";
    case Verdict::kFail:
      return "FAIL";
    case Verdict::kInconclusive:
      return "INCONCLUSIVE";
  }
  return "?";
}

std::string_view to_string(BoundaryKind k) {
  switch (k) {
    case BoundaryKind::kPhiInnerLike:
      return "phi-inner-like";
    case BoundaryKind::kOmegaInnerLike:
      return "omega-inner-like";
    case BoundaryKind::kGeneric:
      return "generic";
  }
  return "?";
}

std::string_view to_string(Consistency c) {
  switch (c) {
    case Consistency::kConsistent:
      return "consistent";
    case Consistency::kInconsistent:
      return "inconsistent";
    case Consistency::kUndetermined:
      return "undetermined";
  }
  return "?";
}

double p_value(const AlphaParam& alpha, cplx w) {
  const cplx a = alpha.value();
  return std::norm(a * w) - std::norm(1.0 + (a - 1.0) * w);
}

double p_value_split(const AlphaParam& alpha, cplx w) {
  const double a = alpha.re();
  const double b = alpha.im();
  return a * (std::norm(w) - 1.0) + (a - 1.0) * std::norm(w - 1.0) + 2.0 * b * w.imag();
}

cplx q_value(const AlphaParam& alpha, cplx w) {
  const cplx a = alpha.value();
  return (a - 1.0) * std::norm(w) + std::conj(w) - a * w;
}

cplx q_value_split(const AlphaParam& alpha, cplx w) {
  const double a = alpha.re();
  const double b = alpha.im();
  const double u = w.real();
  const double v = w.imag();
  const double m = std::norm(w) - u;
  return {(a - 1.0) * m + b * v, b * m - v * (a + 1.0)};
}

double big_q_value(const AlphaParam& alpha, cplx w) { return std::abs(q_value(alpha, w)); }

double margin_from_values(const AlphaParam& alpha, cplx w, cplx p) {
  const double phi_abs = std::abs(p);
  return (1.0 - std::norm(w)) + p_value(alpha, w) * phi_abs * phi_abs - 2.0 * big_q_value(alpha, w) * phi_abs;
}

double criterion_margin(const OperatorSymbols& sym, cplx z) {
  if (!(std::abs(z) < 1.0)) {
    std::ostringstream msg;
    msg << "criterion_margin: z = " << z << " is not inside the unit disk";
    throw std::invalid_argument(msg.str());
  }
  return margin_from_values(sym.alpha(), sym.omega_at(z), sym.phi_at(z));
}

DiskGrid default_criterion_grid() { return DiskGrid::make(16, 256, 20, 0.5); }

CriterionReport check_preservation(const OperatorSymbols& sym, const DiskGrid& grid, double tol) {
  if (grid.empty()) {
    throw std::invalid_argument("check_preservation: grid has no samples");
  }
  CriterionReport report;
  report.min_margin = std::numeric_limits<double>::infinity();
  for (const auto& z : grid.samples()) {
    const double m = criterion_margin(sym, z);
    ++report.samples_checked;
    if (m < report.min_margin) {
      report.min_margin = m;
      report.witness = z;
    }
  }
  report.preserves = report.min_margin > tol;
  if (report.preserves) {
    report.verdict = Verdict::kPass;
  } else if (report.min_margin < -tol) {
    report.verdict = Verdict::kFail;
  } else {
    report.verdict = Verdict::kInconclusive;
  }
  if (!grid.boundary_radii.empty()) {
    report.boundary_verdict = boundary_classify(sym, grid.angles, grid.boundary_radii);
  }
  return report;
}

cplx omega_lambda(const OperatorSymbols& sym, cplx lambda, cplx z) {
  if (!(std::abs(z) < 1.0)) {
    throw std::invalid_argument("omega_lambda: z must lie inside the unit disk");
  }
  const cplx a = sym.alpha().value();
  const cplx w = sym.omega_at(z);
  const cplx p = sym.phi_at(z);
  const cplx denom = 1.0 + a * lambda * p * w;
  if (denom == cplx{0.0}) {
    std::ostringstream msg;
    msg << "omega_lambda: denominator vanishes at z = " << z << ", lambda = " << lambda;
    throw std::domain_error(msg.str());
  }
  return (w + lambda * p + (a - 1.0) * lambda * w * p) / denom;
}

double lambda_oracle(const OperatorSymbols& sym, cplx z, int n_lambda) {
  if (n_lambda < 8) {
    throw std::invalid_argument("lambda_oracle: need at least 8 lambda samples");
  }
  const auto modulus = [&](double t) { return std::abs(omega_lambda(sym, std::polar(1.0, t), z)); };
  const double step = 2.0 * std::numbers::pi / n_lambda;
  int best = 0;
  double best_value = -1.0;
  for (int i = 0; i < n_lambda; ++i) {
    const double v = modulus(step * i);
    if (v > best_value) {
      best_value = v;
      best = i;
    }
  }
  const double centre = step * best;
  const auto refined = golden_section_max(modulus, centre - step, centre + step, kGoldenSteps);
  return std::max(best_value, refined.value);
}

double alpha0_criterion(cplx omega_val, cplx phi_val) {
  return 1.0 - (std::abs(1.0 - omega_val) * std::abs(phi_val) + std::abs(omega_val));
}

BoundaryClassification boundary_classify(const OperatorSymbols& sym, const std::vector<double>& angles,
                                         const std::vector<double>& boundary_radii, double tol) {
  BoundaryClassification out;
  if (angles.empty()) {
    throw std::invalid_argument("boundary_classify: need at least one angle");
  }
  std::size_t phi_hits = 0;
  std::size_t omega_hits = 0;
  for (double t : angles) {
    phi_hits += radial_limit_unimodular(sym.phi(), t, boundary_radii) ? 1 : 0;
    omega_hits += radial_limit_unimodular(sym.omega(), t, boundary_radii) ? 1 : 0;
  }
  const auto n = static_cast<double>(angles.size());
  out.phi_unimodular_fraction = static_cast<double>(phi_hits) / n;
  out.omega_unimodular_fraction = static_cast<double>(omega_hits) / n;
  out.omega_norm = sup_norm(sym.omega());
  out.phi_norm = sup_norm(sym.phi());
  const bool omega_zero = out.omega_norm <= kZeroNorm;
  const bool phi_zero = out.phi_norm <= kZeroNorm;

  std::ostringstream why;
  if (out.phi_unimodular_fraction >= 1.0 - tol) {
    out.kind = BoundaryKind::kPhiInnerLike;
    out.consistency = omega_zero ? Consistency::kConsistent : Consistency::kInconsistent;
    why << "phi has unimodular radial limits; preservation forces psi == 1 (omega == 0), ||omega|| ~ "
        << out.omega_norm;
  } else if (sym.alpha().is_real() && out.omega_unimodular_fraction >= 1.0 - tol) {
    out.kind = BoundaryKind::kOmegaInnerLike;
    out.consistency = phi_zero ? Consistency::kConsistent : Consistency::kInconsistent;
    why << "alpha is real and omega has unimodular radial limits; preservation forces phi == 0, ||phi|| ~ "
        << out.phi_norm;
  } else {
    out.kind = BoundaryKind::kGeneric;
    if (phi_zero || omega_zero) {
      out.consistency = Consistency::kConsistent;
      why << (phi_zero ? "phi == 0: constant operator psi" : "omega == 0: composition operator");
    } else if (sym.alpha().is_real() && out.omega_unimodular_fraction > tol) {
      out.consistency = Consistency::kInconsistent;
      why << "alpha is real, phi != 0, but |omega| -> 1 on a fraction " << out.omega_unimodular_fraction
          << " of the circle";
    } else {
      out.consistency = Consistency::kUndetermined;
      why << "boundary probe does not decide; |omega| -> 1 on a fraction " << out.omega_unimodular_fraction
          << " of the circle";
    }
  }
  out.explanation = why.str();
  return out;
}

}  // namespace wcomp
