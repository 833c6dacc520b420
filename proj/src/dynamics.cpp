#include "wcomp/dynamics.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace wcomp {

std::string_view to_string(RotationKind k) {
  switch (k) {
    case RotationKind::kNotRotation:
      return "NOT_ROTATION";
    case RotationKind::kIdentity:
      return "IDENTITY";
    case RotationKind::kRootOfUnity:
      return "ROOT_OF_UNITY";
    case RotationKind::kIrrational:
      return "IRRATIONAL_ROTATION";
  }
  return "?";
}

WeightedComposition::WeightedComposition(const OperatorSymbols& sym, int deg)
    : deg_(deg), psi_(member_from_schwarz(sym.alpha(), sym.omega(), deg)), phi_(to_taylor(sym.phi(), deg)) {}

TaylorPoly WeightedComposition::operator()(const TaylorPoly& f) const {
  if (std::abs(f.coeff(0) - 1.0) > kDefaultTol) {
    std::ostringstream msg;
    msg << "apply_op: f(0) must equal 1, got " << f.coeff(0);
    throw std::invalid_argument(msg.str());
  }
  return multiply(psi_, compose(f.truncated(deg_), phi_, deg_), deg_);
}

TaylorPoly apply_op(const OperatorSymbols& sym, const TaylorPoly& f, int deg) {
  return WeightedComposition(sym, deg)(f);
}

RotationClass classify_rotation(const DiskFunction& phi, double tol, int n_max) {
  RotationClass out;
  cplx lambda;
  if (const auto* b = std::get_if<BlaschkeProduct>(&phi)) {
    if (b->zeros().size() != 1 || std::abs(b->zeros().front()) > tol) {
      return out;
    }
    lambda = std::polar(1.0, b->rotation());
  } else {
    const auto& p = std::get<TaylorPoly>(phi);
    if (std::abs(p.coeff(0)) > tol || std::abs(std::abs(p.coeff(1)) - 1.0) > tol) {
      return out;
    }
    for (int k = 2; k <= p.degree(); ++k) {
      if (std::abs(p.coeff(k)) > tol) {
        return out;
      }
    }
    lambda = p.coeff(1);
  }
  out.lambda = lambda;
  if (std::abs(lambda - 1.0) <= tol) {
    out.kind = RotationKind::kIdentity;
    out.order = 1;
    return out;
  }
  cplx power = lambda;
  for (int n = 2; n <= n_max; ++n) {
    power *= lambda;
    if (std::abs(power - 1.0) <= tol) {
      out.kind = RotationKind::kRootOfUnity;
      out.order = n;
      return out;
    }
  }
  out.kind = RotationKind::kIrrational;
  return out;
}

IterationTrace iterate_to_fixed_point(const OperatorSymbols& sym, const TaylorPoly& f0, int deg, double tol,
                                      int max_iter) {
  const auto rc = classify_rotation(sym.phi(), kIterationTol);
  if (rc.kind != RotationKind::kNotRotation) {
    throw std::invalid_argument("iterate_to_fixed_point: phi is a rotation (" + std::string(to_string(rc.kind)) +
                                "); the fixed set is described by the rotation classifier, not by iteration");
  }
  const WeightedComposition op(sym, deg);
  IterationTrace trace;
  trace.iterates.push_back(f0.truncated(deg));
  for (int k = 0; k < max_iter; ++k) {
    auto next = op(trace.iterates.back());
    const double residual = coeff_distance(next, trace.iterates.back());
    trace.iterates.push_back(std::move(next));
    trace.residuals.push_back(residual);
    ++trace.steps;
    if (residual < tol) {
      trace.converged = true;
      break;
    }
  }
  return trace;
}

bool rotation_fixed_set_test(cplx lambda, int n, const TaylorPoly& f, double tol) {
  if (n < 1) {
    throw std::invalid_argument("rotation_fixed_set_test: order must be positive");
  }
  if (std::abs(std::pow(lambda, n) - 1.0) > 1e-10) {
    throw std::invalid_argument("rotation_fixed_set_test: lambda^n != 1");
  }
  for (int k = 1; k <= f.degree(); ++k) {
    if (k % n != 0 && !(std::abs(f.coeff(k)) < tol)) {
      return false;
    }
  }
  return true;
}

bool in_rotation_fixed_set(const RotationClass& rc, const TaylorPoly& f, double tol) {
  switch (rc.kind) {
    case RotationKind::kIdentity:
      return true;
    case RotationKind::kRootOfUnity:
      return rotation_fixed_set_test(*rc.lambda, rc.order, f, tol);
    case RotationKind::kIrrational:
      for (int k = 1; k <= f.degree(); ++k) {
        if (!(std::abs(f.coeff(k)) < tol)) return false;
      }
      return true;
    case RotationKind::kNotRotation:
      break;
  }
  throw std::invalid_argument("in_rotation_fixed_set: phi is not a rotation");
}

std::string describe_fixed_set(const RotationClass& rc) {
  std::ostringstream out;
  switch (rc.kind) {
    case RotationKind::kNotRotation:
      out << "unique fixed point, obtained by iterating from any member";
      break;
    case RotationKind::kIdentity:
      out << "F = P_alpha (every member is fixed)";
      break;
    case RotationKind::kRootOfUnity:
      out << "F = { g(z^" << rc.order << ") : g in P_alpha }: coefficients c_k with " << rc.order
          << " not dividing k vanish";
      if (rc.order == 2) out << " (odd coefficients vanish)";
      break;
    case RotationKind::kIrrational:
      out << "F = {1} (no lambda^n = 1 found up to the search bound)";
      break;
  }
  return out.str();
}

void require_unweighted_rotation(const OperatorSymbols& sym, const RotationClass& rc) {
  if (rc.kind == RotationKind::kNotRotation) {
    return;
  }
  const double omega_norm = sup_norm(sym.omega());
  if (omega_norm > kDefaultTol) {
    std::ostringstream msg;
    msg << "phi is a rotation, hence inner; a weighted operator with inner phi preserves P_alpha only when "
           "psi == 1, but ||omega|| = "
        << omega_norm;
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace wcomp
