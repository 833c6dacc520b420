#pragma once

// Preservation of P_alpha by the weighted composition operator
// C_{psi,phi}(f) = psi * (f o phi) with psi = h_alpha o omega.
//
// C_{psi,phi} maps P_alpha into itself iff, at every z in D,
//
//   2 Q(omega) |phi| < (1 - |omega|^2) + P(omega) |phi|^2
//
// with P(w) = |alpha w|^2 - |1 + (alpha - 1) w|^2 and Q(w) = |q(w)|,
// q(w) = (alpha - 1)|w|^2 + conj(w) - alpha w. The same condition says that
// every omega_lambda (the Schwarz symbol of psi * (f_lambda o phi)) maps D into D.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wcomp/disk_functions.hpp"
#include "wcomp/subordination.hpp"

namespace wcomp {

// Alpha together with the Schwarz symbols omega (of the weight) and phi.
class OperatorSymbols {
 public:
  // Throws std::invalid_argument if omega or phi fails is_schwarz at tol.
  OperatorSymbols(AlphaParam alpha, DiskFunction omega, DiskFunction phi, double tol = kDefaultTol);

  const AlphaParam& alpha() const { return alpha_; }
  const DiskFunction& omega() const { return omega_; }
  const DiskFunction& phi() const { return phi_; }

  cplx omega_at(cplx z) const { return eval(omega_, z); }
  cplx phi_at(cplx z) const { return eval(phi_, z); }
  // psi(z) = h_alpha(omega(z)).
  cplx psi_at(cplx z) const;

 private:
  AlphaParam alpha_;
  DiskFunction omega_;
  DiskFunction phi_;
};

enum class Verdict { kPass, kFail, kInconclusive };

std::string_view to_string(Verdict v);

enum class BoundaryKind { kPhiInnerLike, kOmegaInnerLike, kGeneric };
enum class Consistency { kConsistent, kInconsistent, kUndetermined };

std::string_view to_string(BoundaryKind k);
std::string_view to_string(Consistency c);

// Finite radial-limit probe of the symbols.
struct BoundaryClassification {
  BoundaryKind kind = BoundaryKind::kGeneric;
  // Fraction of sampled angles at which |phi| (resp. |omega|) tends to 1.
  double phi_unimodular_fraction = 0.0;
  double omega_unimodular_fraction = 0.0;
  double omega_norm = 0.0;
  double phi_norm = 0.0;
  Consistency consistency = Consistency::kUndetermined;
  std::string explanation;
};

struct CriterionReport {
  bool preserves = false;
  Verdict verdict = Verdict::kInconclusive;
  double min_margin = 0.0;
  cplx witness{0.0};
  std::size_t samples_checked = 0;
  std::optional<BoundaryClassification> boundary_verdict;
};

double p_value(const AlphaParam& alpha, cplx w);
// a(|w|^2 - 1) + (a - 1)|w - 1|^2 + 2 b v with alpha = a + ib, w = u + iv.
double p_value_split(const AlphaParam& alpha, cplx w);

cplx q_value(const AlphaParam& alpha, cplx w);
// [(a-1)(|w|^2 - u) + b v] + i [b(|w|^2 - u) - v(a + 1)].
cplx q_value_split(const AlphaParam& alpha, cplx w);

double big_q_value(const AlphaParam& alpha, cplx w);

// (1 - |omega|^2) + P(omega)|phi|^2 - 2 Q(omega)|phi| at omega = w, phi = p.
double margin_from_values(const AlphaParam& alpha, cplx w, cplx p);

// Margin at z; positive iff the strict inequality holds there. Requires |z| < 1.
double criterion_margin(const OperatorSymbols& sym, cplx z);

// Default grid for the preservation scan: 16 interior radii in [0, 0.5),
// boundary radii 1 - 2^{-k} for k = 1..20, 256 angles.
DiskGrid default_criterion_grid();

CriterionReport check_preservation(const OperatorSymbols& sym, const DiskGrid& grid, double tol = kDefaultTol);

// Schwarz symbol induced on the extreme point f_lambda. Throws std::domain_error
// where 1 + alpha lambda phi omega vanishes.
cplx omega_lambda(const OperatorSymbols& sym, cplx lambda, cplx z);

inline constexpr int kOracleLambdas = 720;

// max over |lambda| = 1 of |omega_lambda(z)|: n_lambda equispaced points, then
// golden-section refinement around the discrete argmax.
double lambda_oracle(const OperatorSymbols& sym, cplx z, int n_lambda = kOracleLambdas);

// 1 - (|1 - w||p| + |w|): the alpha = 0 form of the criterion at values w, p.
double alpha0_criterion(cplx omega_val, cplx phi_val);

// Radial-limit probing along boundary_radii. A radial limit is taken as
// unimodular when |f(r e^{it})| > 1 - 10 (1 - r) at every probed r.
// tol is the fraction of angles allowed to disagree.
BoundaryClassification boundary_classify(const OperatorSymbols& sym, const std::vector<double>& angles,
                                         const std::vector<double>& boundary_radii, double tol = 1e-2);

}  // namespace wcomp
