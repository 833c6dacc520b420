#pragma once

// Fixed points of C_{psi,phi} on P_alpha.
//
// For phi not a rotation the operator has a unique fixed point, reached by
// iteration from any member; it is the constant 1 when phi is inner. For
// phi(z) = lambda z the fixed set is all of P_alpha (lambda = 1), functions
// of z^n (lambda a primitive n-th root of unity), or {1} otherwise.

#include <optional>
#include <string>
#include <vector>

#include "wcomp/criterion.hpp"

namespace wcomp {

inline constexpr double kIterationTol = 1e-10;
inline constexpr int kMaxIterations = 10000;
inline constexpr int kRotationOrderMax = 256;

enum class RotationKind { kNotRotation, kIdentity, kRootOfUnity, kIrrational };

std::string_view to_string(RotationKind k);

struct RotationClass {
  RotationKind kind = RotationKind::kNotRotation;
  std::optional<cplx> lambda;
  int order = 0;  // minimal n > 1 with lambda^n = 1, for kRootOfUnity
};

struct IterationTrace {
  std::vector<TaylorPoly> iterates;  // f_0, f_1, ..., f_steps
  std::vector<double> residuals;     // max coefficient change per step
  bool converged = false;
  int steps = 0;

  const TaylorPoly& limit() const { return iterates.back(); }
};

// Precomputed psi and phi series; applies f -> psi * (f o phi) through deg.
class WeightedComposition {
 public:
  WeightedComposition(const OperatorSymbols& sym, int deg = kDefaultDegree);

  // Throws std::invalid_argument unless f(0) = 1 within kDefaultTol.
  TaylorPoly operator()(const TaylorPoly& f) const;

  const TaylorPoly& psi() const { return psi_; }
  const TaylorPoly& phi() const { return phi_; }
  int degree() const { return deg_; }

 private:
  int deg_;
  TaylorPoly psi_;
  TaylorPoly phi_;
};

TaylorPoly apply_op(const OperatorSymbols& sym, const TaylorPoly& f, int deg = kDefaultDegree);

// Rotation iff phi = (0, lambda, 0, ...) with |lambda| = 1 within tol; a
// Blaschke product is a rotation iff its only zero is 0.
RotationClass classify_rotation(const DiskFunction& phi, double tol = kIterationTol,
                                int n_max = kRotationOrderMax);

// Iterates f_{k+1} = C_{psi,phi}(f_k) until the max coefficient change drops
// below tol. The caller is responsible for having checked preservation; phi
// must not be a rotation (std::invalid_argument otherwise). Running out of
// iterations is reported through `converged`, not thrown.
IterationTrace iterate_to_fixed_point(const OperatorSymbols& sym, const TaylorPoly& f0, int deg = kDefaultDegree,
                                      double tol = kIterationTol, int max_iter = kMaxIterations);

// Every coefficient c_k with k not a multiple of n satisfies |c_k| < tol.
bool rotation_fixed_set_test(cplx lambda, int n, const TaylorPoly& f, double tol = kIterationTol);

// Membership of f in the fixed set described by rc (f assumed in P_alpha).
bool in_rotation_fixed_set(const RotationClass& rc, const TaylorPoly& f, double tol = kIterationTol);

// Human-readable description of the fixed set for a rotation symbol.
std::string describe_fixed_set(const RotationClass& rc);

// Rotation phi with a nontrivial weight never preserves P_alpha (rotations
// are inner, forcing psi == 1). Throws std::invalid_argument with that
// explanation when sym has a rotation phi and omega != 0.
void require_unweighted_rotation(const OperatorSymbols& sym, const RotationClass& rc);

}  // namespace wcomp
