#pragma once

// Seeded identity suites over a single algebra or model.

#include <cstdint>
#include <vector>

#include "jordanaff/hypersurface.hpp"
#include "jordanaff/jordan.hpp"
#include "jordanaff/report.hpp"
#include "jordanaff/triple.hpp"

namespace jordanaff {

/// self_adjoint_T, self_adjoint_P (G M symmetric), fundamental_identity
/// (P_{P_u v} = P_u P_v P_u), fundamental_det, inverse_P (P_{v^-1} P_v = I),
/// inverse_T (T_{v^-1} P_v = T_v = P_v T_{v^-1}). Exact.
VerificationReport check_operator_identities(const JordanAlgebra& J, std::size_t samples, std::uint64_t seed);

/// [Phi, T_u] = T_{Phi u} and Phi(u o v) = Phi u o v + u o Phi v for seeded
/// random Phi in k (integer combinations of the basis) and random u, v.
VerificationReport check_k_action(const JordanAlgebra& J, const SymmetricPair& pair, std::size_t samples,
                                  std::uint64_t seed);

struct TangentOrder {
  std::vector<double> h;
  std::vector<double> error;  // ||(P_{e+hX} - I)/h - 2 T_X||_F
  double order{0.0};          // least-squares slope of log error against log h
};

/// Finite-difference check of dP_{e+tX}/dt at 0 = 2 T_X for a seeded random
/// traceless X.
TangentOrder tangent_order(const JordanAlgebra& J, std::uint64_t seed,
                           const std::vector<double>& h = {1e-2, 1e-3, 1e-4});

/// det P_{exp(T_X) u} = det P_u for traceless X, relative tolerance level_set.
Check exp_invariance(const HypersurfaceModel& model, std::size_t samples, std::uint64_t seed);

/// Samples points and records the worst |det P_p / C^{2(n+1)} - 1|.
Check level_set_check(const HypersurfaceModel& model, std::size_t count, std::uint64_t seed);

/// xi_o / C + L1 e = 0, exact.
Check affine_normal_check(const HypersurfaceModel& model);

/// <e,e> = n+1 and <X_i,X_j> = -(n+1) L1 g(X_i,X_j), exact.
Check trace_form_check(const HypersurfaceModel& model);

}  // namespace jordanaff
