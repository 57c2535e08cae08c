// Copyright 2026 The lightcone authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LIGHTCONE_LIOUVILLIAN_HPP_
#define LIGHTCONE_LIOUVILLIAN_HPP_

#include <string>
#include <vector>

#include "lightcone/model.hpp"

namespace lightcone {

// Vectorization convention used throughout: vec stacks rows, i.e.
// vec(rho)[d*i + j] = rho(i, j), so that the map rho -> A rho B has the
// superoperator matrix kron(A, B^T). With this convention the Lindblad
// generator takes the literal form
//   -i (H (x) I - I (x) H^T)
//   + sum_j [ W_j (x) conj(W_j) - 1/2 (W_j*W_j (x) I + I (x) (W_j*W_j)^T) ].

/// Where a superoperator came from; carried for diagnostics and error
/// messages (overflow reports name zeta and t).
struct Provenance {
  enum class Kind {
    lindblad,
    deformed,
    adjoint,
    exponential,
    multiplier,
    cut,
    composite,
  };

  Kind kind = Kind::composite;
  Complex zeta{0.0, 0.0};
  Complex zeta_tilde{0.0, 0.0};
  double time = 0.0;  // meaningful for kind == exponential

  std::string describe() const;
};

/// Dense d^2 x d^2 matrix acting on vectorized d x d operators.
struct Superoperator {
  Matrix matrix;
  int dim = 0;  // d
  Provenance provenance;
};

/// Row-stacking vectorization and its inverse.
CVector vec(const Matrix& a);
Matrix unvec(const CVector& v, int dim);

/// Applies a superoperator to a d x d operator. Takes the operand by value:
/// with <tuple> in scope, ADL makes std::apply a candidate for unqualified
/// calls, and a by-value parameter keeps this overload the better match for
/// Matrix lvalues and rvalues alike.
Matrix apply(const Superoperator& s, Matrix lambda);

/// ||vec(I)^H M|| / ||M||_F: zero iff Tr(M(lambda)) = 0 for all lambda.
double trace_preservation_defect(const Superoperator& s);

/// ||M vec(I)|| / ||M||_F: zero iff the map annihilates the identity.
double unitality_defect(const Superoperator& s);

/// The Lindblad generator
///   L(rho) = -i[H, rho] + sum_j (W_j rho W_j* - 1/2 {W_j* W_j, rho})
/// in vectorized form. Checks the trace-preservation invariant at
/// construction (defect <= 1e-10) and throws std::logic_error otherwise.
Superoperator build_lindbladian(const LatticeModel& model);

/// Analytic deformation L_{zeta,zeta~} of the generator: every factor of the
/// Lindblad form is replaced by its deformation, with the starred factors
/// deformed as deform_matrix(W*, .):
///   -i (H_zeta lambda - lambda H_zeta~)
///   + sum_j [ W_{j,zeta} lambda (W_j*)_{zeta~}
///             - 1/2 (W_j*)_zeta W_{j,zeta} lambda
///             - 1/2 lambda (W_j*)_{zeta~} W_{j,zeta~} ].
/// Requires |Im zeta|, |Im zeta~| < model.decay_rate.
Superoperator build_deformed_generator(const LatticeModel& model, Complex zeta,
                                       Complex zeta_tilde);

/// Only the dissipative part (the sum over j above) of the deformed
/// generator; zeta = zeta~ = 0 recovers the undeformed dissipator.
Superoperator build_deformed_dissipator(const LatticeModel& model,
                                        Complex zeta, Complex zeta_tilde);

/// Adjoint with respect to the pairing Tr(A lambda):
/// Tr(L'(A) lambda) = Tr(A L(lambda)). Requires provenance == lindblad;
/// checks L'(I) = 0 at construction.
Superoperator adjoint_generator(const Superoperator& lindblad);

/// Pairing adjoint of an arbitrary superoperator (no provenance
/// restriction); adjoint_map(e^{Lt}) is the Heisenberg propagator.
Superoperator adjoint_map(const Superoperator& s);

/// G~_zeta for zeta = i eta:
///   1/2 sum_j ( W_{j,zeta}* W_{j,zeta}
///               - 1/2 W_{j,-zeta}* W_{j,zeta}
///               - 1/2 W_{j,zeta}* W_{j,-zeta} ),
/// symmetrized to (A + A*)/2 after assembly. `symmetrization_defect` is the
/// entrywise Hermiticity defect before symmetrization, relative to max|A|;
/// values above ~1e-12 indicate a construction bug rather than rounding.
struct GtildeResult {
  OperatorMatrix op;
  double symmetrization_defect = 0.0;
};
GtildeResult build_gtilde(const LatticeModel& model, Complex zeta);

/// G~' = d/d eta G~_{i eta} at eta = 0, assembled in closed form as
///   1/2 sum_j i (W_j* W_j' - W_j'* W_j),  W_j' = -i [x, W_j],
/// where [x, W] generalizes to the boundary displacement (periodic chains
/// differentiate the minimal-image phase). tag = hermitian.
OperatorMatrix build_gprime(const LatticeModel& model);

/// Two-sided multiplier lambda -> T_zeta lambda T_{-zeta~} with
/// T_zeta = diag(exp(-i zeta x)). The inverse is
/// two_sided_multiplier(-zeta, -zeta~, d).
Superoperator two_sided_multiplier(Complex zeta, Complex zeta_tilde, int dim);

/// Sharp cut lambda -> chi lambda chi for the indicator chi of `sites`.
Superoperator cut_superoperator(const std::vector<int>& sites, int dim);

/// Debug export: {"dim", "rows", "cols", "provenance", "data"} with `data` a
/// flat row-major [re, im, re, im, ...] array.
std::string superoperator_to_json(const Superoperator& s);

}  // namespace lightcone

#endif  // LIGHTCONE_LIOUVILLIAN_HPP_
