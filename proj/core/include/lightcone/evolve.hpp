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

#ifndef LIGHTCONE_EVOLVE_HPP_
#define LIGHTCONE_EVOLVE_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "lightcone/liouvillian.hpp"
#include "lightcone/model.hpp"

namespace lightcone {

/// Thrown when a propagated state contains non-finite entries (overflow of
/// strongly deformed semigroups at large t). The message names t and zeta.
class OverflowError : public std::runtime_error {
 public:
  explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

/// e^{M t} by scaling-and-squaring with a diagonal Pade approximant.
/// Dense only; matrices larger than 4096 x 4096 are rejected (out of desk
/// scale).
Matrix matrix_exp(const Matrix& m, double t);

/// e^{L t} wrapped as a Superoperator (provenance = exponential, carrying the
/// generator's zeta for diagnostics). Throws OverflowError on non-finite
/// output.
Superoperator propagator(const Superoperator& generator, double t);

/// States along a time grid.
struct Trajectory {
  std::vector<double> times;   // strictly ascending
  std::vector<Matrix> states;  // states[k] = unvec(e^{L t_k} vec(rho0))
  Provenance provenance;
};

/// Propagates rho0 along strictly ascending times. For a Lindblad generator
/// the times must be nonnegative. Throws OverflowError naming t and zeta on
/// non-finite output.
Trajectory propagate(const Superoperator& generator, const Matrix& rho0,
                     const std::vector<double>& times);

/// Sum of singular values.
double trace_norm(const Matrix& lambda);

/// Spectral norm (largest singular value).
double operator_norm(const Matrix& a);

/// Smallest eigenvalue of a Hermitian matrix. Rejects inputs whose
/// Hermiticity defect exceeds tol * max(1, max|entry|).
double min_eigenvalue(const Matrix& rho, double hermiticity_tol = 1e-10);

/// Result of the rank-one ascent. `value` is a certified lower bound on the
/// S1 -> S1 operator norm sup ||Phi(|psi><phi|)||_1 over unit vectors; the
/// supremum over the whole unit ball is attained on such rank-one inputs.
/// Values are monotone nondecreasing in `restarts` for a fixed seed (restart
/// r draws from a stream keyed by (seed, r), so a larger budget extends the
/// set maximized over).
struct NormEstimate {
  enum class Kind { exact, lower_bound };

  double value = 0.0;
  Kind kind = Kind::lower_bound;
  int restarts_used = 0;
  CVector left;   // witness psi
  CVector right;  // witness phi
};

/// Seeded random-restart projected-gradient ascent over unit pairs
/// (psi, phi), maximizing trace_norm(map(|psi><phi|)). Each restart runs
/// until the relative gain drops below 1e-9 or 200 accepted steps.
/// Deterministic given (restarts, seed).
NormEstimate s1_opnorm_lower(const Superoperator& map, int restarts,
                             std::uint64_t seed);

/// Splits lambda = pos_re - neg_re + i (pos_im - neg_im) into four positive
/// matrices via the spectral decompositions of the Hermitian and
/// anti-Hermitian parts; each part has trace norm <= ||lambda||_1.
struct QuadrantDecomposition {
  Matrix pos_re, neg_re, pos_im, neg_im;
};
QuadrantDecomposition quadrant_split(const Matrix& lambda);

}  // namespace lightcone

#endif  // LIGHTCONE_EVOLVE_HPP_
