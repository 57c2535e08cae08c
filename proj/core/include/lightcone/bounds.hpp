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

#ifndef LIGHTCONE_BOUNDS_HPP_
#define LIGHTCONE_BOUNDS_HPP_

#include <string>
#include <vector>

#include "lightcone/model.hpp"

namespace lightcone {

/// The velocity functional c'(nu): for eta in {+nu, -nu} (the 1D sphere)
/// assemble Im H_{i eta} + G~_{i eta}, take its largest eigenvalue, then
/// c'(nu) = max over the two signs, divided by nu.
struct VelocityBound {
  double nu = 0.0;
  double top_eig_plus = 0.0;   // eta = +nu
  double top_eig_minus = 0.0;  // eta = -nu
  int witness_sign = +1;       // sign attaining the max
  double c_prime = 0.0;
};

/// Requires 0 < nu < model.decay_rate; throws naming the strip otherwise.
VelocityBound velocity_c_prime(const LatticeModel& model, double nu);

/// Cone-parameter arithmetic: nu = mu / (1 - 5 eps / 2), c(mu) = c'(nu),
/// c = c(mu) / (1 - 5 eps / 2). Note mu * c = nu * c'(nu) exactly.
struct ConeEnvelope {
  double mu = 0.0;
  double eps = 0.0;
  double nu = 0.0;
  double c_mu = 0.0;  // c(mu) = c'(nu)
  double c = 0.0;
};

/// Requires eps in (0, 2/5) and mu / (1 - 5 eps / 2) < decay_rate.
ConeEnvelope velocity_c_mu(const LatticeModel& model, double mu, double eps);

/// max_k |d omega / d k| - ||G~'|| for the hopping dispersion
/// omega(k) = sum_r t_r e^{-i k r}. Defined only for constant potential
/// (throws "slope undefined for disordered V" otherwise). A positive value
/// certifies nu * c'(nu) > 0 for small nu.
double small_nu_slope(const LatticeModel& model);

/// Directional separation of two site sets under the linear functional
/// b * x: delta_UV = min_{x in U} b x - max_{y in V} b y. The weight
/// factor exp(-nu * delta_UV) bounds ||chi_U T_{-zeta}|| ||chi_V T_zeta||
/// for zeta = i nu b.
struct GeometryFactors {
  std::vector<int>U, V;
  int b = +1;
  double r_u = 0.0;       // min_{x in U} b x
  double r_v_tilde = 0.0; // max_{y in V} b y
  double delta_uv = 0.0;  // r_u - r_v_tilde

  double separation_weight(double nu) const;
};

GeometryFactors geometry_delta(const std::vector<int>& U,
                               const std::vector<int>& V, int b);

/// max over b in {+1, -1} of geometry_delta(U, V, b).delta_uv; equals the set
/// distance for disjoint intervals.
double best_geometry_delta(const std::vector<int>& U,
                           const std::vector<int>& V);

/// Minimum pairwise |x - y| over the two site sets.
double set_distance(const std::vector<int>& a, const std::vector<int>& b);

/// Single-ball envelope 4 exp(-2 nu delta_UV + 2 nu c' t). Requires nu > 0.
double ball_envelope(double delta_uv, double nu, double c_prime, double t);

/// Explicit prefactor of the assembled cone bound for general site sets.
/// `source` is where the state lives, `observed` where leakage is measured.
/// Both sets are covered greedily by intervals of radius
/// r = eps * d(source, observed) / 2; with nu' = nu (1 - eps/2) and
/// mu = nu (1 - 5 eps / 2) the pieces are
///
///   c_xy   = max_{j1 in cover(source)} sum_{k in cover(observed)}
///            sum_{j2 in cover(source)}
///            exp(-nu' (d(O_k, S_j1) + d(O_k, S_j2)))
///   value  = 4 exp(2 nu eps d) * c_xy * exp(2 mu d)
///
/// so that value * exp(-2 mu (d - c t)) equals the fully assembled bound
/// 4 exp(2 nu eps d) c_xy exp(2 nu c'(nu) t) on Tr(chi_observed beta_t(rho))
/// for rho in the positive trace-one cone supported in `source`. Degenerate
/// single-interval covers reproduce the single-ball envelope up to the
/// eps-dependent slack exp(3 nu eps d) (which tends to 1 as eps -> 0).
struct PartitionConstant {
  double value = 0.0;  // prefactor of exp(-2 mu (d_XY - c t))
  double c_xy = 0.0;   // the explicit double sum
  double distance = 0.0;
  double nu = 0.0;
  double nu_prime = 0.0;
  double mu = 0.0;
  double eps = 0.0;
  int source_intervals = 0;
  int observed_intervals = 0;
};

/// Requires disjoint nonempty sets and eps in (0, 2/5).
PartitionConstant assemble_partition_constant(const std::vector<int>& source,
                                              const std::vector<int>& observed,
                                              double eps, double nu);

/// Default report grid nu = a * {0.1, 0.2, 0.4, 0.6, 0.8, 0.9}.
std::vector<double> default_nu_grid(double decay_rate);

/// CSV table with header "nu,c_prime,mu,eps,c_mu,c", one row per grid point,
/// 12 significant digits, '.' decimal separator, '\n' line endings.
std::string velocity_table_csv(const LatticeModel& model,
                               const std::vector<double>& nu_grid, double eps);

}  // namespace lightcone

#endif  // LIGHTCONE_BOUNDS_HPP_
