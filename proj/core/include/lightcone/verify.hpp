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

#ifndef LIGHTCONE_VERIFY_HPP_
#define LIGHTCONE_VERIFY_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "lightcone/model.hpp"
#include "lightcone/sampling.hpp"

namespace lightcone {

// Executable certificates. Each inequality of the library becomes a checker
// producing a machine-readable report with per-sample margins. Checkers are
// deterministic given (parameters, seed) and idempotent; sample lists are
// sorted by digest so report assembly is order independent.

/// One measured-vs-bound comparison.
struct SampleRecord {
  std::string digest;   // FNV-1a 64 over the sample's defining scalars
  double measured = 0.0;
  double bound = 0.0;
  double margin = 0.0;  // bound - measured
  bool vacuous = false; // bound trivially weaker than an a-priori cap
  double time = 0.0;    // evolution time, 0 when not applicable
  double distance = 0.0; // geometric separation, 0 when not applicable
};

struct CheckReport {
  std::string check;
  std::string params_json;  // JSON object text, assembled by the checker
  std::uint64_t seed = 0;
  std::vector<SampleRecord> samples;
  double tolerance = 0.0;
  bool pass = false;
  std::vector<std::string> notes;

  std::string verdict() const { return pass ? "pass" : "fail"; }
};

/// {check, params, seed, samples:[{digest, measured, bound, margin,
/// vacuous}], verdict, tolerance}
std::string report_to_json(const CheckReport& report);

/// CSV rows (t, d_XY, measured, bound, margin, vacuous) for checks carrying
/// geometry; 12 significant digits.
std::string cone_samples_csv(const CheckReport& report);

/// Additive tolerance for inequality checks: 1e-9 * max(1, scale).
double inequality_tolerance(double scale);

/// Relative tolerance for equality checks.
inline constexpr double kEqualityTolerance = 1e-10;

/// Haar pure states on the supported subspace plus their pairwise mixtures.
inline constexpr int kDefaultStateSamples = 16;

/// Leakage out of the cone: random rho supported on X, measured =
/// Tr(chi_Y beta_t(rho)), bound = assemble_partition_constant(X, Y, eps, nu)
/// * exp(-2 mu (d_XY - c t)). Vacuous when bound > 1.
CheckReport check_leakage_cone(const LatticeModel& model,
                               const std::vector<int>& X,
                               const std::vector<int>& Y, double mu,
                               double eps, const std::vector<double>& times,
                               std::uint64_t seed);

/// Two-sided cut between intervals: measured = s1_opnorm_lower of
/// lambda -> chi_U beta_t(chi_V lambda chi_V) chi_U, bound =
/// ball_envelope(delta_UV, nu, c'(nu), t). Vacuous when bound > 4.
CheckReport check_ball_bound(const LatticeModel& model,
                             const std::vector<int>& U,
                             const std::vector<int>& V, double nu,
                             const std::vector<double>& times,
                             std::uint64_t seed);

/// Growth of the deformed semigroup: measured = s1_opnorm_lower of
/// exp(t L_{i eta, -i eta}) for eta in {+nu, -nu}; bound =
/// 4 exp(2 nu c'(nu) t). Also drives random positive states through the
/// sharper positive-cone bound exp(2 nu c'(nu) t) * trace_norm(lambda).
CheckReport check_deformed_growth(const LatticeModel& model, double nu,
                                  const std::vector<double>& times,
                                  std::uint64_t seed);

/// Positivity preservation of the one-sided deformation: for random
/// rho >= 0, min_eigenvalue(beta_{t, i eta}(rho)) >= -1e-9 * trace_norm.
CheckReport check_deformed_positivity(const LatticeModel& model, double nu,
                                      const std::vector<double>& times,
                                      std::uint64_t seed);

/// Off-diagonal dissipator estimate on random operator families {U_j}, {V_j}:
/// || psi'_UV(A) - (1/2){psi'_UV(I), A} || <= 3 ||A|| ||psi'_UU(I)||^(1/2)
/// ||psi'_VV(I)||^(1/2), its trace-norm counterpart on states, and
/// ||G'(A)|| <= 2 ||psi'(I)|| ||A|| for U = V.
CheckReport check_subcp(std::uint64_t seed, const std::vector<int>& dims,
                        int family_size);

/// Cauchy-Schwarz for completely positive maps (built from random Kraus
/// families): |Tr(A beta(T rho V) B)| <= (Tr(A beta(T rho T*) A*))^(1/2)
/// (Tr(B* beta(V* rho V) B))^(1/2).
CheckReport check_cs_trace(std::uint64_t seed, const std::vector<int>& dims);

/// Trace-norm contraction of the undeformed semigroup (bound 4) and the
/// coarse Dyson-style bound exp(4 t (||G|| + ||Im H_zeta|| +
/// ||Im H_zeta_tilde||)) for the deformed one. Requires purely imaginary
/// zeta, zeta_tilde.
CheckReport check_contraction_and_growth(const LatticeModel& model,
                                         Complex zeta, Complex zeta_tilde,
                                         const std::vector<double>& times);

/// Analyticity in the deformation parameter: the entrywise average of
/// exp(t L_{zeta,-zeta}) over equispaced points on |zeta - zeta0| = radius
/// matches the center value (mean-value property). Also verifies the
/// exact conjugation identity chi_U beta_t chi_V =
/// chi_U T_{-zeta,zeta} beta_{t,zeta,-zeta} T_{zeta,-zeta} chi_V on random
/// inputs. Requires the disk inside the admissible strip and radius <= 0.1.
CheckReport check_analyticity(const LatticeModel& model, double t,
                              Complex zeta0, double radius, int samples);

/// Heisenberg-picture cone: operator-norm lower bound of
/// A -> chi_X beta'_t(chi_Y A chi_Y) chi_X on random unit-norm A, against
/// the same envelope as check_leakage_cone; cross-checks
/// Tr(beta'_t(A) rho) = Tr(A beta_t(rho)) on every sampled pair.
CheckReport check_dual_cone(const LatticeModel& model,
                            const std::vector<int>& X,
                            const std::vector<int>& Y, double mu, double eps,
                            const std::vector<double>& times,
                            std::uint64_t seed);

}  // namespace lightcone

#endif  // LIGHTCONE_VERIFY_HPP_
