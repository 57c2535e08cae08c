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

#ifndef LIGHTCONE_MODEL_HPP_
#define LIGHTCONE_MODEL_HPP_

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace lightcone {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

enum class Boundary { open, periodic };

enum class MatrixTag { hermitian, general };

/// Dense complex d x d matrix with Hermiticity metadata. The tag is advisory:
/// `hermitian` asserts max|A - A*| <= 1e-12 * max|A| entrywise.
struct OperatorMatrix {
  Matrix entries;
  MatrixTag tag = MatrixTag::general;

  int dim() const { return static_cast<int>(entries.rows()); }
};

/// Entrywise Hermiticity defect max|A - A*|.
double hermiticity_defect(const Matrix& a);

/// One jump operator. `dephasing` realizes W = sqrt(rate) |site><site|,
/// `hop` realizes W = sqrt(rate) |site><site + direction|, `custom` carries an
/// arbitrary finite matrix.
struct JumpSpec {
  enum class Kind { dephasing, hop, custom };

  Kind kind = Kind::custom;
  int site = 0;
  int direction = +1;  // hop target offset, +1 or -1
  double rate = 0.0;
  Matrix matrix;  // used when kind == custom
};

/// One hopping amplitude t_r at offset r != 0. The stored map must be
/// Hermitian: whenever -r is also stored, t_{-r} = conj(t_r); a missing
/// mirror offset is implied by conjugation.
struct HoppingTerm {
  int offset = 0;
  Complex amplitude;
};

/// Finite 1D lattice model: H[x,y] = t_{x-y} + delta_{xy} V(x) plus a finite
/// family of jump operators. `decay_rate` is the declared exponential decay
/// rate a > 0 of the hopping kernel; it gates admissible deformation
/// strengths (|Im zeta| < a).
struct LatticeModel {
  int n_sites = 0;
  Boundary boundary = Boundary::open;
  std::vector<HoppingTerm> hopping;
  Eigen::VectorXd potential;  // length n_sites; empty means zero
  double decay_rate = 1.0;
  std::vector<JumpSpec> jumps;
  std::uint64_t seed = 0;  // seed used when the potential is drawn randomly
};

/// Validates all model invariants (Hermitian hopping map, potential length,
/// jump rates >= 0, decay_rate > 0, offsets within range). Throws
/// std::invalid_argument naming the offending field.
void validate_model(const LatticeModel& model);

/// Displacement x - y reduced per boundary convention. For periodic chains
/// this is the minimal-image displacement in (-d/2, d/2]; at the ambiguous
/// antipodal distance d/2 (even d) the sign of the raw displacement is kept
/// so that disp(x,y) = -disp(y,x) always holds.
int displacement(int x, int y, int d, Boundary boundary);

/// Assembles H[x,y] = t_{x-y} + delta_{xy} V(x); tag = hermitian.
OperatorMatrix build_hamiltonian(const LatticeModel& model);

/// Realizes the matrix of one JumpSpec on a d-site chain.
Matrix jump_matrix(const JumpSpec& jump, int n_sites, Boundary boundary);

/// All jump matrices of the model, in declaration order.
std::vector<Matrix> jump_matrices(const LatticeModel& model);

/// Exponential deformation A_zeta[x,y] = A[x,y] * exp(-i zeta (x-y)), the
/// closed form of T_zeta A T_zeta^{-1} continued to complex zeta. Periodic
/// chains use the minimal-image displacement in the phase. Entire in zeta;
/// the output tag is hermitian only when the input is Hermitian and zeta is
/// real.
OperatorMatrix deform_matrix(const OperatorMatrix& a, Complex zeta,
                             Boundary boundary = Boundary::open);

/// (A - A*) / 2i; tag = hermitian.
OperatorMatrix imag_part(const OperatorMatrix& a);

/// Throws std::invalid_argument naming the strip half-width when
/// |Im zeta| >= decay_rate.
void require_in_strip(Complex zeta, double decay_rate);

/// JSON (de)serialization of the documented model schema; see README for the
/// field-by-field contract. Parse errors and schema violations throw
/// std::invalid_argument naming the field or byte position.
LatticeModel model_from_json_text(const std::string& text);
LatticeModel model_from_json_file(const std::string& path);
std::string model_to_json_text(const LatticeModel& model);

/// Catalog models. All use nearest-neighbor hopping t_{+-1} = -1 and declared
/// decay rate a = 1.
///
///   free_chain:        V = 0, no jumps
///   dephasing_chain:   adds sqrt(gamma)|x><x| on every site
///   hopping_chain:     adds directed hops sqrt(gamma)|x><x+1| on every bond
///   disordered_chain:  V(x) drawn i.i.d. uniform from [-w, w] with `seed`
LatticeModel catalog_free_chain(int d, Boundary boundary = Boundary::open);
LatticeModel catalog_dephasing_chain(int d, double gamma,
                                     Boundary boundary = Boundary::open);
LatticeModel catalog_hopping_chain(int d, double gamma,
                                   Boundary boundary = Boundary::open);
LatticeModel catalog_disordered_chain(int d, double w, std::uint64_t seed,
                                      Boundary boundary = Boundary::open);

}  // namespace lightcone

#endif  // LIGHTCONE_MODEL_HPP_
