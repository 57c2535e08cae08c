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

#include "lightcone/liouvillian.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace lightcone {

namespace {

Matrix kron(const Matrix& a, const Matrix& b) {
  return Eigen::kroneckerProduct(a, b);
}

std::string format_complex(Complex z) {
  std::ostringstream s;
  s << "(" << z.real() << ", " << z.imag() << ")";
  return s.str();
}

constexpr double kInvariantTol = 1e-10;

}  // namespace

std::string Provenance::describe() const {
  switch (kind) {
    case Kind::lindblad:
      return "lindblad";
    case Kind::deformed:
      return "deformed(zeta=" + format_complex(zeta) +
             ", zeta_tilde=" + format_complex(zeta_tilde) + ")";
    case Kind::adjoint:
      return "adjoint";
    case Kind::exponential: {
      std::ostringstream s;
      s << "exponential(t=" << time << ", zeta=" << format_complex(zeta)
        << ", zeta_tilde=" << format_complex(zeta_tilde) << ")";
      return s.str();
    }
    case Kind::multiplier:
      return "multiplier(zeta=" + format_complex(zeta) +
             ", zeta_tilde=" + format_complex(zeta_tilde) + ")";
    case Kind::cut:
      return "cut";
    case Kind::composite:
      return "composite";
  }
  return "composite";
}

CVector vec(const Matrix& a) {
  const auto rows = a.rows();
  const auto cols = a.cols();
  CVector v(rows * cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) v[cols * i + j] = a(i, j);
  return v;
}

Matrix unvec(const CVector& v, int dim) {
  if (v.size() != Eigen::Index(dim) * dim)
    throw std::invalid_argument("unvec: length does not match dim^2");
  Matrix a(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) a(i, j) = v[dim * i + j];
  return a;
}

Matrix apply(const Superoperator& s, Matrix lambda) {
  if (lambda.rows() != s.dim || lambda.cols() != s.dim)
    throw std::invalid_argument("apply: operand does not match dim");
  return unvec(s.matrix * vec(lambda), s.dim);
}

double trace_preservation_defect(const Superoperator& s) {
  const double scale = s.matrix.norm();
  if (scale == 0.0) return 0.0;
  const CVector vec_id = vec(Matrix::Identity(s.dim, s.dim));
  return (vec_id.adjoint() * s.matrix).norm() / scale;
}

double unitality_defect(const Superoperator& s) {
  const double scale = s.matrix.norm();
  if (scale == 0.0) return 0.0;
  const CVector vec_id = vec(Matrix::Identity(s.dim, s.dim));
  return (s.matrix * vec_id).norm() / scale;
}

Superoperator build_lindbladian(const LatticeModel& model) {
  const int d = model.n_sites;
  const Matrix h = build_hamiltonian(model).entries;
  const Matrix id = Matrix::Identity(d, d);
  Matrix m = Complex(0.0, -1.0) *
             (kron(h, id) - kron(id, h.transpose()));
  for (const Matrix& w : jump_matrices(model)) {
    const Matrix wdw = w.adjoint() * w;
    m += kron(w, w.conjugate()) -
         0.5 * (kron(wdw, id) + kron(id, wdw.transpose()));
  }
  Superoperator s{std::move(m), d, Provenance{Provenance::Kind::lindblad}};
  if (trace_preservation_defect(s) > kInvariantTol)
    throw std::logic_error(
        "lindblad generator violates trace preservation");
  return s;
}

namespace {

// Dissipative part of the two-parameter deformation; starred factors are
// deformations of the adjoint, matching (W_zeta)^* = (W^*)_{conj zeta}.
Matrix deformed_dissipator_matrix(const LatticeModel& model, Complex zeta,
                                  Complex zeta_tilde) {
  const int d = model.n_sites;
  const Matrix id = Matrix::Identity(d, d);
  const Boundary b = model.boundary;
  Matrix g = Matrix::Zero(d * d, d * d);
  for (const Matrix& w : jump_matrices(model)) {
    const OperatorMatrix op{w, MatrixTag::general};
    const OperatorMatrix ad{w.adjoint(), MatrixTag::general};
    const Matrix wz = deform_matrix(op, zeta, b).entries;
    const Matrix wzt = deform_matrix(op, zeta_tilde, b).entries;
    const Matrix az = deform_matrix(ad, zeta, b).entries;
    const Matrix azt = deform_matrix(ad, zeta_tilde, b).entries;
    g += kron(wz, azt.transpose()) - 0.5 * kron(Matrix(az * wz), id) -
         0.5 * kron(id, Matrix(azt * wzt).transpose());
  }
  return g;
}

}  // namespace

Superoperator build_deformed_generator(const LatticeModel& model, Complex zeta,
                                       Complex zeta_tilde) {
  require_in_strip(zeta, model.decay_rate);
  require_in_strip(zeta_tilde, model.decay_rate);
  const int d = model.n_sites;
  const Matrix id = Matrix::Identity(d, d);
  const OperatorMatrix h = build_hamiltonian(model);
  const Matrix hz = deform_matrix(h, zeta, model.boundary).entries;
  const Matrix hzt = deform_matrix(h, zeta_tilde, model.boundary).entries;
  Matrix m = Complex(0.0, -1.0) * (kron(hz, id) - kron(id, hzt.transpose()));
  m += deformed_dissipator_matrix(model, zeta, zeta_tilde);
  Provenance p{Provenance::Kind::deformed};
  p.zeta = zeta;
  p.zeta_tilde = zeta_tilde;
  return Superoperator{std::move(m), d, p};
}

Superoperator build_deformed_dissipator(const LatticeModel& model,
                                        Complex zeta, Complex zeta_tilde) {
  require_in_strip(zeta, model.decay_rate);
  require_in_strip(zeta_tilde, model.decay_rate);
  Provenance p{Provenance::Kind::deformed};
  p.zeta = zeta;
  p.zeta_tilde = zeta_tilde;
  return Superoperator{deformed_dissipator_matrix(model, zeta, zeta_tilde),
                       model.n_sites, p};
}

Superoperator adjoint_map(const Superoperator& s) {
  const int d = s.dim;
  // Tr(A lambda) = vec(A)^T S vec(lambda) with the swap S vec(X)=vec(X^T);
  // the pairing adjoint is S M^T S, i.e. M'[di+j, dk+l] = M[dl+k, dj+i].
  Matrix m(d * d, d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l)
          m(d * i + j, d * k + l) = s.matrix(d * l + k, d * j + i);
  Provenance p = s.provenance;
  p.kind = Provenance::Kind::adjoint;
  return Superoperator{std::move(m), d, p};
}

Superoperator adjoint_generator(const Superoperator& lindblad) {
  if (lindblad.provenance.kind != Provenance::Kind::lindblad)
    throw std::invalid_argument(
        "adjoint_generator requires a lindblad-provenance generator");
  Superoperator s = adjoint_map(lindblad);
  if (unitality_defect(s) > kInvariantTol)
    throw std::logic_error("adjoint generator does not annihilate identity");
  return s;
}

GtildeResult build_gtilde(const LatticeModel& model, Complex zeta) {
  if (zeta.real() != 0.0)
    throw std::invalid_argument(
        "gtilde is defined for purely imaginary zeta");
  require_in_strip(zeta, model.decay_rate);
  const int d = model.n_sites;
  const Boundary b = model.boundary;
  Matrix sum = Matrix::Zero(d, d);
  for (const Matrix& w : jump_matrices(model)) {
    const OperatorMatrix op{w, MatrixTag::general};
    const Matrix wp = deform_matrix(op, zeta, b).entries;
    const Matrix wm = deform_matrix(op, -zeta, b).entries;
    sum += wp.adjoint() * wp - 0.5 * Matrix(wm.adjoint() * wp) -
           0.5 * Matrix(wp.adjoint() * wm);
  }
  Matrix g = 0.5 * sum;
  const double scale = g.size() == 0 ? 0.0 : g.cwiseAbs().maxCoeff();
  const double defect =
      scale > 0.0 ? hermiticity_defect(g) / scale : 0.0;
  Matrix sym = 0.5 * (g + Matrix(g.adjoint()));
  GtildeResult out;
  out.op = OperatorMatrix{std::move(sym), MatrixTag::hermitian};
  out.symmetrization_defect = defect;
  return out;
}

OperatorMatrix build_gprime(const LatticeModel& model) {
  const int d = model.n_sites;
  Matrix sum = Matrix::Zero(d, d);
  for (const Matrix& w : jump_matrices(model)) {
    // W' = d/d eta W_{i eta} at 0 times -i, which is -i[x, W] with the
    // commutator generalized to the boundary displacement.
    Matrix wprime(d, d);
    for (int x = 0; x < d; ++x)
      for (int y = 0; y < d; ++y)
        wprime(x, y) = Complex(0.0, -1.0) *
                       double(displacement(x, y, d, model.boundary)) * w(x, y);
    sum += Complex(0.0, 1.0) *
           (Matrix(w.adjoint() * wprime) - Matrix(wprime.adjoint() * w));
  }
  Matrix g = 0.5 * sum;
  g = 0.5 * (g + Matrix(g.adjoint()));
  return OperatorMatrix{std::move(g), MatrixTag::hermitian};
}

Superoperator two_sided_multiplier(Complex zeta, Complex zeta_tilde, int dim) {
  Matrix m = Matrix::Zero(dim * dim, dim * dim);
  for (int i = 0; i < dim; ++i) {
    const Complex left = std::exp(Complex(0.0, -1.0) * zeta * double(i));
    for (int j = 0; j < dim; ++j) {
      const Complex right =
          std::exp(Complex(0.0, 1.0) * zeta_tilde * double(j));
      m(dim * i + j, dim * i + j) = left * right;
    }
  }
  Provenance p{Provenance::Kind::multiplier};
  p.zeta = zeta;
  p.zeta_tilde = zeta_tilde;
  return Superoperator{std::move(m), dim, p};
}

Superoperator cut_superoperator(const std::vector<int>& sites, int dim) {
  std::vector<char> chi(dim, 0);
  for (int s : sites) {
    if (s < 0 || s >= dim)
      throw std::invalid_argument("cut site " + std::to_string(s) +
                                  " out of range");
    chi[s] = 1;
  }
  Matrix m = Matrix::Zero(dim * dim, dim * dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      if (chi[i] && chi[j]) m(dim * i + j, dim * i + j) = 1.0;
  return Superoperator{std::move(m), dim, Provenance{Provenance::Kind::cut}};
}

std::string superoperator_to_json(const Superoperator& s) {
  nlohmann::ordered_json j;
  j["dim"] = s.dim;
  j["rows"] = s.matrix.rows();
  j["cols"] = s.matrix.cols();
  j["provenance"] = s.provenance.describe();
  auto data = nlohmann::ordered_json::array();
  for (Eigen::Index r = 0; r < s.matrix.rows(); ++r) {
    for (Eigen::Index c = 0; c < s.matrix.cols(); ++c) {
      data.push_back(s.matrix(r, c).real());
      data.push_back(s.matrix(r, c).imag());
    }
  }
  j["data"] = std::move(data);
  return j.dump() + "\n";
}

}  // namespace lightcone
