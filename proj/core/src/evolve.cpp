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

#include "lightcone/evolve.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lightcone/sampling.hpp"

namespace lightcone {

namespace {

std::string overflow_message(double t, const Provenance& p) {
  std::ostringstream msg;
  msg << "propagation overflowed to non-finite entries at t = " << t
      << " for generator " << p.describe();
  return msg.str();
}

}  // namespace

Matrix matrix_exp(const Matrix& m, double t) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("matrix_exp requires a square matrix");
  if (m.rows() > 4096)
    throw std::invalid_argument(
        "matrix_exp: dimension above 4096 is out of scope");
  const Matrix scaled = t * m;
  return scaled.exp();
}

Superoperator propagator(const Superoperator& generator, double t) {
  Matrix e = matrix_exp(generator.matrix, t);
  Provenance p = generator.provenance;
  p.kind = Provenance::Kind::exponential;
  p.time = t;
  if (!e.allFinite()) throw OverflowError(overflow_message(t, p));
  return Superoperator{std::move(e), generator.dim, p};
}

Trajectory propagate(const Superoperator& generator, const Matrix& rho0,
                     const std::vector<double>& times) {
  if (rho0.rows() != generator.dim || rho0.cols() != generator.dim)
    throw std::invalid_argument("propagate: state does not match dim");
  for (std::size_t k = 0; k + 1 < times.size(); ++k)
    if (!(times[k] < times[k + 1]))
      throw std::invalid_argument("propagate: times must be strictly "
                                  "ascending");
  if (generator.provenance.kind == Provenance::Kind::lindblad &&
      !times.empty() && times.front() < 0.0)
    throw std::invalid_argument(
        "propagate: negative time under a lindblad generator");

  Trajectory out;
  out.times = times;
  out.provenance = generator.provenance;
  out.states.reserve(times.size());
  for (double t : times) {
    const Superoperator e = propagator(generator, t);
    Matrix state = apply(e, rho0);
    if (!state.allFinite())
      throw OverflowError(overflow_message(t, generator.provenance));
    out.states.push_back(std::move(state));
  }
  return out;
}

double trace_norm(const Matrix& lambda) {
  if (lambda.size() == 0) return 0.0;
  Eigen::BDCSVD<Matrix> svd(lambda);
  return svd.singularValues().sum();
}

double operator_norm(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  Eigen::BDCSVD<Matrix> svd(a);
  return svd.singularValues()[0];
}

double min_eigenvalue(const Matrix& rho, double hermiticity_tol) {
  const double scale = std::max(1.0, rho.cwiseAbs().maxCoeff());
  if (hermiticity_defect(rho) > hermiticity_tol * scale)
    throw std::invalid_argument(
        "min_eigenvalue: input is not Hermitian within tolerance");
  const Matrix sym = 0.5 * (rho + Matrix(rho.adjoint()));
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym,
                                               Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

namespace {

double rank_one_objective(const Superoperator& map, const CVector& psi,
                          const CVector& phi) {
  const Matrix input = psi * phi.adjoint();
  return trace_norm(apply(map, input));
}

}  // namespace

NormEstimate s1_opnorm_lower(const Superoperator& map, int restarts,
                             std::uint64_t seed) {
  if (restarts < 1)
    throw std::invalid_argument("s1_opnorm_lower needs restarts >= 1");
  const int d = map.dim;
  const Matrix pairing_adjoint = map.matrix.adjoint();

  NormEstimate best;
  best.kind = NormEstimate::Kind::lower_bound;
  best.restarts_used = restarts;

  for (int r = 0; r < restarts; ++r) {
    auto rng = seeded_engine(seed, "s1_ascent/" + std::to_string(r));
    CVector psi = haar_vector(d, rng);
    CVector phi = haar_vector(d, rng);
    double value = rank_one_objective(map, psi, phi);
    double step = 0.5;

    for (int accepted = 0; accepted < 200; ++accepted) {
      // Ascent direction from the polar part of the image: for
      // F = ||Phi(psi phi^H)||_1 with subgradient U V^H at the image's SVD,
      // grad_psi = Y phi and grad_phi = Y^H psi with Y = Phi^H(U V^H).
      const Matrix input = psi * phi.adjoint();
      const Matrix image = apply(map, input);
      Eigen::BDCSVD<Matrix> svd(image,
                                Eigen::ComputeThinU | Eigen::ComputeThinV);
      const Matrix polar = svd.matrixU() * svd.matrixV().adjoint();
      const Matrix y = unvec(pairing_adjoint * vec(polar), d);
      const CVector grad_psi = y * phi;
      const CVector grad_phi = y.adjoint() * psi;

      bool moved = false;
      double gain = 0.0;
      while (step >= 1e-12) {
        const CVector psi_next = (psi + step * grad_psi).normalized();
        const CVector phi_next = (phi + step * grad_phi).normalized();
        const double next = rank_one_objective(map, psi_next, phi_next);
        if (next > value) {
          gain = (next - value) / next;
          psi = psi_next;
          phi = phi_next;
          value = next;
          moved = true;
          break;
        }
        step *= 0.5;
      }
      if (!moved || gain < 1e-9) break;
    }

    if (value > best.value) {
      best.value = value;
      best.left = psi;
      best.right = phi;
    }
  }
  return best;
}

QuadrantDecomposition quadrant_split(const Matrix& lambda) {
  const Matrix re = 0.5 * (lambda + Matrix(lambda.adjoint()));
  const Matrix im = (lambda - Matrix(lambda.adjoint())) / Complex(0.0, 2.0);
  auto positive_negative = [](const Matrix& h) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
    const auto& values = solver.eigenvalues();
    const Matrix& vectors = solver.eigenvectors();
    Matrix pos = Matrix::Zero(h.rows(), h.cols());
    Matrix neg = Matrix::Zero(h.rows(), h.cols());
    for (Eigen::Index k = 0; k < values.size(); ++k) {
      const Matrix proj = vectors.col(k) * vectors.col(k).adjoint();
      if (values[k] >= 0.0)
        pos += values[k] * proj;
      else
        neg += -values[k] * proj;
    }
    return std::make_pair(pos, neg);
  };
  QuadrantDecomposition out;
  std::tie(out.pos_re, out.neg_re) = positive_negative(re);
  std::tie(out.pos_im, out.neg_im) = positive_negative(im);
  return out;
}

}  // namespace lightcone
