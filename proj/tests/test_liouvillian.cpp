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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "json.hpp"
#include "lightcone/liouvillian.hpp"
#include "lightcone/model.hpp"
#include "lightcone/sampling.hpp"

using namespace lightcone;

namespace {

LatticeModel mixed_model(int d, Boundary boundary = Boundary::open) {
  LatticeModel m;
  m.n_sites = d;
  m.boundary = boundary;
  m.hopping = {{+1, Complex(-1.0, 0.0)}, {-1, Complex(-1.0, 0.0)}};
  m.potential = Eigen::VectorXd::LinSpaced(d, -0.5, 0.5);
  m.decay_rate = 1.0;
  m.jumps.push_back({JumpSpec::Kind::dephasing, 1, +1, 0.6, Matrix()});
  m.jumps.push_back({JumpSpec::Kind::hop, 0, +1, 0.8, Matrix()});
  return m;
}

Matrix lindblad_by_hand(const LatticeModel& m, const Matrix& rho) {
  const Matrix h = build_hamiltonian(m).entries;
  Matrix out = Complex(0.0, -1.0) * (h * rho - rho * h);
  for (const Matrix& w : jump_matrices(m)) {
    const Matrix ww = w.adjoint() * w;
    out += w * rho * w.adjoint() - 0.5 * (ww * rho + rho * ww);
  }
  return out;
}

}  // namespace

TEST_CASE("vec and unvec are inverse and row stacking") {
  Matrix a(2, 2);
  a << Complex(1, 0), Complex(2, 0), Complex(3, 0), Complex(4, 0);
  const CVector v = vec(a);
  CHECK(v[0] == Complex(1, 0));
  CHECK(v[1] == Complex(2, 0));  // row-major: (0,1) comes second
  CHECK(v[2] == Complex(3, 0));
  CHECK((unvec(v, 2) - a).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("lindbladian matches the literal master equation") {
  const LatticeModel m = mixed_model(5);
  const Superoperator gen = build_lindbladian(m);
  CHECK(gen.dim == 5);
  CHECK(gen.provenance.kind == Provenance::Kind::lindblad);
  CHECK(trace_preservation_defect(gen) < 1e-14);

  auto rng = seeded_engine(3, "lindblad_action");
  for (int k = 0; k < 5; ++k) {
    const Matrix rho = ginibre_matrix(5, 5, rng);
    const Matrix via_super = apply(gen, rho);
    const Matrix direct = lindblad_by_hand(m, rho);
    const double scale = std::max(1.0, direct.cwiseAbs().maxCoeff());
    CHECK((via_super - direct).cwiseAbs().maxCoeff() < 1e-12 * scale);
  }
}

TEST_CASE("lindbladian maps Hermitian to Hermitian") {
  const LatticeModel m = mixed_model(4);
  const Superoperator gen = build_lindbladian(m);
  auto rng = seeded_engine(5, "hermitian_preservation");
  const Matrix g = ginibre_matrix(4, 4, rng);
  const Matrix rho = g + g.adjoint();
  const Matrix out = apply(gen, rho);
  CHECK(hermiticity_defect(out) < 1e-12 * out.cwiseAbs().maxCoeff());
}

TEST_CASE("deformed generator at zero deformation is the lindbladian") {
  const LatticeModel m = mixed_model(4);
  const Superoperator plain = build_lindbladian(m);
  const Superoperator deformed =
      build_deformed_generator(m, Complex(0, 0), Complex(0, 0));
  CHECK((plain.matrix - deformed.matrix).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("deformed generator matches the deformed literal form") {
  const LatticeModel m = mixed_model(5);
  const Complex zeta(0.2, 0.3), zeta_tilde(-0.1, -0.4);
  const Superoperator gen = build_deformed_generator(m, zeta, zeta_tilde);
  const OperatorMatrix h = build_hamiltonian(m);
  const Matrix hz = deform_matrix(h, zeta, m.boundary).entries;
  const Matrix hzt = deform_matrix(h, zeta_tilde, m.boundary).entries;

  auto rng = seeded_engine(11, "deformed_action");
  for (int k = 0; k < 4; ++k) {
    const Matrix lam = ginibre_matrix(5, 5, rng);
    Matrix direct = Complex(0, -1) * (hz * lam - lam * hzt);
    for (const Matrix& w : jump_matrices(m)) {
      const OperatorMatrix wo{w, MatrixTag::general};
      const OperatorMatrix wa{Matrix(w.adjoint()), MatrixTag::general};
      const Matrix wz = deform_matrix(wo, zeta, m.boundary).entries;
      const Matrix wzt = deform_matrix(wo, zeta_tilde, m.boundary).entries;
      const Matrix az = deform_matrix(wa, zeta, m.boundary).entries;
      const Matrix azt = deform_matrix(wa, zeta_tilde, m.boundary).entries;
      direct += wz * lam * azt - 0.5 * (az * wz * lam + lam * azt * wzt);
    }
    const Matrix via_super = apply(gen, lam);
    const double scale = std::max(1.0, direct.cwiseAbs().maxCoeff());
    CHECK((via_super - direct).cwiseAbs().maxCoeff() < 1e-12 * scale);
  }
}

TEST_CASE("deformed generator is a similarity transform on open chains") {
  const LatticeModel m = mixed_model(5);
  const Complex zeta(0.15, 0.35), zeta_tilde(0.05, -0.25);
  const Superoperator deformed = build_deformed_generator(m, zeta, zeta_tilde);
  const Superoperator plain = build_lindbladian(m);
  const Superoperator fwd = two_sided_multiplier(zeta, zeta_tilde, 5);
  const Superoperator inv = two_sided_multiplier(-zeta, -zeta_tilde, 5);
  const Matrix conjugated = fwd.matrix * plain.matrix * inv.matrix;
  const double scale = conjugated.cwiseAbs().maxCoeff();
  CHECK((deformed.matrix - conjugated).cwiseAbs().maxCoeff() < 1e-12 * scale);
}

TEST_CASE("deformed generator enforces the strip") {
  const LatticeModel m = mixed_model(4);
  CHECK_THROWS_WITH_AS(
      build_deformed_generator(m, Complex(0.0, 1.0), Complex(0.0, 0.0)),
      doctest::Contains("strip"), std::invalid_argument);
}

TEST_CASE("adjoint generator satisfies the trace pairing") {
  const LatticeModel m = mixed_model(5);
  const Superoperator gen = build_lindbladian(m);
  const Superoperator dual = adjoint_generator(gen);
  CHECK(dual.provenance.kind == Provenance::Kind::adjoint);

  auto rng = seeded_engine(17, "adjoint_pairs");
  for (int k = 0; k < 8; ++k) {
    const Matrix a = ginibre_matrix(5, 5, rng);
    const Matrix lam = ginibre_matrix(5, 5, rng);
    const Complex lhs = (apply(dual, a) * lam).trace();
    const Complex rhs = (a * apply(gen, lam)).trace();
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
  }

  const Matrix identity = Matrix::Identity(5, 5);
  const Matrix unit = apply(dual, identity);
  CHECK(unit.cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("adjoint generator rejects non-lindblad provenance") {
  const LatticeModel m = mixed_model(4);
  const Superoperator deformed =
      build_deformed_generator(m, Complex(0.0, 0.2), Complex(0.0, -0.2));
  CHECK_THROWS_AS(adjoint_generator(deformed), std::invalid_argument);
}

TEST_CASE("adjoint_map is an involution and pairs correctly") {
  const LatticeModel m = mixed_model(4);
  const Superoperator gen =
      build_deformed_generator(m, Complex(0.0, 0.3), Complex(0.0, -0.3));
  const Superoperator dual = adjoint_map(gen);
  const Superoperator twice = adjoint_map(dual);
  CHECK((twice.matrix - gen.matrix).cwiseAbs().maxCoeff() == 0.0);

  auto rng = seeded_engine(23, "adjoint_map_pairs");
  const Matrix a = ginibre_matrix(4, 4, rng);
  const Matrix lam = ginibre_matrix(4, 4, rng);
  const Complex lhs = (apply(dual, a) * lam).trace();
  const Complex rhs = (a * apply(gen, lam)).trace();
  CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
}

TEST_CASE("gtilde vanishes identically for dephasing") {
  LatticeModel m;
  m.n_sites = 6;
  m.hopping = {{+1, Complex(-1, 0)}, {-1, Complex(-1, 0)}};
  for (int s = 0; s < 6; ++s)
    m.jumps.push_back({JumpSpec::Kind::dephasing, s, +1, 0.7, Matrix()});
  const GtildeResult g = build_gtilde(m, Complex(0.0, 0.4));
  CHECK(g.op.entries.cwiseAbs().maxCoeff() == 0.0);  // cancels bitwise
  CHECK(g.symmetrization_defect == 0.0);
}

TEST_CASE("gtilde closed form for a single hop jump") {
  LatticeModel m;
  m.n_sites = 6;
  m.hopping = {{+1, Complex(-1, 0)}, {-1, Complex(-1, 0)}};
  m.jumps.push_back({JumpSpec::Kind::hop, 2, +1, 1.0, Matrix()});
  const double eta = -0.5;
  const GtildeResult g = build_gtilde(m, Complex(0.0, eta));
  const double expected = 0.5 * (std::exp(-2.0 * eta) - 1.0);
  CHECK(g.op.tag == MatrixTag::hermitian);
  CHECK(std::abs(g.op.entries(3, 3).real() - expected) < 1e-12);
  Matrix rest = g.op.entries;
  rest(3, 3) = 0.0;
  CHECK(rest.cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("gtilde rejects non-imaginary deformation") {
  const LatticeModel m = mixed_model(4);
  CHECK_THROWS_WITH_AS(build_gtilde(m, Complex(0.1, 0.2)),
                       doctest::Contains("imaginary"), std::invalid_argument);
}

TEST_CASE("gprime matches the eta derivative of gtilde") {
  const LatticeModel m = mixed_model(6, Boundary::periodic);
  const OperatorMatrix gp = build_gprime(m);
  CHECK(gp.tag == MatrixTag::hermitian);
  const double h = 1e-5;
  const Matrix plus = build_gtilde(m, Complex(0.0, h)).op.entries;
  const Matrix minus = build_gtilde(m, Complex(0.0, -h)).op.entries;
  const Matrix fd = (plus - minus) / (2.0 * h);
  CHECK((gp.entries - fd).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("gprime closed form for the hop family") {
  LatticeModel m;
  m.n_sites = 5;
  m.hopping = {{+1, Complex(-1, 0)}, {-1, Complex(-1, 0)}};
  for (int s = 0; s < 4; ++s)
    m.jumps.push_back({JumpSpec::Kind::hop, s, +1, 1.0, Matrix()});
  const OperatorMatrix gp = build_gprime(m);
  Matrix expected = Matrix::Zero(5, 5);
  for (int s = 1; s < 5; ++s) expected(s, s) = -1.0;
  CHECK((gp.entries - expected).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("trace identity carries the factor two") {
  // d=5 chain with one hop jump, zeta = -zeta~ = 0.4i.
  LatticeModel m;
  m.n_sites = 5;
  m.hopping = {{+1, Complex(-1, 0)}, {-1, Complex(-1, 0)}};
  m.jumps.push_back({JumpSpec::Kind::hop, 1, +1, 1.3, Matrix()});
  const Complex zeta(0.0, 0.4);
  const Superoperator g_part = build_deformed_dissipator(m, zeta, -zeta);
  const Matrix gt = build_gtilde(m, zeta).op.entries;

  auto rng = seeded_engine(29, "trace_identity");
  for (int k = 0; k < 6; ++k) {
    const Matrix rho = random_density(5, rng);
    const Complex lhs = apply(g_part, rho).trace();
    const Complex rhs = 2.0 * (gt * rho).trace();
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
  }
}

TEST_CASE("two_sided_multiplier acts as the diagonal sandwich") {
  const int d = 4;
  const Complex zeta(0.3, 0.1), zeta_tilde(-0.2, 0.25);
  const Superoperator mult = two_sided_multiplier(zeta, zeta_tilde, d);
  Matrix t_left(d, d), t_right(d, d);
  t_left.setZero();
  t_right.setZero();
  for (int x = 0; x < d; ++x) {
    t_left(x, x) = std::exp(Complex(0, -1) * zeta * double(x));
    t_right(x, x) = std::exp(Complex(0, 1) * zeta_tilde * double(x));
  }
  auto rng = seeded_engine(31, "multiplier");
  const Matrix lam = ginibre_matrix(d, d, rng);
  const Matrix direct = t_left * lam * t_right;
  CHECK((apply(mult, lam) - direct).cwiseAbs().maxCoeff() < 1e-13);

  const Superoperator inv = two_sided_multiplier(-zeta, -zeta_tilde, d);
  const Matrix prod = mult.matrix * inv.matrix;
  CHECK((prod - Matrix::Identity(d * d, d * d)).cwiseAbs().maxCoeff() <
        1e-13);
}

TEST_CASE("cut_superoperator is the two-sided indicator") {
  const Superoperator cut = cut_superoperator({1, 3}, 4);
  auto rng = seeded_engine(37, "cut");
  const Matrix lam = ginibre_matrix(4, 4, rng);
  Matrix chi = Matrix::Zero(4, 4);
  chi(1, 1) = 1.0;
  chi(3, 3) = 1.0;
  CHECK((apply(cut, lam) - chi * lam * chi).cwiseAbs().maxCoeff() == 0.0);
  CHECK_THROWS_AS(cut_superoperator({4}, 4), std::invalid_argument);
  CHECK_THROWS_AS(cut_superoperator({-1}, 4), std::invalid_argument);
}

TEST_CASE("unitality defect separates unital from non-unital") {
  LatticeModel deph;
  deph.n_sites = 4;
  deph.hopping = {{+1, Complex(-1, 0)}, {-1, Complex(-1, 0)}};
  for (int s = 0; s < 4; ++s)
    deph.jumps.push_back({JumpSpec::Kind::dephasing, s, +1, 0.5, Matrix()});
  const Superoperator unital = adjoint_generator(build_lindbladian(deph));
  CHECK(unitality_defect(unital) < 1e-13);

  LatticeModel hop = deph;
  hop.jumps.clear();
  hop.jumps.push_back({JumpSpec::Kind::hop, 0, +1, 0.9, Matrix()});
  const Superoperator forward = build_lindbladian(hop);
  CHECK(unitality_defect(forward) > 1e-3);
}

TEST_CASE("superoperator JSON export has the documented shape") {
  const LatticeModel m = mixed_model(3);
  const Superoperator gen = build_lindbladian(m);
  const auto j = nlohmann::json::parse(superoperator_to_json(gen));
  CHECK(j.at("dim").get<int>() == 3);
  CHECK(j.at("rows").get<int>() == 9);
  CHECK(j.at("cols").get<int>() == 9);
  CHECK(j.at("provenance").is_string());
  CHECK(j.at("data").size() == 2 * 81);
}

TEST_CASE("provenance describes the deformation") {
  const LatticeModel m = mixed_model(3);
  const Superoperator gen =
      build_deformed_generator(m, Complex(0.0, 0.25), Complex(0.0, -0.25));
  const std::string text = gen.provenance.describe();
  CHECK(text.find("0.25") != std::string::npos);
}
