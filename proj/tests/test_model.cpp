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

#include "lightcone/model.hpp"

using namespace lightcone;

namespace {

LatticeModel basic_chain(int d, Boundary boundary = Boundary::open) {
  LatticeModel m;
  m.n_sites = d;
  m.boundary = boundary;
  m.hopping = {{+1, Complex(-1.0, 0.0)}, {-1, Complex(-1.0, 0.0)}};
  m.decay_rate = 1.0;
  return m;
}

}  // namespace

TEST_CASE("displacement open chain is the plain difference") {
  CHECK(displacement(5, 2, 10, Boundary::open) == 3);
  CHECK(displacement(2, 5, 10, Boundary::open) == -3);
  CHECK(displacement(0, 9, 10, Boundary::open) == -9);
}

TEST_CASE("displacement periodic chain uses the minimal image") {
  CHECK(displacement(0, 9, 10, Boundary::periodic) == 1);
  CHECK(displacement(9, 0, 10, Boundary::periodic) == -1);
  CHECK(displacement(0, 7, 10, Boundary::periodic) == 3);
  CHECK(displacement(1, 2, 10, Boundary::periodic) == -1);
}

TEST_CASE("displacement is antisymmetric at the antipodal distance") {
  // Even ring: |x - y| = d/2 is ambiguous; the raw sign is kept so that
  // disp(x, y) = -disp(y, x) still holds.
  const int d = 8;
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y)
      CHECK(displacement(x, y, d, Boundary::periodic) ==
            -displacement(y, x, d, Boundary::periodic));
  CHECK(std::abs(displacement(0, 4, 8, Boundary::periodic)) == 4);
}

TEST_CASE("build_hamiltonian assembles kernel plus potential") {
  LatticeModel m = basic_chain(4);
  m.potential = Eigen::VectorXd::LinSpaced(4, 0.0, 3.0);
  const OperatorMatrix h = build_hamiltonian(m);
  REQUIRE(h.dim() == 4);
  CHECK(h.tag == MatrixTag::hermitian);
  CHECK(h.entries(0, 1) == Complex(-1.0, 0.0));
  CHECK(h.entries(1, 0) == Complex(-1.0, 0.0));
  CHECK(h.entries(0, 3) == Complex(0.0, 0.0));
  CHECK(h.entries(2, 2) == Complex(2.0, 0.0));
  CHECK(hermiticity_defect(h.entries) == 0.0);
}

TEST_CASE("build_hamiltonian completes the mirror offset") {
  LatticeModel m;
  m.n_sites = 5;
  m.hopping = {{+1, Complex(0.25, 0.5)}};  // t_{-1} implied by conjugation
  const OperatorMatrix h = build_hamiltonian(m);
  CHECK(h.entries(2, 1) == Complex(0.25, 0.5));
  CHECK(h.entries(1, 2) == Complex(0.25, -0.5));
  CHECK(hermiticity_defect(h.entries) == 0.0);
}

TEST_CASE("build_hamiltonian wraps for periodic chains") {
  const LatticeModel m = basic_chain(6, Boundary::periodic);
  const OperatorMatrix h = build_hamiltonian(m);
  CHECK(h.entries(0, 5) == Complex(-1.0, 0.0));
  CHECK(h.entries(5, 0) == Complex(-1.0, 0.0));
  CHECK(h.entries(0, 4) == Complex(0.0, 0.0));
}

TEST_CASE("validate_model rejects broken inputs") {
  CHECK_THROWS_AS(validate_model(LatticeModel{}), std::invalid_argument);

  LatticeModel m = basic_chain(5);
  m.decay_rate = 0.0;
  CHECK_THROWS_WITH_AS(validate_model(m),
                       doctest::Contains("decay_rate"),
                       std::invalid_argument);

  m = basic_chain(5);
  m.potential = Eigen::VectorXd::Zero(3);
  CHECK_THROWS_WITH_AS(validate_model(m), doctest::Contains("potential"),
                       std::invalid_argument);

  m = basic_chain(5);
  m.hopping.push_back({0, Complex(1.0, 0.0)});
  CHECK_THROWS_AS(validate_model(m), std::invalid_argument);

  m = basic_chain(5);
  m.hopping.push_back({+1, Complex(0.5, 0.0)});
  CHECK_THROWS_WITH_AS(validate_model(m), doctest::Contains("offset"),
                       std::invalid_argument);

  m = basic_chain(5);
  m.hopping = {{+1, Complex(1.0, 0.5)}, {-1, Complex(1.0, 0.5)}};
  CHECK_THROWS_WITH_AS(validate_model(m),
                       doctest::Contains("non-Hermitian"),
                       std::invalid_argument);

  m = basic_chain(5);
  m.hopping = {{+7, Complex(1.0, 0.0)}, {-7, Complex(1.0, 0.0)}};
  CHECK_THROWS_AS(validate_model(m), std::invalid_argument);

  m = basic_chain(5);
  m.jumps.push_back({JumpSpec::Kind::dephasing, 2, +1, -0.5, Matrix()});
  CHECK_THROWS_WITH_AS(validate_model(m), doctest::Contains("jumps[0]"),
                       std::invalid_argument);

  m = basic_chain(5);
  m.jumps.push_back({JumpSpec::Kind::hop, 4, +1, 1.0, Matrix()});
  CHECK_THROWS_AS(validate_model(m), std::invalid_argument);  // open edge
}

TEST_CASE("jump_matrix realizes the documented forms") {
  JumpSpec deph{JumpSpec::Kind::dephasing, 2, +1, 0.25, Matrix()};
  const Matrix wd = jump_matrix(deph, 5, Boundary::open);
  CHECK(wd(2, 2) == Complex(0.5, 0.0));
  CHECK(wd.cwiseAbs().sum() == 0.5);

  JumpSpec hop{JumpSpec::Kind::hop, 1, +1, 4.0, Matrix()};
  const Matrix wh = jump_matrix(hop, 5, Boundary::open);
  CHECK(wh(1, 2) == Complex(2.0, 0.0));
  CHECK(wh.cwiseAbs().sum() == 2.0);

  JumpSpec wrap{JumpSpec::Kind::hop, 4, +1, 1.0, Matrix()};
  const Matrix ww = jump_matrix(wrap, 5, Boundary::periodic);
  CHECK(ww(4, 0) == Complex(1.0, 0.0));
}

TEST_CASE("deform_matrix satisfies the group law") {
  const LatticeModel m = basic_chain(6);
  OperatorMatrix h = build_hamiltonian(m);
  const Complex z1(0.3, -0.2), z2(-0.1, 0.4);
  const OperatorMatrix once = deform_matrix(h, z1 + z2);
  const OperatorMatrix twice = deform_matrix(deform_matrix(h, z1), z2);
  CHECK((once.entries - twice.entries).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("deform_matrix adjoint rule") {
  LatticeModel m = basic_chain(5);
  m.jumps.push_back({JumpSpec::Kind::hop, 1, +1, 1.0, Matrix()});
  const Matrix w = jump_matrices(m)[0];
  const Complex zeta(0.2, 0.35);
  const Matrix left =
      deform_matrix({w, MatrixTag::general}, zeta).entries.adjoint();
  const Matrix right =
      deform_matrix({Matrix(w.adjoint()), MatrixTag::general},
                    std::conj(zeta))
          .entries;
  CHECK((left - right).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("real deformation is an isometry on open chains") {
  const LatticeModel m = basic_chain(7);
  const OperatorMatrix h = build_hamiltonian(m);
  const OperatorMatrix hs = deform_matrix(h, Complex(0.7, 0.0));
  CHECK(hs.tag == MatrixTag::hermitian);
  Eigen::JacobiSVD<Matrix> a(h.entries), b(hs.entries);
  CHECK((a.singularValues() - b.singularValues()).cwiseAbs().maxCoeff() <
        1e-12);
}

TEST_CASE("real deformation on rings is an isometry at lattice momenta") {
  // On a ring the diagonal conjugation T_xi is single-valued only for
  // xi in (2 pi / d) Z; the minimal-image phase matches exactly there.
  const int d = 8;
  const LatticeModel m = basic_chain(d, Boundary::periodic);
  const OperatorMatrix h = build_hamiltonian(m);
  const double xi = 2.0 * 3.14159265358979323846 / d;
  const OperatorMatrix hs = deform_matrix(h, Complex(xi, 0.0));
  Eigen::JacobiSVD<Matrix> a(h.entries), b(hs.entries);
  CHECK((a.singularValues() - b.singularValues()).cwiseAbs().maxCoeff() <
        1e-12);
}

TEST_CASE("require_in_strip names the bound") {
  CHECK_NOTHROW(require_in_strip(Complex(5.0, 0.99), 1.0));
  CHECK_THROWS_WITH_AS(require_in_strip(Complex(0.0, 1.0), 1.0),
                       doctest::Contains("strip"), std::invalid_argument);
  CHECK_THROWS_AS(require_in_strip(Complex(0.0, -1.2), 1.0),
                  std::invalid_argument);
}

TEST_CASE("model JSON round trip is the identity on text") {
  LatticeModel m = basic_chain(6, Boundary::periodic);
  m.potential = Eigen::VectorXd::LinSpaced(6, -1.0, 1.0);
  m.decay_rate = 0.8;
  m.seed = 42;
  m.jumps.push_back({JumpSpec::Kind::dephasing, 3, +1, 0.5, Matrix()});
  m.jumps.push_back({JumpSpec::Kind::hop, 2, -1, 1.5, Matrix()});
  Matrix w(6, 6);
  w.setZero();
  w(0, 5) = Complex(0.1, -0.2);
  m.jumps.push_back({JumpSpec::Kind::custom, 0, +1, 0.0, w});

  const std::string text = model_to_json_text(m);
  const LatticeModel back = model_from_json_text(text);
  CHECK(model_to_json_text(back) == text);
  CHECK(back.n_sites == 6);
  CHECK(back.boundary == Boundary::periodic);
  CHECK(back.jumps.size() == 3);
  CHECK(back.jumps[2].matrix(0, 5) == Complex(0.1, -0.2));
  CHECK(back.seed == 42);
}

TEST_CASE("model JSON errors name the offending field") {
  CHECK_THROWS_WITH_AS(model_from_json_text("{}"),
                       doctest::Contains("n_sites"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      model_from_json_text(R"({"n_sites": 3, "boundary": "twisted"})"),
      doctest::Contains("boundary"), std::invalid_argument);
  CHECK_THROWS_AS(model_from_json_text("not json"), std::invalid_argument);
}

TEST_CASE("catalog free chain") {
  const LatticeModel m = catalog_free_chain(5);
  validate_model(m);
  CHECK(m.jumps.empty());
  CHECK(m.decay_rate == 1.0);
  const OperatorMatrix h = build_hamiltonian(m);
  CHECK(h.entries(0, 1) == Complex(-1.0, 0.0));
  CHECK(h.entries(0, 0) == Complex(0.0, 0.0));
}

TEST_CASE("catalog dephasing chain has one jump per site") {
  const LatticeModel m = catalog_dephasing_chain(7, 0.5);
  validate_model(m);
  REQUIRE(m.jumps.size() == 7);
  for (const auto& j : m.jumps) {
    CHECK(j.kind == JumpSpec::Kind::dephasing);
    CHECK(j.rate == 0.5);
  }
}

TEST_CASE("catalog hopping chain covers every bond") {
  const LatticeModel open_chain = catalog_hopping_chain(6, 1.0);
  validate_model(open_chain);
  CHECK(open_chain.jumps.size() == 5);

  const LatticeModel ring = catalog_hopping_chain(6, 1.0, Boundary::periodic);
  validate_model(ring);
  CHECK(ring.jumps.size() == 6);
  for (const auto& j : ring.jumps) CHECK(j.kind == JumpSpec::Kind::hop);
}

TEST_CASE("catalog disordered chain is reproducible and bounded") {
  const LatticeModel a = catalog_disordered_chain(9, 0.75, 11);
  const LatticeModel b = catalog_disordered_chain(9, 0.75, 11);
  const LatticeModel c = catalog_disordered_chain(9, 0.75, 12);
  validate_model(a);
  CHECK(a.jumps.empty());
  CHECK(a.seed == 11);
  CHECK((a.potential - b.potential).cwiseAbs().maxCoeff() == 0.0);
  CHECK((a.potential - c.potential).cwiseAbs().maxCoeff() > 0.0);
  CHECK(a.potential.cwiseAbs().maxCoeff() <= 0.75);
}
