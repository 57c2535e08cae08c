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

#include "lightcone/model.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace lightcone {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

// Hopping map with implied mirror offsets filled in: t_{-r} = conj(t_r).
std::map<int, Complex> completed_hopping(const LatticeModel& model) {
  std::map<int, Complex> amp;
  for (const auto& term : model.hopping) amp[term.offset] = term.amplitude;
  for (const auto& term : model.hopping) {
    if (amp.find(-term.offset) == amp.end())
      amp[-term.offset] = std::conj(term.amplitude);
  }
  return amp;
}

void validate_jump(const JumpSpec& jump, int n_sites, Boundary boundary,
                   std::size_t index) {
  const std::string where = "jumps[" + std::to_string(index) + "]";
  switch (jump.kind) {
    case JumpSpec::Kind::dephasing:
    case JumpSpec::Kind::hop:
      if (!(jump.rate >= 0.0) || !std::isfinite(jump.rate))
        throw std::invalid_argument(where + ".rate must be finite and >= 0");
      if (jump.site < 0 || jump.site >= n_sites)
        throw std::invalid_argument(where + ".site out of range");
      if (jump.kind == JumpSpec::Kind::hop) {
        if (jump.direction != +1 && jump.direction != -1)
          throw std::invalid_argument(where + ".direction must be +1 or -1");
        const int target = jump.site + jump.direction;
        if (boundary == Boundary::open &&
            (target < 0 || target >= n_sites))
          throw std::invalid_argument(where +
                                      ".direction leaves the open chain");
      }
      break;
    case JumpSpec::Kind::custom:
      if (jump.matrix.rows() != n_sites || jump.matrix.cols() != n_sites)
        throw std::invalid_argument(where + ".matrix must be n_sites square");
      if (!jump.matrix.allFinite())
        throw std::invalid_argument(where + ".matrix has non-finite entries");
      break;
  }
}

double uniform01(std::mt19937_64& rng) {
  // 53 uniform bits; identical across platforms, unlike
  // std::uniform_real_distribution.
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("model JSON: ") + e.what());
  }
}

double number_field(const json& j, const std::string& field, double fallback,
                    bool required = false) {
  if (!j.contains(field)) {
    if (required)
      throw std::invalid_argument("model JSON: missing field \"" + field +
                                  "\"");
    return fallback;
  }
  if (!j[field].is_number())
    throw std::invalid_argument("model JSON: field \"" + field +
                                "\" must be a number");
  return j[field].get<double>();
}

int int_field(const json& j, const std::string& field, int fallback,
              bool required = false) {
  if (!j.contains(field)) {
    if (required)
      throw std::invalid_argument("model JSON: missing field \"" + field +
                                  "\"");
    return fallback;
  }
  if (!j[field].is_number_integer())
    throw std::invalid_argument("model JSON: field \"" + field +
                                "\" must be an integer");
  return j[field].get<int>();
}

}  // namespace

double hermiticity_defect(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

void validate_model(const LatticeModel& model) {
  if (model.n_sites < 1)
    throw std::invalid_argument("n_sites must be >= 1");
  if (!(model.decay_rate > 0.0) || !std::isfinite(model.decay_rate))
    throw std::invalid_argument("decay_rate must be finite and > 0");
  if (model.potential.size() != 0 &&
      model.potential.size() != model.n_sites)
    throw std::invalid_argument(
        "potential length must be 0 or n_sites");
  if (model.potential.size() != 0 && !model.potential.allFinite())
    throw std::invalid_argument("potential has non-finite entries");

  std::map<int, Complex> seen;
  for (const auto& term : model.hopping) {
    if (term.offset == 0)
      throw std::invalid_argument(
          "hopping offset 0 is not allowed; use the potential");
    if (std::abs(term.offset) >= model.n_sites)
      throw std::invalid_argument("hopping offset " +
                                  std::to_string(term.offset) +
                                  " exceeds the chain");
    if (seen.count(term.offset))
      throw std::invalid_argument("duplicate hopping offset " +
                                  std::to_string(term.offset));
    seen[term.offset] = term.amplitude;
  }
  for (const auto& [offset, amplitude] : seen) {
    auto mirror = seen.find(-offset);
    if (mirror == seen.end()) continue;
    const double defect = std::abs(mirror->second - std::conj(amplitude));
    if (defect > 1e-12 * std::max(1.0, std::abs(amplitude)))
      throw std::invalid_argument(
          "non-Hermitian hopping map at offset " + std::to_string(offset) +
          ": t_{-r} != conj(t_r)");
  }

  for (std::size_t k = 0; k < model.jumps.size(); ++k)
    validate_jump(model.jumps[k], model.n_sites, model.boundary, k);
}

int displacement(int x, int y, int d, Boundary boundary) {
  const int raw = x - y;
  if (boundary == Boundary::open) return raw;
  int m = ((raw % d) + d) % d;
  if (2 * m > d) m -= d;
  // Antipodal ties (even d) keep the sign of the raw displacement so that
  // displacement(x, y) == -displacement(y, x) without exception.
  if (2 * m == d && raw < 0) m = -m;
  return m;
}

OperatorMatrix build_hamiltonian(const LatticeModel& model) {
  validate_model(model);
  const int d = model.n_sites;
  const auto amp = completed_hopping(model);
  Matrix h = Matrix::Zero(d, d);
  for (int x = 0; x < d; ++x) {
    for (int y = 0; y < d; ++y) {
      if (x == y) continue;
      const auto it = amp.find(displacement(x, y, d, model.boundary));
      if (it != amp.end()) h(x, y) = it->second;
    }
  }
  if (model.potential.size() != 0)
    h.diagonal() += model.potential.cast<Complex>();
  return OperatorMatrix{std::move(h), MatrixTag::hermitian};
}

Matrix jump_matrix(const JumpSpec& jump, int n_sites, Boundary boundary) {
  validate_jump(jump, n_sites, boundary, 0);
  switch (jump.kind) {
    case JumpSpec::Kind::dephasing: {
      Matrix w = Matrix::Zero(n_sites, n_sites);
      w(jump.site, jump.site) = std::sqrt(jump.rate);
      return w;
    }
    case JumpSpec::Kind::hop: {
      Matrix w = Matrix::Zero(n_sites, n_sites);
      int target = jump.site + jump.direction;
      if (boundary == Boundary::periodic)
        target = ((target % n_sites) + n_sites) % n_sites;
      w(jump.site, target) = std::sqrt(jump.rate);
      return w;
    }
    case JumpSpec::Kind::custom:
      return jump.matrix;
  }
  throw std::logic_error("unreachable jump kind");
}

std::vector<Matrix> jump_matrices(const LatticeModel& model) {
  std::vector<Matrix> out;
  out.reserve(model.jumps.size());
  for (const auto& jump : model.jumps)
    out.push_back(jump_matrix(jump, model.n_sites, model.boundary));
  return out;
}

OperatorMatrix deform_matrix(const OperatorMatrix& a, Complex zeta,
                             Boundary boundary) {
  const int d = a.dim();
  // Phase table over all displacements; exp(-i zeta r) is entire in zeta.
  std::vector<Complex> phase(2 * d + 1);
  for (int r = -d; r <= d; ++r)
    phase[r + d] = std::exp(Complex(0.0, -1.0) * zeta * double(r));
  Matrix out(d, d);
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y)
      out(x, y) = a.entries(x, y) * phase[displacement(x, y, d, boundary) + d];
  const bool keeps_tag =
      a.tag == MatrixTag::hermitian && zeta.imag() == 0.0;
  return OperatorMatrix{std::move(out),
                        keeps_tag ? MatrixTag::hermitian : MatrixTag::general};
}

OperatorMatrix imag_part(const OperatorMatrix& a) {
  Matrix out = (a.entries - a.entries.adjoint()) / Complex(0.0, 2.0);
  return OperatorMatrix{std::move(out), MatrixTag::hermitian};
}

void require_in_strip(Complex zeta, double decay_rate) {
  if (!(std::abs(zeta.imag()) < decay_rate)) {
    std::ostringstream msg;
    msg << "deformation parameter with Im = " << zeta.imag()
        << " outside the admissible strip |Im zeta| < " << decay_rate;
    throw std::invalid_argument(msg.str());
  }
}

LatticeModel model_from_json_text(const std::string& text) {
  const json j = parse_json(text);
  if (!j.is_object())
    throw std::invalid_argument("model JSON: top level must be an object");

  LatticeModel m;
  m.n_sites = int_field(j, "n_sites", 0, /*required=*/true);

  if (j.contains("boundary")) {
    const auto& b = j["boundary"];
    if (!b.is_string() || (b != "open" && b != "periodic"))
      throw std::invalid_argument(
          "model JSON: field \"boundary\" must be \"open\" or \"periodic\"");
    m.boundary = b == "open" ? Boundary::open : Boundary::periodic;
  }

  if (j.contains("hopping")) {
    if (!j["hopping"].is_array())
      throw std::invalid_argument(
          "model JSON: field \"hopping\" must be an array");
    for (const auto& t : j["hopping"]) {
      if (!t.is_object())
        throw std::invalid_argument(
            "model JSON: hopping entries must be objects");
      HoppingTerm term;
      term.offset = int_field(t, "offset", 0, /*required=*/true);
      term.amplitude =
          Complex(number_field(t, "re", 0.0), number_field(t, "im", 0.0));
      m.hopping.push_back(term);
    }
  }

  if (j.contains("potential")) {
    if (!j["potential"].is_array())
      throw std::invalid_argument(
          "model JSON: field \"potential\" must be an array of numbers");
    m.potential.resize(j["potential"].size());
    Eigen::Index i = 0;
    for (const auto& v : j["potential"]) {
      if (!v.is_number())
        throw std::invalid_argument(
            "model JSON: field \"potential\" must be an array of numbers");
      m.potential[i++] = v.get<double>();
    }
  }

  m.decay_rate = number_field(j, "decay_rate", 1.0);

  if (j.contains("jumps")) {
    if (!j["jumps"].is_array())
      throw std::invalid_argument(
          "model JSON: field \"jumps\" must be an array");
    std::size_t index = 0;
    for (const auto& entry : j["jumps"]) {
      const std::string where = "jumps[" + std::to_string(index++) + "]";
      if (!entry.is_object() || !entry.contains("kind") ||
          !entry["kind"].is_string())
        throw std::invalid_argument("model JSON: " + where +
                                    " must be an object with a \"kind\"");
      const std::string kind = entry["kind"].get<std::string>();
      JumpSpec jump;
      if (kind == "dephasing") {
        jump.kind = JumpSpec::Kind::dephasing;
        jump.site = int_field(entry, "site", 0, /*required=*/true);
        jump.rate = number_field(entry, "rate", 0.0, /*required=*/true);
      } else if (kind == "hop") {
        jump.kind = JumpSpec::Kind::hop;
        jump.site = int_field(entry, "site", 0, /*required=*/true);
        jump.direction = int_field(entry, "direction", +1);
        jump.rate = number_field(entry, "rate", 0.0, /*required=*/true);
      } else if (kind == "custom") {
        jump.kind = JumpSpec::Kind::custom;
        if (!entry.contains("matrix") || !entry["matrix"].is_array())
          throw std::invalid_argument("model JSON: " + where +
                                      ".matrix must be an array of rows");
        const auto& rows = entry["matrix"];
        const auto n = rows.size();
        jump.matrix = Matrix::Zero(n, n);
        for (std::size_t r = 0; r < n; ++r) {
          if (!rows[r].is_array() || rows[r].size() != n)
            throw std::invalid_argument("model JSON: " + where +
                                        ".matrix must be square");
          for (std::size_t c = 0; c < n; ++c) {
            const auto& cell = rows[r][c];
            if (!cell.is_array() || cell.size() != 2 ||
                !cell[0].is_number() || !cell[1].is_number())
              throw std::invalid_argument("model JSON: " + where +
                                          ".matrix entries must be [re, im]");
            jump.matrix(r, c) =
                Complex(cell[0].get<double>(), cell[1].get<double>());
          }
        }
      } else {
        throw std::invalid_argument("model JSON: " + where +
                                    ".kind \"" + kind + "\" is unknown");
      }
      m.jumps.push_back(std::move(jump));
    }
  }

  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned() && !j["seed"].is_number_integer())
      throw std::invalid_argument(
          "model JSON: field \"seed\" must be an integer");
    m.seed = j["seed"].get<std::uint64_t>();
  }

  validate_model(m);
  return m;
}

LatticeModel model_from_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::invalid_argument("cannot open model file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return model_from_json_text(buf.str());
}

std::string model_to_json_text(const LatticeModel& model) {
  validate_model(model);
  ordered_json j;
  j["n_sites"] = model.n_sites;
  j["boundary"] = model.boundary == Boundary::open ? "open" : "periodic";
  j["hopping"] = ordered_json::array();
  for (const auto& term : model.hopping)
    j["hopping"].push_back({{"offset", term.offset},
                            {"re", term.amplitude.real()},
                            {"im", term.amplitude.imag()}});
  if (model.potential.size() != 0) {
    j["potential"] = ordered_json::array();
    for (Eigen::Index i = 0; i < model.potential.size(); ++i)
      j["potential"].push_back(model.potential[i]);
  }
  j["decay_rate"] = model.decay_rate;
  j["jumps"] = ordered_json::array();
  for (const auto& jump : model.jumps) {
    ordered_json entry;
    switch (jump.kind) {
      case JumpSpec::Kind::dephasing:
        entry = {{"kind", "dephasing"}, {"site", jump.site},
                 {"rate", jump.rate}};
        break;
      case JumpSpec::Kind::hop:
        entry = {{"kind", "hop"}, {"site", jump.site},
                 {"direction", jump.direction}, {"rate", jump.rate}};
        break;
      case JumpSpec::Kind::custom: {
        entry["kind"] = "custom";
        auto rows = ordered_json::array();
        for (Eigen::Index r = 0; r < jump.matrix.rows(); ++r) {
          auto row = ordered_json::array();
          for (Eigen::Index c = 0; c < jump.matrix.cols(); ++c)
            row.push_back({jump.matrix(r, c).real(), jump.matrix(r, c).imag()});
          rows.push_back(std::move(row));
        }
        entry["matrix"] = std::move(rows);
        break;
      }
    }
    j["jumps"].push_back(std::move(entry));
  }
  j["seed"] = model.seed;
  return j.dump(2) + "\n";
}

LatticeModel catalog_free_chain(int d, Boundary boundary) {
  LatticeModel m;
  m.n_sites = d;
  m.boundary = boundary;
  m.hopping = {{+1, Complex(-1.0, 0.0)}, {-1, Complex(-1.0, 0.0)}};
  m.decay_rate = 1.0;
  validate_model(m);
  return m;
}

LatticeModel catalog_dephasing_chain(int d, double gamma, Boundary boundary) {
  LatticeModel m = catalog_free_chain(d, boundary);
  for (int x = 0; x < d; ++x) {
    JumpSpec jump;
    jump.kind = JumpSpec::Kind::dephasing;
    jump.site = x;
    jump.rate = gamma;
    m.jumps.push_back(jump);
  }
  validate_model(m);
  return m;
}

LatticeModel catalog_hopping_chain(int d, double gamma, Boundary boundary) {
  LatticeModel m = catalog_free_chain(d, boundary);
  const int bonds = boundary == Boundary::open ? d - 1 : d;
  for (int x = 0; x < bonds; ++x) {
    JumpSpec jump;
    jump.kind = JumpSpec::Kind::hop;
    jump.site = x;
    jump.direction = +1;
    jump.rate = gamma;
    m.jumps.push_back(jump);
  }
  validate_model(m);
  return m;
}

LatticeModel catalog_disordered_chain(int d, double w, std::uint64_t seed,
                                      Boundary boundary) {
  LatticeModel m = catalog_free_chain(d, boundary);
  m.seed = seed;
  std::mt19937_64 rng(seed);
  m.potential.resize(d);
  for (int x = 0; x < d; ++x)
    m.potential[x] = w * (2.0 * uniform01(rng) - 1.0);
  validate_model(m);
  return m;
}

}  // namespace lightcone
