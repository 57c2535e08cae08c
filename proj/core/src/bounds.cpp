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

#include "lightcone/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

#include "format.hpp"
#include "lightcone/evolve.hpp"
#include "lightcone/liouvillian.hpp"

namespace lightcone {

namespace {

double top_eigenvalue(const Matrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian,
                                               Eigen::EigenvaluesOnly);
  return solver.eigenvalues().maxCoeff();
}

void require_eps(double eps) {
  if (!(eps > 0.0 && eps < 0.4))
    throw std::invalid_argument("eps must lie in (0, 2/5)");
}

}  // namespace

VelocityBound velocity_c_prime(const LatticeModel& model, double nu) {
  if (!(nu > 0.0))
    throw std::invalid_argument("velocity bound needs nu > 0");
  require_in_strip(Complex(0.0, nu), model.decay_rate);
  const OperatorMatrix h = build_hamiltonian(model);

  auto top = [&](double eta) {
    const Complex zeta(0.0, eta);
    const Matrix a = imag_part(deform_matrix(h, zeta, model.boundary)).entries +
                     build_gtilde(model, zeta).op.entries;
    return top_eigenvalue(a);
  };

  VelocityBound out;
  out.nu = nu;
  out.top_eig_plus = top(+nu);
  out.top_eig_minus = top(-nu);
  out.witness_sign = out.top_eig_plus >= out.top_eig_minus ? +1 : -1;
  out.c_prime = std::max(out.top_eig_plus, out.top_eig_minus) / nu;
  return out;
}

ConeEnvelope velocity_c_mu(const LatticeModel& model, double mu, double eps) {
  require_eps(eps);
  if (!(mu > 0.0)) throw std::invalid_argument("mu must be > 0");
  const double shrink = 1.0 - 2.5 * eps;
  const double nu = mu / shrink;
  if (!(nu < model.decay_rate)) {
    std::ostringstream msg;
    msg << "mu = " << mu << " maps to nu = " << nu
        << " outside the admissible strip |Im zeta| < " << model.decay_rate;
    throw std::invalid_argument(msg.str());
  }
  ConeEnvelope out;
  out.mu = mu;
  out.eps = eps;
  out.nu = nu;
  out.c_mu = velocity_c_prime(model, nu).c_prime;
  out.c = out.c_mu / shrink;
  return out;
}

double small_nu_slope(const LatticeModel& model) {
  validate_model(model);
  if (model.potential.size() != 0) {
    const double v0 = model.potential[0];
    for (Eigen::Index i = 1; i < model.potential.size(); ++i)
      if (model.potential[i] != v0)
        throw std::invalid_argument("slope undefined for disordered V");
  }

  std::map<int, Complex> amp;
  for (const auto& term : model.hopping) amp[term.offset] = term.amplitude;
  for (const auto& term : model.hopping)
    if (!amp.count(-term.offset))
      amp[-term.offset] = std::conj(term.amplitude);

  // |d omega / d k| for omega(k) = sum_r t_r e^{-ikr}; real by Hermiticity
  // of the completed hopping map.
  auto group_speed = [&](double k) {
    Complex s(0.0, 0.0);
    for (const auto& [r, t] : amp)
      s += Complex(0.0, -double(r)) * t *
           std::exp(Complex(0.0, -k * double(r)));
    return std::abs(s.real());
  };

  double best_k = 0.0;
  double best = 0.0;
  const int grid = 4096;
  for (int i = 0; i < grid; ++i) {
    const double k = 2.0 * std::numbers::pi * double(i) / double(grid);
    const double v = group_speed(k);
    if (v > best) {
      best = v;
      best_k = k;
    }
  }
  // Golden-section refinement around the grid argmax.
  double lo = best_k - 2.0 * std::numbers::pi / double(grid);
  double hi = best_k + 2.0 * std::numbers::pi / double(grid);
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - ratio * (hi - lo);
  double x2 = lo + ratio * (hi - lo);
  double f1 = group_speed(x1);
  double f2 = group_speed(x2);
  for (int iter = 0; iter < 200; ++iter) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + ratio * (hi - lo);
      f2 = group_speed(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - ratio * (hi - lo);
      f1 = group_speed(x1);
    }
  }
  best = std::max({best, f1, f2});

  return best - operator_norm(build_gprime(model).entries);
}

double GeometryFactors::separation_weight(double nu) const {
  return std::exp(-nu * delta_uv);
}

GeometryFactors geometry_delta(const std::vector<int>& U,
                               const std::vector<int>& V, int b) {
  if (U.empty() || V.empty())
    throw std::invalid_argument("geometry_delta needs nonempty sets");
  if (b != +1 && b != -1)
    throw std::invalid_argument("direction b must be +1 or -1");
  GeometryFactors out;
  out.U = U;
  out.V = V;
  out.b = b;
  out.r_u = double(b) * double(*std::min_element(U.begin(), U.end()));
  if (b < 0) out.r_u = double(b) * double(*std::max_element(U.begin(),
                                                            U.end()));
  out.r_v_tilde =
      double(b) * double(b > 0 ? *std::max_element(V.begin(), V.end())
                               : *std::min_element(V.begin(), V.end()));
  out.delta_uv = out.r_u - out.r_v_tilde;
  return out;
}

double best_geometry_delta(const std::vector<int>& U,
                           const std::vector<int>& V) {
  return std::max(geometry_delta(U, V, +1).delta_uv,
                  geometry_delta(U, V, -1).delta_uv);
}

double set_distance(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.empty() || b.empty())
    throw std::invalid_argument("set_distance needs nonempty sets");
  int best = std::numeric_limits<int>::max();
  for (int x : a)
    for (int y : b) best = std::min(best, std::abs(x - y));
  return double(best);
}

double ball_envelope(double delta_uv, double nu, double c_prime, double t) {
  if (!(nu > 0.0)) throw std::invalid_argument("ball_envelope needs nu > 0");
  return 4.0 * std::exp(-2.0 * nu * delta_uv + 2.0 * nu * c_prime * t);
}

namespace {

std::vector<std::vector<int>> greedy_cover(std::vector<int> sites,
                                           double diameter) {
  std::sort(sites.begin(), sites.end());
  sites.erase(std::unique(sites.begin(), sites.end()), sites.end());
  std::vector<std::vector<int>> chunks;
  for (int s : sites) {
    if (chunks.empty() || double(s - chunks.back().front()) > diameter)
      chunks.emplace_back();
    chunks.back().push_back(s);
  }
  return chunks;
}

}  // namespace

PartitionConstant assemble_partition_constant(const std::vector<int>& source,
                                              const std::vector<int>& observed,
                                              double eps, double nu) {
  require_eps(eps);
  if (!(nu > 0.0)) throw std::invalid_argument("nu must be > 0");
  if (source.empty() || observed.empty())
    throw std::invalid_argument("partition constant needs nonempty sets");
  {
    std::set<int> src(source.begin(), source.end());
    for (int y : observed)
      if (src.count(y))
        throw std::invalid_argument("source and observed sets overlap");
  }

  PartitionConstant out;
  out.eps = eps;
  out.nu = nu;
  out.nu_prime = nu * (1.0 - 0.5 * eps);
  out.mu = nu * (1.0 - 2.5 * eps);
  out.distance = set_distance(source, observed);

  const double diameter = eps * out.distance;  // 2r with r = eps*d/2
  const auto src_cover = greedy_cover(source, diameter);
  const auto obs_cover = greedy_cover(observed, diameter);
  out.source_intervals = int(src_cover.size());
  out.observed_intervals = int(obs_cover.size());

  double c_xy = 0.0;
  for (const auto& j1 : src_cover) {
    double total = 0.0;
    for (const auto& k : obs_cover) {
      const double d1 = set_distance(k, j1);
      for (const auto& j2 : src_cover)
        total += std::exp(-out.nu_prime * (d1 + set_distance(k, j2)));
    }
    c_xy = std::max(c_xy, total);
  }
  out.c_xy = c_xy;

  // Prefactor of exp(-2 mu (d - c t)). The growth leg exp(2 mu c t) equals
  // exp(2 nu c'(nu) t) because mu c = nu c'(nu); the static leg must then
  // carry exp(2 mu d) to cancel the envelope's exp(-2 mu d), leaving the
  // provable assembled bound 4 exp(2 nu eps d) C_XY exp(2 nu c' t).
  out.value = 4.0 * std::exp(2.0 * nu * eps * out.distance) * c_xy *
              std::exp(2.0 * out.mu * out.distance);
  return out;
}

std::vector<double> default_nu_grid(double decay_rate) {
  const double base[] = {0.1, 0.2, 0.4, 0.6, 0.8, 0.9};
  std::vector<double> grid;
  for (double b : base) grid.push_back(b * decay_rate);
  return grid;
}

std::string velocity_table_csv(const LatticeModel& model,
                               const std::vector<double>& nu_grid,
                               double eps) {
  require_eps(eps);
  const double shrink = 1.0 - 2.5 * eps;
  std::string csv = "nu,c_prime,mu,eps,c_mu,c\n";
  for (double nu : nu_grid) {
    const VelocityBound vb = velocity_c_prime(model, nu);
    const double mu = nu * shrink;
    csv += format_sig12(nu) + "," + format_sig12(vb.c_prime) + "," +
           format_sig12(mu) + "," + format_sig12(eps) + "," +
           format_sig12(vb.c_prime) + "," + format_sig12(vb.c_prime / shrink) +
           "\n";
  }
  return csv;
}

}  // namespace lightcone
