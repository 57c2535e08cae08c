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

#include "lightcone/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

#include "format.hpp"
#include "json.hpp"
#include "lightcone/bounds.hpp"
#include "lightcone/evolve.hpp"
#include "lightcone/liouvillian.hpp"

namespace lightcone {

namespace {

using nlohmann::ordered_json;

constexpr int kCheckRestarts = 16;

ordered_json sites_json(const std::vector<int>& sites) {
  auto a = ordered_json::array();
  for (int s : sites) a.push_back(s);
  return a;
}

ordered_json doubles_json(const std::vector<double>& values) {
  auto a = ordered_json::array();
  for (double v : values) a.push_back(v);
  return a;
}

std::string model_digest(const LatticeModel& model) {
  return text_digest(model_to_json_text(model));
}

void require_disjoint(const std::vector<int>& x, const std::vector<int>& y) {
  std::set<int> seen(x.begin(), x.end());
  for (int s : y)
    if (seen.count(s))
      throw std::invalid_argument("site sets overlap at " +
                                  std::to_string(s));
}

std::vector<int> sorted_unique(const std::vector<int>& sites) {
  std::vector<int> out(sites.begin(), sites.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// chi lambda chi applied in place via its row/column masks: the pair index
// d*i+j survives iff both i and j are in the set.
void mask_rows(Matrix& m, const std::vector<char>& chi, int d) {
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (!chi[i] || !chi[j]) m.row(d * i + j).setZero();
}

void mask_cols(Matrix& m, const std::vector<char>& chi, int d) {
  for (int k = 0; k < d; ++k)
    for (int l = 0; l < d; ++l)
      if (!chi[k] || !chi[l]) m.col(d * k + l).setZero();
}

std::vector<char> site_mask(const std::vector<int>& sites, int d) {
  std::vector<char> chi(d, 0);
  for (int s : sites) chi[s] = 1;
  return chi;
}

Matrix cut_matrix(const Matrix& a, const std::vector<char>& chi) {
  Matrix out = a;
  for (int i = 0; i < out.rows(); ++i)
    if (!chi[i]) out.row(i).setZero();
  for (int j = 0; j < out.cols(); ++j)
    if (!chi[j]) out.col(j).setZero();
  return out;
}

// Haar pure states supported on the listed sites plus their pairwise
// mixtures, kDefaultStateSamples in total.
std::vector<Matrix> supported_states(const std::vector<int>& support, int d,
                                     std::mt19937_64& rng) {
  const std::vector<int> sites = sorted_unique(support);
  const int n_pure = kDefaultStateSamples / 2;
  std::vector<Matrix> states;
  std::vector<Matrix> pures;
  for (int i = 0; i < n_pure; ++i) {
    const CVector sub = haar_vector(int(sites.size()), rng);
    CVector full = CVector::Zero(d);
    for (std::size_t k = 0; k < sites.size(); ++k) full[sites[k]] = sub[k];
    pures.push_back(full * full.adjoint());
  }
  for (int i = 0; i < n_pure; ++i) states.push_back(pures[i]);
  for (int i = 0; i < n_pure; ++i)
    states.push_back(0.5 * (pures[i] + pures[(i + 1) % n_pure]));
  return states;
}

void finish_report(CheckReport& r) {
  std::sort(r.samples.begin(), r.samples.end(),
            [](const SampleRecord& a, const SampleRecord& b) {
              return a.digest < b.digest;
            });
  bool ok = true;
  for (const auto& s : r.samples)
    if (!s.vacuous && s.margin < -r.tolerance) ok = false;
  r.pass = ok;
}

double max_nonvacuous_bound(const std::vector<SampleRecord>& samples) {
  double m = 0.0;
  for (const auto& s : samples)
    if (!s.vacuous) m = std::max(m, s.bound);
  return m;
}

}  // namespace

double inequality_tolerance(double scale) {
  return 1e-9 * std::max(1.0, scale);
}

std::string report_to_json(const CheckReport& report) {
  ordered_json j;
  j["check"] = report.check;
  j["params"] = report.params_json.empty()
                    ? ordered_json::object()
                    : ordered_json::parse(report.params_json);
  j["seed"] = report.seed;
  auto samples = ordered_json::array();
  for (const auto& s : report.samples) {
    ordered_json item;
    item["digest"] = s.digest;
    item["measured"] = s.measured;
    item["bound"] = s.bound;
    item["margin"] = s.margin;
    item["vacuous"] = s.vacuous;
    samples.push_back(std::move(item));
  }
  j["samples"] = std::move(samples);
  j["verdict"] = report.verdict();
  j["tolerance"] = report.tolerance;
  return j.dump(2) + "\n";
}

std::string cone_samples_csv(const CheckReport& report) {
  std::string csv = "t,d_XY,measured,bound,margin,vacuous\n";
  for (const auto& s : report.samples) {
    csv += format_sig12(s.time) + "," + format_sig12(s.distance) + "," +
           format_sig12(s.measured) + "," + format_sig12(s.bound) + "," +
           format_sig12(s.margin) + "," + (s.vacuous ? "1" : "0") + "\n";
  }
  return csv;
}

CheckReport check_leakage_cone(const LatticeModel& model,
                               const std::vector<int>& X,
                               const std::vector<int>& Y, double mu,
                               double eps, const std::vector<double>& times,
                               std::uint64_t seed) {
  require_disjoint(X, Y);
  const ConeEnvelope env = velocity_c_mu(model, mu, eps);
  const PartitionConstant prefactor =
      assemble_partition_constant(X, Y, eps, env.nu);
  const Superoperator generator = build_lindbladian(model);
  const int d = model.n_sites;
  const std::vector<char> chi_y = site_mask(sorted_unique(Y), d);

  auto rng = seeded_engine(seed, "leakage_states");
  const std::vector<Matrix> states = supported_states(X, d, rng);

  CheckReport r;
  r.check = "check_leakage_cone";
  r.seed = seed;
  {
    ordered_json p;
    p["model"] = model_digest(model);
    p["n_sites"] = d;
    p["X"] = sites_json(X);
    p["Y"] = sites_json(Y);
    p["mu"] = mu;
    p["eps"] = eps;
    p["nu"] = env.nu;
    p["c"] = env.c;
    p["prefactor"] = prefactor.value;
    p["times"] = doubles_json(times);
    r.params_json = p.dump();
  }

  for (double t : times) {
    const Superoperator e = propagator(generator, t);
    const double bound =
        prefactor.value *
        std::exp(-2.0 * mu * (prefactor.distance - env.c * t));
    for (std::size_t idx = 0; idx < states.size(); ++idx) {
      const Matrix rho_t = apply(e, states[idx]);
      double measured = 0.0;
      for (int y = 0; y < d; ++y)
        if (chi_y[y]) measured += rho_t(y, y).real();
      SampleRecord s;
      s.digest = sample_digest({t, double(idx), prefactor.distance});
      s.measured = measured;
      s.bound = bound;
      s.margin = bound - measured;
      s.vacuous = bound > 1.0;
      s.time = t;
      s.distance = prefactor.distance;
      r.samples.push_back(std::move(s));
    }
  }
  r.tolerance = inequality_tolerance(max_nonvacuous_bound(r.samples));
  finish_report(r);
  return r;
}

CheckReport check_ball_bound(const LatticeModel& model,
                             const std::vector<int>& U,
                             const std::vector<int>& V, double nu,
                             const std::vector<double>& times,
                             std::uint64_t seed) {
  require_disjoint(U, V);
  const VelocityBound vb = velocity_c_prime(model, nu);
  const double delta = best_geometry_delta(U, V);
  const Superoperator generator = build_lindbladian(model);
  const int d = model.n_sites;
  const std::vector<char> chi_u = site_mask(sorted_unique(U), d);
  const std::vector<char> chi_v = site_mask(sorted_unique(V), d);

  CheckReport r;
  r.check = "check_ball_bound";
  r.seed = seed;
  {
    ordered_json p;
    p["model"] = model_digest(model);
    p["n_sites"] = d;
    p["U"] = sites_json(U);
    p["V"] = sites_json(V);
    p["nu"] = nu;
    p["c_prime"] = vb.c_prime;
    p["delta_uv"] = delta;
    p["times"] = doubles_json(times);
    r.params_json = p.dump();
  }

  for (double t : times) {
    const Superoperator e = propagator(generator, t);
    Matrix cut = e.matrix;
    mask_rows(cut, chi_u, d);
    mask_cols(cut, chi_v, d);
    const Superoperator map{std::move(cut), d,
                            Provenance{Provenance::Kind::composite}};
    const NormEstimate est =
        s1_opnorm_lower(map, kCheckRestarts, mix_seed(seed, "ball"));
    SampleRecord s;
    s.digest = sample_digest({t, delta, nu});
    s.measured = est.value;
    s.bound = ball_envelope(delta, nu, vb.c_prime, t);
    s.margin = s.bound - s.measured;
    s.vacuous = s.bound > 4.0;
    s.time = t;
    s.distance = delta;
    r.samples.push_back(std::move(s));
  }
  r.tolerance = inequality_tolerance(max_nonvacuous_bound(r.samples));
  finish_report(r);
  return r;
}

CheckReport check_deformed_growth(const LatticeModel& model, double nu,
                                  const std::vector<double>& times,
                                  std::uint64_t seed) {
  const VelocityBound vb = velocity_c_prime(model, nu);
  const int d = model.n_sites;

  CheckReport r;
  r.check = "check_deformed_growth";
  r.seed = seed;
  {
    ordered_json p;
    p["model"] = model_digest(model);
    p["n_sites"] = d;
    p["nu"] = nu;
    p["c_prime"] = vb.c_prime;
    p["times"] = doubles_json(times);
    r.params_json = p.dump();
  }

  for (double sign : {+1.0, -1.0}) {
    const double eta = sign * nu;
    const Superoperator generator =
        build_deformed_generator(model, Complex(0.0, eta),
                                 Complex(0.0, -eta));
    for (std::size_t ti = 0; ti < times.size(); ++ti) {
      const double t = times[ti];
      const Superoperator e = propagator(generator, t);
      const double growth = std::exp(2.0 * nu * vb.c_prime * t);

      const NormEstimate est =
          s1_opnorm_lower(e, kCheckRestarts, mix_seed(seed, "growth"));
      SampleRecord rank_one;
      rank_one.digest = sample_digest({1.0, t, eta});
      rank_one.measured = est.value;
      rank_one.bound = 4.0 * growth;
      rank_one.margin = rank_one.bound - rank_one.measured;
      rank_one.time = t;
      r.samples.push_back(std::move(rank_one));

      auto rng = seeded_engine(
          seed, "growth_states/" + std::to_string(sign > 0) + "/" +
                    std::to_string(ti));
      for (int k = 0; k < 6; ++k) {
        const Matrix rho = random_density(d, rng);
        SampleRecord s;
        s.digest = sample_digest({2.0, t, eta, double(k)});
        s.measured = trace_norm(apply(e, rho));
        s.bound = growth * trace_norm(rho);
        s.margin = s.bound - s.measured;
        s.time = t;
        r.samples.push_back(std::move(s));
      }
    }
  }
  r.tolerance = inequality_tolerance(max_nonvacuous_bound(r.samples));
  finish_report(r);
  return r;
}

CheckReport check_deformed_positivity(const LatticeModel& model, double nu,
                                      const std::vector<double>& times,
                                      std::uint64_t seed) {
  require_in_strip(Complex(0.0, nu), model.decay_rate);
  const int d = model.n_sites;

  CheckReport r;
  r.check = "check_deformed_positivity";
  r.seed = seed;
  {
    ordered_json p;
    p["model"] = model_digest(model);
    p["n_sites"] = d;
    p["nu"] = nu;
    p["times"] = doubles_json(times);
    r.params_json = p.dump();
  }

  for (double sign : {+1.0, -1.0}) {
    const double eta = sign * nu;
    const Superoperator generator =
        build_deformed_generator(model, Complex(0.0, eta),
                                 Complex(0.0, -eta));
    auto rng = seeded_engine(seed, "positivity_states/" +
                                       std::to_string(sign > 0));
    std::vector<Matrix> states;
    {
      CVector mid = CVector::Zero(d);
      mid[d / 2] = 1.0;
      states.push_back(mid * mid.adjoint());
    }
    states.push_back(Matrix::Identity(d, d) / double(d));
    for (int k = 0; k < 6; ++k) states.push_back(random_density(d, rng));

    for (double t : times) {
      const Superoperator e = propagator(generator, t);
      for (std::size_t idx = 0; idx < states.size(); ++idx) {
        const Matrix rho_t = apply(e, states[idx]);
        const Matrix sym = 0.5 * (rho_t + Matrix(rho_t.adjoint()));
        const double tn = trace_norm(sym);
        const double lowest = min_eigenvalue(sym);
        SampleRecord s;
        s.digest = sample_digest({t, eta, double(idx)});
        s.measured = tn > 0.0 ? -lowest / tn : 0.0;
        s.bound = 0.0;
        s.margin = -s.measured;
        s.time = t;
        r.samples.push_back(std::move(s));
      }
    }
  }
  r.tolerance = 1e-9;
  finish_report(r);
  return r;
}

CheckReport check_subcp(std::uint64_t seed, const std::vector<int>& dims,
                        int family_size) {
  if (family_size < 1)
    throw std::invalid_argument("family_size must be >= 1");

  CheckReport r;
  r.check = "check_subcp";
  r.seed = seed;
  {
    ordered_json p;
    p["dims"] = sites_json(dims);
    p["family_size"] = family_size;
    r.params_json = p.dump();
  }

  constexpr int kReps = 30;
  for (int d : dims) {
    if (d < 1) throw std::invalid_argument("dims entries must be >= 1");
    auto rng = seeded_engine(seed, "subcp/" + std::to_string(d));
    for (int rep = 0; rep < kReps; ++rep) {
      const int terms =
          1 + int(rng() % std::uint64_t(family_size));
      std::vector<Matrix> u, v;
      for (int j = 0; j < terms; ++j) u.push_back(ginibre_matrix(d, d, rng));
      for (int j = 0; j < terms; ++j) v.push_back(ginibre_matrix(d, d, rng));
      const Matrix a = ginibre_matrix(d, d, rng);
      const Matrix rho = random_density(d, rng);

      auto psi_uv = [&](const Matrix& arg) {
        Matrix out = Matrix::Zero(d, d);
        for (int j = 0; j < terms; ++j)
          out += v[j].adjoint() * arg * u[j];
        return out;
      };
      const Matrix p = psi_uv(Matrix::Identity(d, d));
      Matrix puu = Matrix::Zero(d, d);
      Matrix pvv = Matrix::Zero(d, d);
      for (int j = 0; j < terms; ++j) puu += u[j].adjoint() * u[j];
      for (int j = 0; j < terms; ++j) pvv += v[j].adjoint() * v[j];

      const double family_scale =
          3.0 * std::sqrt(operator_norm(puu)) * std::sqrt(operator_norm(pvv));

      // Heisenberg side.
      const Matrix g_heis = psi_uv(a) - 0.5 * (p * a + a * p);
      {
        SampleRecord s;
        s.digest = sample_digest({double(d), double(rep), 1.0});
        s.measured = operator_norm(g_heis);
        s.bound = family_scale * operator_norm(a);
        s.margin = s.bound - s.measured;
        r.samples.push_back(std::move(s));
      }

      // Trace-norm side on a state (the pairing adjoint of the map above).
      Matrix g_state = Matrix::Zero(d, d);
      for (int j = 0; j < terms; ++j) g_state += u[j] * rho * v[j].adjoint();
      g_state -= 0.5 * (p * rho + rho * p);
      {
        SampleRecord s;
        s.digest = sample_digest({double(d), double(rep), 2.0});
        s.measured = trace_norm(g_state);
        s.bound = family_scale * trace_norm(rho);
        s.margin = s.bound - s.measured;
        r.samples.push_back(std::move(s));
      }

      // Single-family bound with V = U.
      Matrix psi_a = Matrix::Zero(d, d);
      for (int j = 0; j < terms; ++j) psi_a += u[j].adjoint() * a * u[j];
      const Matrix g_diag = psi_a - 0.5 * (puu * a + a * puu);
      {
        SampleRecord s;
        s.digest = sample_digest({double(d), double(rep), 3.0});
        s.measured = operator_norm(g_diag);
        s.bound = 2.0 * operator_norm(puu) * operator_norm(a);
        s.margin = s.bound - s.measured;
        r.samples.push_back(std::move(s));
      }
    }
  }
  r.tolerance = inequality_tolerance(max_nonvacuous_bound(r.samples));
  finish_report(r);
  return r;
}

CheckReport check_cs_trace(std::uint64_t seed, const std::vector<int>& dims) {
  CheckReport r;
  r.check = "check_cs_trace";
  r.seed = seed;
  {
    ordered_json p;
    p["dims"] = sites_json(dims);
    r.params_json = p.dump();
  }

  constexpr int kReps = 25;
  double max_bound = 1.0;
  for (int d : dims) {
    if (d < 1) throw std::invalid_argument("dims entries must be >= 1");
    auto rng = seeded_engine(seed, "cs_trace/" + std::to_string(d));
    for (int rep = 0; rep < kReps; ++rep) {
      const int terms = 1 + int(rng() % 3);
      std::vector<Matrix> kraus;
      for (int j = 0; j < terms; ++j)
        kraus.push_back(ginibre_matrix(d, d, rng));
      auto beta = [&](const Matrix& arg) {
        Matrix out = Matrix::Zero(d, d);
        for (const Matrix& k : kraus) out += k * arg * k.adjoint();
        return out;
      };
      const Matrix a = ginibre_matrix(d, d, rng);
      const Matrix b = ginibre_matrix(d, d, rng);
      const Matrix t = ginibre_matrix(d, d, rng);
      const Matrix v = ginibre_matrix(d, d, rng);
      const Matrix rho = random_density(d, rng);

      const Complex lhs = (a * beta(t * rho * v) * b).trace();
      const double r1 =
          std::max(0.0, (a * beta(Matrix(t * rho * t.adjoint())) *
                         a.adjoint())
                            .trace()
                            .real());
      const double r2 =
          std::max(0.0, (b.adjoint() * beta(Matrix(v.adjoint() * rho * v)) *
                         b)
                            .trace()
                            .real());
      SampleRecord s;
      s.digest = sample_digest({double(d), double(rep)});
      s.measured = std::abs(lhs);
      s.bound = std::sqrt(r1 * r2);
      s.margin = s.bound - s.measured;
      max_bound = std::max(max_bound, s.bound);
      r.samples.push_back(std::move(s));
    }
  }
  r.tolerance = 1e-10 * max_bound;
  finish_report(r);
  return r;
}

CheckReport check_contraction_and_growth(const LatticeModel& model,
                                         Complex zeta, Complex zeta_tilde,
                                         const std::vector<double>& times) {
  if (zeta.real() != 0.0 || zeta_tilde.real() != 0.0)
    throw std::invalid_argument(
        "contraction check requires purely imaginary deformations");
  const Superoperator generator = build_lindbladian(model);
  const Superoperator deformed =
      build_deformed_generator(model, zeta, zeta_tilde);
  const Superoperator dissipator =
      build_deformed_dissipator(model, zeta, zeta_tilde);
  const OperatorMatrix h = build_hamiltonian(model);
  const double im_h_z = operator_norm(
      imag_part(deform_matrix(h, zeta, model.boundary)).entries);
  const double im_h_zt = operator_norm(
      imag_part(deform_matrix(h, zeta_tilde, model.boundary)).entries);
  const double g_norm =
      s1_opnorm_lower(dissipator, kCheckRestarts, 0).value;

  CheckReport r;
  r.check = "check_contraction_and_growth";
  r.seed = 0;
  {
    ordered_json p;
    p["model"] = model_digest(model);
    p["n_sites"] = model.n_sites;
    p["zeta"] = {zeta.real(), zeta.imag()};
    p["zeta_tilde"] = {zeta_tilde.real(), zeta_tilde.imag()};
    p["g_norm_lower"] = g_norm;
    p["im_h_zeta"] = im_h_z;
    p["im_h_zeta_tilde"] = im_h_zt;
    p["times"] = doubles_json(times);
    r.params_json = p.dump();
  }
  r.notes.push_back(
      "dissipator norm estimated from below by rank-one ascent; the quoted "
      "growth bound uses that estimate");

  for (double t : times) {
    {
      const NormEstimate est = s1_opnorm_lower(propagator(generator, t),
                                               kCheckRestarts, 0);
      SampleRecord s;
      s.digest = sample_digest({t, 1.0});
      s.measured = est.value;
      s.bound = 4.0;
      s.margin = s.bound - s.measured;
      s.time = t;
      r.samples.push_back(std::move(s));
    }
    {
      const NormEstimate est = s1_opnorm_lower(propagator(deformed, t),
                                               kCheckRestarts, 0);
      SampleRecord s;
      s.digest = sample_digest({t, 2.0});
      s.measured = est.value;
      s.bound = std::exp(4.0 * t * (g_norm + im_h_z + im_h_zt));
      s.margin = s.bound - s.measured;
      s.time = t;
      r.samples.push_back(std::move(s));
    }
  }
  r.tolerance = inequality_tolerance(max_nonvacuous_bound(r.samples));
  finish_report(r);
  return r;
}

CheckReport check_analyticity(const LatticeModel& model, double t,
                              Complex zeta0, double radius, int samples) {
  if (!(radius >= 0.0 && radius <= 0.1))
    throw std::invalid_argument("radius must lie in [0, 0.1]");
  if (samples < 1)
    throw std::invalid_argument("samples must be >= 1");
  if (!(std::abs(zeta0.imag()) + radius < model.decay_rate))
    throw std::invalid_argument(
        "disk escapes the admissible strip |Im zeta| < " +
        std::to_string(model.decay_rate));
  const int d = model.n_sites;

  CheckReport r;
  r.check = "check_analyticity";
  r.seed = 0;
  {
    ordered_json p;
    p["model"] = model_digest(model);
    p["n_sites"] = d;
    p["t"] = t;
    p["zeta0"] = {zeta0.real(), zeta0.imag()};
    p["radius"] = radius;
    p["samples"] = samples;
    r.params_json = p.dump();
  }

  const Matrix center =
      propagator(build_deformed_generator(model, zeta0, -zeta0), t).matrix;
  {
    Matrix average = Matrix::Zero(d * d, d * d);
    for (int k = 0; k < samples; ++k) {
      const double angle = 2.0 * std::numbers::pi * double(k) /
                           double(samples);
      const Complex zk =
          zeta0 + radius * std::exp(Complex(0.0, angle));
      average +=
          propagator(build_deformed_generator(model, zk, -zk), t).matrix;
    }
    average /= double(samples);
    const double scale = std::max(center.cwiseAbs().maxCoeff(), 1e-300);
    SampleRecord s;
    s.digest = sample_digest(
        {1.0, t, zeta0.real(), zeta0.imag(), radius, double(samples)});
    s.measured = (average - center).cwiseAbs().maxCoeff() / scale;
    s.bound = 1e-6;
    s.margin = s.bound - s.measured;
    s.time = t;
    r.samples.push_back(std::move(s));
  }

  // Exact conjugation identity: cutting to U, V commutes the deformation
  // away, chi_U beta_t chi_V = chi_U T^{-1} beta_{t,zeta,-zeta} T chi_V.
  {
    const std::vector<int> u_sites = [&] {
      std::vector<int> s;
      for (int i = 0; i < std::max(1, d / 2); ++i) s.push_back(i);
      return s;
    }();
    const std::vector<int> v_sites = [&] {
      std::vector<int> s;
      for (int i = std::min(d - 1, d / 2); i < d; ++i) s.push_back(i);
      return s;
    }();
    const std::vector<char> chi_u = site_mask(u_sites, d);
    const std::vector<char> chi_v = site_mask(v_sites, d);

    const Matrix undeformed =
        propagator(build_lindbladian(model), t).matrix;
    Matrix lhs = undeformed;
    mask_rows(lhs, chi_u, d);
    mask_cols(lhs, chi_v, d);

    const Superoperator forward = two_sided_multiplier(zeta0, -zeta0, d);
    const Superoperator backward = two_sided_multiplier(-zeta0, zeta0, d);
    Matrix rhs = backward.matrix * center * forward.matrix;
    mask_rows(rhs, chi_u, d);
    mask_cols(rhs, chi_v, d);

    const double bound = zeta0.imag() == 0.0 ? 1e-12 : 1e-8;
    auto rng = seeded_engine(0, "analyticity_lambdas");
    for (int k = 0; k < 3; ++k) {
      const Matrix lambda = ginibre_matrix(d, d, rng);
      const CVector from_lhs = lhs * vec(lambda);
      const CVector from_rhs = rhs * vec(lambda);
      const double scale = std::max(from_lhs.norm(), 1e-300);
      SampleRecord s;
      s.digest = sample_digest({2.0, t, double(k)});
      s.measured = (from_lhs - from_rhs).norm() / scale;
      s.bound = bound;
      s.margin = s.bound - s.measured;
      s.time = t;
      r.samples.push_back(std::move(s));
    }
  }
  r.tolerance = inequality_tolerance(max_nonvacuous_bound(r.samples));
  finish_report(r);
  return r;
}

CheckReport check_dual_cone(const LatticeModel& model,
                            const std::vector<int>& X,
                            const std::vector<int>& Y, double mu, double eps,
                            const std::vector<double>& times,
                            std::uint64_t seed) {
  require_disjoint(X, Y);
  const ConeEnvelope env = velocity_c_mu(model, mu, eps);
  const PartitionConstant prefactor =
      assemble_partition_constant(X, Y, eps, env.nu);
  const Superoperator generator = build_lindbladian(model);
  const int d = model.n_sites;
  const std::vector<char> chi_x = site_mask(sorted_unique(X), d);
  const std::vector<char> chi_y = site_mask(sorted_unique(Y), d);

  CheckReport r;
  r.check = "check_dual_cone";
  r.seed = seed;
  {
    ordered_json p;
    p["model"] = model_digest(model);
    p["n_sites"] = d;
    p["X"] = sites_json(X);
    p["Y"] = sites_json(Y);
    p["mu"] = mu;
    p["eps"] = eps;
    p["nu"] = env.nu;
    p["c"] = env.c;
    p["prefactor"] = prefactor.value;
    p["times"] = doubles_json(times);
    r.params_json = p.dump();
  }

  for (std::size_t ti = 0; ti < times.size(); ++ti) {
    const double t = times[ti];
    const Superoperator forward = propagator(generator, t);
    const Superoperator heisenberg = adjoint_map(forward);
    const double bound =
        prefactor.value *
        std::exp(-2.0 * mu * (prefactor.distance - env.c * t));
    auto rng = seeded_engine(seed, "dual_observables/" + std::to_string(ti));
    for (int k = 0; k < 8; ++k) {
      Matrix a = ginibre_matrix(d, d, rng);
      a /= operator_norm(a);
      const Matrix localized = cut_matrix(a, chi_y);
      const Matrix evolved = apply(heisenberg, localized);
      const Matrix observed = cut_matrix(evolved, chi_x);

      SampleRecord cone;
      cone.digest = sample_digest({1.0, t, double(k)});
      cone.measured = operator_norm(observed);
      cone.bound = bound;
      cone.margin = cone.bound - cone.measured;
      cone.vacuous = bound > 4.0;
      cone.time = t;
      cone.distance = prefactor.distance;
      r.samples.push_back(std::move(cone));

      const Matrix rho = random_density(d, rng);
      const Complex lhs = (apply(heisenberg, a) * rho).trace();
      const Complex rhs = (a * apply(forward, rho)).trace();
      SampleRecord duality;
      duality.digest = sample_digest({2.0, t, double(k)});
      duality.measured = std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs));
      duality.bound = kEqualityTolerance;
      duality.margin = duality.bound - duality.measured;
      duality.time = t;
      duality.distance = prefactor.distance;
      r.samples.push_back(std::move(duality));
    }
  }
  r.tolerance = inequality_tolerance(max_nonvacuous_bound(r.samples));
  finish_report(r);
  return r;
}

}  // namespace lightcone
