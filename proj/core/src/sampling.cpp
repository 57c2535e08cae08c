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

#include "lightcone/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <numbers>
#include <sstream>

namespace lightcone {

namespace {

constexpr std::uint64_t kFnvOffset = 1469598103934665603ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

std::uint64_t fnv1a(std::uint64_t h, const void* data, std::size_t size) {
  const auto* bytes = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < size; ++i) {
    h ^= bytes[i];
    h *= kFnvPrime;
  }
  return h;
}

double gaussian(std::mt19937_64& rng) {
  // Box-Muller, cosine branch only.
  const double u1 = std::max(uniform01(rng), 0x1.0p-60);
  const double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::string_view label) {
  std::uint64_t h = fnv1a(kFnvOffset, label.data(), label.size());
  h = fnv1a(h, &seed, sizeof(seed));
  h ^= h >> 33;
  return h;
}

std::mt19937_64 seeded_engine(std::uint64_t seed, std::string_view label) {
  return std::mt19937_64(mix_seed(seed, label));
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

CVector haar_vector(int dim, std::mt19937_64& rng) {
  CVector v(dim);
  for (int i = 0; i < dim; ++i) v[i] = Complex(gaussian(rng), gaussian(rng));
  const double n = v.norm();
  if (n == 0.0) {
    v.setZero();
    v[0] = 1.0;
    return v;
  }
  return v / n;
}

Matrix ginibre_matrix(int rows, int cols, std::mt19937_64& rng) {
  Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = Complex(gaussian(rng),
                                                     gaussian(rng));
  return m;
}

Matrix random_unitary(int dim, std::mt19937_64& rng) {
  const Matrix g = ginibre_matrix(dim, dim, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(dim, dim);
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    const Complex rjj = r(j, j);
    const double mag = std::abs(rjj);
    if (mag > 0.0) q.col(j) *= rjj / mag;
  }
  return q;
}

Matrix random_density(int dim, std::mt19937_64& rng) {
  const int terms = 1 + static_cast<int>(rng() % std::min(dim, 4));
  std::vector<double> weights(terms);
  double total = 0.0;
  for (double& w : weights) {
    w = uniform01(rng) + 1e-3;
    total += w;
  }
  Matrix rho = Matrix::Zero(dim, dim);
  for (int k = 0; k < terms; ++k) {
    const CVector v = haar_vector(dim, rng);
    rho += (weights[k] / total) * (v * v.adjoint());
  }
  return 0.5 * (rho + Matrix(rho.adjoint()));
}

namespace {

std::string hex16(std::uint64_t h) {
  std::ostringstream out;
  out << std::hex;
  out.width(16);
  out.fill('0');
  out << h;
  return out.str();
}

}  // namespace

std::string sample_digest(const std::vector<double>& payload) {
  std::uint64_t h = kFnvOffset;
  for (double value : payload) {
    std::uint64_t bits = 0;
    std::memcpy(&bits, &value, sizeof(bits));
    h = fnv1a(h, &bits, sizeof(bits));
  }
  return hex16(h);
}

std::string text_digest(std::string_view text) {
  return hex16(fnv1a(kFnvOffset, text.data(), text.size()));
}

}  // namespace lightcone
