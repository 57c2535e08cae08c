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

#ifndef LIGHTCONE_SAMPLING_HPP_
#define LIGHTCONE_SAMPLING_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "lightcone/model.hpp"

namespace lightcone {

// Deterministic sampling. Streams are labeled: the engine seed mixes the
// user seed with a hash of the label, so adding a stream never perturbs
// existing ones. Draws avoid std::uniform_real_distribution and friends,
// whose output is implementation-defined; results are identical across
// standard libraries for a fixed seed.

std::uint64_t mix_seed(std::uint64_t seed, std::string_view label);
std::mt19937_64 seeded_engine(std::uint64_t seed, std::string_view label);

/// Uniform double in [0, 1) with 53 random bits.
double uniform01(std::mt19937_64& rng);

/// Haar-distributed unit vector (normalized complex Gaussian).
CVector haar_vector(int dim, std::mt19937_64& rng);

/// Matrix of i.i.d. standard complex Gaussians.
Matrix ginibre_matrix(int rows, int cols, std::mt19937_64& rng);

/// Haar-distributed unitary (QR of a Ginibre matrix, phases fixed).
Matrix random_unitary(int dim, std::mt19937_64& rng);

/// Random positive trace-one matrix: a convex mixture of up to four Haar
/// vector projectors.
Matrix random_density(int dim, std::mt19937_64& rng);

/// FNV-1a 64 hex digest of the scalars defining a sample.
std::string sample_digest(const std::vector<double>& payload);

/// FNV-1a 64 hex digest of a byte string (model digests in reports).
std::string text_digest(std::string_view text);

}  // namespace lightcone

#endif  // LIGHTCONE_SAMPLING_HPP_
