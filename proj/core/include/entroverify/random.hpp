#pragma once

// Seeded sampling primitives shared by the state and channel samplers.

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "entroverify/operator.hpp"

namespace entroverify {

using Rng = std::mt19937_64;

/// Deterministic generator for a 64-bit seed (expanded through seed_seq).
Rng make_rng(std::uint64_t seed);

/// splitmix64 finalizer; used to derive independent child seeds.
std::uint64_t mix_seed(std::uint64_t x);
std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t a, std::uint64_t b = 0);
std::uint64_t hash_label(std::string_view label);

/// i.i.d. standard complex Gaussian entries (E|z|^2 = 1).
Matrix ginibre(int rows, int cols, Rng& rng);
/// Haar-uniform unit vector.
CVector haar_vector(int d, Rng& rng);
/// Haar-random unitary (QR of a Ginibre matrix with the phase fix).
Matrix haar_unitary(int n, Rng& rng);

/// Kraus operators <e| V of an isometry V : C^{d_in} -> C^{d_out} (x) C^{d_env},
/// given as the first d_in columns of `unitary` (size d_out * d_env).
std::vector<Matrix> stinespring_kraus(const Matrix& unitary, int d_in, int d_out, int d_env);

}  // namespace entroverify
