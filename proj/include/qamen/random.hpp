#pragma once

#include <cstdint>
#include <random>

#include "qamen/representation.hpp"

namespace qamen {

using Rng = std::mt19937_64;

/// Uniform over GF(p); small integers in [-3, 3] over Q.
Scalar random_scalar(const Field& f, Rng& rng);
Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, Rng& rng);
Matrix random_invertible(const Field& f, std::size_t n, Rng& rng);
/// m with every vertex space re-coordinatised by a random invertible matrix;
/// the applied matrices are written to `applied` when non-null.
Representation random_conjugate(const Representation& m, Rng& rng, std::vector<Matrix>* applied = nullptr);

/// QAMEN_SEED when set and numeric, otherwise `fallback`.
std::uint64_t seed_from_env(std::uint64_t fallback = 1);

}  // namespace qamen
