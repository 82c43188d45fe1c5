// random.hpp — seeded random observables and states for reproducible runs.

#pragma once

#include <cstddef>
#include <random>

#include "spinbath/types.hpp"

namespace spinbath {

// Hermitian matrix (G + G^dagger)/2 with independent standard complex
// Gaussian entries in G; entries drawn column-major for reproducibility.
Observable random_hermitian(std::size_t dim, std::mt19937_64& rng);

// Density matrix G G^dagger / tr(G G^dagger): Hermitian, positive, unit trace.
DensityMatrix random_density(std::size_t dim, std::mt19937_64& rng);

}  // namespace spinbath
