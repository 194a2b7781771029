#pragma once

#include "mten/tensor.hpp"

#include <cstdint>
#include <random>

namespace mten {

/// Parameters for the random Z-tensor generator.
struct GenSpec {
    int order = 3;
    int dim = 2;
    double diag_offset = 1.0;  // added to diagonal draws; must be > 0
    std::uint64_t seed = 1;
};

/// Uniform draw from the open interval (0, 1): 53-bit mantissa mapping of
/// one engine output, with an exact 0 remapped to the smallest positive
/// value. Bit-deterministic for a given seed.
double uniform_open01(std::mt19937_64& engine);

/// Seed for an independent per-trial stream.
std::uint64_t trial_seed(std::uint64_t base, std::uint64_t trial);

/// Random Z-tensor with a controlled diagonal: draws every entry of a
/// latent tensor i.i.d. uniform on (0, 1), then places diag_offset + draw
/// on the diagonal and the negated draw off it. Diagonals land in
/// (diag_offset, diag_offset + 1), off-diagonals in (-1, 0). The same
/// GenSpec always yields the identical tensor.
DenseTensor random_z_tensor(const GenSpec& spec);

} // namespace mten
