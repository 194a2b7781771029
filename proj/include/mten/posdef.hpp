#pragma once

#include "mten/classify.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace mten {

enum class PDStatus { PositiveDefinite, NotPositiveDefinite, Inapplicable, Indeterminate };

struct PDVerdict {
    PDStatus status = PDStatus::Indeterminate;
    std::optional<double> tau;        // smallest real eigenvalue, when computed
    std::optional<Vector> witness;    // x != 0 with form value <= 0
    std::string reason;               // "odd-order" | "not-z-tensor" | "numerical" | ""
    bool symmetrized = false;         // input differed from its symmetrization
};

/// Tests whether the homogeneous form of T is positive definite.
///
/// The coefficient tensor is symmetrized first (the form is unchanged).
/// Odd orders are never positive definite; a sign-probing witness is
/// attached. Even-order symmetric Z-tensors are decided through the
/// M-tensor classification: MTensor means the form is positive definite,
/// NotMTensor attaches a falsifying witness when one can be found (the
/// verdict stands on tau <= 0 either way). Tensors outside the Z class
/// come back Inapplicable.
PDVerdict test_positive_definite(const DenseTensor& tensor,
                                 const IterationSettings& settings = {},
                                 int witness_trials = 1000,
                                 std::uint64_t witness_seed = 1);

/// Draws `trials` unit vectors (seeded, sphere-uniform) and returns the
/// first with a nonpositive form value, or nullopt. Intended for
/// symmetric tensors.
std::optional<Vector> falsify_by_sampling(const DenseTensor& tensor, int trials,
                                          std::uint64_t seed);

} // namespace mten
