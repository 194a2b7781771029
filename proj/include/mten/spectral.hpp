#pragma once

#include "mten/tensor.hpp"

#include <stdexcept>

namespace mten {

/// Knobs for the shifted power iteration.
///
/// sigma is the diagonal shift added before iterating and subtracted from
/// the answer; it affects convergence speed, never the result. epsilon is
/// the magnitude of an all-ones perturbation that forces irreducibility;
/// it biases the computed eigenvalue upward by at most epsilon * n^(m-1).
/// Iterates are normalized in the 1-norm.
struct IterationSettings {
    double tol = 1e-10;   // relative bracket-width stopping threshold
    int max_iter = 10000;
    double sigma = 1.0;   // diagonal shift, > 0
    double epsilon = 0.0; // all-ones perturbation, >= 0

    /// Throws std::invalid_argument on an out-of-range field.
    void validate() const;
};

struct Bracket {
    double lower = 0.0;
    double upper = 0.0;
    double width() const noexcept { return upper - lower; }
};

/// The image of the iterate vanished identically, which can only happen
/// with epsilon = 0 on a tensor with an all-zero slice. Rerunning with
/// epsilon > 0 removes the possibility.
class ZeroIterateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SpectralOutcome {
    double lambda = 0.0;      // eigenvalue estimate (shift already removed)
    Vector eigenvector;       // final iterate, 1-norm normalized
    int iterations = 0;
    Bracket final_bracket;    // brackets lambda; width obeys the stop rule
    double residual = 0.0;    // eigenpair defect, inf-norm, scale-invariant
    bool converged = false;
    double epsilon_used = 0.0;
};

/// Entrywise bounds on every real eigenvalue, L = min_i (T_{i..i} - C_i)
/// and U = max_i (T_{i..i} + C_i), where C_i sums |off-diagonal| over
/// slice i.
struct EigenvalueBounds {
    double lower = 0.0;
    double upper = 0.0;
    Vector offdiag_row_sums;  // C_i, length dim
};

/// Collatz-Wielandt bracket [min_i, max_i] of (T x^{m-1})_i / x_i^(m-1)
/// for a nonnegative tensor T and strictly positive x; the spectral
/// radius of T lies inside.
Bracket cw_bracket(const DenseTensor& tensor, std::span<const double> x);

/// Largest eigenvalue (= spectral radius) of a nonnegative tensor.
///
/// Power iteration on B = T + sigma*I + epsilon*E (E all-ones), applied
/// implicitly: y = T x^{m-1} + sigma x^[m-1] + epsilon (sum x)^(m-1).
/// Min/max quotients over positive components bracket the eigenvalue of
/// B; iteration stops at exact bracket equality or when the width drops
/// below tol * (1 + lower bracket edge), and the next iterate is the
/// 1-norm-normalized (m-1)-th root of y. Starts from the uniform vector.
///
/// If epsilon = 0 fails to converge (or a zero iterate appears), retries
/// once with epsilon = 1e-12 * max(1, max |entry|); epsilon_used reports
/// the value actually applied so callers can widen their guard bands by
/// epsilon_used * n^(m-1). With epsilon_used > 0 the result estimates the
/// spectral radius of T + epsilon*E, and the residual is taken against
/// that tensor.
SpectralOutcome largest_eigenvalue(const DenseTensor& tensor,
                                   const IterationSettings& settings = {});

EigenvalueBounds real_eigenvalue_bounds(const DenseTensor& tensor);

/// Inf-norm of T x^{m-1} - lambda x^[m-1], divided by
/// max(1, |x|_inf)^(m-1). Zero for an exact eigenpair.
double residual(const DenseTensor& tensor, double lambda, std::span<const double> x);

} // namespace mten
