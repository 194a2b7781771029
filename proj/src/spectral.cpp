#include "mten/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mten {

namespace {

double int_pow(double base, int exponent) {
    double result = 1.0;
    for (int k = 0; k < exponent; ++k) result *= base;
    return result;
}

double sum_of(std::span<const double> values) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
}

double residual_perturbed(const DenseTensor& tensor, double epsilon,
                          double lambda, std::span<const double> x) {
    const int m = tensor.order();
    Vector image = apply_contraction(tensor, x);
    const double ones_term = epsilon > 0.0 ? epsilon * int_pow(sum_of(x), m - 1) : 0.0;
    double defect = 0.0;
    double x_inf = 0.0;
    for (std::size_t i = 0; i < image.size(); ++i) {
        const double d = image[i] + ones_term - lambda * int_pow(x[i], m - 1);
        defect = std::max(defect, std::abs(d));
        x_inf = std::max(x_inf, std::abs(x[i]));
    }
    return defect / int_pow(std::max(1.0, x_inf), m - 1);
}

SpectralOutcome power_iterate(const DenseTensor& tensor,
                              const IterationSettings& settings, double epsilon) {
    const int n = tensor.dim();
    const int m = tensor.order();
    const double sigma = settings.sigma;

    Vector x(static_cast<std::size_t>(n), 1.0 / n);
    Bracket bracket;
    bool converged = false;
    int iterations = 0;

    for (int k = 1;; ++k) {
        iterations = k;
        Vector y = apply_contraction(tensor, x);
        const double ones_term = epsilon > 0.0 ? epsilon * int_pow(sum_of(x), m - 1) : 0.0;
        for (int i = 0; i < n; ++i) {
            y[static_cast<std::size_t>(i)] +=
                sigma * int_pow(x[static_cast<std::size_t>(i)], m - 1) + ones_term;
        }

        // Quotients only over positive iterate components.
        double lo = std::numeric_limits<double>::infinity();
        double hi = -std::numeric_limits<double>::infinity();
        for (int i = 0; i < n; ++i) {
            const double xi = x[static_cast<std::size_t>(i)];
            if (xi > 0.0) {
                const double q = y[static_cast<std::size_t>(i)] / int_pow(xi, m - 1);
                lo = std::min(lo, q);
                hi = std::max(hi, q);
            }
        }
        bracket = {lo - sigma, hi - sigma};

        if (hi == lo || (hi - lo) <= settings.tol * (1.0 + std::abs(bracket.lower))) {
            converged = true;
            break;
        }
        if (k == settings.max_iter) break;

        bool all_zero = true;
        for (double v : y) {
            if (v != 0.0) {
                all_zero = false;
                break;
            }
        }
        if (all_zero) {
            throw ZeroIterateError(
                "power iteration image is identically zero; rerun with epsilon > 0");
        }
        Vector next = hadamard_power(y, 1.0 / (m - 1));
        const double norm1 = sum_of(next);
        for (double& v : next) v /= norm1;
        x = std::move(next);
    }

    SpectralOutcome outcome;
    outcome.lambda = 0.5 * (bracket.lower + bracket.upper);
    outcome.eigenvector = std::move(x);
    outcome.iterations = iterations;
    outcome.final_bracket = bracket;
    outcome.converged = converged;
    outcome.epsilon_used = epsilon;
    outcome.residual =
        residual_perturbed(tensor, epsilon, outcome.lambda, outcome.eigenvector);
    return outcome;
}

} // namespace

void IterationSettings::validate() const {
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
    if (max_iter < 1) throw std::invalid_argument("max_iter must be at least 1");
    if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be positive");
    if (!(epsilon >= 0.0)) throw std::invalid_argument("epsilon must be nonnegative");
}

Bracket cw_bracket(const DenseTensor& tensor, std::span<const double> x) {
    if (!is_nonnegative(tensor)) {
        throw std::invalid_argument("cw_bracket requires a nonnegative tensor");
    }
    if (static_cast<int>(x.size()) != tensor.dim()) {
        throw std::invalid_argument("vector length must equal tensor dim");
    }
    for (double v : x) {
        if (!(v > 0.0)) {
            throw std::invalid_argument("cw_bracket requires a strictly positive vector");
        }
    }
    const int m = tensor.order();
    Vector image = apply_contraction(tensor, x);
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < image.size(); ++i) {
        const double q = image[i] / int_pow(x[i], m - 1);
        lo = std::min(lo, q);
        hi = std::max(hi, q);
    }
    return {lo, hi};
}

SpectralOutcome largest_eigenvalue(const DenseTensor& tensor,
                                   const IterationSettings& settings) {
    settings.validate();
    if (!is_nonnegative(tensor)) {
        throw std::invalid_argument("largest_eigenvalue requires a nonnegative tensor");
    }
    if (settings.epsilon > 0.0) {
        return power_iterate(tensor, settings, settings.epsilon);
    }
    try {
        SpectralOutcome outcome = power_iterate(tensor, settings, 0.0);
        if (outcome.converged) return outcome;
    } catch (const ZeroIterateError&) {
        // fall through to the perturbed retry
    }
    const double fallback = 1e-12 * std::max(1.0, tensor.max_abs_entry());
    return power_iterate(tensor, settings, fallback);
}

EigenvalueBounds real_eigenvalue_bounds(const DenseTensor& tensor) {
    const int n = tensor.dim();
    const std::vector<double>& entries = tensor.entries();
    const std::size_t slice = tensor.size() / static_cast<std::size_t>(n);

    EigenvalueBounds bounds;
    bounds.lower = std::numeric_limits<double>::infinity();
    bounds.upper = -std::numeric_limits<double>::infinity();
    bounds.offdiag_row_sums.resize(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        const std::size_t begin = static_cast<std::size_t>(i - 1) * slice;
        const std::size_t diag_at = tensor.diagonal_offset(i);
        const double diagonal = entries[diag_at];
        double ci = 0.0;
        for (std::size_t f = begin; f < begin + slice; ++f) {
            if (f != diag_at) ci += std::abs(entries[f]);
        }
        bounds.offdiag_row_sums[static_cast<std::size_t>(i - 1)] = ci;
        bounds.lower = std::min(bounds.lower, diagonal - ci);
        bounds.upper = std::max(bounds.upper, diagonal + ci);
    }
    return bounds;
}

double residual(const DenseTensor& tensor, double lambda, std::span<const double> x) {
    bool nonzero = false;
    for (double v : x) {
        if (v != 0.0) {
            nonzero = true;
            break;
        }
    }
    if (!nonzero) throw std::invalid_argument("residual requires x != 0");
    return residual_perturbed(tensor, 0.0, lambda, x);
}

} // namespace mten
