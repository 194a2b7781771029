#include "mten/posdef.hpp"

#include "mten/randgen.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mten {

namespace {

// First probe vector with a nonzero form value: basis vectors, then the
// all-ones vector. Returns nullopt when the form vanished on all probes.
std::optional<std::pair<Vector, double>> probe_nonzero_form(const DenseTensor& tensor) {
    const int n = tensor.dim();
    for (int i = 0; i < n; ++i) {
        Vector basis(static_cast<std::size_t>(n), 0.0);
        basis[static_cast<std::size_t>(i)] = 1.0;
        const double value = eval_form(tensor, basis);
        if (value != 0.0) return std::make_pair(std::move(basis), value);
    }
    Vector ones(static_cast<std::size_t>(n), 1.0);
    const double value = eval_form(tensor, ones);
    if (value != 0.0) return std::make_pair(std::move(ones), value);
    return std::nullopt;
}

} // namespace

PDVerdict test_positive_definite(const DenseTensor& tensor,
                                 const IterationSettings& settings,
                                 int witness_trials, std::uint64_t witness_seed) {
    settings.validate();
    PDVerdict verdict;
    const DenseTensor symmetric = symmetrize(tensor);
    verdict.symmetrized = symmetric.entries() != tensor.entries();

    if (tensor.order() % 2 != 0) {
        // Odd-degree forms are odd functions: f(-x) = -f(x), so any sign
        // probe yields a nonpositive value at x or -x.
        verdict.status = PDStatus::NotPositiveDefinite;
        verdict.reason = "odd-order";
        if (auto probe = probe_nonzero_form(symmetric)) {
            Vector witness = std::move(probe->first);
            if (probe->second > 0.0) {
                for (double& v : witness) v = -v;
            }
            verdict.witness = std::move(witness);
        } else {
            Vector basis(static_cast<std::size_t>(tensor.dim()), 0.0);
            basis[0] = 1.0;
            verdict.witness = std::move(basis);  // f vanishes there, so f(x) <= 0
        }
        return verdict;
    }

    if (!is_z_tensor(symmetric)) {
        verdict.status = PDStatus::Inapplicable;
        verdict.reason = "not-z-tensor";
        return verdict;
    }

    MTensorVerdict inner = classify_m_tensor(symmetric, settings);
    verdict.tau = inner.tau;
    switch (inner.status) {
        case MStatus::MTensor:
            verdict.status = PDStatus::PositiveDefinite;
            break;
        case MStatus::NotMTensor: {
            verdict.status = PDStatus::NotPositiveDefinite;
            // Best effort: the verdict stands on tau <= 0 even without a
            // concrete witness.
            if (!inner.eigenvector.empty() &&
                eval_form(symmetric, inner.eigenvector) <= 0.0) {
                verdict.witness = std::move(inner.eigenvector);
            } else if (auto sampled =
                           falsify_by_sampling(symmetric, witness_trials, witness_seed)) {
                verdict.witness = std::move(*sampled);
            }
            break;
        }
        case MStatus::Indeterminate:
            verdict.status = PDStatus::Indeterminate;
            verdict.reason = "numerical";
            break;
    }
    return verdict;
}

std::optional<Vector> falsify_by_sampling(const DenseTensor& tensor, int trials,
                                          std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("falsify_by_sampling requires trials >= 1");
    const int n = tensor.dim();
    std::mt19937_64 engine(seed);

    for (int trial = 0; trial < trials; ++trial) {
        // Sphere-uniform direction from normalized Box-Muller normals.
        Vector x(static_cast<std::size_t>(n));
        for (int i = 0; i < n; i += 2) {
            const double u1 = uniform_open01(engine);
            const double u2 = uniform_open01(engine);
            const double radius = std::sqrt(-2.0 * std::log(u1));
            const double angle = 2.0 * std::numbers::pi * u2;
            x[static_cast<std::size_t>(i)] = radius * std::cos(angle);
            if (i + 1 < n) x[static_cast<std::size_t>(i + 1)] = radius * std::sin(angle);
        }
        double norm = 0.0;
        for (double v : x) norm += v * v;
        norm = std::sqrt(norm);
        if (norm == 0.0) continue;
        for (double& v : x) v /= norm;
        if (eval_form(tensor, x) <= 0.0) return x;
    }
    return std::nullopt;
}

} // namespace mten
