#include "mten/classify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <unordered_set>

namespace mten {

MTensorVerdict classify_m_tensor(const DenseTensor& tensor,
                                 const IterationSettings& settings) {
    settings.validate();
    if (!is_z_tensor(tensor)) {
        throw std::invalid_argument(
            "classify_m_tensor requires a Z-tensor (nonpositive off-diagonal entries)");
    }
    const EigenvalueBounds bounds = real_eigenvalue_bounds(tensor);
    const double upper = bounds.upper;
    // U*I - T is nonnegative because U >= every diagonal entry.
    const DenseTensor complement = shift_combine(-1.0, tensor, -upper);
    SpectralOutcome inner = largest_eigenvalue(complement, settings);

    const double nm1 = std::pow(static_cast<double>(tensor.dim()), tensor.order() - 1);
    MTensorVerdict verdict;
    verdict.tau = upper - inner.lambda;
    verdict.guard_band = std::max(10.0 * settings.tol * (1.0 + std::abs(upper)),
                                  inner.epsilon_used * nm1);
    verdict.upper_bound = upper;
    verdict.eigenvector = inner.eigenvector;
    if (!inner.converged) {
        verdict.status = MStatus::Indeterminate;
    } else if (verdict.tau > verdict.guard_band) {
        verdict.status = MStatus::MTensor;
    } else if (verdict.tau < -verdict.guard_band) {
        verdict.status = MStatus::NotMTensor;
    } else {
        verdict.status = MStatus::Indeterminate;
    }
    verdict.spectral = std::move(inner);
    return verdict;
}

std::pair<double, Vector> smallest_real_eigenvalue(const DenseTensor& tensor,
                                                   const IterationSettings& settings) {
    MTensorVerdict verdict = classify_m_tensor(tensor, settings);
    return {verdict.tau, std::move(verdict.eigenvector)};
}

Decomposition decompose(const DenseTensor& tensor, double s) {
    if (!is_z_tensor(tensor)) {
        throw std::invalid_argument("decompose requires a Z-tensor");
    }
    double max_diagonal = -std::numeric_limits<double>::infinity();
    for (int k = 1; k <= tensor.dim(); ++k) {
        max_diagonal = std::max(max_diagonal, tensor.entries()[tensor.diagonal_offset(k)]);
    }
    if (s < max_diagonal) {
        throw std::invalid_argument(
            "decompose requires s >= the largest diagonal entry");
    }
    return {s, shift_combine(-1.0, tensor, -s)};
}

DominanceReport check_diagonal_dominance(const DenseTensor& tensor) {
    const EigenvalueBounds bounds = real_eigenvalue_bounds(tensor);
    DominanceReport report;
    report.diagonally_dominant = true;
    report.strictly_dominant = true;
    report.diagonal_nonnegative = true;
    for (int i = 1; i <= tensor.dim(); ++i) {
        const double diagonal = tensor.entries()[tensor.diagonal_offset(i)];
        const double ci = bounds.offdiag_row_sums[static_cast<std::size_t>(i - 1)];
        if (diagonal < 0.0) report.diagonal_nonnegative = false;
        if (ci > std::abs(diagonal)) {
            report.diagonally_dominant = false;
            report.strictly_dominant = false;
        } else if (ci < std::abs(diagonal)) {
            report.rows_strict.push_back(i);
        } else {
            report.strictly_dominant = false;
        }
    }
    report.strict_row_exists = !report.rows_strict.empty();
    if (!report.diagonally_dominant) report.strictly_dominant = false;
    return report;
}

SufficiencyResult sufficient_m_test(const DenseTensor& tensor, int exact_limit) {
    SufficiencyResult result;
    if (!is_z_tensor(tensor)) return result;
    const DominanceReport dominance = check_diagonal_dominance(tensor);
    if (!dominance.diagonal_nonnegative) return result;
    if (dominance.strictly_dominant) {
        result.verdict = Sufficiency::ProvenMTensor;
        return result;
    }
    if (!dominance.diagonally_dominant || !dominance.strict_row_exists) return result;
    bool irreducible;
    if (tensor.dim() <= exact_limit) {
        irreducible = !is_reducible_exact(tensor, exact_limit).has_value();
    } else {
        irreducible = is_weakly_irreducible(tensor);
        result.proxy_used = true;
    }
    if (irreducible) result.verdict = Sufficiency::ProvenMTensor;
    return result;
}

bool is_weakly_irreducible(const DenseTensor& tensor) {
    const int n = tensor.dim();
    if (n == 1) return true;
    const int m = tensor.order();
    const std::vector<double>& entries = tensor.entries();

    std::vector<char> adjacency(static_cast<std::size_t>(n) * n, 0);
    detail::IndexOdometer odo(m, n);
    std::size_t flat = 0;
    do {
        if (entries[flat] != 0.0) {
            const auto digits = odo.digits();
            const int i = digits[0];
            for (int k = 1; k < m; ++k) {
                adjacency[static_cast<std::size_t>(i) * n + digits[k]] = 1;
            }
        }
        ++flat;
    } while (odo.next());

    // Strongly connected iff every vertex is reachable from vertex 0 in
    // both the digraph and its transpose.
    const auto reaches_all = [&](bool transpose) {
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int w = 0; w < n; ++w) {
                const bool edge = transpose
                                      ? adjacency[static_cast<std::size_t>(w) * n + v]
                                      : adjacency[static_cast<std::size_t>(v) * n + w];
                if (edge && !seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    ++count;
                    stack.push_back(w);
                }
            }
        }
        return count == n;
    };
    return reaches_all(false) && reaches_all(true);
}

std::optional<std::vector<int>> is_reducible_exact(const DenseTensor& tensor,
                                                   int exact_limit) {
    const int n = tensor.dim();
    if (n > exact_limit || n > 31) {
        throw std::invalid_argument("is_reducible_exact: dim exceeds exact_limit");
    }
    if (n == 1) return std::nullopt;  // no nonempty proper subset exists
    const int m = tensor.order();
    const std::vector<double>& entries = tensor.entries();

    // Distinct bitmasks of the trailing index sets of nonzero entries,
    // grouped by first index. A subset I is a reducibility witness iff
    // for every i in I each stored mask meets I.
    std::vector<std::unordered_set<std::uint32_t>> tail_sets(static_cast<std::size_t>(n));
    detail::IndexOdometer odo(m, n);
    std::size_t flat = 0;
    do {
        if (entries[flat] != 0.0) {
            const auto digits = odo.digits();
            std::uint32_t mask = 0;
            for (int k = 1; k < m; ++k) mask |= 1u << digits[k];
            tail_sets[static_cast<std::size_t>(digits[0])].insert(mask);
        }
        ++flat;
    } while (odo.next());

    std::vector<std::vector<std::uint32_t>> tails(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        tails[static_cast<std::size_t>(i)].assign(tail_sets[static_cast<std::size_t>(i)].begin(),
                                                  tail_sets[static_cast<std::size_t>(i)].end());
    }

    const std::uint32_t full = (1u << n) - 1u;
    for (std::uint32_t subset = 1; subset < full; ++subset) {
        bool witness = true;
        for (int i = 0; i < n && witness; ++i) {
            if (!(subset & (1u << i))) continue;
            for (std::uint32_t tail : tails[static_cast<std::size_t>(i)]) {
                if ((tail & subset) == 0) {
                    witness = false;
                    break;
                }
            }
        }
        if (witness) {
            std::vector<int> members;
            for (int i = 0; i < n; ++i) {
                if (subset & (1u << i)) members.push_back(i + 1);
            }
            return members;
        }
    }
    return std::nullopt;
}

} // namespace mten
