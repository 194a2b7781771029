#pragma once

#include "mten/spectral.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace mten {

enum class MStatus { MTensor, NotMTensor, Indeterminate };

/// Result of the M-tensor test on a Z-tensor.
///
/// tau estimates the smallest real eigenvalue; the verdict is MTensor when
/// tau exceeds the guard band, NotMTensor when it falls below the negated
/// band, and Indeterminate inside the band or when the inner iteration did
/// not converge. The eigenvector certifies tau on the classified tensor.
struct MTensorVerdict {
    MStatus status = MStatus::Indeterminate;
    double tau = 0.0;
    Vector eigenvector;
    double guard_band = 0.0;
    SpectralOutcome spectral;  // inner iteration diagnostics
    double upper_bound = 0.0;  // U used to build the nonnegative complement
};

struct DominanceReport {
    bool diagonally_dominant = false;  // |T_{i..i}| >= C_i for all i
    bool strictly_dominant = false;    // strict inequality for all i
    bool strict_row_exists = false;
    std::vector<int> rows_strict;      // 1-based rows with strict inequality
    bool diagonal_nonnegative = false;
};

/// Splitting T = shift * I - nonneg_part with nonneg_part >= 0.
struct Decomposition {
    double shift;
    DenseTensor nonneg_part;
};

/// M-tensor classification of a Z-tensor.
///
/// Computes the real-eigenvalue upper bound U, forms the nonnegative
/// complement U*I - T, finds its spectral radius by power iteration, and
/// reports tau = U - rho. The guard band is
/// max(10 * tol * (1 + |U|), epsilon_used * n^(m-1)); verdicts inside the
/// band come back Indeterminate rather than as a sign decision.
/// Throws std::invalid_argument if T is not a Z-tensor.
MTensorVerdict classify_m_tensor(const DenseTensor& tensor,
                                 const IterationSettings& settings = {});

/// The smallest real eigenvalue of a Z-tensor with its eigenvector; the
/// same computation as classify_m_tensor without the thresholding.
std::pair<double, Vector> smallest_real_eigenvalue(const DenseTensor& tensor,
                                                   const IterationSettings& settings = {});

/// Split a Z-tensor as s * I - B with B nonnegative. Requires s >= the
/// largest diagonal entry (equality allowed); together with
/// largest_eigenvalue(B) this tests: T is an M-tensor iff s > rho(B).
Decomposition decompose(const DenseTensor& tensor, double s);

DominanceReport check_diagonal_dominance(const DenseTensor& tensor);

enum class Sufficiency { ProvenMTensor, NoConclusion };

/// Sufficient (never necessary) M-tensor test by diagonal dominance:
/// proves MTensor for Z-tensors with nonnegative diagonals that are
/// strictly dominant, or dominant with a strict row and irreducible.
/// Irreducibility is checked exactly for dim <= exact_limit; above that
/// the strongly-connected-digraph relaxation is used and proxy_used is
/// set. Returns NoConclusion otherwise; never claims NotMTensor.
struct SufficiencyResult {
    Sufficiency verdict = Sufficiency::NoConclusion;
    bool proxy_used = false;
};

SufficiencyResult sufficient_m_test(const DenseTensor& tensor, int exact_limit = 16);

/// Digraph relaxation of irreducibility: edge i -> j when some nonzero
/// entry with first index i carries j among its remaining indices; true
/// iff the digraph is strongly connected. Implied by exact
/// irreducibility.
bool is_weakly_irreducible(const DenseTensor& tensor);

/// Exact reducibility by subset enumeration (2^dim checks): returns a
/// nonempty proper index set I (1-based, sorted) with T_{i1 i2..im} = 0
/// whenever i1 is in I and no other index is, or nullopt if irreducible.
/// Throws std::invalid_argument when dim > exact_limit.
std::optional<std::vector<int>> is_reducible_exact(const DenseTensor& tensor,
                                                   int exact_limit = 16);

} // namespace mten
