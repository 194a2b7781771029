#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace mten {

using Vector = std::vector<double>;

/// Dense m-order n-dimensional real tensor.
///
/// Entries are stored flat in row-major order: the first index varies
/// slowest, the last index fastest. Multi-indices are 1-based in the
/// public API. Order and dimension are fixed at construction and the
/// entry array is immutable afterwards, so tensors are safe to share
/// read-only across threads.
class DenseTensor {
public:
    /// Requires order >= 2, dim >= 1, entries.size() == dim^order and
    /// every entry finite. Throws std::invalid_argument otherwise.
    DenseTensor(int order, int dim, std::vector<double> entries);

    int order() const noexcept { return order_; }
    int dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return entries_.size(); }
    const std::vector<double>& entries() const noexcept { return entries_; }

    /// Entry at a 1-based multi-index of length order().
    double entry(std::span<const int> index) const;

    /// Flat offset of a 1-based multi-index: sum_k (i_k - 1) * n^(m-k).
    std::size_t flat_offset(std::span<const int> index) const;

    /// Flat offset of the k-th diagonal entry T_{k k ... k}, k in [1, dim].
    std::size_t diagonal_offset(int k) const noexcept;

    /// Distance between consecutive diagonal entries in flat storage.
    std::size_t diagonal_stride() const noexcept { return diag_stride_; }

    double max_abs_entry() const noexcept;

private:
    int order_;
    int dim_;
    std::size_t diag_stride_;
    std::vector<double> entries_;
};

struct StructureReport {
    bool nonnegative = false;   // every entry >= 0
    bool z_tensor = false;      // every off-diagonal entry <= 0
    bool symmetric = false;     // invariant under all index permutations
    double max_diagonal = 0.0;  // max_i T_{i...i}
};

/// Validating constructor wrapper; same contract as DenseTensor's ctor.
DenseTensor build(int order, int dim, std::vector<double> entries);

/// The unit tensor I: diagonal entries 1, all others 0. Reduces to the
/// identity matrix for order 2; satisfies I x^{m-1} = x^[m-1].
DenseTensor unit_tensor(int order, int dim);

/// T x^{m-1}: component i is the sum over all (i2,...,im) of
/// T_{i i2...im} * x_{i2} * ... * x_{im}, evaluated densely.
///
/// Implementation reduces the last axis first and accumulates in
/// ascending index order, so results are bit-identical across runs.
Vector apply_contraction(const DenseTensor& tensor, std::span<const double> x);

/// Componentwise power x^[p]. A non-integer p requires every component
/// to be nonnegative.
Vector hadamard_power(std::span<const double> x, double p);

/// Value of the homogeneous form sum T_{i1...im} x_{i1} ... x_{im},
/// i.e. the inner product of x with apply_contraction(tensor, x).
double eval_form(const DenseTensor& tensor, std::span<const double> x);

/// a * (T + b * I): off-diagonal entries scaled by a, diagonal entries
/// mapped to a * (T_{i...i} + b). Maps each eigenpair (lambda, x) of T
/// to (a * (lambda + b), x).
DenseTensor shift_combine(double a, const DenseTensor& tensor, double b);

/// True iff every off-diagonal entry is <= 0 (diagonal unconstrained).
bool is_z_tensor(const DenseTensor& tensor);

/// True iff every entry is >= 0.
bool is_nonnegative(const DenseTensor& tensor);

StructureReport structure_report(const DenseTensor& tensor);

/// Symmetric tensor with the same homogeneous form: each entry becomes
/// the mean of its value over all permutations of its multi-index.
/// Idempotent; preserves eval_form for every x.
DenseTensor symmetrize(const DenseTensor& tensor);

namespace detail {

/// dim^order as size_t; throws std::invalid_argument on overflow.
std::size_t checked_pow(int dim, int order);

/// Walks all multi-indices of a tensor in flat (row-major) order using
/// 0-based digits. Starts at (0,...,0); next() advances and returns
/// false after the last index.
class IndexOdometer {
public:
    IndexOdometer(int order, int dim) : dim_(dim), digits_(order, 0) {}
    std::span<const int> digits() const noexcept { return digits_; }
    bool next() noexcept {
        for (int k = static_cast<int>(digits_.size()) - 1; k >= 0; --k) {
            if (++digits_[k] < dim_) return true;
            digits_[k] = 0;
        }
        return false;
    }

private:
    int dim_;
    std::vector<int> digits_;
};

} // namespace detail

} // namespace mten
