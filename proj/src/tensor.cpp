#include "mten/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace mten {

namespace detail {

std::size_t checked_pow(int dim, int order) {
    const auto base = static_cast<std::size_t>(dim);
    std::size_t result = 1;
    for (int k = 0; k < order; ++k) {
        if (result > std::numeric_limits<std::size_t>::max() / base) {
            throw std::invalid_argument("tensor size dim^order overflows");
        }
        result *= base;
    }
    return result;
}

} // namespace detail

DenseTensor::DenseTensor(int order, int dim, std::vector<double> entries)
    : order_(order), dim_(dim), entries_(std::move(entries)) {
    if (order_ < 2) {
        throw std::invalid_argument("tensor order must be at least 2");
    }
    if (dim_ < 1) {
        throw std::invalid_argument("tensor dim must be at least 1");
    }
    const std::size_t expected = detail::checked_pow(dim_, order_);
    if (entries_.size() != expected) {
        throw std::invalid_argument("entry count must be dim^order = " +
                                    std::to_string(expected) + ", got " +
                                    std::to_string(entries_.size()));
    }
    for (double v : entries_) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("tensor entries must be finite");
        }
    }
    // (n^m - 1) / (n - 1) = 1 + n + ... + n^(m-1); 0 is unused for n = 1.
    diag_stride_ = dim_ > 1 ? (entries_.size() - 1) / (static_cast<std::size_t>(dim_) - 1) : 0;
}

std::size_t DenseTensor::flat_offset(std::span<const int> index) const {
    if (static_cast<int>(index.size()) != order_) {
        throw std::out_of_range("multi-index length must equal tensor order");
    }
    std::size_t offset = 0;
    for (int component : index) {
        if (component < 1 || component > dim_) {
            throw std::out_of_range("multi-index component out of range [1, dim]");
        }
        offset = offset * static_cast<std::size_t>(dim_) +
                 static_cast<std::size_t>(component - 1);
    }
    return offset;
}

double DenseTensor::entry(std::span<const int> index) const {
    return entries_[flat_offset(index)];
}

std::size_t DenseTensor::diagonal_offset(int k) const noexcept {
    return static_cast<std::size_t>(k - 1) * diag_stride_;
}

double DenseTensor::max_abs_entry() const noexcept {
    double result = 0.0;
    for (double v : entries_) result = std::max(result, std::abs(v));
    return result;
}

DenseTensor build(int order, int dim, std::vector<double> entries) {
    return DenseTensor(order, dim, std::move(entries));
}

DenseTensor unit_tensor(int order, int dim) {
    std::vector<double> entries(detail::checked_pow(dim, order), 0.0);
    DenseTensor zero(order, dim, std::move(entries));
    std::vector<double> diag(zero.entries());
    for (int k = 1; k <= dim; ++k) diag[zero.diagonal_offset(k)] = 1.0;
    return DenseTensor(order, dim, std::move(diag));
}

Vector apply_contraction(const DenseTensor& tensor, std::span<const double> x) {
    const int n = tensor.dim();
    const int m = tensor.order();
    if (static_cast<int>(x.size()) != n) {
        throw std::invalid_argument("vector length must equal tensor dim");
    }
    // Contract the last axis against x, m-1 times. The first pass reads
    // the tensor entries directly; later passes shrink the buffer in
    // place (write index always precedes the read window).
    std::size_t rows = tensor.size() / static_cast<std::size_t>(n);
    Vector buffer(rows);
    const double* src = tensor.entries().data();
    for (std::size_t r = 0; r < rows; ++r) {
        const double* row = src + r * static_cast<std::size_t>(n);
        double sum = 0.0;
        for (int j = 0; j < n; ++j) sum += row[j] * x[j];
        buffer[r] = sum;
    }
    for (int axis = 1; axis < m - 1; ++axis) {
        rows /= static_cast<std::size_t>(n);
        for (std::size_t r = 0; r < rows; ++r) {
            const double* row = buffer.data() + r * static_cast<std::size_t>(n);
            double sum = 0.0;
            for (int j = 0; j < n; ++j) sum += row[j] * x[j];
            buffer[r] = sum;
        }
    }
    buffer.resize(static_cast<std::size_t>(n));
    return buffer;
}

Vector hadamard_power(std::span<const double> x, double p) {
    const bool integral = p == std::floor(p);
    Vector result(x.size());
    if (integral && p >= 0.0 && p <= 1024.0) {
        // Left-associated repeated multiplication; matches the rounding
        // sequence of the contraction kernel on diagonal tensors.
        const int e = static_cast<int>(p);
        for (std::size_t i = 0; i < x.size(); ++i) {
            double v = 1.0;
            for (int k = 0; k < e; ++k) v *= x[i];
            result[i] = v;
        }
        return result;
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!integral && x[i] < 0.0) {
            throw std::invalid_argument(
                "hadamard_power: negative component with fractional exponent");
        }
        result[i] = std::pow(x[i], p);
    }
    return result;
}

double eval_form(const DenseTensor& tensor, std::span<const double> x) {
    Vector contracted = apply_contraction(tensor, x);
    double sum = 0.0;
    for (std::size_t i = 0; i < contracted.size(); ++i) sum += x[i] * contracted[i];
    return sum;
}

DenseTensor shift_combine(double a, const DenseTensor& tensor, double b) {
    std::vector<double> entries(tensor.entries());
    for (double& v : entries) v *= a;
    for (int k = 1; k <= tensor.dim(); ++k) {
        const std::size_t d = tensor.diagonal_offset(k);
        entries[d] = a * (tensor.entries()[d] + b);
    }
    return DenseTensor(tensor.order(), tensor.dim(), std::move(entries));
}

bool is_nonnegative(const DenseTensor& tensor) {
    for (double v : tensor.entries()) {
        if (v < 0.0) return false;
    }
    return true;
}

bool is_z_tensor(const DenseTensor& tensor) {
    if (tensor.dim() == 1) return true;  // the single entry is diagonal
    const std::vector<double>& entries = tensor.entries();
    const std::size_t stride = tensor.diagonal_stride();
    std::size_t next_diag = 0;
    for (std::size_t f = 0; f < entries.size(); ++f) {
        if (f == next_diag) {
            next_diag += stride;
            continue;
        }
        if (entries[f] > 0.0) return false;
    }
    return true;
}

namespace {

// Flat offset of the sorted permutation of the current multi-index; the
// representative shared by all entries in one permutation class.
std::size_t canonical_offset(std::span<const int> digits, int dim,
                             std::vector<int>& scratch) {
    scratch.assign(digits.begin(), digits.end());
    std::sort(scratch.begin(), scratch.end());
    std::size_t offset = 0;
    for (int d : scratch) {
        offset = offset * static_cast<std::size_t>(dim) + static_cast<std::size_t>(d);
    }
    return offset;
}

} // namespace

StructureReport structure_report(const DenseTensor& tensor) {
    StructureReport report;
    report.nonnegative = is_nonnegative(tensor);
    report.z_tensor = is_z_tensor(tensor);

    report.max_diagonal = -std::numeric_limits<double>::infinity();
    for (int k = 1; k <= tensor.dim(); ++k) {
        report.max_diagonal =
            std::max(report.max_diagonal, tensor.entries()[tensor.diagonal_offset(k)]);
    }

    report.symmetric = true;
    const std::vector<double>& entries = tensor.entries();
    detail::IndexOdometer odo(tensor.order(), tensor.dim());
    std::vector<int> scratch;
    std::size_t flat = 0;
    do {
        const std::size_t rep = canonical_offset(odo.digits(), tensor.dim(), scratch);
        if (entries[flat] != entries[rep]) {
            report.symmetric = false;
            break;
        }
        ++flat;
    } while (odo.next());
    return report;
}

DenseTensor symmetrize(const DenseTensor& tensor) {
    const std::vector<double>& entries = tensor.entries();
    std::vector<double> class_sum(entries.size(), 0.0);
    std::vector<std::size_t> class_count(entries.size(), 0);

    detail::IndexOdometer odo(tensor.order(), tensor.dim());
    std::vector<int> scratch;
    std::size_t flat = 0;
    do {
        const std::size_t rep = canonical_offset(odo.digits(), tensor.dim(), scratch);
        class_sum[rep] += entries[flat];
        class_count[rep] += 1;
        ++flat;
    } while (odo.next());

    std::vector<double> result(entries.size());
    detail::IndexOdometer odo2(tensor.order(), tensor.dim());
    flat = 0;
    do {
        const std::size_t rep = canonical_offset(odo2.digits(), tensor.dim(), scratch);
        result[flat] = class_sum[rep] / static_cast<double>(class_count[rep]);
        ++flat;
    } while (odo2.next());
    return DenseTensor(tensor.order(), tensor.dim(), std::move(result));
}

} // namespace mten
