#include "mten/randgen.hpp"

#include <cmath>
#include <stdexcept>

namespace mten {

double uniform_open01(std::mt19937_64& engine) {
    const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
    return u == 0.0 ? std::nextafter(0.0, 1.0) : u;  // never reaches 1
}

std::uint64_t trial_seed(std::uint64_t base, std::uint64_t trial) {
    return base + trial;
}

DenseTensor random_z_tensor(const GenSpec& spec) {
    if (spec.order < 2) throw std::invalid_argument("order must be at least 2");
    if (spec.dim < 1) throw std::invalid_argument("dim must be at least 1");
    if (!(spec.diag_offset > 0.0) || !std::isfinite(spec.diag_offset)) {
        throw std::invalid_argument("diag_offset must be positive and finite");
    }

    std::mt19937_64 engine(spec.seed);
    const std::size_t size = detail::checked_pow(spec.dim, spec.order);
    const std::size_t stride =
        spec.dim > 1 ? (size - 1) / (static_cast<std::size_t>(spec.dim) - 1) : 1;

    std::vector<double> entries(size);
    std::size_t next_diag = 0;
    for (std::size_t f = 0; f < size; ++f) {
        const double draw = uniform_open01(engine);
        if (f == next_diag) {
            entries[f] = spec.diag_offset + draw;
            next_diag += stride;
        } else {
            entries[f] = -draw;
        }
    }
    return DenseTensor(spec.order, spec.dim, std::move(entries));
}

} // namespace mten
