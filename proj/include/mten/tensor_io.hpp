#pragma once

#include "mten/tensor.hpp"

#include <iosfwd>
#include <string>

namespace mten {

/// On-disk tensor encoding. Both modes share the header
///     mten 1
///     order <m>
///     dim <n>
///     mode <dense|coo>
/// Dense payload: exactly dim^order whitespace-separated values in
/// row-major order. Coo payload: one line per stored entry, m 1-based
/// indices followed by the value; unspecified entries are zero and a
/// repeated index tuple is an error. Writes round-trip bit-exactly.
enum class StorageMode { Dense, Coo };

void write_tensor(std::ostream& out, const DenseTensor& tensor,
                  StorageMode mode = StorageMode::Dense);
void write_tensor_file(const std::string& path, const DenseTensor& tensor,
                       StorageMode mode = StorageMode::Dense);

/// Parses either mode; throws std::runtime_error on malformed input.
DenseTensor read_tensor(std::istream& in);
DenseTensor read_tensor_file(const std::string& path);

} // namespace mten
