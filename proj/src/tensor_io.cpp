#include "mten/tensor_io.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <unordered_set>
#include <vector>

namespace mten {

namespace {

// Shortest decimal form that parses back to the identical double.
void append_value(std::string& line, double value) {
    char buffer[64];
    const auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    line.append(buffer, end);
}

double parse_value(const std::string& token) {
    double value = 0.0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) {
        throw std::runtime_error("tensor file: malformed number '" + token + "'");
    }
    return value;
}

long parse_integer(const std::string& token, const char* what) {
    long value = 0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) {
        throw std::runtime_error(std::string("tensor file: malformed ") + what + " '" +
                                 token + "'");
    }
    return value;
}

std::string next_token(std::istream& in) {
    std::string token;
    if (!(in >> token)) throw std::runtime_error("tensor file: unexpected end of input");
    return token;
}

void expect_token(std::istream& in, const std::string& expected) {
    const std::string token = next_token(in);
    if (token != expected) {
        throw std::runtime_error("tensor file: expected '" + expected + "', got '" +
                                 token + "'");
    }
}

} // namespace

void write_tensor(std::ostream& out, const DenseTensor& tensor, StorageMode mode) {
    out << "mten 1\n";
    out << "order " << tensor.order() << "\n";
    out << "dim " << tensor.dim() << "\n";
    const int n = tensor.dim();
    std::string line;
    if (mode == StorageMode::Dense) {
        out << "mode dense\n";
        const std::vector<double>& entries = tensor.entries();
        for (std::size_t f = 0; f < entries.size(); ++f) {
            line.clear();
            append_value(line, entries[f]);
            out << line << (((f + 1) % static_cast<std::size_t>(n) == 0) ? '\n' : ' ');
        }
    } else {
        out << "mode coo\n";
        detail::IndexOdometer odo(tensor.order(), n);
        std::size_t flat = 0;
        do {
            const double value = tensor.entries()[flat];
            if (value != 0.0) {
                line.clear();
                for (int digit : odo.digits()) {
                    line += std::to_string(digit + 1);
                    line += ' ';
                }
                append_value(line, value);
                out << line << '\n';
            }
            ++flat;
        } while (odo.next());
    }
    if (!out) throw std::runtime_error("tensor file: write failed");
}

void write_tensor_file(const std::string& path, const DenseTensor& tensor,
                       StorageMode mode) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    write_tensor(out, tensor, mode);
    out.flush();
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

DenseTensor read_tensor(std::istream& in) {
    expect_token(in, "mten");
    const std::string version = next_token(in);
    if (version != "1") {
        throw std::runtime_error("tensor file: unsupported version '" + version + "'");
    }
    expect_token(in, "order");
    const long order = parse_integer(next_token(in), "order");
    expect_token(in, "dim");
    const long dim = parse_integer(next_token(in), "dim");
    if (order < 2 || dim < 1 || order > 64 || dim > (1L << 30)) {
        throw std::runtime_error("tensor file: order/dim out of range");
    }
    expect_token(in, "mode");
    const std::string mode = next_token(in);

    const std::size_t size = detail::checked_pow(static_cast<int>(dim),
                                                 static_cast<int>(order));
    std::vector<double> entries;
    if (mode == "dense") {
        entries.reserve(size);
        std::string token;
        while (in >> token) entries.push_back(parse_value(token));
        if (entries.size() != size) {
            throw std::runtime_error("tensor file: dense payload has " +
                                     std::to_string(entries.size()) + " values, expected " +
                                     std::to_string(size));
        }
    } else if (mode == "coo") {
        entries.assign(size, 0.0);
        std::unordered_set<std::size_t> seen;
        std::string token;
        std::vector<int> index(static_cast<std::size_t>(order));
        while (in >> token) {
            index[0] = static_cast<int>(parse_integer(token, "index"));
            for (long k = 1; k < order; ++k) {
                index[static_cast<std::size_t>(k)] =
                    static_cast<int>(parse_integer(next_token(in), "index"));
            }
            std::size_t flat = 0;
            for (int component : index) {
                if (component < 1 || component > dim) {
                    throw std::runtime_error("tensor file: coo index out of range");
                }
                flat = flat * static_cast<std::size_t>(dim) +
                       static_cast<std::size_t>(component - 1);
            }
            if (!seen.insert(flat).second) {
                throw std::runtime_error("tensor file: duplicate coo index tuple");
            }
            entries[flat] = parse_value(next_token(in));
        }
    } else {
        throw std::runtime_error("tensor file: unknown mode '" + mode + "'");
    }
    return DenseTensor(static_cast<int>(order), static_cast<int>(dim), std::move(entries));
}

DenseTensor read_tensor_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
    return read_tensor(in);
}

} // namespace mten
