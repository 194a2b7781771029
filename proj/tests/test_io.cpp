#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mten/classify.hpp"
#include "mten/randgen.hpp"
#include "mten/tensor_io.hpp"
#include "support/test_support.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdio>
#include <sstream>

using namespace mten;

namespace {

bool bitwise_equal(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::bit_cast<std::uint64_t>(a[i]) != std::bit_cast<std::uint64_t>(b[i])) {
            return false;
        }
    }
    return true;
}

DenseTensor roundtrip(const DenseTensor& tensor, StorageMode mode) {
    std::stringstream stream;
    write_tensor(stream, tensor, mode);
    return read_tensor(stream);
}

} // namespace

TEST_CASE("dense round-trip is bit-exact") {
    GenSpec spec;
    spec.order = 3;
    spec.dim = 4;
    spec.diag_offset = 3.0;
    spec.seed = 2024;
    const DenseTensor tensor = random_z_tensor(spec);
    const DenseTensor reread = roundtrip(tensor, StorageMode::Dense);
    CHECK(reread.order() == 3);
    CHECK(reread.dim() == 4);
    CHECK(bitwise_equal(reread.entries(), tensor.entries()));

    // Awkward values: negative zero, denormals, long mantissas.
    const DenseTensor awkward =
        build(2, 2, {-0.0, 5e-324, 0.1 + 0.2, -1.2345678901234567e308});
    CHECK(bitwise_equal(roundtrip(awkward, StorageMode::Dense).entries(),
                        awkward.entries()));
}

TEST_CASE("coo round-trip is bit-exact and zeros stay implicit") {
    const DenseTensor unit = unit_tensor(3, 3);
    std::stringstream stream;
    write_tensor(stream, unit, StorageMode::Coo);
    const std::string text = stream.str();
    CHECK(text.find("mode coo") != std::string::npos);
    // Only the three diagonal entries are listed.
    CHECK(std::count(text.begin(), text.end(), '\n') == 4 + 3);

    std::stringstream reparse(text);
    CHECK(bitwise_equal(read_tensor(reparse).entries(), unit.entries()));
}

TEST_CASE("coo file assembles the Q fixture") {
    const std::string text =
        "mten 1\norder 3\ndim 2\nmode coo\n"
        "1 1 1 4\n2 2 2 4\n"
        "1 1 2 -1\n1 2 1 -1\n1 2 2 -1\n2 1 1 -1\n2 1 2 -1\n2 2 1 -1\n";
    std::stringstream stream(text);
    CHECK(read_tensor(stream).entries() == test::q_fixture().entries());
}

TEST_CASE("coo and dense encodings classify identically") {
    const DenseTensor q = test::q_fixture();
    const DenseTensor via_dense = roundtrip(q, StorageMode::Dense);
    const DenseTensor via_coo = roundtrip(q, StorageMode::Coo);
    const MTensorVerdict a = classify_m_tensor(via_dense);
    const MTensorVerdict b = classify_m_tensor(via_coo);
    CHECK(a.status == b.status);
    CHECK(a.tau == b.tau);
}

TEST_CASE("parse errors") {
    const auto fails = [](const std::string& text) {
        std::stringstream stream(text);
        CHECK_THROWS_AS(read_tensor(stream), std::runtime_error);
    };
    fails("");
    fails("mten 2\norder 3\ndim 2\nmode dense\n");
    fails("nope 1\norder 3\ndim 2\nmode dense\n");
    fails("mten 1\norder 3\ndim 2\nmode dense\n1 2 3 4 5 6 7\n");          // short
    fails("mten 1\norder 3\ndim 2\nmode dense\n1 2 3 4 5 6 7 8 9\n");      // long
    fails("mten 1\norder 3\ndim 2\nmode dense\n1 2 3 4 5 6 7 eight\n");    // not a number
    fails("mten 1\norder 3\ndim 2\nmode sparse\n");                        // unknown mode
    fails("mten 1\norder 3\ndim 2\nmode coo\n1 1 3 4\n");                  // index range
    fails("mten 1\norder 3\ndim 2\nmode coo\n1 1 1 4\n1 1 1 5\n");         // duplicate
    fails("mten 1\norder 3\ndim 2\nmode coo\n1 1 1\n");                    // truncated row
    fails("mten 1\norder 1\ndim 2\nmode dense\n1 2\n");                    // bad order
}

TEST_CASE("file round-trip through the filesystem") {
    const std::string path = "io_roundtrip_test.mten";
    const DenseTensor q = test::q_fixture();
    write_tensor_file(path, q, StorageMode::Dense);
    CHECK(bitwise_equal(read_tensor_file(path).entries(), q.entries()));
    std::remove(path.c_str());

    CHECK_THROWS_AS(write_tensor_file("/nonexistent-dir/x.mten", q), std::runtime_error);
    CHECK_THROWS_AS(read_tensor_file("/nonexistent-dir/x.mten"), std::runtime_error);
}
