#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mten/posdef.hpp"
#include "support/test_support.hpp"

#include <cmath>

using namespace mten;
using test::q_fixture;
using test::scaled_i_minus_all_ones;

namespace {

void check_witness_valid(const DenseTensor& tensor, const Vector& witness) {
    double norm = 0.0;
    for (double v : witness) norm += v * v;
    CHECK(norm > 0.0);
    CHECK(eval_form(symmetrize(tensor), witness) <= 0.0);
}

} // namespace

TEST_CASE("even-order fixtures decide through the M-tensor test") {
    // 9*I - allones, m=4 n=2: rho(allones) = 8, so tau = 1.
    const DenseTensor pd = scaled_i_minus_all_ones(4, 2, 9.0);
    const PDVerdict pd_verdict = test_positive_definite(pd);
    CHECK(pd_verdict.status == PDStatus::PositiveDefinite);
    REQUIRE(pd_verdict.tau.has_value());
    CHECK(*pd_verdict.tau == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(!pd_verdict.witness.has_value());
    CHECK(!pd_verdict.symmetrized);
    CHECK(eval_form(pd, Vector{1, 1}) == 2.0);  // 16 - 14, spot check

    // 7*I - allones, m=4 n=2: tau = -1; f(1,1) = 12 - 14 = -2.
    const DenseTensor npd = scaled_i_minus_all_ones(4, 2, 7.0);
    const PDVerdict npd_verdict = test_positive_definite(npd);
    CHECK(npd_verdict.status == PDStatus::NotPositiveDefinite);
    REQUIRE(npd_verdict.tau.has_value());
    CHECK(*npd_verdict.tau == doctest::Approx(-1.0).epsilon(1e-12));
    REQUIRE(npd_verdict.witness.has_value());
    check_witness_valid(npd, *npd_verdict.witness);
    CHECK(eval_form(npd, Vector{1, 1}) == -2.0);
}

TEST_CASE("odd order is never positive definite") {
    const PDVerdict q = test_positive_definite(q_fixture());
    CHECK(q.status == PDStatus::NotPositiveDefinite);
    CHECK(q.reason == "odd-order");
    REQUIRE(q.witness.has_value());
    check_witness_valid(q_fixture(), *q.witness);

    // Positive odd forms flip sign under negation.
    const PDVerdict ones = test_positive_definite(test::all_ones(3, 2));
    CHECK(ones.status == PDStatus::NotPositiveDefinite);
    REQUIRE(ones.witness.has_value());
    check_witness_valid(test::all_ones(3, 2), *ones.witness);

    std::mt19937_64 engine(83);
    for (int round = 0; round < 10; ++round) {
        const DenseTensor tensor = test::random_tensor(engine, 3, 3, -1.0, 1.0);
        const PDVerdict verdict = test_positive_definite(tensor);
        CHECK(verdict.status == PDStatus::NotPositiveDefinite);
        if (verdict.witness) check_witness_valid(tensor, *verdict.witness);
    }
}

TEST_CASE("non-Z symmetrizations are inapplicable") {
    const PDVerdict verdict = test_positive_definite(test::all_ones(4, 2));
    CHECK(verdict.status == PDStatus::Inapplicable);
    CHECK(verdict.reason == "not-z-tensor");
    CHECK(!verdict.tau.has_value());
}

TEST_CASE("verdict is invariant under symmetrization") {
    // Perturb one permutation class member; the class mean is unchanged.
    DenseTensor base = scaled_i_minus_all_ones(4, 2, 9.0);
    std::vector<double> entries = base.entries();
    entries[1] += 0.3;   // (1,1,1,2)
    entries[8] -= 0.3;   // (2,1,1,1)
    const DenseTensor skewed = build(4, 2, std::move(entries));

    const PDVerdict direct = test_positive_definite(skewed);
    const PDVerdict via_sym = test_positive_definite(symmetrize(skewed));
    CHECK(direct.symmetrized);
    CHECK(!via_sym.symmetrized);
    CHECK(direct.status == via_sym.status);
    CHECK(direct.status == PDStatus::PositiveDefinite);
    REQUIRE(direct.tau.has_value());
    REQUIRE(via_sym.tau.has_value());
    CHECK(std::abs(*direct.tau - *via_sym.tau) <= 10.0 * IterationSettings{}.tol);
}

TEST_CASE("falsify_by_sampling") {
    // f((1,1)/sqrt(2)) = -0.5 < 0: a full negative neighborhood exists.
    const DenseTensor npd = scaled_i_minus_all_ones(4, 2, 7.0);
    const auto witness = falsify_by_sampling(npd, 1000, 99);
    REQUIRE(witness.has_value());
    check_witness_valid(npd, *witness);

    CHECK(!falsify_by_sampling(unit_tensor(4, 3), 2000, 5).has_value());
    CHECK_THROWS_AS(falsify_by_sampling(npd, 0, 1), std::invalid_argument);
}

TEST_CASE("no counterexample survives a positive-definite verdict") {
    for (const DenseTensor& tensor :
         {scaled_i_minus_all_ones(4, 2, 9.0), unit_tensor(4, 2), unit_tensor(4, 3)}) {
        const PDVerdict verdict = test_positive_definite(tensor);
        REQUIRE(verdict.status == PDStatus::PositiveDefinite);
        CHECK(!falsify_by_sampling(symmetrize(tensor), 10000, 31).has_value());
    }
}

TEST_CASE("sampling is reproducible for a fixed seed") {
    const DenseTensor npd = scaled_i_minus_all_ones(4, 2, 7.0);
    const auto a = falsify_by_sampling(npd, 200, 17);
    const auto b = falsify_by_sampling(npd, 200, 17);
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(*a == *b);
}
