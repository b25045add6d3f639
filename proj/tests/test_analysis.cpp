#include "doctest.h"

#include <cmath>

#include <charmoments/analysis.hpp>
#include <charmoments/errors.hpp>
#include <charmoments/groups.hpp>
#include <charmoments/qmoments.hpp>

#include "oracles.hpp"

using namespace charmoments;

namespace {

MomentSequence quantum_sequence(Family f, unsigned n, int max_k) {
    QuantumEngine engine;
    return engine.sequence({f, n}, max_k, MomentMethod::partition_count);
}

ASequence catalan_a(int max_k) {
    ASequence a;
    a.model_tag = "catalan";
    a.integral = true;
    for (const auto& c : oracles::catalan(max_k)) a.values.emplace_back(c);
    return a;
}

} // namespace

TEST_CASE("to_A_sequence divides even moments by 2^k") {
    const auto seq = quantum_sequence(Family::FO, 2, 10);
    const auto a = to_A_sequence(seq);
    CHECK(a.model_tag == seq.model_tag);
    CHECK(a.max_k() == 5);
    CHECK(a.integral);
    for (int k = 0; k <= 5; ++k)
        CHECK(a.values[k] == BigRat(seq.values[2 * k], BigInt(1) << k));
    // FO_2 profile starts 1, 2, 8, 40, 224
    CHECK(a.values[1] == 2);
    CHECK(a.values[2] == 8);
    CHECK(a.values[3] == 40);
    CHECK(a.values[4] == 224);
}

TEST_CASE("the FU profile is exactly Catalan") {
    const auto a = to_A_sequence(quantum_sequence(Family::FU, 2, 16));
    const auto cat = oracles::catalan(8);
    for (int k = 0; k <= 8; ++k) CHECK(a.values[k] == cat[k]);
}

TEST_CASE("catalan_table matches the recurrence oracle") {
    CHECK(catalan_table(20) == oracles::catalan(20));
}

TEST_CASE("convolution conditions on the Catalan sequence") {
    const auto report = check_convolution(catalan_a(16));
    CHECK(report.holds_a);
    CHECK(report.holds_b);
    CHECK(report.first_violation_b == -1);
    // the defining recurrence holds with equality, never strictly
    CHECK(report.first_strict_b == -1);
    CHECK_FALSE(report.holds_c);
    CHECK(report.first_k0 == -1);
}

TEST_CASE("convolution conditions on the FO_2 profile") {
    const auto report = check_convolution(to_A_sequence(quantum_sequence(Family::FO, 2, 32)));
    CHECK(report.holds_a);
    CHECK(report.holds_b);
    CHECK(report.first_strict_b == 0);  // A_1 = 2 > A_0^2
    CHECK(report.holds_c);
    CHECK(report.first_k0 == 1);
}

TEST_CASE("convolution violations are located") {
    ASequence a;
    a.model_tag = "fabricated";
    a.values = {1, 2, 3};  // A_2 = 3 < A_0 A_1 + A_1 A_0 = 4
    const auto report = check_convolution(a);
    CHECK(report.holds_a);
    CHECK_FALSE(report.holds_b);
    CHECK(report.first_violation_b == 1);

    ASequence b;
    b.model_tag = "off-normalization";
    b.values = {2, 1};
    CHECK_FALSE(check_convolution(b).holds_a);
}

TEST_CASE("minorant certificate on the Catalan profile is not applicable") {
    const auto report = minorant_certificate(catalan_a(16), 64);
    CHECK_FALSE(report.applicable);
    CHECK_FALSE(report.certified);
    CHECK(report.strict_gap == -1);
}

TEST_CASE("minorant certificate on FO_2 is exact and certifies super-4 growth") {
    const auto a = to_A_sequence(quantum_sequence(Family::FO, 2, 32));
    const auto report = minorant_certificate(a, 128);
    CHECK(report.applicable);
    CHECK(report.strict_gap == 0);
    CHECK(report.seed_end == 1);
    CHECK(report.horizon == 128);
    CHECK(report.certified);
    CHECK(report.growth_at_horizon > 4.0);
    CHECK(report.growth_extrapolated > report.growth_at_horizon);

    // recompute the first minorant terms independently: B = (1, 2), then
    // pure convolution growth
    std::vector<BigRat> b = {1, 2};
    for (int h = 1; h <= 4; ++h) {
        BigRat s = 0;
        for (int j = 0; j <= h; ++j) s += b[j] * b[h - j];
        b.push_back(s);
    }
    CHECK(b[2] == 4);
    CHECK(b[3] == 12);
    CHECK(b[4] == 40);
    CHECK(b[5] == 144);
    // B stays below A while growing strictly faster than 4^h eventually
    for (int h = 2; h <= 5; ++h) CHECK(b[h] <= a.values[h]);
}

TEST_CASE("low horizons are not certifiable") {
    const auto a = to_A_sequence(quantum_sequence(Family::FO, 2, 32));
    // B_1 = 2 <= 4^2
    const auto report = minorant_certificate(a, 1);
    CHECK(report.applicable);
    CHECK_FALSE(report.certified);
}

TEST_CASE("norm estimation on known targets") {
    const auto fu = estimate_norm(quantum_sequence(Family::FU, 2, 32));
    const double target = 2.0 * std::sqrt(2.0);
    CHECK(fu.lower_bound <= target + 1e-12);
    CHECK(std::abs(fu.extrapolated - target) / target < 0.02);
    CHECK(fu.fit_points >= 2);

    const auto free2 = estimate_norm(group_moment_sequence(*make_free_group(2), 32));
    const double t2 = 2.0 * std::sqrt(3.0);
    CHECK(free2.lower_bound <= t2 + 1e-12);
    CHECK(std::abs(free2.extrapolated - t2) / t2 < 0.03);
}

TEST_CASE("roots are nondecreasing lower bounds") {
    const auto est = estimate_norm(quantum_sequence(Family::FO, 2, 32));
    for (std::size_t i = 1; i < est.root_values.size(); ++i)
        CHECK(est.root_values[i] >= est.root_values[i - 1] - 1e-12);
    CHECK(est.lower_bound == est.root_values.back());
    CHECK(est.lower_bound <= 4.0);  // the FO_2 norm
}

TEST_CASE("norm estimation needs enough even moments") {
    MomentSequence tiny{"tiny", {1, 0, 2, 0, 8}};
    CHECK_THROWS_AS(estimate_norm(tiny), InvalidInput);
}

TEST_CASE("hankel and log-convexity pass on true moment sequences") {
    for (const auto& seq : {quantum_sequence(Family::FU, 2, 16),
                            quantum_sequence(Family::FS, 4, 12),
                            group_moment_sequence(*make_free_abelian(2), 12)}) {
        const auto report = check_hankel(seq);
        CHECK(report.psd_ok);
        CHECK(report.logconvex_ok);
        CHECK(report.first_logconvex_violation == -1);
    }
}

TEST_CASE("hankel failures are detected and located") {
    // not a moment sequence: m_4 too small makes the Hankel indefinite
    MomentSequence bad{"bad", {1, 0, 2, 0, 2}};
    const auto report = check_hankel(bad);
    CHECK_FALSE(report.psd_ok);
    CHECK_FALSE(report.logconvex_ok);
    CHECK(report.first_logconvex_violation == 1);

    // a flat even tail also breaks log-convexity
    MomentSequence flat{"flat", {1, 0, 5, 0, 5}};
    CHECK_FALSE(check_hankel(flat).logconvex_ok);
}
