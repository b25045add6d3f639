// Acceptance gate: ten end-to-end checks of the whole engine, each
// printed as a single PASS/FAIL line with its runtime.  Exit code is the
// number of failing checks.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <charmoments/analysis.hpp>
#include <charmoments/gram.hpp>
#include <charmoments/groups.hpp>
#include <charmoments/partition_count.hpp>
#include <charmoments/qmoments.hpp>

#include "oracles.hpp"

using namespace charmoments;

namespace {

// Pinned tolerances and targets.
constexpr double kFuNormTol = 0.02;     // FU_2 estimate vs 2*sqrt(2)
constexpr double kFreeNormTol = 0.03;   // free(2) estimate vs 2*sqrt(3)
constexpr double kLatticeNormTol = 0.03;  // Z^2 estimate vs 4
constexpr double kMinorantGrowthTol = 0.005;  // FO_2 reported growth vs 4.828
constexpr double kExpectedMinorantGrowth = 4.828;

struct Check {
    int id;
    std::string label;
    double budget_seconds;  // 0 = no stated budget
    std::function<std::string(std::vector<MomentSequence>&)> run;  // "" = pass
};

std::string fail(const std::string& message) { return message; }

double relative_error(double value, double target) {
    return std::abs(value - target) / target;
}

// 1. FU closed form vs partition count, n in {2..5}, half-orders k <= 8.
std::string criterion_fu_closed_form(std::vector<MomentSequence>& bank) {
    QuantumEngine engine;
    const auto cat = oracles::catalan(8);
    for (unsigned n = 2; n <= 5; ++n) {
        const auto counted =
            engine.sequence({Family::FU, n}, 17, MomentMethod::partition_count);
        const auto closed =
            engine.sequence({Family::FU, n}, 17, MomentMethod::closed_form);
        if (counted.values != closed.values)
            return fail("count and closed form disagree at n=" + std::to_string(n));
        for (int k = 0; k <= 8; ++k) {
            if (counted.values[2 * k] != (BigInt(1) << k) * cat[k])
                return fail("m_" + std::to_string(2 * k) + " is not 2^k C_k at n=" +
                            std::to_string(n));
            if (k > 0 && counted.values[2 * k - 1] != 0)
                return fail("odd moment nonzero at n=" + std::to_string(n));
        }
        bank.push_back(counted);
    }
    return "";
}

// 2. m_4(FU_2) = 8 by all three methods.
std::string criterion_three_methods(std::vector<MomentSequence>&) {
    QuantumEngine engine;
    const QuantumModel fu2{Family::FU, 2};
    for (auto method : {MomentMethod::closed_form, MomentMethod::partition_count,
                        MomentMethod::gram_rank}) {
        const BigInt m4 = engine.moment(fu2, 4, method);
        if (m4 != 8)
            return fail(std::string("m_4 by ") + moment_method_name(method) + " gave " +
                        m4.str());
    }
    return "";
}

// 3. m_k(FU_4) <= m_k(FO_4) <= m_k(FS_4) for k <= 12, strict from k = 2 on.
std::string criterion_quantum_chain(std::vector<MomentSequence>& bank) {
    QuantumEngine engine;
    const auto fu = engine.sequence({Family::FU, 4}, 12, MomentMethod::partition_count);
    const auto fo = engine.sequence({Family::FO, 4}, 12, MomentMethod::partition_count);
    const auto fs = engine.sequence({Family::FS, 4}, 12, MomentMethod::partition_count);
    if (fu.values[4] != 8 || fo.values[4] != 32 || fs.values[4] != 224)
        return fail("spot values m_4 differ from 8, 32, 224");
    for (int k = 0; k <= 12; ++k) {
        if (fu.values[k] > fo.values[k] || fo.values[k] > fs.values[k])
            return fail("chain not monotone at k=" + std::to_string(k));
        if (k >= 2 && fu.values[k] >= fs.values[k])
            return fail("chain not strict end to end at k=" + std::to_string(k));
        // both steps are strict at every even order from 2 on; at odd
        // orders the unitary and orthogonal moments both vanish
        if (k >= 2 && k % 2 == 0 &&
            (fu.values[k] >= fo.values[k] || fo.values[k] >= fs.values[k]))
            return fail("chain step not strict at k=" + std::to_string(k));
    }
    bank.push_back(fu);
    bank.push_back(fo);
    bank.push_back(fs);
    return "";
}

// 4. free(2) <= Z^2 <= (Z/2)^2 walk counts for k <= 12, strict at k = 4.
std::string criterion_group_chain(std::vector<MomentSequence>& bank) {
    const auto free2 = group_moment_sequence(*parse_group_preset("free:2"), 12);
    const auto z2 = group_moment_sequence(*parse_group_preset("abelian:2"), 12);
    const auto klein =
        group_moment_sequence(*parse_group_preset("product:cyclic:2+cyclic:2"), 12);
    if (free2.values[4] != 28 || z2.values[4] != 36 || klein.values[4] != 128)
        return fail("m_4 values differ from 28, 36, 128");
    const auto lower = compare_dominance(free2, z2);
    const auto upper = compare_dominance(z2, klein);
    if (!lower.monotone || !upper.monotone) return fail("chain not monotone");
    if (lower.first_strict != 4) return fail("free(2) vs Z^2 first strict index is not 4");
    if (!upper.strict_found || upper.first_strict > 4)
        return fail("Z^2 vs (Z/2)^2 never strict by k=4");
    bank.push_back(free2);
    bank.push_back(z2);
    bank.push_back(klein);
    return "";
}

// 5. Norm targets with K = 32 moments: 2*sqrt(2), 2*sqrt(3), 4.
std::string criterion_norm_targets(std::vector<MomentSequence>& bank) {
    QuantumEngine engine;
    const struct {
        MomentSequence seq;
        double target;
        double tol;
        const char* name;
    } cases[] = {
        {engine.sequence({Family::FU, 2}, 32, MomentMethod::partition_count),
         2.0 * std::sqrt(2.0), kFuNormTol, "FU_2"},
        {group_moment_sequence(*parse_group_preset("free:2"), 32),
         2.0 * std::sqrt(3.0), kFreeNormTol, "free(2)"},
        {group_moment_sequence(*parse_group_preset("abelian:2"), 32), 4.0,
         kLatticeNormTol, "Z^2"},
    };
    for (const auto& c : cases) {
        const auto est = estimate_norm(c.seq);
        if (est.lower_bound > c.target + 1e-12)
            return fail(std::string(c.name) + " lower bound exceeds the true norm");
        const double err = relative_error(est.extrapolated, c.target);
        if (err > c.tol)
            return fail(std::string(c.name) + " estimate off by " +
                        std::to_string(100 * err) + "%");
    }
    for (const auto& c : cases) bank.push_back(c.seq);
    return "";
}

// 6. Convolution conditions: Catalan passes (a),(b) with equality and
// fails (c); FO_2 is strict at the k = 0 step and has k_0 = 1.
std::string criterion_convolution(std::vector<MomentSequence>&) {
    ASequence catalan;
    catalan.model_tag = "catalan";
    catalan.integral = true;
    for (const auto& c : catalan_table(32)) catalan.values.emplace_back(c);
    const auto base = check_convolution(catalan);
    if (!base.holds_a || !base.holds_b) return fail("Catalan fails (a) or (b)");
    if (base.first_strict_b != -1) return fail("Catalan recurrence is not tight");
    if (base.holds_c) return fail("Catalan wrongly passes (c)");

    QuantumEngine engine;
    const auto a = to_A_sequence(
        engine.sequence({Family::FO, 2}, 64, MomentMethod::partition_count));
    if (a.values[1] != 2 || a.values[2] != 8 || a.values[3] != 40)
        return fail("FO_2 profile does not start 1, 2, 8, 40");
    const auto report = check_convolution(a);
    if (!report.holds_a || !report.holds_b) return fail("FO_2 fails (a) or (b)");
    if (report.first_strict_b != 0) return fail("FO_2 first strictness is not at k=0");
    if (!report.holds_c || report.first_k0 != 1) return fail("FO_2 k_0 is not 1");
    return "";
}

// 7. Minorant certificates at horizon 128 for FO_2 and FS_4; Catalan is
// not applicable.
std::string criterion_minorant(std::vector<MomentSequence>&) {
    QuantumEngine engine;
    const auto fo = to_A_sequence(
        engine.sequence({Family::FO, 2}, 64, MomentMethod::partition_count));
    const auto fo_report = minorant_certificate(fo, 128);
    if (!fo_report.applicable || !fo_report.certified)
        return fail("FO_2 certificate did not certify");
    if (fo_report.growth_at_horizon <= 4.0)
        return fail("FO_2 growth at the horizon is not above 4");
    if (relative_error(fo_report.growth_extrapolated, kExpectedMinorantGrowth) >
        kMinorantGrowthTol)
        return fail("FO_2 reported growth " +
                    std::to_string(fo_report.growth_extrapolated) + " is not ~4.828");

    const auto fs = to_A_sequence(
        engine.sequence({Family::FS, 4}, 64, MomentMethod::partition_count));
    const auto fs_report = minorant_certificate(fs, 128);
    if (!fs_report.applicable || !fs_report.certified)
        return fail("FS_4 certificate did not certify");

    ASequence catalan;
    catalan.model_tag = "catalan";
    catalan.integral = true;
    for (const auto& c : catalan_table(32)) catalan.values.emplace_back(c);
    const auto cat_report = minorant_certificate(catalan, 128);
    if (cat_report.applicable || cat_report.certified)
        return fail("Catalan certificate should be not-applicable");
    return "";
}

// 8. Splitting inequality, exhaustive over every color word of even
// length <= 10, classes NC and NC2.
std::string criterion_block_inequality(std::vector<MomentSequence>&) {
    for (std::size_t len = 2; len <= 10; len += 2) {
        for (const auto& w : oracles::all_words(len)) {
            for (auto cls : {PartitionClass::NC, PartitionClass::NC2}) {
                const auto report = verify_block_inequality(w, cls);
                if (!report.holds)
                    return fail("inequality fails for " + w.str() + " in " +
                                partition_class_name(cls));
                if (!report.injective)
                    return fail("nesting not injective for " + w.str() + " in " +
                                partition_class_name(cls));
            }
        }
    }
    return "";
}

// 9. Gram rank collapse at n = 1 and the tensor-model oracle sweep over
// every word of length <= 6 and n <= 3.
std::string criterion_gram_oracle(std::vector<MomentSequence>&) {
    for (unsigned n = 2; n <= 6; ++n)
        if (dim_fixed_space(ColorWord::parse("1c1c"), PartitionClass::NC2C, n,
                            DimMethod::rank) != 2)
            return fail("alternating 4-letter rank is not 2 at n=" + std::to_string(n));
    if (dim_fixed_space(ColorWord::parse("1c1c"), PartitionClass::NC2C, 1,
                        DimMethod::rank) != 1)
        return fail("alternating 4-letter rank is not 1 at n=1");

    const auto oracle_mismatch = [](const GramMatrix& g,
                                    const std::vector<Partition>& labels,
                                    unsigned n) -> bool {
        if (g.labels != labels) return true;
        for (std::size_t i = 0; i < labels.size(); ++i)
            for (std::size_t j = 0; j < labels.size(); ++j)
                if (g.entries[i][j] !=
                    oracles::gram_entry_tensor(labels[i], labels[j], n))
                    return true;
        return false;
    };

    for (std::size_t len = 1; len <= 6; ++len) {
        const auto words = oracles::all_words(len);
        // NC and NC2 matrices cannot see the coloring: oracle one
        // representative per length, then require every word to
        // reproduce it entry for entry
        for (auto cls : {PartitionClass::NC, PartitionClass::NC2}) {
            const auto labels = oracles::enumerate_class(ColorWord::uniform(len), cls);
            for (unsigned n = 1; n <= 3; ++n) {
                const auto rep = gram_matrix(ColorWord::uniform(len), cls, n);
                if (oracle_mismatch(rep, labels, n))
                    return fail(std::string(partition_class_name(cls)) +
                                " oracle mismatch at length " + std::to_string(len) +
                                ", n=" + std::to_string(n));
                for (const auto& w : words) {
                    const auto g = gram_matrix(w, cls, n);
                    if (g.labels != rep.labels || g.entries != rep.entries)
                        return fail("coloring changed a " +
                                    std::string(partition_class_name(cls)) +
                                    " matrix for " + w.str());
                }
            }
        }
        // NC2C classes are small and color-dependent: oracle every word
        for (const auto& w : words) {
            const auto labels = oracles::enumerate_class(w, PartitionClass::NC2C);
            for (unsigned n = 1; n <= 3; ++n)
                if (oracle_mismatch(gram_matrix(w, PartitionClass::NC2C, n), labels, n))
                    return fail("NC2C oracle mismatch for " + w.str() + " at n=" +
                                std::to_string(n));
        }
    }
    return "";
}

// 10. Every banked sequence from criteria 1-5 is an exact moment
// sequence: Hankel PSD and even log-convexity.
std::string criterion_hankel(std::vector<MomentSequence>& bank) {
    if (bank.size() < 13) return fail("sequence bank is unexpectedly small");
    for (const auto& seq : bank) {
        const auto report = check_hankel(seq);
        if (!report.psd_ok) return fail(seq.model_tag + " Hankel is not PSD");
        if (!report.logconvex_ok)
            return fail(seq.model_tag + " even moments are not log-convex");
    }
    return "";
}

} // namespace

int main() {
    std::vector<Check> checks = {
        {1, "FU closed form 2^k C_k equals partition count, n in {2..5}", 10.0,
         criterion_fu_closed_form},
        {2, "m_4(FU_2) = 8 by closed form, partition count and Gram rank", 5.0,
         criterion_three_methods},
        {3, "quantum chain FU_4 <= FO_4 <= FS_4 to order 12, strict from 2", 0.0,
         criterion_quantum_chain},
        {4, "group chain free(2) <= Z^2 <= (Z/2)^2 to order 12, strict at 4", 30.0,
         criterion_group_chain},
        {5, "norm estimates hit 2*sqrt(2), 2*sqrt(3), 4 within tolerance", 60.0,
         criterion_norm_targets},
        {6, "convolution conditions on Catalan and the FO_2 profile", 0.0,
         criterion_convolution},
        {7, "super-4 growth certificates for FO_2 and FS_4 at horizon 128", 10.0,
         criterion_minorant},
        {8, "splitting inequality for every even word to length 10, NC and NC2", 60.0,
         criterion_block_inequality},
        {9, "Gram rank collapse and the tensor oracle sweep to length 6", 0.0,
         criterion_gram_oracle},
        {10, "all banked sequences pass Hankel PSD and log-convexity", 0.0,
         criterion_hankel},
    };

    std::vector<MomentSequence> bank;
    int failures = 0;
    for (auto& check : checks) {
        const auto start = std::chrono::steady_clock::now();
        std::string message;
        try {
            message = check.run(bank);
        } catch (const std::exception& e) {
            message = std::string("exception: ") + e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        if (message.empty() && check.budget_seconds > 0 &&
            seconds > check.budget_seconds)
            message = "over the " + std::to_string(check.budget_seconds) + " s budget";
        const bool pass = message.empty();
        failures += pass ? 0 : 1;
        std::printf("%s  %2d  %s  [%.2f s]%s%s\n", pass ? "PASS" : "FAIL", check.id,
                    check.label.c_str(), seconds, pass ? "" : "  ",
                    message.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", int(checks.size()) - failures,
                checks.size());
    return failures;
}
