#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "charmoments/bigint.hpp"
#include "charmoments/moment_sequence.hpp"

namespace charmoments {

using Real50 = boost::multiprecision::cpp_bin_float_50;

// Normalized even moments A_k = m_2k / 2^k, exact rationals.
struct ASequence {
    std::string model_tag;
    std::vector<BigRat> values;  // values[k] == A_k
    bool integral = false;       // every A_k an integer

    int max_k() const { return static_cast<int>(values.size()) - 1; }
};

ASequence to_A_sequence(const MomentSequence& m);

// Catalan numbers C_0..C_K computed by the convolution recurrence
// C_{k+1} = sum_j C_j C_{k-j}.
std::vector<BigInt> catalan_table(int max_k);

// Tests of the three conditions on a normalized sequence:
//   (a) A_0 = 1,
//   (b) A_{k+1} >= sum_{j=0}^{k} A_j A_{k-j} for all k,
//   (c) A_{k0} > C_{k0} for some k0.
struct ConvolutionReport {
    std::string model_tag;
    bool holds_a = false;
    bool holds_b = false;
    int first_violation_b = -1;  // smallest k failing (b), -1 if none
    int first_strict_b = -1;     // smallest k where (b) is strict, -1 if none
    bool holds_c = false;
    int first_k0 = -1;           // smallest k0 witnessing (c), -1 if none
};

ConvolutionReport check_convolution(const ASequence& a);

// Super-Catalan growth certificate.  Seeds B_0..B_{s+1} = A_0..A_{s+1}
// where s is the first strict index of (b), then grows B by exact
// convolution: B_{k+1} = sum B_j B_{k-j}.  By induction B_k <= A_k, so
// B_h > 4^{h+1} certifies limsup A_k^{1/k} > 4.
struct MinorantReport {
    std::string model_tag;
    bool applicable = false;   // (a), (b) hold and a strict index exists
    int strict_gap = -1;       // the strict index s used for seeding
    int seed_end = -1;         // B agrees with A through this index
    int horizon = 0;           // h: index of the certifying term
    bool certified = false;    // exact comparison B_h > 4^{h+1}
    double growth_at_horizon = 0.0;    // B_h^{1/h}
    double growth_extrapolated = 0.0;  // a + b/h fit of B_h/B_{h-1}, tail half
};

MinorantReport minorant_certificate(const ASequence& a, int horizon = 128);

// Numerical operator-norm estimates from even moments: the roots
// m_{2k}^{1/2k} are certified lower bounds; the consecutive ratios
// sqrt(m_{2k+2} / m_{2k}) converge faster and are extrapolated by a
// least-squares fit of a + b/k over the tail half of the ratio points.
struct NormEstimate {
    std::string model_tag;
    std::vector<int> root_ks;
    std::vector<double> root_values;
    std::vector<int> ratio_ks;          // ratio at k uses m_{2k+2} / m_{2k}
    std::vector<double> ratio_values;
    double lower_bound = 0.0;           // max of the root values
    double extrapolated = 0.0;          // fit intercept (k -> infinity)
    double fit_intercept = 0.0;
    double fit_slope = 0.0;
    int fit_points = 0;
};

// Requires at least three positive even moments beyond m_0.
NormEstimate estimate_norm(const MomentSequence& m);

// Positivity checks: the Hankel matrix [m_{a+b}] for a, b <= floor(K/2)
// must be PSD for any moment sequence, and the even subsequence must be
// log-convex.
struct HankelReport {
    std::string model_tag;
    std::size_t order = 0;  // Hankel matrix size
    bool psd_ok = false;
    bool logconvex_ok = false;
    int first_logconvex_violation = -1;  // k with m_2k^2 > m_{2k-2} m_{2k+2}
};

HankelReport check_hankel(const MomentSequence& m);

} // namespace charmoments
