#include "charmoments/analysis.hpp"

#include <algorithm>

#include "charmoments/errors.hpp"
#include "charmoments/exact_linalg.hpp"

namespace charmoments {

namespace {

Real50 to_real(const BigRat& v) {
    return Real50(boost::multiprecision::numerator(v)) /
           Real50(boost::multiprecision::denominator(v));
}

struct LineFit {
    Real50 intercept;
    Real50 slope;
    std::size_t points = 0;
};

// Least-squares line y = a + b x over the tail half (at least two) of the
// points produced by point(i), i = 0..count-1.
template <typename PointFn>
LineFit fit_intercept_over_tail(PointFn point, std::size_t count) {
    if (count < 2) throw InvalidInput("line fit needs at least two points");
    const std::size_t take = std::max<std::size_t>(2, (count + 1) / 2);
    const std::size_t start = count - take;

    std::vector<std::pair<Real50, Real50>> pts;
    pts.reserve(take);
    for (std::size_t i = start; i < count; ++i) pts.push_back(point(i));

    Real50 sx = 0, sy = 0;
    for (const auto& [x, y] : pts) {
        sx += x;
        sy += y;
    }
    const Real50 mean_x = sx / static_cast<int>(take);
    const Real50 mean_y = sy / static_cast<int>(take);
    Real50 sxx = 0, sxy = 0;
    for (const auto& [x, y] : pts) {
        sxx += (x - mean_x) * (x - mean_x);
        sxy += (x - mean_x) * (y - mean_y);
    }
    LineFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = mean_y - fit.slope * mean_x;
    fit.points = take;
    return fit;
}

} // namespace

ASequence to_A_sequence(const MomentSequence& m) {
    if (m.values.empty()) throw InvalidInput("empty moment sequence");
    ASequence a;
    a.model_tag = m.model_tag;
    const int count = m.max_k() / 2;
    a.values.reserve(static_cast<std::size_t>(count) + 1);
    a.integral = true;
    for (int k = 0; k <= count; ++k) {
        BigRat v(m.values[static_cast<std::size_t>(2 * k)], BigInt(1) << k);
        if (boost::multiprecision::denominator(v) != 1) a.integral = false;
        a.values.push_back(std::move(v));
    }
    return a;
}

std::vector<BigInt> catalan_table(int max_k) {
    if (max_k < 0) throw InvalidInput("table length must be >= 0");
    std::vector<BigInt> c;
    c.reserve(static_cast<std::size_t>(max_k) + 1);
    c.push_back(1);
    for (int k = 0; k < max_k; ++k) {
        BigInt next = 0;
        for (int j = 0; j <= k; ++j)
            next += c[static_cast<std::size_t>(j)] * c[static_cast<std::size_t>(k - j)];
        c.push_back(std::move(next));
    }
    return c;
}

ConvolutionReport check_convolution(const ASequence& a) {
    if (a.values.empty()) throw InvalidInput("empty normalized sequence");
    ConvolutionReport report;
    report.model_tag = a.model_tag;
    report.holds_a = a.values[0] == 1;

    report.holds_b = true;
    for (int k = 0; k + 1 <= a.max_k(); ++k) {
        BigRat conv = 0;
        for (int j = 0; j <= k; ++j)
            conv += a.values[static_cast<std::size_t>(j)] *
                    a.values[static_cast<std::size_t>(k - j)];
        const BigRat& next = a.values[static_cast<std::size_t>(k) + 1];
        if (next < conv) {
            report.holds_b = false;
            if (report.first_violation_b < 0) report.first_violation_b = k;
        } else if (next > conv && report.first_strict_b < 0) {
            report.first_strict_b = k;
        }
    }

    const std::vector<BigInt> catalan = catalan_table(a.max_k());
    for (int k = 0; k <= a.max_k(); ++k) {
        if (a.values[static_cast<std::size_t>(k)] > catalan[static_cast<std::size_t>(k)]) {
            report.holds_c = true;
            report.first_k0 = k;
            break;
        }
    }
    return report;
}

MinorantReport minorant_certificate(const ASequence& a, int horizon) {
    if (horizon < 1) throw InvalidInput("horizon must be >= 1");
    MinorantReport report;
    report.model_tag = a.model_tag;
    report.horizon = horizon;

    const ConvolutionReport conv = check_convolution(a);
    report.applicable = conv.holds_a && conv.holds_b && conv.first_strict_b >= 0;
    if (!report.applicable) return report;

    report.strict_gap = conv.first_strict_b;
    report.seed_end = conv.first_strict_b + 1;

    // B matches A through the strict step, then grows by pure convolution;
    // (b) gives B_k <= A_k for all k by induction.
    std::vector<BigRat> b;
    b.reserve(static_cast<std::size_t>(horizon) + 1);
    for (int k = 0; k <= report.seed_end; ++k)
        b.push_back(a.values[static_cast<std::size_t>(k)]);
    for (int k = report.seed_end; k < horizon; ++k) {
        BigRat next = 0;
        for (int j = 0; j <= k; ++j)
            next += b[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(k - j)];
        b.push_back(std::move(next));
    }

    // B is supermultiplicative after an index shift, so B_h > 4^{h+1}
    // pins limsup B_k^{1/k} (hence the A growth) strictly above 4.
    const BigRat bound(BigInt(1) << (2 * (horizon + 1)));
    report.certified = b[static_cast<std::size_t>(horizon)] > bound;
    report.growth_at_horizon = static_cast<double>(
        boost::multiprecision::pow(to_real(b[static_cast<std::size_t>(horizon)]),
                                   Real50(1) / horizon));
    if (horizon >= 2) {
        report.growth_extrapolated = static_cast<double>(
            fit_intercept_over_tail([&](std::size_t i) {
                const int h = static_cast<int>(i) + 1;
                return std::pair<Real50, Real50>(
                    Real50(1) / h,
                    to_real(b[static_cast<std::size_t>(h)] / b[static_cast<std::size_t>(h) - 1]));
            }, static_cast<std::size_t>(horizon)).intercept);
    } else {
        report.growth_extrapolated = report.growth_at_horizon;
    }
    return report;
}

NormEstimate estimate_norm(const MomentSequence& m) {
    NormEstimate est;
    est.model_tag = m.model_tag;

    std::vector<int> ks;
    for (int k = 1; 2 * k <= m.max_k(); ++k)
        if (m.values[static_cast<std::size_t>(2 * k)] > 0) ks.push_back(k);
    if (ks.size() < 3)
        throw InvalidInput("norm estimation needs at least three positive even moments");

    Real50 best = 0;
    for (int k : ks) {
        const Real50 value = boost::multiprecision::pow(
            Real50(m.values[static_cast<std::size_t>(2 * k)]), Real50(1) / (2 * k));
        est.root_ks.push_back(k);
        est.root_values.push_back(static_cast<double>(value));
        best = std::max(best, value);
    }
    est.lower_bound = static_cast<double>(best);

    std::vector<Real50> xs, ys;
    for (std::size_t i = 0; i + 1 < ks.size(); ++i) {
        if (ks[i + 1] != ks[i] + 1) continue;  // keep only consecutive pairs
        const int k = ks[i];
        const Real50 ratio = boost::multiprecision::sqrt(
            Real50(m.values[static_cast<std::size_t>(2 * k + 2)]) /
            Real50(m.values[static_cast<std::size_t>(2 * k)]));
        est.ratio_ks.push_back(k);
        est.ratio_values.push_back(static_cast<double>(ratio));
        xs.push_back(Real50(1) / k);
        ys.push_back(ratio);
    }
    if (xs.size() < 2)
        throw InvalidInput("norm estimation needs at least two consecutive moment ratios");

    // Fit ratio(k) ~ a + b/k over the tail half of the ratio points; the
    // intercept a extrapolates k -> infinity.
    const LineFit fit = fit_intercept_over_tail(
        [&](std::size_t i) { return std::pair<Real50, Real50>(xs[i], ys[i]); }, xs.size());
    est.fit_slope = static_cast<double>(fit.slope);
    est.fit_intercept = static_cast<double>(fit.intercept);
    est.fit_points = static_cast<int>(fit.points);
    est.extrapolated = est.fit_intercept;
    return est;
}

HankelReport check_hankel(const MomentSequence& m) {
    if (m.values.empty()) throw InvalidInput("empty moment sequence");
    HankelReport report;
    report.model_tag = m.model_tag;

    const int j_max = m.max_k() / 2;
    report.order = static_cast<std::size_t>(j_max) + 1;
    std::vector<std::vector<BigRat>> hankel(report.order,
                                            std::vector<BigRat>(report.order));
    for (int a = 0; a <= j_max; ++a)
        for (int b = 0; b <= j_max; ++b)
            hankel[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                BigRat(m.values[static_cast<std::size_t>(a + b)]);
    report.psd_ok = is_positive_semidefinite(hankel).psd;

    report.logconvex_ok = true;
    for (int k = 1; 2 * k + 2 <= m.max_k(); ++k) {
        const BigInt& lo = m.values[static_cast<std::size_t>(2 * k - 2)];
        const BigInt& mid = m.values[static_cast<std::size_t>(2 * k)];
        const BigInt& hi = m.values[static_cast<std::size_t>(2 * k + 2)];
        if (mid * mid > lo * hi) {
            report.logconvex_ok = false;
            report.first_logconvex_violation = k;
            break;
        }
    }
    return report;
}

} // namespace charmoments
