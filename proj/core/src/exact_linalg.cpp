#include "charmoments/exact_linalg.hpp"

#include <stdexcept>
#include <utility>

#include "charmoments/errors.hpp"

namespace charmoments {

namespace {

void check_rectangular(const Matrix& m) {
    for (const auto& row : m)
        if (row.size() != m.front().size())
            throw InvalidInput("matrix rows have unequal lengths");
}

// Divides exactly, verifying that no remainder is lost.  The fraction-free
// elimination below only ever divides entries that are genuine minors of
// the input, so a nonzero remainder means a programming error.
BigInt exact_div(const BigInt& num, const BigInt& den) {
    BigInt q, r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (r != 0) throw std::logic_error("fraction-free elimination lost a remainder");
    return q;
}

} // namespace

std::size_t rank_exact(const Matrix& m) {
    if (m.empty() || m.front().empty()) return 0;
    check_rectangular(m);
    Matrix a = m;
    const std::size_t rows = a.size();
    const std::size_t cols = a.front().size();

    BigInt prev = 1;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        std::size_t sel = pivot_row;
        while (sel < rows && a[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(a[pivot_row], a[sel]);

        for (std::size_t i = pivot_row + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j)
                a[i][j] = exact_div(a[pivot_row][col] * a[i][j] - a[i][col] * a[pivot_row][j],
                                    prev);
            a[i][col] = 0;
        }
        prev = a[pivot_row][col];
        ++pivot_row;
    }
    return pivot_row;
}

BigInt determinant(const Matrix& m) {
    if (m.empty()) return 1;
    check_rectangular(m);
    if (m.size() != m.front().size())
        throw InvalidInput("determinant needs a square matrix");
    Matrix a = m;
    const std::size_t n = a.size();

    BigInt prev = 1;
    int sign = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && a[sel][col] == 0) ++sel;
        if (sel == n) return 0;
        if (sel != col) {
            std::swap(a[col], a[sel]);
            sign = -sign;
        }
        for (std::size_t i = col + 1; i < n; ++i) {
            for (std::size_t j = col + 1; j < n; ++j)
                a[i][j] = exact_div(a[col][col] * a[i][j] - a[i][col] * a[col][j], prev);
            a[i][col] = 0;
        }
        prev = a[col][col];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

std::vector<BigInt> leading_principal_minors(const Matrix& m) {
    check_rectangular(m);
    if (m.empty() || m.size() != m.front().size())
        throw InvalidInput("principal minors need a nonempty square matrix");
    std::vector<BigInt> minors;
    minors.reserve(m.size());
    for (std::size_t k = 1; k <= m.size(); ++k) {
        Matrix sub(k, std::vector<BigInt>(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[i][j];
        minors.push_back(determinant(sub));
    }
    return minors;
}

PsdReport is_positive_semidefinite(const std::vector<std::vector<BigRat>>& m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw InvalidInput("PSD test needs a square matrix");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (m[i][j] != m[j][i]) throw InvalidInput("PSD test needs a symmetric matrix");

    auto a = m;
    std::vector<std::size_t> active(n);
    for (std::size_t i = 0; i < n; ++i) active[i] = i;

    PsdReport report;
    while (!active.empty()) {
        std::size_t pivot_pos = active.size();
        for (std::size_t pos = 0; pos < active.size(); ++pos) {
            const BigRat& d = a[active[pos]][active[pos]];
            if (d < 0) {
                report.witness_index = active[pos];
                return report;  // negative direction along a coordinate
            }
            if (d > 0 && pivot_pos == active.size()) pivot_pos = pos;
        }
        if (pivot_pos == active.size()) {
            // Zero diagonal throughout: PSD iff the remaining block vanishes
            // (a nonzero off-diagonal entry with zero diagonal gives an
            // indefinite 2x2 block).
            for (std::size_t pi : active)
                for (std::size_t pj : active)
                    if (a[pi][pj] != 0) {
                        report.witness_index = pi;
                        return report;
                    }
            report.psd = true;
            return report;
        }

        const std::size_t p = active[pivot_pos];
        const BigRat d = a[p][p];
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(pivot_pos));
        for (std::size_t pi : active)
            for (std::size_t pj : active)
                a[pi][pj] -= a[pi][p] * a[p][pj] / d;
        ++report.rank;
    }
    report.psd = true;
    return report;
}

} // namespace charmoments
