#include "charmoments/bigint.hpp"

#include <stdexcept>

namespace charmoments {

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (unsigned i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;  // exact: result is C(n-k+i, i) here
    }
    return result;
}

BigInt catalan_number(unsigned k) {
    return binomial(2 * k, k) / (k + 1);
}

} // namespace charmoments
