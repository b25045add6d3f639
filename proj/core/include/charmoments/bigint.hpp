#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace charmoments {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// C(n, k), exact.
BigInt binomial(unsigned n, unsigned k);

// k-th Catalan number C_k = C(2k, k) / (k + 1), exact.
BigInt catalan_number(unsigned k);

} // namespace charmoments
