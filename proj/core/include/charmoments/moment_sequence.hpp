#pragma once

#include <string>
#include <vector>

#include "charmoments/bigint.hpp"

namespace charmoments {

// Moments m_0, ..., m_K of a distribution, exact.  model_tag names the
// source ("FU_2", "free:2", ...) for reports and serialization.
struct MomentSequence {
    std::string model_tag;
    std::vector<BigInt> values;  // values[k] == m_k

    int max_k() const { return static_cast<int>(values.size()) - 1; }
};

} // namespace charmoments
