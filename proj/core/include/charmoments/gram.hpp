#pragma once

#include <cstddef>
#include <vector>

#include "charmoments/bigint.hpp"
#include "charmoments/color_word.hpp"
#include "charmoments/exact_linalg.hpp"
#include "charmoments/partition.hpp"
#include "charmoments/partition_count.hpp"

namespace charmoments {

// Gram matrix of the vectors indexed by a partition class on a word,
// with respect to the dimension-n inner product
//   <xi_p, xi_q> = n^{#blocks(join(p, q))}.
struct GramMatrix {
    ColorWord word;
    PartitionClass cls = PartitionClass::NC2C;
    unsigned dimension_n = 0;
    std::vector<Partition> labels;  // canonical enumeration order
    Matrix entries;
};

// Enumerates the class and fills the matrix; refuses (ResourceError) when
// the class has more than max_dim members.
GramMatrix gram_matrix(const ColorWord& w, PartitionClass cls, unsigned n,
                       std::size_t max_dim = 2048);

std::size_t rank_exact(const GramMatrix& g);

// Smallest n at which the class vectors are linearly independent for
// every word: 2 for pairings, 4 for all non-crossing partitions.
unsigned basis_threshold(PartitionClass cls);

// How to compute the dimension of the space spanned by the class vectors.
enum class DimMethod : unsigned char {
    count,  // number of labels; valid only at or above the basis threshold
    rank,   // exact Gram rank; valid for every n >= 1
};

// Dimension of span{xi_p : p in class(w)} inside the n-dimensional model.
// DimMethod::count below basis_threshold(cls) raises RegimeError.
BigInt dim_fixed_space(const ColorWord& w, PartitionClass cls, unsigned n, DimMethod method);

} // namespace charmoments
