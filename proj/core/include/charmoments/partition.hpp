#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "charmoments/errors.hpp"

namespace charmoments {

// A set partition of {1, ..., n}, stored in canonical form: within each
// block the points are increasing, and blocks are ordered by their least
// element.  The empty partition (of the empty set) is allowed.
class Partition {
public:
    Partition() = default;

    // Builds the canonical form; throws InvalidInput if the blocks do not
    // partition {1, ..., ground_size} exactly.
    Partition(std::size_t ground_size, std::vector<std::vector<int>> blocks);

    // Partition into singletons {1}, ..., {n}.
    static Partition singletons(std::size_t ground_size);

    std::size_t ground_size() const { return ground_size_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    std::size_t block_count() const { return blocks_.size(); }

    // Index of the block containing point p (1-based point).
    int block_of(int p) const { return block_index_[p - 1]; }

    // True when every block of *this is contained in a block of other.
    bool refines(const Partition& other) const;

    auto operator<=>(const Partition& rhs) const {
        return blocks_ <=> rhs.blocks_;
    }
    bool operator==(const Partition& rhs) const { return blocks_ == rhs.blocks_; }

private:
    std::size_t ground_size_ = 0;
    std::vector<std::vector<int>> blocks_;
    std::vector<int> block_index_;
};

// True when no two blocks cross, i.e. there are no points
// a < b < c < d with {a, c} in one block and {b, d} in another.
bool is_noncrossing(const Partition& p);

// Least common coarsening of two partitions of the same ground set.
Partition join(const Partition& a, const Partition& b);

// Partition of {1, ..., n+m} acting as a on the first n points and as a
// shifted copy of b on the last m.
Partition juxtapose(const Partition& a, const Partition& b);

// Partition of {1, ..., 2k+2} consisting of the pair {1, 2r}, a copy of
// inner placed on positions 2..2r-1, and a copy of outer placed on
// positions 2r+1..2k+2.  Requires inner.ground_size() == 2r-2 and
// inner.ground_size() + outer.ground_size() == 2k.
Partition nest(int r, const Partition& inner, const Partition& outer);

} // namespace charmoments
