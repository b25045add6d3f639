#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "charmoments/bigint.hpp"
#include "charmoments/color_word.hpp"
#include "charmoments/partition.hpp"

namespace charmoments {

// The three partition classes indexing fixed-vector bases:
//   NC    all non-crossing partitions (any word length),
//   NC2   non-crossing pairings (even length only),
//   NC2C  non-crossing pairings whose every pair joins a plain letter
//         to a conjugate one.
enum class PartitionClass : unsigned char { NC, NC2, NC2C };

const char* partition_class_name(PartitionClass cls);
PartitionClass parse_partition_class(const std::string& name);

// Membership test for a partition of {1, ..., |w|} relative to the word w.
bool class_contains(const Partition& p, const ColorWord& w, PartitionClass cls);

// All partitions of the class on the word w, sorted in canonical order.
// Intended for the small sizes where listing is feasible.
std::vector<Partition> enumerate_class(const ColorWord& w, PartitionClass cls);

// Counts members of a class without listing them.  NC and NC2 counts do
// not depend on the coloring, only on the length; NC2C counts do.  Words
// up to 64 letters are supported.  Results are memoized per class.
class PartitionCounter {
public:
    BigInt count(const ColorWord& w, PartitionClass cls);

private:
    // Word packed as (bits, length); plain = 0 bit, conj = 1 bit.
    using Key = std::pair<std::uint64_t, std::uint32_t>;
    struct KeyHash {
        std::size_t operator()(const Key& k) const {
            return std::hash<std::uint64_t>{}(k.first * 0x9e3779b97f4a7c15ULL + k.second);
        }
    };
    using Memo = std::unordered_map<Key, BigInt, KeyHash>;

    BigInt count_nc(std::uint64_t bits, std::uint32_t len);
    BigInt count_pairings(std::uint64_t bits, std::uint32_t len, bool alternating);

    Memo memo_nc_;
    Memo memo_nc2_;
    Memo memo_nc2c_;
};

// One-shot convenience wrapper around PartitionCounter.
BigInt count_partitions(const ColorWord& w, PartitionClass cls);

// Decomposition count check for pairings of an even word eps: summing
// count(inner) * count(outer) over the admissible outer pairs {1, 2r}
// must reproduce count(eps), and distinct r give disjoint families.
struct BlockInequalityReport {
    ColorWord word;
    PartitionClass cls = PartitionClass::NC2C;
    BigInt lhs;  // sum over admissible splittings
    BigInt rhs;  // direct count
    bool injective = false;  // nested families pairwise disjoint (checked by listing)
    bool holds = false;      // lhs <= rhs
};

BlockInequalityReport verify_block_inequality(const ColorWord& eps, PartitionClass cls);

} // namespace charmoments
