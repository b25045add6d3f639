#include "charmoments/partition_count.hpp"

#include <algorithm>

namespace charmoments {

namespace {

std::uint64_t low_mask(std::uint32_t bits) {
    return bits >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << bits) - 1);
}

std::uint64_t pack_word(const ColorWord& w) {
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] == Color::conj) bits |= std::uint64_t{1} << i;
    return bits;
}

// Non-crossing pairings of the contiguous position range [lo, hi] of w,
// color-alternating when requested.  Pairs are (smaller, larger), 1-based.
void enumerate_pairings(const ColorWord& w, int lo, int hi, bool alternating,
                        std::vector<std::vector<std::pair<int, int>>>& out) {
    if (lo > hi) {
        out.push_back({});
        return;
    }
    if ((hi - lo + 1) % 2 != 0) return;
    for (int b = lo + 1; b <= hi; b += 2) {
        if (alternating &&
            w[static_cast<std::size_t>(lo - 1)] == w[static_cast<std::size_t>(b - 1)])
            continue;
        std::vector<std::vector<std::pair<int, int>>> inner, outer;
        enumerate_pairings(w, lo + 1, b - 1, alternating, inner);
        if (inner.empty()) continue;
        enumerate_pairings(w, b + 1, hi, alternating, outer);
        for (const auto& pi : inner)
            for (const auto& po : outer) {
                std::vector<std::pair<int, int>> pairs;
                pairs.reserve(1 + pi.size() + po.size());
                pairs.emplace_back(lo, b);
                pairs.insert(pairs.end(), pi.begin(), pi.end());
                pairs.insert(pairs.end(), po.begin(), po.end());
                out.push_back(std::move(pairs));
            }
    }
}

// Direct generation of all non-crossing partitions of {1, ..., len},
// mirroring the counting recursion: point 1 is a singleton, or its
// second-smallest block point is j, splitting off the open interval
// (1, j) and gluing 1 onto the block of j in the suffix.  Lengths are
// built once and reused via shifting.
class NcLister {
public:
    using Blocks = std::vector<std::vector<int>>;

    const std::vector<Blocks>& all(int len) {
        while (static_cast<int>(memo_.size()) <= len) build_next();
        return memo_[static_cast<std::size_t>(len)];
    }

private:
    static Blocks shifted(const Blocks& p, int offset) {
        Blocks out = p;
        for (auto& block : out)
            for (int& v : block) v += offset;
        return out;
    }

    void build_next() {
        const int len = static_cast<int>(memo_.size());
        std::vector<Blocks> result;
        if (len == 0) {
            result.push_back({});
            memo_.push_back(std::move(result));
            return;
        }
        for (const auto& p : memo_[static_cast<std::size_t>(len) - 1]) {
            Blocks blocks = shifted(p, 1);
            blocks.push_back({1});
            result.push_back(std::move(blocks));
        }
        for (int j = 2; j <= len; ++j) {
            for (const auto& po : memo_[static_cast<std::size_t>(len - j + 1)]) {
                for (const auto& pi : memo_[static_cast<std::size_t>(j - 2)]) {
                    Blocks blocks = shifted(po, j - 1);
                    for (auto& block : blocks)
                        if (block.front() == j) {
                            block.insert(block.begin(), 1);
                            break;
                        }
                    for (const auto& inner_block : pi) {
                        std::vector<int> copy = inner_block;
                        for (int& v : copy) v += 1;
                        blocks.push_back(std::move(copy));
                    }
                    result.push_back(std::move(blocks));
                }
            }
        }
        memo_.push_back(std::move(result));
    }

    std::vector<std::vector<Blocks>> memo_;
};

} // namespace

const char* partition_class_name(PartitionClass cls) {
    switch (cls) {
    case PartitionClass::NC: return "NC";
    case PartitionClass::NC2: return "NC2";
    case PartitionClass::NC2C: return "NC2C";
    }
    throw InvalidInput("unknown partition class");
}

PartitionClass parse_partition_class(const std::string& name) {
    std::string upper = name;
    for (char& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (upper == "NC") return PartitionClass::NC;
    if (upper == "NC2") return PartitionClass::NC2;
    if (upper == "NC2C") return PartitionClass::NC2C;
    throw InvalidInput("unknown partition class '" + name + "'");
}

bool class_contains(const Partition& p, const ColorWord& w, PartitionClass cls) {
    if (p.ground_size() != w.size())
        throw InvalidInput("partition and word sizes differ");
    if (!is_noncrossing(p)) return false;
    if (cls == PartitionClass::NC) return true;
    for (const auto& block : p.blocks()) {
        if (block.size() != 2) return false;
        if (cls == PartitionClass::NC2C &&
            w[static_cast<std::size_t>(block[0] - 1)] ==
                w[static_cast<std::size_t>(block[1] - 1)])
            return false;
    }
    return true;
}

std::vector<Partition> enumerate_class(const ColorWord& w, PartitionClass cls) {
    std::vector<Partition> out;
    const int n = static_cast<int>(w.size());
    if (cls == PartitionClass::NC) {
        NcLister lister;
        for (const auto& blocks : lister.all(n))
            out.push_back(Partition(static_cast<std::size_t>(n), blocks));
    } else {
        std::vector<std::vector<std::pair<int, int>>> pairings;
        enumerate_pairings(w, 1, n, cls == PartitionClass::NC2C, pairings);
        out.reserve(pairings.size());
        for (const auto& pairing : pairings) {
            std::vector<std::vector<int>> blocks;
            blocks.reserve(pairing.size());
            for (auto [a, b] : pairing) blocks.push_back({a, b});
            out.push_back(Partition(static_cast<std::size_t>(n), std::move(blocks)));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

BigInt PartitionCounter::count(const ColorWord& w, PartitionClass cls) {
    if (w.size() > 64)
        throw ResourceError("partition counting supports words up to 64 letters",
                            64);
    const auto len = static_cast<std::uint32_t>(w.size());
    switch (cls) {
    case PartitionClass::NC:
        return count_nc(0, len);  // color-independent
    case PartitionClass::NC2:
        return count_pairings(0, len, false);  // color-independent
    case PartitionClass::NC2C:
        return count_pairings(pack_word(w), len, true);
    }
    throw InvalidInput("unknown partition class");
}

BigInt PartitionCounter::count_nc(std::uint64_t bits, std::uint32_t len) {
    if (len <= 1) return 1;
    const Key key{bits, len};
    if (auto it = memo_nc_.find(key); it != memo_nc_.end()) return it->second;

    // Condition on the block of point 1: either a singleton, or its next
    // point is j, splitting off the open interval (1, j) and gluing the
    // rest of the block onto the suffix from j on.
    BigInt total = count_nc(bits, len - 1);
    for (std::uint32_t j = 2; j <= len; ++j)
        total += count_nc(bits, j - 2) * count_nc(bits, len - j + 1);
    memo_nc_.emplace(key, total);
    return total;
}

BigInt PartitionCounter::count_pairings(std::uint64_t bits, std::uint32_t len,
                                        bool alternating) {
    if (len == 0) return 1;
    if (len % 2 != 0) return 0;
    Memo& memo = alternating ? memo_nc2c_ : memo_nc2_;
    const Key key{bits, len};
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    // Point 1 pairs with an even point j; the inside and outside of the
    // pair then pair off independently.
    BigInt total = 0;
    const bool first_conj = (bits & 1) != 0;
    for (std::uint32_t j = 2; j <= len; j += 2) {
        if (alternating && (((bits >> (j - 1)) & 1) != 0) == first_conj) continue;
        const std::uint64_t inner = (bits >> 1) & low_mask(j - 2);
        const std::uint64_t outer = j >= 64 ? 0 : (bits >> j);
        total += count_pairings(inner, j - 2, alternating) *
                 count_pairings(outer, len - j, alternating);
    }
    memo.emplace(key, total);
    return total;
}

BigInt count_partitions(const ColorWord& w, PartitionClass cls) {
    PartitionCounter counter;
    return counter.count(w, cls);
}

BlockInequalityReport verify_block_inequality(const ColorWord& eps, PartitionClass cls) {
    if (eps.size() < 2 || eps.size() % 2 != 0)
        throw InvalidInput("block inequality needs a word of even positive length");

    BlockInequalityReport report;
    report.word = eps;
    report.cls = cls;

    PartitionCounter counter;
    report.rhs = counter.count(eps, cls);

    const int k = static_cast<int>(eps.size()) / 2 - 1;
    std::vector<int> positions;
    if (cls == PartitionClass::NC2C) {
        positions = admissible_positions(eps);
    } else {
        for (int r = 1; r <= k + 1; ++r) positions.push_back(r);
    }

    report.lhs = 0;
    for (int r : positions) {
        const auto [inner, outer] = decompose_at(eps, r);
        report.lhs += counter.count(inner, cls) * counter.count(outer, cls);
    }
    report.holds = report.lhs <= report.rhs;

    // Injectivity of (r, inner, outer) -> nested partition, verified by
    // listing every nested partition and checking for collisions and
    // class membership.
    if (report.rhs > 250000)
        throw ResourceError("block inequality listing too large", k);
    std::vector<Partition> nested;
    for (int r : positions) {
        const auto [inner, outer] = decompose_at(eps, r);
        for (const auto& pi : enumerate_class(inner, cls))
            for (const auto& po : enumerate_class(outer, cls))
                nested.push_back(nest(r, pi, po));
    }
    report.injective = BigInt(nested.size()) == report.lhs;
    for (const auto& p : nested)
        if (!class_contains(p, eps, cls)) report.injective = false;
    std::sort(nested.begin(), nested.end());
    if (std::adjacent_find(nested.begin(), nested.end()) != nested.end())
        report.injective = false;
    return report;
}

} // namespace charmoments
