#include "charmoments/partition.hpp"

#include <algorithm>
#include <numeric>

namespace charmoments {

Partition::Partition(std::size_t ground_size, std::vector<std::vector<int>> blocks)
    : ground_size_(ground_size), blocks_(std::move(blocks)) {
    std::size_t total = 0;
    for (auto& block : blocks_) {
        if (block.empty()) throw InvalidInput("partition block may not be empty");
        std::sort(block.begin(), block.end());
        total += block.size();
    }
    std::sort(blocks_.begin(), blocks_.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });

    block_index_.assign(ground_size_, -1);
    if (total != ground_size_)
        throw InvalidInput("partition blocks do not cover the ground set");
    for (std::size_t bi = 0; bi < blocks_.size(); ++bi) {
        for (int p : blocks_[bi]) {
            if (p < 1 || static_cast<std::size_t>(p) > ground_size_)
                throw InvalidInput("partition point out of range");
            if (block_index_[static_cast<std::size_t>(p) - 1] != -1)
                throw InvalidInput("partition point repeated");
            block_index_[static_cast<std::size_t>(p) - 1] = static_cast<int>(bi);
        }
    }
}

Partition Partition::singletons(std::size_t ground_size) {
    std::vector<std::vector<int>> blocks;
    blocks.reserve(ground_size);
    for (std::size_t p = 1; p <= ground_size; ++p)
        blocks.push_back({static_cast<int>(p)});
    return Partition(ground_size, std::move(blocks));
}

bool Partition::refines(const Partition& other) const {
    if (ground_size_ != other.ground_size_)
        throw InvalidInput("refines requires equal ground sets");
    for (const auto& block : blocks_) {
        const int target = other.block_of(block.front());
        for (int p : block)
            if (other.block_of(p) != target) return false;
    }
    return true;
}

bool is_noncrossing(const Partition& p) {
    // Scan positions left to right with a stack of open blocks; a block
    // interleaving a still-open different block is a crossing.
    const std::size_t n = p.ground_size();
    std::vector<int> remaining(p.block_count());
    for (std::size_t bi = 0; bi < p.block_count(); ++bi)
        remaining[bi] = static_cast<int>(p.blocks()[bi].size());

    std::vector<int> stack;
    for (std::size_t pos = 1; pos <= n; ++pos) {
        const int bi = p.block_of(static_cast<int>(pos));
        if (stack.empty() || stack.back() != bi) {
            if (std::find(stack.begin(), stack.end(), bi) != stack.end())
                return false;  // reopened below other open blocks
            stack.push_back(bi);
        }
        if (--remaining[static_cast<std::size_t>(bi)] == 0) {
            if (stack.back() != bi) return false;
            stack.pop_back();
        }
    }
    return true;
}

Partition join(const Partition& a, const Partition& b) {
    if (a.ground_size() != b.ground_size())
        throw InvalidInput("join requires equal ground sets");
    const std::size_t n = a.ground_size();

    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    auto unite = [&](int x, int y) { parent[static_cast<std::size_t>(find(x))] = find(y); };

    for (const Partition* part : {&a, &b})
        for (const auto& block : part->blocks())
            for (std::size_t i = 1; i < block.size(); ++i)
                unite(block[0] - 1, block[i] - 1);

    std::vector<std::vector<int>> by_root(n);
    for (std::size_t p = 0; p < n; ++p)
        by_root[static_cast<std::size_t>(find(static_cast<int>(p)))].push_back(
            static_cast<int>(p) + 1);
    std::vector<std::vector<int>> blocks;
    for (auto& bucket : by_root)
        if (!bucket.empty()) blocks.push_back(std::move(bucket));
    return Partition(n, std::move(blocks));
}

Partition juxtapose(const Partition& a, const Partition& b) {
    const int shift = static_cast<int>(a.ground_size());
    std::vector<std::vector<int>> blocks = a.blocks();
    for (const auto& block : b.blocks()) {
        std::vector<int> shifted;
        shifted.reserve(block.size());
        for (int p : block) shifted.push_back(p + shift);
        blocks.push_back(std::move(shifted));
    }
    return Partition(a.ground_size() + b.ground_size(), std::move(blocks));
}

Partition nest(int r, const Partition& inner, const Partition& outer) {
    if (r < 1) throw InvalidInput("nest position must be >= 1");
    if (inner.ground_size() != static_cast<std::size_t>(2 * r - 2))
        throw InvalidInput("nest: inner partition has wrong size");
    const std::size_t n = 2 + inner.ground_size() + outer.ground_size();

    std::vector<std::vector<int>> blocks;
    blocks.push_back({1, 2 * r});
    for (const auto& block : inner.blocks()) {
        std::vector<int> shifted;
        shifted.reserve(block.size());
        for (int p : block) shifted.push_back(p + 1);
        blocks.push_back(std::move(shifted));
    }
    for (const auto& block : outer.blocks()) {
        std::vector<int> shifted;
        shifted.reserve(block.size());
        for (int p : block) shifted.push_back(p + 2 * r);
        blocks.push_back(std::move(shifted));
    }
    return Partition(n, std::move(blocks));
}

} // namespace charmoments
