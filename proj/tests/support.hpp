#pragma once

// Brute-force helpers shared by the test programs. Nothing here calls the
// library's own algorithms, so they serve as independent oracles.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qmsets/attribute.hpp"
#include "qmsets/partition.hpp"
#include "qmsets/universe.hpp"

namespace testing {

using qmsets::Mask;

inline qmsets::Universe letters(std::size_t n, const std::string& name = "U") {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.emplace_back(1, static_cast<char>('a' + i));
    return qmsets::Universe(name, labels);
}

/// Element i -> block id, for a partition given as a list of blocks.
using Labeling = std::vector<int>;

/// All set partitions of {0..n-1} built by inserting each element into an
/// existing block or a fresh one. Returned as block lists.
inline std::vector<std::vector<Mask>> all_partitions(std::size_t n) {
    std::vector<std::vector<Mask>> out;
    std::vector<Mask> blocks;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == n) {
            out.push_back(blocks);
            return;
        }
        for (std::size_t k = 0; k < blocks.size(); ++k) {
            blocks[k] |= Mask{1} << i;
            rec(i + 1);
            blocks[k] &= ~(Mask{1} << i);
        }
        blocks.push_back(Mask{1} << i);
        rec(i + 1);
        blocks.pop_back();
    };
    rec(0);
    return out;
}

inline int block_id(const std::vector<Mask>& blocks, std::size_t i) {
    for (std::size_t k = 0; k < blocks.size(); ++k) {
        if ((blocks[k] >> i) & 1U) return static_cast<int>(k);
    }
    return -1;
}

/// Distinction pairs straight from the definition.
inline std::set<std::pair<std::size_t, std::size_t>> dit_pairs(const std::vector<Mask>& blocks, std::size_t n) {
    std::set<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (block_id(blocks, i) != block_id(blocks, j)) out.emplace(i, j);
        }
    }
    return out;
}

/// The join by pairing block labels: i ~ j iff they agree in both partitions.
inline std::set<Mask> join_blocks(const std::vector<Mask>& p, const std::vector<Mask>& q, std::size_t n) {
    std::set<Mask> out;
    for (std::size_t i = 0; i < n; ++i) {
        Mask b = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (block_id(p, i) == block_id(p, j) && block_id(q, i) == block_id(q, j)) b |= Mask{1} << j;
        }
        out.insert(b);
    }
    return out;
}

inline std::set<Mask> as_set(const std::vector<Mask>& blocks) { return {blocks.begin(), blocks.end()}; }

/// All value vectors on n elements using values 0..k-1 (every function U -> {0..k-1}).
inline std::vector<std::vector<int>> all_functions(std::size_t n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> v(n, 0);
    while (true) {
        out.push_back(v);
        std::size_t i = 0;
        while (i < n && ++v[i] == k) v[i++] = 0;
        if (i == n) break;
    }
    return out;
}

inline qmsets::Attribute attribute_of(const std::string& name, const qmsets::Universe& u, const std::vector<int>& vals) {
    std::vector<qmsets::Value> values;
    for (int x : vals) values.emplace_back(static_cast<long long>(x));
    return qmsets::Attribute(name, u, std::move(values));
}

/// Union-find over element indices.
class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }
    std::set<Mask> classes() {
        std::vector<Mask> by_root(parent_.size(), 0);
        for (std::size_t i = 0; i < parent_.size(); ++i) by_root[find(i)] |= Mask{1} << i;
        std::set<Mask> out;
        for (Mask m : by_root) {
            if (m) out.insert(m);
        }
        return out;
    }

private:
    std::vector<std::size_t> parent_;
};

inline int popcount(Mask m) { return __builtin_popcountll(m); }

}  // namespace testing
