#include "qmsets/partition.hpp"

#include <algorithm>
#include <bit>

#include "qmsets/error.hpp"

namespace qmsets {

namespace {

void canonicalize(std::vector<Mask>& blocks) {
    std::sort(blocks.begin(), blocks.end(),
              [](Mask a, Mask b) { return std::countr_zero(a) < std::countr_zero(b); });
}

void require_same_universe(const Universe& a, const Universe& b, const char* op) {
    if (!(a == b)) {
        throw CompatibilityError(std::string(op) + ": partitions on different universes '" +
                                 a.name() + "' and '" + b.name() + "' are not compatible");
    }
}

}  // namespace

std::string validate_blocks(const Universe& universe, const std::vector<Mask>& blocks) {
    Mask seen = 0;
    for (Mask b : blocks) {
        if (b == 0) return "empty block";
        if (b & ~universe.all()) return "block contains elements outside the universe";
        if (b & seen) return "blocks overlap on " + universe.format(b & seen);
        seen |= b;
    }
    if (seen != universe.all()) return "blocks do not cover " + universe.format(universe.all() & ~seen);
    return {};
}

SetPartition::SetPartition(Universe universe, std::vector<Mask> blocks)
    : universe_(std::move(universe)), blocks_(std::move(blocks)) {
    if (auto why = validate_blocks(universe_, blocks_); !why.empty()) {
        throw InvalidArgument("invalid partition of '" + universe_.name() + "': " + why);
    }
    canonicalize(blocks_);
}

std::size_t SetPartition::block_of(std::size_t element) const {
    const Mask bit = Mask{1} << element;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (blocks_[i] & bit) return i;
    }
    throw InvalidArgument("element index out of range");
}

DitSet::DitSet(Universe universe, std::vector<Mask> rows)
    : universe_(std::move(universe)), rows_(std::move(rows)) {
    if (rows_.size() != universe_.size()) throw InvalidArgument("dit-set row count mismatch");
    for (Mask& r : rows_) r &= universe_.all();
}

std::size_t DitSet::size() const noexcept {
    std::size_t n = 0;
    for (Mask r : rows_) n += static_cast<std::size_t>(cardinality(r));
    return n;
}

std::vector<std::pair<std::size_t, std::size_t>> DitSet::pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        for (auto j : bit_indices(rows_[i])) out.emplace_back(i, j);
    }
    return out;
}

bool DitSet::is_subset_of(const DitSet& other) const {
    require_same_universe(universe_, other.universe_, "dit inclusion");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i] & ~other.rows_[i]) return false;
    }
    return true;
}

DitSet DitSet::unite(const DitSet& other) const {
    require_same_universe(universe_, other.universe_, "dit union");
    std::vector<Mask> rows(rows_.size());
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = rows_[i] | other.rows_[i];
    return DitSet(universe_, std::move(rows));
}

bool DitSet::is_irreflexive() const noexcept {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if ((rows_[i] >> i) & 1U) return false;
    }
    return true;
}

bool DitSet::is_symmetric() const noexcept {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        for (auto j : bit_indices(rows_[i])) {
            if (!((rows_[j] >> i) & 1U)) return false;
        }
    }
    return true;
}

bool DitSet::complement_is_equivalence() const noexcept {
    const std::size_t n = rows_.size();
    const Mask all = universe_.all();
    std::vector<Mask> eq(n);
    for (std::size_t i = 0; i < n; ++i) eq[i] = ~rows_[i] & all;
    for (std::size_t i = 0; i < n; ++i) {
        if (!((eq[i] >> i) & 1U)) return false;
        for (auto j : bit_indices(eq[i])) {
            if (!((eq[j] >> i) & 1U)) return false;
            // i~j and j~k must give i~k.
            if (eq[j] & ~eq[i]) return false;
        }
    }
    return true;
}

SetPartition indiscrete(const Universe& universe) {
    return SetPartition(universe, {universe.all()});
}

SetPartition discrete(const Universe& universe) {
    std::vector<Mask> blocks;
    for (std::size_t i = 0; i < universe.size(); ++i) blocks.push_back(Mask{1} << i);
    return SetPartition(universe, std::move(blocks));
}

SetPartition join(const SetPartition& p, const SetPartition& q) {
    require_same_universe(p.universe(), q.universe(), "join");
    std::vector<Mask> blocks;
    for (Mask b : p.blocks()) {
        for (Mask c : q.blocks()) {
            if (Mask x = b & c) blocks.push_back(x);
        }
    }
    return SetPartition(p.universe(), std::move(blocks));
}

SetPartition meet(const SetPartition& p, const SetPartition& q) {
    require_same_universe(p.universe(), q.universe(), "meet");
    std::vector<Mask> blocks = p.blocks();
    for (Mask c : q.blocks()) {
        Mask merged = 0;
        std::vector<Mask> rest;
        for (Mask b : blocks) {
            if (b & c) {
                merged |= b;
            } else {
                rest.push_back(b);
            }
        }
        rest.push_back(merged);
        blocks = std::move(rest);
    }
    return SetPartition(p.universe(), std::move(blocks));
}

DitSet dit(const SetPartition& p) {
    const auto& u = p.universe();
    std::vector<Mask> rows(u.size());
    for (Mask b : p.blocks()) {
        const Mask outside = u.all() & ~b;
        for (auto i : bit_indices(b)) rows[i] = outside;
    }
    return DitSet(u, std::move(rows));
}

bool refines(const SetPartition& p, const SetPartition& q) {
    require_same_universe(p.universe(), q.universe(), "refines");
    for (Mask b : p.blocks()) {
        const bool inside = std::any_of(q.blocks().begin(), q.blocks().end(),
                                        [b](Mask c) { return (b & ~c) == 0; });
        if (!inside) return false;
    }
    return true;
}

Rational logical_entropy(const SetPartition& p) {
    const auto n = static_cast<std::int64_t>(p.universe().size());
    return Rational(static_cast<std::int64_t>(dit(p).size()), n * n);
}

std::vector<SetPartition> enumerate_partitions(const Universe& universe, std::size_t bound) {
    const std::size_t n = universe.size();
    if (n > bound) {
        throw BoundExceeded("partition enumeration of '" + universe.name() + "' (|U|=" +
                            std::to_string(n) + ") exceeds bound " + std::to_string(bound));
    }
    std::vector<SetPartition> out;
    // Restricted growth strings: a[0]=0, a[i] <= 1 + max(a[0..i-1]).
    std::vector<std::size_t> a(n, 0);
    std::vector<std::size_t> prefix_max(n, 0);
    while (true) {
        std::size_t blocks = prefix_max[n - 1] + 1;
        std::vector<Mask> masks(blocks, 0);
        for (std::size_t i = 0; i < n; ++i) masks[a[i]] |= Mask{1} << i;
        out.emplace_back(universe, std::move(masks));

        std::size_t i = n;
        while (i-- > 1) {
            if (a[i] <= prefix_max[i - 1]) break;
        }
        if (i == 0 || i >= n) break;
        ++a[i];
        prefix_max[i] = std::max(prefix_max[i - 1], a[i]);
        for (std::size_t j = i + 1; j < n; ++j) {
            a[j] = 0;
            prefix_max[j] = prefix_max[i];
        }
    }
    return out;
}

std::vector<std::size_t> block_sizes(const SetPartition& p) {
    std::vector<std::size_t> sizes;
    for (Mask b : p.blocks()) sizes.push_back(static_cast<std::size_t>(cardinality(b)));
    std::sort(sizes.rbegin(), sizes.rend());
    return sizes;
}

std::string to_string(const SetPartition& p) {
    std::string s;
    for (std::size_t i = 0; i < p.blocks().size(); ++i) {
        if (i) s += '|';
        s += p.universe().format(p.blocks()[i]);
    }
    return s;
}

SetPartition parse_partition(const Universe& universe, const std::string& text) {
    std::vector<Mask> blocks;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto bar = text.find('|', start);
        auto piece = text.substr(start, bar == std::string::npos ? std::string::npos : bar - start);
        blocks.push_back(universe.mask_of(parse_brace_list(piece)));
        if (bar == std::string::npos) break;
        start = bar + 1;
    }
    return SetPartition(universe, std::move(blocks));
}

}  // namespace qmsets
