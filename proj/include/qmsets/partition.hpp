#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qmsets/rational.hpp"
#include "qmsets/universe.hpp"

namespace qmsets {

/// A set partition of a universe.
///
/// Blocks are kept canonical: each block is a mask (hence in universe order)
/// and blocks are sorted by their least element, so structural equality is
/// partition equality.
class SetPartition {
public:
    /// Validates that the blocks are nonempty, pairwise disjoint and cover the universe.
    SetPartition(Universe universe, std::vector<Mask> blocks);

    const Universe& universe() const noexcept { return universe_; }
    const std::vector<Mask>& blocks() const noexcept { return blocks_; }
    std::size_t block_count() const noexcept { return blocks_.size(); }

    /// Index of the block containing element i.
    std::size_t block_of(std::size_t element) const;

    bool operator==(const SetPartition& other) const noexcept {
        return universe_ == other.universe_ && blocks_ == other.blocks_;
    }

private:
    Universe universe_;
    std::vector<Mask> blocks_;
};

/// Checks the partition invariants on raw blocks; returns an empty string when they hold.
std::string validate_blocks(const Universe& universe, const std::vector<Mask>& blocks);

/// The distinctions of a partition: ordered pairs of elements lying in different blocks.
///
/// Stored as one row mask per element: bit j of row i is set iff (u_i, u_j) is a distinction.
class DitSet {
public:
    DitSet(Universe universe, std::vector<Mask> rows);

    const Universe& universe() const noexcept { return universe_; }
    const std::vector<Mask>& rows() const noexcept { return rows_; }

    std::size_t size() const noexcept;
    bool empty() const noexcept { return size() == 0; }
    bool contains(std::size_t i, std::size_t j) const { return (rows_.at(i) >> j) & 1U; }
    std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

    bool is_subset_of(const DitSet& other) const;
    DitSet unite(const DitSet& other) const;

    bool is_irreflexive() const noexcept;
    bool is_symmetric() const noexcept;
    /// True when the complement within U×U is reflexive, symmetric and transitive.
    bool complement_is_equivalence() const noexcept;

    bool operator==(const DitSet& other) const noexcept {
        return universe_ == other.universe_ && rows_ == other.rows_;
    }

private:
    Universe universe_;
    std::vector<Mask> rows_;
};

SetPartition indiscrete(const Universe& universe);
SetPartition discrete(const Universe& universe);

/// Blocks are the nonempty pairwise intersections. Throws CompatibilityError on universe mismatch.
SetPartition join(const SetPartition& p, const SetPartition& q);

/// Finest common coarsening (equivalence closure of both relations). Not used by the
/// measurement calculus; provided for lattice work.
SetPartition meet(const SetPartition& p, const SetPartition& q);

DitSet dit(const SetPartition& p);

/// True iff every block of p lies inside some block of q, i.e. p is at least as refined as q.
bool refines(const SetPartition& p, const SetPartition& q);

/// |dit(p)| / |U|^2.
Rational logical_entropy(const SetPartition& p);

inline constexpr std::size_t kDefaultPartitionBound = 6;

/// All partitions of the universe in restricted-growth-string order.
/// Throws BoundExceeded when |U| > bound.
std::vector<SetPartition> enumerate_partitions(const Universe& universe,
                                               std::size_t bound = kDefaultPartitionBound);

/// Occupation numbers, sorted descending.
std::vector<std::size_t> block_sizes(const SetPartition& p);

/// Canonical text form, e.g. "{a}|{b,c}".
std::string to_string(const SetPartition& p);

/// Parses the canonical text form against a universe. Block order and element order are free.
SetPartition parse_partition(const Universe& universe, const std::string& text);

}  // namespace qmsets
