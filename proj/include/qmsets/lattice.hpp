#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qmsets/partition.hpp"

namespace qmsets {

/// The partition lattice of a small universe with its Hasse (covering) relation.
struct PartitionLattice {
    std::vector<SetPartition> nodes;  // restricted-growth-string order
    /// (lower, upper) node indices where upper covers lower in the refinement order.
    std::vector<std::pair<std::size_t, std::size_t>> covers;
};

PartitionLattice build_lattice(const Universe& universe,
                               std::size_t bound = kDefaultPartitionBound);

/// Text diagram: one line per rank (block count), discrete partition on top and
/// the indiscrete blob at the bottom, followed by the covering edges.
std::string render_lattice(const PartitionLattice& lattice);

}  // namespace qmsets
