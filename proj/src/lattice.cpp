#include "qmsets/lattice.hpp"

#include <map>
#include <sstream>

namespace qmsets {

PartitionLattice build_lattice(const Universe& universe, std::size_t bound) {
    PartitionLattice lat;
    lat.nodes = enumerate_partitions(universe, bound);
    const auto& nodes = lat.nodes;
    // In the partition lattice, upper covers lower exactly when upper refines lower
    // and has one block more (two blocks of upper merge into one of lower).
    for (std::size_t lo = 0; lo < nodes.size(); ++lo) {
        for (std::size_t hi = 0; hi < nodes.size(); ++hi) {
            if (nodes[hi].block_count() == nodes[lo].block_count() + 1 &&
                refines(nodes[hi], nodes[lo])) {
                lat.covers.emplace_back(lo, hi);
            }
        }
    }
    return lat;
}

std::string render_lattice(const PartitionLattice& lattice) {
    std::ostringstream os;
    const auto& nodes = lattice.nodes;
    os << "lattice " << nodes.front().universe().name() << ": " << nodes.size()
       << " partitions, " << lattice.covers.size() << " covering edges\n";
    std::map<std::size_t, std::vector<std::size_t>, std::greater<>> by_rank;
    for (std::size_t i = 0; i < nodes.size(); ++i) by_rank[nodes[i].block_count()].push_back(i);
    for (const auto& [rank, members] : by_rank) {
        os << "rank " << rank << ":";
        for (auto i : members) os << "  " << to_string(nodes[i]);
        os << '\n';
    }
    os << "edges:\n";
    for (const auto& [lo, hi] : lattice.covers) {
        os << "  " << to_string(nodes[lo]) << " < " << to_string(nodes[hi]) << '\n';
    }
    return os.str();
}

}  // namespace qmsets
