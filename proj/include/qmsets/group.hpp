#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qmsets/gf2.hpp"
#include "qmsets/partition.hpp"

namespace qmsets {

/// A bijection of a universe onto itself, stored as the image index of each element.
class Permutation {
public:
    /// Throws InvalidArgument unless image is a bijection on [0, |U|).
    Permutation(Universe universe, std::vector<std::size_t> image);
    static Permutation identity(const Universe& universe);

    const Universe& universe() const noexcept { return universe_; }
    const std::vector<std::size_t>& image() const noexcept { return image_; }
    std::size_t operator()(std::size_t element) const { return image_.at(element); }
    Mask apply(Mask subset) const;

    bool is_identity() const noexcept;
    Permutation inverse() const;

    bool operator==(const Permutation& other) const noexcept {
        return universe_ == other.universe_ && image_ == other.image_;
    }
    /// Lexicographic order on images; used for canonical element ordering.
    bool operator<(const Permutation& other) const noexcept { return image_ < other.image_; }

private:
    Universe universe_;
    std::vector<std::size_t> image_;
};

/// Apply `first`, then `second` (the composite u -> second(first(u))).
Permutation then(const Permutation& first, const Permutation& second);

/// Parses cycle notation such as "(a b c)(d e)"; "()" is the identity.
Permutation parse_cycles(const Universe& universe, const std::string& text);
/// Disjoint-cycle rendering with each cycle starting at its least element; "()" for the identity.
std::string to_cycles(const Permutation& p);

/// An explicit set of permutations of one universe.
///
/// Construction does not check the group axioms so that deliberately broken
/// sets can be inspected; generate_group only returns genuine groups.
class TransformationGroup {
public:
    TransformationGroup(Universe universe, std::vector<Permutation> elements);

    const Universe& universe() const noexcept { return universe_; }
    const std::vector<Permutation>& elements() const noexcept { return elements_; }
    std::size_t order() const noexcept { return elements_.size(); }
    bool contains(const Permutation& p) const;
    /// True for groups produced by generate_group, whose axioms hold by construction.
    bool closed_by_construction() const noexcept { return closed_; }

private:
    Universe universe_;
    std::vector<Permutation> elements_;  // sorted, unique
    bool closed_ = false;

    friend TransformationGroup generate_group(const Universe&, const std::vector<Permutation>&,
                                              std::size_t);
};

inline constexpr std::size_t kDefaultGroupBound = 10080;

/// Breadth-first closure of the generators under composition.
/// Throws CompatibilityError for generators on another universe and BoundExceeded
/// as soon as the closure grows past bound elements.
TransformationGroup generate_group(const Universe& universe,
                                   const std::vector<Permutation>& generators,
                                   std::size_t bound = kDefaultGroupBound);

struct GroupAxiomReport {
    bool has_identity = true;
    /// An element whose inverse is missing.
    std::optional<Permutation> missing_inverse;
    /// A pair (t, t') whose composite "t then t'" is missing.
    std::optional<std::pair<Permutation, Permutation>> non_closed_pair;

    bool ok() const noexcept { return has_identity && !missing_inverse && !non_closed_pair; }
    std::string describe() const;
};

GroupAxiomReport verify_group_axioms(const TransformationGroup& g);

/// Partition of the universe into orbits. Throws InvalidGroupError when the axioms fail.
SetPartition orbit_partition(const TransformationGroup& g);

/// True iff t(S) ⊆ S for every t in g. Throws CompatibilityError on universe mismatch.
bool is_invariant(const TransformationGroup& g, const SetKet& s);

}  // namespace qmsets
