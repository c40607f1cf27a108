#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "qmsets/universe.hpp"

namespace qmsets {

/// Rank over GF(2) of a list of bit-vectors.
std::size_t gf2_rank(std::vector<Mask> vectors);

/// An ordered basis of the power set of a universe viewed as Z2^n.
///
/// Vectors are subsets of the universe. The inverse change-of-basis matrix is
/// computed once at construction, so expressing a subset in this basis is a
/// word-level XOR per element.
class Basis {
public:
    /// The singleton basis {u_1},...,{u_n}; vector labels are the element labels.
    static Basis standard(const Universe& universe);

    const Universe& universe() const noexcept { return data_->universe; }
    const std::string& name() const noexcept { return data_->name; }
    std::size_t dimension() const noexcept { return data_->vectors.size(); }
    const std::vector<Mask>& vectors() const noexcept { return data_->vectors; }
    const std::vector<std::string>& labels() const noexcept { return data_->labels; }
    bool is_standard() const noexcept { return data_->standard; }

    /// Coordinates (a mask over basis positions) of a universe subset.
    Mask coordinates_of(Mask subset) const;
    /// The universe subset obtained by summing the basis vectors selected by coords.
    Mask expand(Mask coords) const;

    /// Coordinates from basis-vector labels.
    Mask coords_of_labels(const std::vector<std::string>& labels) const;
    /// "{a',c'}" style rendering of coordinates.
    std::string format(Mask coords) const;

    /// Same universe and the same ordered vector list; the name is not compared.
    bool operator==(const Basis& other) const noexcept {
        return data_ == other.data_ ||
               (data_->universe == other.data_->universe && data_->vectors == other.data_->vectors);
    }

private:
    struct Data {
        Universe universe;
        std::string name;
        std::vector<Mask> vectors;
        std::vector<std::string> labels;
        std::vector<Mask> inverse_columns;  // coordinates of each singleton {u_i}
        bool standard;
    };
    explicit Basis(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
    std::shared_ptr<const Data> data_;

    friend Basis check_basis(const Universe&, std::string, std::vector<Mask>,
                             std::vector<std::string>);
};

/// Validates n = |U| subsets as a GF(2) basis.
///
/// Throws InvalidArgument for a wrong count or duplicate labels, and for a rank
/// deficiency; the latter message names a nonempty sub-list of vectors whose
/// symmetric difference is empty. When labels are omitted they default to
/// "<name>[i]".
Basis check_basis(const Universe& universe, std::string name, std::vector<Mask> vectors,
                  std::vector<std::string> labels = {});

/// A vector of the power-set space, tagged with the basis it is expressed in.
class SetKet {
public:
    SetKet(Basis basis, Mask coords);
    /// A subset expressed in the standard basis of its universe.
    static SetKet from_subset(const Universe& universe, Mask subset);

    const Basis& basis() const noexcept { return basis_; }
    const Universe& universe() const noexcept { return basis_.universe(); }
    Mask coords() const noexcept { return coords_; }
    /// The underlying universe subset (expansion into the standard basis).
    Mask subset() const { return basis_.expand(coords_); }
    bool is_zero() const noexcept { return coords_ == 0; }

    /// Rendering in the ket's own basis labels.
    std::string format() const { return basis_.format(coords_); }

    /// Abstract-vector equality: same universe and the same standard-basis expansion.
    bool operator==(const SetKet& other) const {
        return universe() == other.universe() && subset() == other.subset();
    }

private:
    Basis basis_;
    Mask coords_;
};

/// Symmetric-difference sum. Throws BasisError unless both kets use the same basis.
SetKet add(const SetKet& s, const SetKet& t);

/// Re-expresses s in the target basis. Throws CompatibilityError on universe mismatch.
SetKet to_basis(const SetKet& s, const Basis& target);

enum class KetOrder {
    /// Standard-basis subsets in binary counting order, then the empty set.
    Binary,
    /// Descending cardinality; within a cardinality, cyclic runs u_i,u_{i+1},...
    /// by starting index, then the rest in binary order; the empty set last.
    Cyclic,
};

inline constexpr std::size_t kDefaultKetTableBound = 10;

/// Every ket of the space expressed in each of the given bases.
struct KetTable {
    std::vector<Basis> bases;
    std::vector<std::vector<SetKet>> rows;  // rows[k][j]: ket k in bases[j]
};

/// Throws InvalidArgument for an empty basis list, CompatibilityError for mixed
/// universes and BoundExceeded when |U| > bound.
KetTable ket_table(const std::vector<Basis>& bases, KetOrder order = KetOrder::Binary,
                   std::size_t bound = kDefaultKetTableBound);

/// Standard-basis subsets in the requested row order.
std::vector<Mask> ket_row_order(std::size_t n, KetOrder order);

/// A linear map between two bases over one universe.
///
/// Column j holds the image of the j-th domain basis vector, in codomain coordinates.
class LinearMap {
public:
    LinearMap(Basis domain, Basis codomain, std::vector<Mask> columns);
    /// The identity on a basis.
    static LinearMap identity(const Basis& basis);
    /// The permutation matrix in the standard basis sending {u} to {image[u]}.
    static LinearMap permutation(const Universe& universe, const std::vector<std::size_t>& image);

    const Basis& domain() const noexcept { return domain_; }
    const Basis& codomain() const noexcept { return codomain_; }
    const std::vector<Mask>& columns() const noexcept { return columns_; }

    bool operator==(const LinearMap& other) const noexcept {
        return domain_ == other.domain_ && codomain_ == other.codomain_ &&
               columns_ == other.columns_;
    }

private:
    Basis domain_;
    Basis codomain_;
    std::vector<Mask> columns_;
};

/// Matrix-vector product over GF(2). Throws BasisError unless s is in m's domain basis.
SetKet apply_map(const LinearMap& m, const SetKet& s);

/// Full GF(2) rank.
bool is_nonsingular(const LinearMap& m);

}  // namespace qmsets
