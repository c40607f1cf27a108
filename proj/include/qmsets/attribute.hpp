#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qmsets/gf2.hpp"
#include "qmsets/partition.hpp"

namespace qmsets {

/// An opaque attribute value.
///
/// Values are totally ordered: numeric tokens compare numerically and sort
/// before non-numeric ones; everything else compares by text.
class Value {
public:
    Value() = default;
    Value(std::string text);  // NOLINT(google-explicit-constructor)
    Value(const char* text) : Value(std::string(text)) {}  // NOLINT
    Value(long long number) : Value(std::to_string(number)) {}  // NOLINT

    const std::string& text() const noexcept { return text_; }
    std::optional<double> number() const noexcept { return number_; }

    std::strong_ordering operator<=>(const Value& other) const;
    bool operator==(const Value& other) const { return (*this <=> other) == 0; }

private:
    std::string text_;
    std::optional<double> number_;
};

/// A total function f: U -> values.
class Attribute {
public:
    /// values[i] is the value of the i-th universe element.
    Attribute(std::string name, Universe universe, std::vector<Value> values);
    /// Builds from element-label/value pairs; throws InvalidArgument unless every
    /// element is assigned exactly once.
    static Attribute from_pairs(std::string name, const Universe& universe,
                                const std::vector<std::pair<std::string, Value>>& pairs);

    const std::string& name() const noexcept { return name_; }
    const Universe& universe() const noexcept { return universe_; }
    const std::vector<Value>& values() const noexcept { return values_; }
    const Value& operator()(std::size_t element) const { return values_.at(element); }

    /// Attained values in ascending order.
    std::vector<Value> range() const;
    /// The preimage f^{-1}(r) as a mask (empty when r is not attained).
    Mask preimage(const Value& r) const;

private:
    std::string name_;
    Universe universe_;
    std::vector<Value> values_;
};

/// An ordered, nonempty list of attributes on one universe.
class AttributeSet {
public:
    /// Throws InvalidArgument when empty and CompatibilityError on mixed universes.
    explicit AttributeSet(std::vector<Attribute> attributes);

    const std::vector<Attribute>& attributes() const noexcept { return attributes_; }
    const Universe& universe() const noexcept { return attributes_.front().universe(); }
    std::size_t size() const noexcept { return attributes_.size(); }

private:
    std::vector<Attribute> attributes_;
};

/// Blocks {f^{-1}(r) != empty}.
SetPartition inverse_image_partition(const Attribute& f);

/// Defined on the same universe object.
bool compatible(const Attribute& f, const Attribute& g);

/// The join of the inverse-image partitions, each block labeled by its value tuple.
struct AttributeJoin {
    SetPartition partition;
    std::vector<std::vector<Value>> tuples;  // tuples[k] labels partition.blocks()[k]
};

AttributeJoin join_attributes(const AttributeSet& fs);

/// True iff the attribute join is the discrete partition.
bool is_csca(const AttributeSet& fs);

/// All nonzero vectors of the eigenspace of r: nonempty subsets of f^{-1}(r), in binary order.
std::vector<SetKet> eigen_sets(const Attribute& f, const Value& r);

std::string to_string(const std::vector<Value>& tuple);

}  // namespace qmsets
