#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qmsets {

/// A subset of a universe as a bit-vector: bit i is set iff the i-th element belongs to it.
using Mask = std::uint64_t;

inline constexpr std::size_t kMaxUniverseSize = 64;

inline int cardinality(Mask m) noexcept { return std::popcount(m); }

inline Mask full_mask(std::size_t n) noexcept {
    return n >= 64 ? ~Mask{0} : ((Mask{1} << n) - 1);
}

/// Indices of the set bits, ascending.
std::vector<std::size_t> bit_indices(Mask m);

/// An ordered finite set of distinct labels.
///
/// Universes have identity semantics: two handles compare equal only when they
/// refer to the same underlying object, so two separately declared universes
/// with identical labels are still different domains.
class Universe {
public:
    Universe(std::string name, std::vector<std::string> labels);
    explicit Universe(std::vector<std::string> labels) : Universe("U", std::move(labels)) {}

    const std::string& name() const noexcept { return data_->name; }
    std::size_t size() const noexcept { return data_->labels.size(); }
    const std::vector<std::string>& labels() const noexcept { return data_->labels; }
    const std::string& label(std::size_t i) const { return data_->labels.at(i); }

    std::optional<std::size_t> index_of(std::string_view label) const;
    /// Throws InvalidArgument when the label is not an element.
    std::size_t require_index(std::string_view label) const;

    Mask all() const noexcept { return full_mask(size()); }
    Mask mask_of(const std::vector<std::string>& labels) const;
    std::vector<std::string> labels_of(Mask m) const;

    /// "{a,b}" style rendering in universe order.
    std::string format(Mask m) const;

    bool operator==(const Universe& other) const noexcept { return data_ == other.data_; }

private:
    struct Data {
        std::string name;
        std::vector<std::string> labels;
    };
    std::shared_ptr<const Data> data_;
};

/// Formats a list of labels as "{x,y,z}"; the empty list renders as "{}".
std::string brace_list(const std::vector<std::string>& labels);

/// Splits "{x, y,z}" into its labels. Throws InvalidArgument on malformed text.
std::vector<std::string> parse_brace_list(std::string_view text);

}  // namespace qmsets
