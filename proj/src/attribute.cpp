#include "qmsets/attribute.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>

#include "qmsets/error.hpp"

namespace qmsets {

namespace {

std::optional<double> parse_number(const std::string& s) {
    if (s.empty()) return std::nullopt;
    double v = 0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    if (*first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || !std::isfinite(v)) return std::nullopt;
    return v;
}

}  // namespace

Value::Value(std::string text) : text_(std::move(text)), number_(parse_number(text_)) {}

std::strong_ordering Value::operator<=>(const Value& other) const {
    if (number_ && other.number_) {
        if (*number_ < *other.number_) return std::strong_ordering::less;
        if (*number_ > *other.number_) return std::strong_ordering::greater;
        return text_ <=> other.text_;
    }
    if (number_) return std::strong_ordering::less;
    if (other.number_) return std::strong_ordering::greater;
    return text_ <=> other.text_;
}

Attribute::Attribute(std::string name, Universe universe, std::vector<Value> values)
    : name_(std::move(name)), universe_(std::move(universe)), values_(std::move(values)) {
    if (values_.size() != universe_.size()) {
        throw InvalidArgument("attribute '" + name_ + "' assigns " +
                              std::to_string(values_.size()) + " values on a universe of " +
                              std::to_string(universe_.size()) + " elements");
    }
}

Attribute Attribute::from_pairs(std::string name, const Universe& universe,
                                const std::vector<std::pair<std::string, Value>>& pairs) {
    std::vector<std::optional<Value>> slots(universe.size());
    for (const auto& [label, value] : pairs) {
        auto i = universe.require_index(label);
        if (slots[i]) {
            throw InvalidArgument("attribute '" + name + "' assigns element '" + label + "' twice");
        }
        slots[i] = value;
    }
    std::vector<Value> values;
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (!slots[i]) {
            throw InvalidArgument("attribute '" + name + "' is partial: no value for '" +
                                  universe.label(i) + "'");
        }
        values.push_back(*slots[i]);
    }
    return Attribute(std::move(name), universe, std::move(values));
}

std::vector<Value> Attribute::range() const {
    std::set<Value> s(values_.begin(), values_.end());
    return {s.begin(), s.end()};
}

Mask Attribute::preimage(const Value& r) const {
    Mask m = 0;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (values_[i] == r) m |= Mask{1} << i;
    }
    return m;
}

AttributeSet::AttributeSet(std::vector<Attribute> attributes) : attributes_(std::move(attributes)) {
    if (attributes_.empty()) throw InvalidArgument("attribute set must not be empty");
    for (const auto& f : attributes_) {
        if (!compatible(f, attributes_.front())) {
            throw CompatibilityError("attribute '" + f.name() + "' is not compatible with '" +
                                     attributes_.front().name() + "': different universes");
        }
    }
}

SetPartition inverse_image_partition(const Attribute& f) {
    std::vector<Mask> blocks;
    for (const auto& r : f.range()) blocks.push_back(f.preimage(r));
    return SetPartition(f.universe(), std::move(blocks));
}

bool compatible(const Attribute& f, const Attribute& g) { return f.universe() == g.universe(); }

AttributeJoin join_attributes(const AttributeSet& fs) {
    SetPartition p = inverse_image_partition(fs.attributes().front());
    for (std::size_t k = 1; k < fs.size(); ++k) p = join(p, inverse_image_partition(fs.attributes()[k]));
    std::vector<std::vector<Value>> tuples;
    for (Mask b : p.blocks()) {
        const auto rep = static_cast<std::size_t>(std::countr_zero(b));
        std::vector<Value> t;
        for (const auto& f : fs.attributes()) t.push_back(f(rep));
        tuples.push_back(std::move(t));
    }
    return {std::move(p), std::move(tuples)};
}

bool is_csca(const AttributeSet& fs) {
    return join_attributes(fs).partition.block_count() == fs.universe().size();
}

std::vector<SetKet> eigen_sets(const Attribute& f, const Value& r) {
    const Mask eigenspace = f.preimage(r);
    std::vector<SetKet> out;
    const Basis standard = Basis::standard(f.universe());
    // Enumerate nonempty submasks in increasing numeric order.
    for (Mask s = eigenspace & (~eigenspace + 1); s != 0; s = (s - eigenspace) & eigenspace) {
        out.emplace_back(standard, s);
    }
    return out;
}

std::string to_string(const std::vector<Value>& tuple) {
    std::string s = "(";
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (i) s += ',';
        s += tuple[i].text();
    }
    return s + ")";
}

}  // namespace qmsets
