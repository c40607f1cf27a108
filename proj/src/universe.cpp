#include "qmsets/universe.hpp"

#include <unordered_set>

#include "qmsets/error.hpp"

namespace qmsets {

std::vector<std::size_t> bit_indices(Mask m) {
    std::vector<std::size_t> out;
    out.reserve(static_cast<std::size_t>(cardinality(m)));
    while (m != 0) {
        out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
        m &= m - 1;
    }
    return out;
}

Universe::Universe(std::string name, std::vector<std::string> labels) {
    if (labels.empty()) {
        throw InvalidArgument("universe '" + name + "' must have at least one element");
    }
    if (labels.size() > kMaxUniverseSize) {
        throw InvalidArgument("universe '" + name + "' has " + std::to_string(labels.size()) +
                              " elements; at most 64 are supported");
    }
    std::unordered_set<std::string> seen;
    for (const auto& l : labels) {
        if (l.empty()) throw InvalidArgument("empty element label in universe '" + name + "'");
        if (!seen.insert(l).second) {
            throw InvalidArgument("duplicate element '" + l + "' in universe '" + name + "'");
        }
    }
    data_ = std::make_shared<const Data>(Data{std::move(name), std::move(labels)});
}

std::optional<std::size_t> Universe::index_of(std::string_view label) const {
    const auto& ls = data_->labels;
    for (std::size_t i = 0; i < ls.size(); ++i) {
        if (ls[i] == label) return i;
    }
    return std::nullopt;
}

std::size_t Universe::require_index(std::string_view label) const {
    auto i = index_of(label);
    if (!i) {
        throw InvalidArgument("'" + std::string(label) + "' is not an element of universe '" +
                              name() + "'");
    }
    return *i;
}

Mask Universe::mask_of(const std::vector<std::string>& labels) const {
    Mask m = 0;
    for (const auto& l : labels) m |= Mask{1} << require_index(l);
    return m;
}

std::vector<std::string> Universe::labels_of(Mask m) const {
    std::vector<std::string> out;
    for (auto i : bit_indices(m & all())) out.push_back(data_->labels[i]);
    return out;
}

std::string Universe::format(Mask m) const { return brace_list(labels_of(m)); }

std::string brace_list(const std::vector<std::string>& labels) {
    std::string s = "{";
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i) s += ',';
        s += labels[i];
    }
    s += '}';
    return s;
}

namespace {
std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}
}  // namespace

std::vector<std::string> parse_brace_list(std::string_view text) {
    text = trim(text);
    if (text.size() < 2 || text.front() != '{' || text.back() != '}') {
        throw InvalidArgument("expected a brace-delimited list, got '" + std::string(text) + "'");
    }
    text = trim(text.substr(1, text.size() - 2));
    std::vector<std::string> out;
    if (text.empty()) return out;
    while (true) {
        auto comma = text.find(',');
        auto item = trim(text.substr(0, comma));
        if (item.empty()) throw InvalidArgument("empty label in brace list");
        out.emplace_back(item);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

}  // namespace qmsets
