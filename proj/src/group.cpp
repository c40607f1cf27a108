#include "qmsets/group.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "qmsets/error.hpp"

namespace qmsets {

Permutation::Permutation(Universe universe, std::vector<std::size_t> image)
    : universe_(std::move(universe)), image_(std::move(image)) {
    if (image_.size() != universe_.size()) {
        throw InvalidArgument("permutation of '" + universe_.name() + "' needs " +
                              std::to_string(universe_.size()) + " images");
    }
    std::vector<bool> hit(image_.size(), false);
    for (auto i : image_) {
        if (i >= image_.size() || hit[i]) throw InvalidArgument("mapping is not a bijection");
        hit[i] = true;
    }
}

Permutation Permutation::identity(const Universe& universe) {
    std::vector<std::size_t> image(universe.size());
    for (std::size_t i = 0; i < image.size(); ++i) image[i] = i;
    return Permutation(universe, std::move(image));
}

Mask Permutation::apply(Mask subset) const {
    Mask out = 0;
    for (auto i : bit_indices(subset & universe_.all())) out |= Mask{1} << image_[i];
    return out;
}

bool Permutation::is_identity() const noexcept {
    for (std::size_t i = 0; i < image_.size(); ++i) {
        if (image_[i] != i) return false;
    }
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<std::size_t> inv(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i) inv[image_[i]] = i;
    return Permutation(universe_, std::move(inv));
}

Permutation then(const Permutation& first, const Permutation& second) {
    if (!(first.universe() == second.universe())) {
        throw CompatibilityError("cannot compose permutations of different universes");
    }
    std::vector<std::size_t> image(first.image().size());
    for (std::size_t i = 0; i < image.size(); ++i) image[i] = second(first(i));
    return Permutation(first.universe(), std::move(image));
}

Permutation parse_cycles(const Universe& universe, const std::string& text) {
    std::vector<std::size_t> image(universe.size());
    for (std::size_t i = 0; i < image.size(); ++i) image[i] = i;
    std::vector<bool> moved(universe.size(), false);

    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    };
    skip_ws();
    if (pos == text.size()) throw InvalidArgument("empty cycle notation; write () for the identity");
    while (pos < text.size()) {
        if (text[pos] != '(') {
            throw InvalidArgument("expected '(' in cycle notation '" + text + "'");
        }
        ++pos;
        std::vector<std::size_t> cycle;
        while (true) {
            skip_ws();
            if (pos >= text.size()) throw InvalidArgument("unterminated cycle in '" + text + "'");
            if (text[pos] == ')') {
                ++pos;
                break;
            }
            std::size_t start = pos;
            while (pos < text.size() && text[pos] != ' ' && text[pos] != '\t' && text[pos] != ')' &&
                   text[pos] != ',') {
                ++pos;
            }
            cycle.push_back(universe.require_index(text.substr(start, pos - start)));
            if (pos < text.size() && text[pos] == ',') ++pos;
        }
        for (auto e : cycle) {
            if (moved[e]) {
                throw InvalidArgument("element '" + universe.label(e) +
                                      "' appears in more than one cycle");
            }
            moved[e] = true;
        }
        for (std::size_t k = 0; k < cycle.size(); ++k) image[cycle[k]] = cycle[(k + 1) % cycle.size()];
        skip_ws();
    }
    return Permutation(universe, std::move(image));
}

std::string to_cycles(const Permutation& p) {
    const auto& u = p.universe();
    std::vector<bool> seen(u.size(), false);
    std::string out;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (seen[i] || p(i) == i) continue;
        out += '(';
        std::size_t j = i;
        bool first = true;
        do {
            if (!first) out += ' ';
            first = false;
            out += u.label(j);
            seen[j] = true;
            j = p(j);
        } while (j != i);
        out += ')';
    }
    return out.empty() ? "()" : out;
}

TransformationGroup::TransformationGroup(Universe universe, std::vector<Permutation> elements)
    : universe_(std::move(universe)), elements_(std::move(elements)) {
    for (const auto& t : elements_) {
        if (!(t.universe() == universe_)) {
            throw CompatibilityError("permutation on another universe than '" + universe_.name() +
                                     "'");
        }
    }
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

bool TransformationGroup::contains(const Permutation& p) const {
    return std::binary_search(elements_.begin(), elements_.end(), p);
}

TransformationGroup generate_group(const Universe& universe,
                                   const std::vector<Permutation>& generators,
                                   std::size_t bound) {
    for (const auto& gen : generators) {
        if (!(gen.universe() == universe)) {
            throw CompatibilityError("generator " + to_cycles(gen) + " is not a permutation of '" +
                                     universe.name() + "'");
        }
    }
    // Finite permutation groups are closed under composition alone: inverses are powers.
    std::set<Permutation> found{Permutation::identity(universe)};
    std::deque<Permutation> frontier{Permutation::identity(universe)};
    while (!frontier.empty()) {
        Permutation t = std::move(frontier.front());
        frontier.pop_front();
        for (const auto& gen : generators) {
            Permutation next = then(t, gen);
            if (found.insert(next).second) {
                if (found.size() > bound) {
                    throw BoundExceeded("group closure on '" + universe.name() + "' exceeds " +
                                        std::to_string(bound) + " elements");
                }
                frontier.push_back(std::move(next));
            }
        }
    }
    TransformationGroup g(universe, {found.begin(), found.end()});
    g.closed_ = true;
    return g;
}

std::string GroupAxiomReport::describe() const {
    if (ok()) return "all group axioms hold";
    std::ostringstream os;
    const char* sep = "";
    if (!has_identity) {
        os << "missing identity";
        sep = "; ";
    }
    if (missing_inverse) {
        os << sep << "no inverse for " << to_cycles(*missing_inverse);
        sep = "; ";
    }
    if (non_closed_pair) {
        os << sep << "not closed: " << to_cycles(non_closed_pair->first) << " then "
           << to_cycles(non_closed_pair->second) << " = "
           << to_cycles(then(non_closed_pair->first, non_closed_pair->second))
           << " is missing";
    }
    return os.str();
}

GroupAxiomReport verify_group_axioms(const TransformationGroup& g) {
    GroupAxiomReport report;
    report.has_identity = g.contains(Permutation::identity(g.universe()));
    for (const auto& t : g.elements()) {
        if (!g.contains(t.inverse())) {
            report.missing_inverse = t;
            break;
        }
    }
    for (const auto& t : g.elements()) {
        for (const auto& t2 : g.elements()) {
            if (!g.contains(then(t, t2))) {
                report.non_closed_pair = std::make_pair(t, t2);
                return report;
            }
        }
    }
    return report;
}

SetPartition orbit_partition(const TransformationGroup& g) {
    if (auto report = g.closed_by_construction() ? GroupAxiomReport{} : verify_group_axioms(g);
        !report.ok()) {
        throw InvalidGroupError("not a transformation group: " + report.describe());
    }
    const auto& u = g.universe();
    Mask assigned = 0;
    std::vector<Mask> orbits;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if ((assigned >> i) & 1U) continue;
        Mask orbit = 0;
        for (const auto& t : g.elements()) orbit |= Mask{1} << t(i);
        assigned |= orbit;
        orbits.push_back(orbit);
    }
    return SetPartition(u, std::move(orbits));
}

bool is_invariant(const TransformationGroup& g, const SetKet& s) {
    if (!(s.universe() == g.universe())) {
        throw CompatibilityError("ket and group live on different universes");
    }
    const Mask subset = s.subset();
    return std::all_of(g.elements().begin(), g.elements().end(),
                       [subset](const Permutation& t) { return (t.apply(subset) & ~subset) == 0; });
}

}  // namespace qmsets
