#include "qmsets/gf2.hpp"

#include <algorithm>
#include <unordered_set>

#include "qmsets/error.hpp"

namespace qmsets {

std::size_t gf2_rank(std::vector<Mask> vectors) {
    std::size_t rank = 0;
    for (std::size_t bit = 0; bit < kMaxUniverseSize && rank < vectors.size(); ++bit) {
        const Mask b = Mask{1} << bit;
        auto pivot = std::find_if(vectors.begin() + static_cast<std::ptrdiff_t>(rank),
                                  vectors.end(), [b](Mask v) { return v & b; });
        if (pivot == vectors.end()) continue;
        std::iter_swap(vectors.begin() + static_cast<std::ptrdiff_t>(rank), pivot);
        for (std::size_t r = rank + 1; r < vectors.size(); ++r) {
            if (vectors[r] & b) vectors[r] ^= vectors[rank];
        }
        ++rank;
    }
    return rank;
}

Basis check_basis(const Universe& universe, std::string name, std::vector<Mask> vectors,
                  std::vector<std::string> labels) {
    const std::size_t n = universe.size();
    if (vectors.size() != n) {
        throw InvalidArgument("basis '" + name + "' has " + std::to_string(vectors.size()) +
                              " vectors; a basis of '" + universe.name() + "' needs " +
                              std::to_string(n));
    }
    if (labels.empty()) {
        for (std::size_t i = 0; i < n; ++i) labels.push_back(name + "[" + std::to_string(i) + "]");
    }
    if (labels.size() != n) throw InvalidArgument("basis '" + name + "': label count mismatch");
    std::unordered_set<std::string> seen;
    for (const auto& l : labels) {
        if (!seen.insert(l).second) {
            throw InvalidArgument("basis '" + name + "': duplicate vector label '" + l + "'");
        }
    }
    for (Mask v : vectors) {
        if (v & ~universe.all()) {
            throw InvalidArgument("basis '" + name + "': vector outside the universe");
        }
    }

    // Gauss-Jordan on (vector, combination) pairs. A full-rank list reduces to the
    // singletons, whose combinations are the columns of the inverse matrix.
    std::vector<Mask> rows = vectors;
    std::vector<Mask> comb(n);
    for (std::size_t j = 0; j < n; ++j) comb[j] = Mask{1} << j;
    std::size_t rank = 0;
    for (std::size_t bit = 0; bit < n; ++bit) {
        const Mask b = Mask{1} << bit;
        std::size_t pivot = rank;
        while (pivot < n && !(rows[pivot] & b)) ++pivot;
        if (pivot == n) continue;
        std::swap(rows[rank], rows[pivot]);
        std::swap(comb[rank], comb[pivot]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r != rank && (rows[r] & b)) {
                rows[r] ^= rows[rank];
                comb[r] ^= comb[rank];
            }
        }
        ++rank;
    }
    if (rank < n) {
        std::string witness;
        for (auto j : bit_indices(comb[rank])) {
            if (!witness.empty()) witness += " + ";
            witness += universe.format(vectors[j]);
        }
        throw InvalidArgument("basis '" + name + "' is linearly dependent (rank " +
                              std::to_string(rank) + " of " + std::to_string(n) +
                              "): " + witness + " = {}");
    }

    bool standard = true;
    for (std::size_t i = 0; i < n; ++i) standard = standard && vectors[i] == (Mask{1} << i);
    auto data = std::make_shared<const Basis::Data>(
        Basis::Data{universe, std::move(name), std::move(vectors), std::move(labels),
                    std::move(comb), standard});
    return Basis(std::move(data));
}

Basis Basis::standard(const Universe& universe) {
    std::vector<Mask> vectors;
    for (std::size_t i = 0; i < universe.size(); ++i) vectors.push_back(Mask{1} << i);
    return check_basis(universe, universe.name(), std::move(vectors), universe.labels());
}

Mask Basis::coordinates_of(Mask subset) const {
    Mask coords = 0;
    for (auto i : bit_indices(subset & universe().all())) coords ^= data_->inverse_columns[i];
    return coords;
}

Mask Basis::expand(Mask coords) const {
    Mask subset = 0;
    for (auto j : bit_indices(coords & full_mask(dimension()))) subset ^= data_->vectors[j];
    return subset;
}

Mask Basis::coords_of_labels(const std::vector<std::string>& labels) const {
    Mask coords = 0;
    for (const auto& l : labels) {
        auto it = std::find(data_->labels.begin(), data_->labels.end(), l);
        if (it == data_->labels.end()) {
            throw InvalidArgument("'" + l + "' is not a vector of basis '" + name() + "'");
        }
        coords |= Mask{1} << static_cast<std::size_t>(it - data_->labels.begin());
    }
    return coords;
}

std::string Basis::format(Mask coords) const {
    std::vector<std::string> ls;
    for (auto j : bit_indices(coords & full_mask(dimension()))) ls.push_back(data_->labels[j]);
    return brace_list(ls);
}

SetKet::SetKet(Basis basis, Mask coords) : basis_(std::move(basis)), coords_(coords) {
    if (coords_ & ~full_mask(basis_.dimension())) {
        throw InvalidArgument("ket coordinates outside basis '" + basis_.name() + "'");
    }
}

SetKet SetKet::from_subset(const Universe& universe, Mask subset) {
    return SetKet(Basis::standard(universe), subset);
}

SetKet add(const SetKet& s, const SetKet& t) {
    if (!(s.basis() == t.basis())) {
        throw BasisError("cannot add kets expressed in bases '" + s.basis().name() + "' and '" +
                         t.basis().name() + "'; re-express one of them first");
    }
    return SetKet(s.basis(), s.coords() ^ t.coords());
}

SetKet to_basis(const SetKet& s, const Basis& target) {
    if (!(s.universe() == target.universe())) {
        throw CompatibilityError("basis '" + target.name() + "' belongs to universe '" +
                                 target.universe().name() + "', the ket to '" +
                                 s.universe().name() + "'");
    }
    if (s.basis() == target) return SetKet(target, s.coords());
    return SetKet(target, target.coordinates_of(s.subset()));
}

std::vector<Mask> ket_row_order(std::size_t n, KetOrder order) {
    if (n > 30) throw BoundExceeded("ket rows for |U|=" + std::to_string(n) + " would not fit in memory");
    const Mask all = full_mask(n);
    std::vector<Mask> rows;
    if (order == KetOrder::Binary) {
        for (Mask m = 1; m <= all && m != 0; ++m) rows.push_back(m);
        rows.push_back(0);
        return rows;
    }
    std::vector<bool> used(std::size_t{1} << n, false);
    for (std::size_t k = n; k >= 1; --k) {
        for (std::size_t start = 0; start < n; ++start) {
            Mask run = 0;
            for (std::size_t j = 0; j < k; ++j) run |= Mask{1} << ((start + j) % n);
            if (!used[run]) {
                used[run] = true;
                rows.push_back(run);
            }
        }
        for (Mask m = 1; m <= all && m != 0; ++m) {
            if (static_cast<std::size_t>(cardinality(m)) == k && !used[m]) {
                used[m] = true;
                rows.push_back(m);
            }
        }
    }
    rows.push_back(0);
    return rows;
}

KetTable ket_table(const std::vector<Basis>& bases, KetOrder order, std::size_t bound) {
    if (bases.empty()) throw InvalidArgument("ket table needs at least one basis");
    const Universe& u = bases.front().universe();
    for (const auto& b : bases) {
        if (!(b.universe() == u)) {
            throw CompatibilityError("ket table bases must share one universe; '" + b.name() +
                                     "' does not");
        }
    }
    if (u.size() > bound) {
        throw BoundExceeded("ket table of '" + u.name() + "' (|U|=" + std::to_string(u.size()) +
                            ") exceeds bound " + std::to_string(bound));
    }
    KetTable table{bases, {}};
    for (Mask subset : ket_row_order(u.size(), order)) {
        std::vector<SetKet> row;
        for (const auto& b : bases) row.emplace_back(b, b.coordinates_of(subset));
        table.rows.push_back(std::move(row));
    }
    return table;
}

LinearMap::LinearMap(Basis domain, Basis codomain, std::vector<Mask> columns)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), columns_(std::move(columns)) {
    if (!(domain_.universe() == codomain_.universe())) {
        throw CompatibilityError("linear map bases must share one universe");
    }
    if (columns_.size() != domain_.dimension()) {
        throw InvalidArgument("linear map needs " + std::to_string(domain_.dimension()) +
                              " columns, got " + std::to_string(columns_.size()));
    }
    for (Mask c : columns_) {
        if (c & ~full_mask(codomain_.dimension())) {
            throw InvalidArgument("linear map column outside the codomain");
        }
    }
}

LinearMap LinearMap::identity(const Basis& basis) {
    std::vector<Mask> cols;
    for (std::size_t j = 0; j < basis.dimension(); ++j) cols.push_back(Mask{1} << j);
    return LinearMap(basis, basis, std::move(cols));
}

LinearMap LinearMap::permutation(const Universe& universe, const std::vector<std::size_t>& image) {
    if (image.size() != universe.size()) throw InvalidArgument("permutation size mismatch");
    std::vector<Mask> cols;
    for (auto i : image) cols.push_back(Mask{1} << i);
    const Basis std_basis = Basis::standard(universe);
    return LinearMap(std_basis, std_basis, std::move(cols));
}

SetKet apply_map(const LinearMap& m, const SetKet& s) {
    if (!(s.basis() == m.domain())) {
        throw BasisError("ket is expressed in basis '" + s.basis().name() +
                         "' but the map's domain basis is '" + m.domain().name() + "'");
    }
    Mask out = 0;
    for (auto j : bit_indices(s.coords())) out ^= m.columns()[j];
    return SetKet(m.codomain(), out);
}

bool is_nonsingular(const LinearMap& m) {
    return gf2_rank(m.columns()) == m.domain().dimension();
}

}  // namespace qmsets
