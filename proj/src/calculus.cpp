#include "qmsets/calculus.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>

#include "qmsets/error.hpp"

namespace qmsets {

namespace {

void require_standard(const SetKet& s, const char* op) {
    if (!s.basis().is_standard()) {
        throw BasisError(std::string(op) + " needs a ket in the standard basis of '" +
                         s.universe().name() + "'; '" + s.format() + "' is expressed in basis '" +
                         s.basis().name() + "' (convert it with to_basis first)");
    }
}

void require_same_universe(const Universe& a, const Universe& b, const char* op) {
    if (!(a == b)) {
        throw CompatibilityError(std::string(op) + ": universes '" + a.name() + "' and '" +
                                 b.name() + "' differ");
    }
}

/// The ket re-expressed in the attribute's home basis.
SetKet home(const Attribute& f, const SetKet& s) {
    require_same_universe(f.universe(), s.universe(), "measurement");
    return s.basis().is_standard() ? s : to_basis(s, Basis::standard(f.universe()));
}

void require_nonempty(const SetKet& s) {
    if (s.is_zero()) throw EmptyStateError("cannot condition on the empty state");
}

}  // namespace

Bracket bracket(const SetKet& t, const SetKet& s) {
    require_standard(t, "bracket");
    require_standard(s, "bracket");
    require_same_universe(t.universe(), s.universe(), "bracket");
    return {cardinality(t.coords() & s.coords())};
}

Norm norm(const SetKet& s) {
    require_standard(s, "norm");
    const std::int64_t sq = cardinality(s.coords());
    return {sq, std::sqrt(static_cast<double>(sq))};
}

KetBraResolution ketbra_resolve(const SetKet& t, const SetKet& s) {
    require_standard(t, "ket-bra resolution");
    require_standard(s, "ket-bra resolution");
    require_same_universe(t.universe(), s.universe(), "ket-bra resolution");
    KetBraResolution res;
    for (std::size_t i = 0; i < s.universe().size(); ++i) {
        const SetKet singleton(s.basis(), Mask{1} << i);
        const auto left = bracket(t, singleton).value;
        const auto right = bracket(singleton, s).value;
        res.value += left * right;
        if (right != 0) res.terms.push_back(singleton);
    }
    if (res.value != bracket(t, s).value) {
        throw std::logic_error("ket-bra resolution disagrees with the bracket");
    }
    return res;
}

Rational OutcomeDistribution::total() const {
    Rational sum(0);
    for (const auto& o : outcomes) sum += o.probability;
    return sum;
}

OutcomeDistribution born_distribution(const SetKet& s) {
    require_standard(s, "Born rule");
    require_nonempty(s);
    const auto n2 = norm(s).squared;
    OutcomeDistribution d{s, {}};
    for (auto i : bit_indices(s.coords())) {
        const SetKet singleton(s.basis(), Mask{1} << i);
        const auto amplitude = bracket(singleton, s).value;
        d.outcomes.push_back({Value(s.universe().label(i)), Rational(amplitude * amplitude, n2),
                              singleton});
    }
    return d;
}

SetKet SpectralTerm::project(const SetKet& s) const {
    require_standard(s, "projection");
    return SetKet(s.basis(), eigenspace & s.coords());
}

std::vector<SpectralTerm> spectral_decompose(const Attribute& f) {
    std::vector<SpectralTerm> terms;
    for (const auto& r : f.range()) terms.push_back({r, f.preimage(r)});
    Mask sum = 0;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        for (std::size_t j = i + 1; j < terms.size(); ++j) {
            if (terms[i].eigenspace & terms[j].eigenspace) {
                throw std::logic_error("spectral projections are not orthogonal");
            }
        }
        sum ^= terms[i].eigenspace;
    }
    if (sum != f.universe().all()) {
        throw std::logic_error("spectral projections do not sum to the identity");
    }
    return terms;
}

OutcomeDistribution measure_distribution(const Attribute& f, const SetKet& s) {
    const SetKet state = home(f, s);
    require_nonempty(state);
    const std::int64_t size = cardinality(state.coords());
    OutcomeDistribution d{state, {}};
    for (const auto& term : spectral_decompose(f)) {
        const SetKet collapsed = term.project(state);
        if (collapsed.is_zero()) continue;
        d.outcomes.push_back(
            {term.value, Rational(cardinality(collapsed.coords()), size), collapsed});
    }
    return d;
}

std::vector<Value> MeasurementRecord::tuple() const {
    std::vector<Value> t;
    for (const auto& step : steps) t.push_back(step.value);
    return t;
}

Rational MeasurementRecord::probability() const {
    Rational p(1);
    for (const auto& step : steps) p *= step.probability;
    return p;
}

std::uint64_t uniform_draw(std::uint64_t seed, std::uint64_t step, std::uint64_t n) {
    if (n == 0) throw InvalidArgument("uniform_draw over an empty range");
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(step), static_cast<std::uint32_t>(step >> 32)};
    std::mt19937_64 gen(seq);
    // Reject the top 2^64 mod n values so every residue is equally likely.
    const std::uint64_t reject_from = std::uint64_t{0} - (std::uint64_t{0} - n) % n;
    while (true) {
        const std::uint64_t x = gen();
        if (reject_from == 0 || x < reject_from) return x % n;
    }
}

MeasurementStep measure_sample(const Attribute& f, const SetKet& s, std::uint64_t seed,
                               std::uint64_t step) {
    const OutcomeDistribution d = measure_distribution(f, s);
    const auto members = bit_indices(d.state.coords());
    const auto pick = members[uniform_draw(seed, step, members.size())];
    const Value& r = f(pick);
    for (const auto& o : d.outcomes) {
        if (o.value == r) return {f.name(), r, d.state, o.collapsed, o.probability};
    }
    throw std::logic_error("sampled element has no outcome");
}

MeasurementJoin measurement_join(const Attribute& f, const SetKet& s) {
    require_same_universe(f.universe(), s.universe(), "measurement join");
    const Universe& u = f.universe();
    const Mask state = s.subset();
    std::vector<Mask> blocks;
    if (state != 0) blocks.push_back(state);
    if (Mask rest = u.all() & ~state) blocks.push_back(rest);
    const SetPartition joined = join(SetPartition(u, std::move(blocks)), inverse_image_partition(f));
    MeasurementJoin mj{joined, {}};
    for (Mask b : joined.blocks()) mj.potential.push_back((b & ~state) == 0);
    return mj;
}

std::pair<std::int64_t, std::int64_t> pythagoras_check(const SetPartition& p, const SetKet& s) {
    require_standard(s, "Pythagoras check");
    require_same_universe(p.universe(), s.universe(), "Pythagoras check");
    const std::int64_t left = norm(s).squared;
    std::int64_t right = 0;
    for (Mask b : p.blocks()) right += norm(SetKet(s.basis(), b & s.coords())).squared;
    return {left, right};
}

SetKet evolve(const LinearMap& m, const SetKet& s) {
    if (!is_nonsingular(m)) {
        throw ProcessError("singular map is not a distinction-preserving evolution");
    }
    return apply_map(m, s);
}

namespace {
void require_csca(const AttributeSet& fs) {
    if (!is_csca(fs)) {
        throw InvalidArgument("attribute set is not complete: its join is not the discrete partition");
    }
}

void cascade(const AttributeSet& fs, std::size_t k, const SetKet& state, std::vector<Value>& tuple,
             const Rational& p, std::vector<CascadeOutcome>& out) {
    if (k == fs.size()) {
        out.push_back({state, tuple, p});
        return;
    }
    for (const auto& o : measure_distribution(fs.attributes()[k], state).outcomes) {
        tuple.push_back(o.value);
        cascade(fs, k + 1, o.collapsed, tuple, p * o.probability, out);
        tuple.pop_back();
    }
}
}  // namespace

MeasurementRecord csca_measure(const AttributeSet& fs, const SetKet& s, std::uint64_t seed) {
    require_csca(fs);
    MeasurementRecord rec{seed, {}};
    SetKet state = home(fs.attributes().front(), s);
    require_nonempty(state);
    for (std::size_t k = 0; k < fs.size(); ++k) {
        rec.steps.push_back(measure_sample(fs.attributes()[k], state, seed, k));
        state = rec.steps.back().post;
    }
    if (cardinality(state.coords()) != 1) {
        throw std::logic_error("complete measurement did not end in a singleton");
    }
    return rec;
}

std::vector<CascadeOutcome> csca_distribution(const AttributeSet& fs, const SetKet& s) {
    require_csca(fs);
    const SetKet state = home(fs.attributes().front(), s);
    require_nonempty(state);
    std::vector<CascadeOutcome> out;
    std::vector<Value> tuple;
    cascade(fs, 0, state, tuple, Rational(1), out);
    std::sort(out.begin(), out.end(), [](const CascadeOutcome& a, const CascadeOutcome& b) {
        return a.final_state.coords() < b.final_state.coords();
    });
    return out;
}

}  // namespace qmsets
