#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qmsets/attribute.hpp"
#include "qmsets/gf2.hpp"
#include "qmsets/partition.hpp"
#include "qmsets/rational.hpp"

namespace qmsets {

/// Overlap count <T|S> = |T ∩ S|.
struct Bracket {
    std::int64_t value = 0;
    bool operator==(const Bracket&) const = default;
};

/// Bracket of two standard-basis kets. Throws BasisError when either operand is
/// expressed in another basis: the bracket is defined on universe subsets only.
Bracket bracket(const SetKet& t, const SetKet& s);

struct Norm {
    std::int64_t squared = 0;  // ||S||^2 = |S|, exact
    double value = 0.0;        // sqrt(|S|)
};

/// Standard-basis kets only (BasisError otherwise).
Norm norm(const SetKet& s);

struct KetBraResolution {
    /// Σ_u <T|{u}><{u}|S>, computed termwise.
    std::int64_t value = 0;
    /// |S> = Σ_u <{u}|S> |{u}>: the singletons with a nonzero coefficient.
    std::vector<SetKet> terms;
};

/// Throws BasisError for non-standard operands and std::logic_error if the
/// termwise sum ever disagrees with bracket(t, s).
KetBraResolution ketbra_resolve(const SetKet& t, const SetKet& s);

struct Outcome {
    Value value;
    Rational probability;
    SetKet collapsed;
};

/// Outcomes with nonzero probability, ordered by value.
struct OutcomeDistribution {
    SetKet state;
    std::vector<Outcome> outcomes;

    Rational total() const;
};

/// Pr({u}|S) = 1/|S| for each u in S. Outcome values are element labels.
/// Throws BasisError for a non-standard ket and EmptyStateError for S = ∅.
OutcomeDistribution born_distribution(const SetKet& s);

/// One term r[f^{-1}(r) ∩ ()] of a spectral decomposition.
struct SpectralTerm {
    Value value;
    Mask eigenspace;  // f^{-1}(r)

    /// The projection S ↦ f^{-1}(r) ∩ S on a standard-basis ket.
    SetKet project(const SetKet& s) const;
};

/// Terms in ascending value order. Completeness (the projections sum to the
/// identity) and pairwise orthogonality are checked on construction.
std::vector<SpectralTerm> spectral_decompose(const Attribute& f);

/// Pr(r|S) = |f^{-1}(r) ∩ S| / |S| with collapsed states f^{-1}(r) ∩ S.
///
/// A ket expressed in another basis is first re-expressed in the standard basis,
/// the attribute's home basis. Throws CompatibilityError on a universe mismatch
/// and EmptyStateError for S = ∅.
OutcomeDistribution measure_distribution(const Attribute& f, const SetKet& s);

struct MeasurementStep {
    std::string attribute;
    Value value;
    SetKet pre;
    SetKet post;
    Rational probability;
};

struct MeasurementRecord {
    std::uint64_t seed = 0;
    std::vector<MeasurementStep> steps;

    /// The value tuple read off the steps, in measurement order.
    std::vector<Value> tuple() const;
    /// Product of the step probabilities.
    Rational probability() const;
};

/// Uniform draw from [0, n) determined only by (seed, step).
///
/// Each draw seeds a std::mt19937_64 through std::seed_seq{seed words, step words},
/// and uses rejection to stay exactly uniform, so the result is reproducible
/// across platforms and independent of evaluation order.
std::uint64_t uniform_draw(std::uint64_t seed, std::uint64_t step, std::uint64_t n);

/// Samples one outcome of measure_distribution(f, s). The draw picks an element
/// of S uniformly, so outcome r is chosen with probability |f^{-1}(r) ∩ S|/|S|.
MeasurementStep measure_sample(const Attribute& f, const SetKet& s, std::uint64_t seed,
                               std::uint64_t step = 0);

/// The join of {S, S^c} (just {U} when S = U) with the inverse-image partition of f.
struct MeasurementJoin {
    SetPartition partition;
    /// potential[k]: block k lies inside S, i.e. it is a possible collapsed state.
    std::vector<bool> potential;
};

MeasurementJoin measurement_join(const Attribute& f, const SetKet& s);

/// (||S||^2, Σ_B ||B ∩ S||^2).
std::pair<std::int64_t, std::int64_t> pythagoras_check(const SetPartition& p, const SetKet& s);

/// A distinction-preserving evolution: applies m after checking it is nonsingular.
/// Throws ProcessError for a singular map.
SetKet evolve(const LinearMap& m, const SetKet& s);

/// Sequential sampled measurement of every attribute of a complete set, threading
/// the collapsed state; step k uses (seed, k). The final state is a singleton.
/// Throws InvalidArgument when fs is not complete and EmptyStateError for S = ∅.
MeasurementRecord csca_measure(const AttributeSet& fs, const SetKet& s, std::uint64_t seed);

/// Exact distribution of the final state of csca_measure (chain rule over the steps),
/// as (final singleton, value tuple, probability) in element order.
struct CascadeOutcome {
    SetKet final_state;
    std::vector<Value> tuple;
    Rational probability;
};
std::vector<CascadeOutcome> csca_distribution(const AttributeSet& fs, const SetKet& s);

}  // namespace qmsets
