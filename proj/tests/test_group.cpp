#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qmsets/error.hpp"
#include "qmsets/group.hpp"
#include "support.hpp"

using namespace qmsets;
using testing::letters;

namespace {

std::vector<Permutation> all_permutations(const Universe& u) {
    std::vector<std::size_t> img(u.size());
    std::iota(img.begin(), img.end(), 0);
    std::vector<Permutation> out;
    do out.emplace_back(u, img);
    while (std::next_permutation(img.begin(), img.end()));
    return out;
}

std::set<Mask> union_find_orbits(const Universe& u, const std::vector<Permutation>& gens) {
    testing::UnionFind uf(u.size());
    for (const auto& t : gens) {
        for (std::size_t e = 0; e < u.size(); ++e) uf.unite(e, t(e));
    }
    return uf.classes();
}

}  // namespace

TEST_CASE("cycle notation") {
    const Universe u = letters(4);
    const auto p = parse_cycles(u, "(a b c)");
    CHECK(p(0) == 1);
    CHECK(p(1) == 2);
    CHECK(p(2) == 0);
    CHECK(p(3) == 3);
    CHECK(to_cycles(p) == "(a b c)");
    CHECK(to_cycles(parse_cycles(u, "(c a)(d b)")) == "(a c)(b d)");
    CHECK(parse_cycles(u, "()").is_identity());
    CHECK(to_cycles(Permutation::identity(u)) == "()");
    CHECK_THROWS_AS(parse_cycles(u, "(a b a)"), InvalidArgument);
    CHECK_THROWS_AS(parse_cycles(u, "(a z)"), InvalidArgument);
    CHECK_THROWS_AS(parse_cycles(u, "(a b"), InvalidArgument);
    CHECK_THROWS_AS(Permutation(u, {0, 0, 1, 2}), InvalidArgument);
}

TEST_CASE("composition order: first, then second") {
    const Universe u = letters(3);
    const auto ab = parse_cycles(u, "(a b)");
    const auto bc = parse_cycles(u, "(b c)");
    // a -> b under (a b), then b -> c under (b c).
    CHECK(then(ab, bc)(0) == 2);
    CHECK(then(bc, ab)(0) == 1);
    CHECK(then(ab, ab.inverse()).is_identity());
    const auto abc = parse_cycles(u, "(a b c)");
    CHECK(abc.inverse() == parse_cycles(u, "(a c b)"));
    CHECK(abc.apply(0b011) == 0b110);
}

TEST_CASE("generate group") {
    const Universe u = letters(3);
    CHECK(generate_group(u, {}).order() == 1);
    CHECK(generate_group(u, {parse_cycles(u, "(a b c)")}).order() == 3);
    const auto s3 = generate_group(u, {parse_cycles(u, "(a b)"), parse_cycles(u, "(a b c)")});
    CHECK(s3.order() == 6);
    for (const auto& p : all_permutations(u)) CHECK(s3.contains(p));
    const Universe seven = letters(7);
    CHECK(generate_group(seven, {parse_cycles(seven, "(a b c d e f g)")}).order() == 7);
    const Universe big = letters(8);
    CHECK_THROWS_AS(generate_group(big, {parse_cycles(big, "(a b)"), parse_cycles(big, "(a b c d e f g h)")}),
                    BoundExceeded);
    CHECK_THROWS_AS(generate_group(u, {parse_cycles(letters(3), "(a b)")}), CompatibilityError);
}

TEST_CASE("group axioms") {
    const Universe u = letters(3);
    const auto e = Permutation::identity(u);
    CHECK(verify_group_axioms(TransformationGroup(u, {e})).ok());
    const auto abc = parse_cycles(u, "(a b c)");
    const auto broken = verify_group_axioms(TransformationGroup(u, {e, abc}));
    CHECK_FALSE(broken.ok());
    REQUIRE(broken.non_closed_pair.has_value());
    CHECK(then(broken.non_closed_pair->first, broken.non_closed_pair->second) == parse_cycles(u, "(a c b)"));
    CHECK_FALSE(broken.describe().empty());
    CHECK_FALSE(verify_group_axioms(TransformationGroup(u, {abc})).has_identity);
    CHECK_THROWS_AS(orbit_partition(TransformationGroup(u, {e, abc})), InvalidGroupError);
    CHECK_NOTHROW(orbit_partition(TransformationGroup(u, {e, abc, abc.inverse()})));
}

TEST_CASE("orbit examples") {
    const Universe u = letters(3);
    CHECK(orbit_partition(generate_group(u, {})) == discrete(u));
    CHECK(orbit_partition(generate_group(u, {parse_cycles(u, "(a b c)")})) == indiscrete(u));
    CHECK(to_string(orbit_partition(generate_group(u, {parse_cycles(u, "(a b)")}))) == "{a,b}|{c}");
}

TEST_CASE("invariance") {
    const Universe u = letters(3);
    const auto g = generate_group(u, {parse_cycles(u, "(a b)")});
    CHECK_FALSE(is_invariant(g, SetKet::from_subset(u, 0b001)));
    CHECK(is_invariant(g, SetKet::from_subset(u, 0b011)));
    CHECK(is_invariant(g, SetKet::from_subset(u, u.all())));
}

TEST_CASE("orbits agree with union-find, are minimal invariant sets and satisfy orbit-stabilizer") {
    for (std::size_t n = 1; n <= 4; ++n) {
        const Universe u = letters(n);
        const auto perms = all_permutations(u);
        for (const auto& s : perms) {
            for (const auto& t : perms) {
                const auto g = generate_group(u, {s, t});
                REQUIRE(verify_group_axioms(g).ok());
                const auto orbits = orbit_partition(g);
                REQUIRE(testing::as_set(orbits.blocks()) == union_find_orbits(u, {s, t}));
                for (Mask b : orbits.blocks()) {
                    REQUIRE(is_invariant(g, SetKet::from_subset(u, b)));
                    for (Mask sub = (b - 1) & b; sub; sub = (sub - 1) & b) {
                        REQUIRE_FALSE(is_invariant(g, SetKet::from_subset(u, sub)));
                    }
                    for (std::size_t e : bit_indices(b)) {
                        std::size_t stab = 0;
                        for (const auto& x : g.elements()) stab += x(e) == e;
                        REQUIRE(stab * static_cast<std::size_t>(cardinality(b)) == g.order());
                    }
                }
            }
        }
    }
}

TEST_CASE("orbit relation is an equivalence exactly when the axioms hold") {
    // Closure fails: the set-level relation u ~ t(u) is then not transitive.
    const Universe u = letters(3);
    const auto e = Permutation::identity(u);
    const auto ab = parse_cycles(u, "(a b)");
    const auto bc = parse_cycles(u, "(b c)");
    const TransformationGroup g(u, {e, ab, bc});
    const auto report = verify_group_axioms(g);
    CHECK_FALSE(report.ok());
    bool transitive = true;
    auto related = [&](std::size_t x, std::size_t y) {
        for (const auto& t : g.elements()) {
            if (t(x) == y) return true;
        }
        return false;
    };
    for (std::size_t x = 0; x < 3; ++x) {
        for (std::size_t y = 0; y < 3; ++y) {
            for (std::size_t z = 0; z < 3; ++z) {
                if (related(x, y) && related(y, z) && !related(x, z)) transitive = false;
            }
        }
    }
    CHECK_FALSE(transitive);
}
