#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qmsets/error.hpp"
#include "qmsets/lattice.hpp"
#include "qmsets/partition.hpp"
#include "support.hpp"

using namespace qmsets;
using testing::letters;

namespace {

SetPartition make(const Universe& u, const std::string& text) { return parse_partition(u, text); }

std::vector<SetPartition> all(const Universe& u) {
    std::vector<SetPartition> out;
    for (auto& b : testing::all_partitions(u.size())) out.emplace_back(u, b);
    return out;
}

}  // namespace

TEST_CASE("universe construction and labels") {
    const Universe u("U", {"a", "b", "c"});
    CHECK(u.size() == 3);
    CHECK(u.mask_of({"a", "c"}) == 0b101);
    CHECK(u.format(0b110) == "{b,c}");
    CHECK(u.format(0) == "{}");
    CHECK(u.require_index("b") == 1);
    CHECK_THROWS_AS(u.require_index("z"), InvalidArgument);
    CHECK_THROWS_AS(Universe("E", {}), InvalidArgument);
    CHECK_THROWS_AS(Universe("D", {"a", "a"}), InvalidArgument);
    std::vector<std::string> big(65);
    for (std::size_t i = 0; i < big.size(); ++i) big[i] = "x" + std::to_string(i);
    CHECK_THROWS_AS(Universe("B", big), InvalidArgument);
    big.pop_back();
    CHECK(Universe("B", big).all() == ~Mask{0});
}

TEST_CASE("universes are distinct domains even with equal labels") {
    const Universe u("U", {"a", "b"});
    const Universe v("U", {"a", "b"});
    CHECK(u == u);
    CHECK_FALSE(u == v);
    CHECK_THROWS_AS(join(indiscrete(u), indiscrete(v)), CompatibilityError);
}

TEST_CASE("partition constructor rejects broken block lists") {
    const Universe u = letters(3);
    CHECK_THROWS_AS(SetPartition(u, {0b011, 0b110}), InvalidArgument);  // overlap
    CHECK_THROWS_AS(SetPartition(u, {0b011}), InvalidArgument);          // does not cover
    CHECK_THROWS_AS(SetPartition(u, {0b111, 0}), InvalidArgument);       // empty block
    CHECK_THROWS_AS(SetPartition(u, {0b1111}), InvalidArgument);         // foreign element
    CHECK(validate_blocks(u, {0b011, 0b100}).empty());
    CHECK_FALSE(validate_blocks(u, {0b011, 0b110}).empty());
    CHECK(SetPartition(u, {0b100, 0b011}) == SetPartition(u, {0b011, 0b100}));
}

TEST_CASE("indiscrete and discrete") {
    const Universe u = letters(3);
    CHECK(to_string(indiscrete(u)) == "{a,b,c}");
    CHECK(to_string(discrete(u)) == "{a}|{b}|{c}");
    const Universe one = letters(1);
    CHECK(indiscrete(one) == discrete(one));
    CHECK(to_string(indiscrete(one)) == "{a}");
    for (std::size_t n = 1; n <= 8; ++n) {
        const Universe w = letters(n);
        CHECK(indiscrete(w).block_count() == 1);
        CHECK(dit(discrete(w)).size() == n * (n - 1));
        CHECK(dit(indiscrete(w)).empty());
    }
}

TEST_CASE("join examples") {
    const Universe u = letters(3);
    const auto p = make(u, "{a}|{b,c}");
    const auto q = make(u, "{a,b}|{c}");
    CHECK(join(p, q) == discrete(u));
    CHECK(join(p, p) == p);
    CHECK(join(p, indiscrete(u)) == p);
}

TEST_CASE("dit example and relation properties") {
    const Universe u = letters(3);
    const auto d = dit(make(u, "{a}|{b,c}"));
    using P = std::pair<std::size_t, std::size_t>;
    CHECK(d.pairs() == std::vector<P>{{0, 1}, {0, 2}, {1, 0}, {2, 0}});
    for (std::size_t n = 1; n <= 5; ++n) {
        for (const auto& p : all(letters(n))) {
            const auto ds = dit(p);
            REQUIRE(ds.is_irreflexive());
            REQUIRE(ds.is_symmetric());
            REQUIRE(ds.complement_is_equivalence());
            const auto pairs = ds.pairs();
            REQUIRE(std::set(pairs.begin(), pairs.end()) ==
                    testing::dit_pairs(p.blocks(), n));
        }
    }
}

TEST_CASE("join laws hold on every pair and triple for |U| <= 4") {
    for (std::size_t n = 1; n <= 4; ++n) {
        const Universe u = letters(n);
        const auto ps = all(u);
        for (const auto& p : ps) {
            REQUIRE(join(p, indiscrete(u)) == p);
            REQUIRE(join(p, p) == p);
            for (const auto& q : ps) {
                const auto j = join(p, q);
                REQUIRE(j == join(q, p));
                REQUIRE(testing::as_set(j.blocks()) == testing::join_blocks(p.blocks(), q.blocks(), n));
                REQUIRE(dit(j) == dit(p).unite(dit(q)));
                REQUIRE(refines(p, q) == dit(q).is_subset_of(dit(p)));
                if (n <= 3) {
                    for (const auto& r : ps) REQUIRE(join(join(p, q), r) == join(p, join(q, r)));
                }
            }
        }
    }
}

TEST_CASE("refines") {
    const Universe u = letters(3);
    for (const auto& q : all(u)) CHECK(refines(discrete(u), q));
    CHECK_FALSE(refines(make(u, "{a}|{b,c}"), make(u, "{a,b}|{c}")));
    CHECK(refines(make(u, "{a}|{b,c}"), indiscrete(u)));
}

TEST_CASE("meet is the finest common coarsening") {
    const Universe u = letters(4);
    const auto ps = all(u);
    for (const auto& p : ps) {
        for (const auto& q : ps) {
            const auto m = meet(p, q);
            REQUIRE(refines(p, m));
            REQUIRE(refines(q, m));
            for (const auto& r : ps) {
                if (refines(p, r) && refines(q, r)) REQUIRE(refines(m, r));
            }
        }
    }
}

TEST_CASE("logical entropy") {
    const Universe u = letters(3);
    CHECK(logical_entropy(indiscrete(u)) == Rational(0));
    CHECK(logical_entropy(make(u, "{a}|{b,c}")) == Rational(4, 9));
    for (std::int64_t n = 1; n <= 6; ++n) {
        const Universe w = letters(static_cast<std::size_t>(n));
        CHECK(logical_entropy(discrete(w)) == Rational(n * (n - 1), n * n));
        const Rational top = Rational(1) - Rational(1, n);
        for (const auto& p : enumerate_partitions(w)) {
            const Rational h = logical_entropy(p);
            REQUIRE(h >= 0);
            REQUIRE(h <= top);
            REQUIRE((h == 0) == (p == indiscrete(w)));
            REQUIRE((h == top) == (p == discrete(w)));
        }
    }
}

TEST_CASE("enumeration matches Bell numbers and a brute-force generator") {
    const std::size_t bell[] = {1, 2, 5, 15, 52, 203};
    for (std::size_t n = 1; n <= 6; ++n) {
        const Universe u = letters(n);
        const auto ps = enumerate_partitions(u);
        REQUIRE(ps.size() == bell[n - 1]);
        std::set<std::set<Mask>> got;
        for (const auto& p : ps) got.insert(testing::as_set(p.blocks()));
        std::set<std::set<Mask>> want;
        for (const auto& b : testing::all_partitions(n)) want.insert(testing::as_set(b));
        REQUIRE(got == want);
    }
    CHECK_THROWS_AS(enumerate_partitions(letters(7)), BoundExceeded);
    CHECK(enumerate_partitions(letters(7), 7).size() == 877);
}

TEST_CASE("block sizes") {
    const Universe u = letters(3);
    CHECK(block_sizes(make(u, "{a}|{b,c}")) == std::vector<std::size_t>{2, 1});
    CHECK(block_sizes(indiscrete(letters(4))) == std::vector<std::size_t>{4});
}

TEST_CASE("text form round-trips") {
    const Universe u = letters(4);
    for (const auto& p : enumerate_partitions(u)) REQUIRE(parse_partition(u, to_string(p)) == p);
    CHECK(parse_partition(u, "{d, c} | {b,a}") == make(u, "{a,b}|{c,d}"));
    CHECK_THROWS_AS(parse_partition(u, "{a,b}|{c}"), InvalidArgument);
    CHECK_THROWS_AS(parse_partition(u, "{a,b}|{b,c,d}"), InvalidArgument);
    CHECK_THROWS_AS(parse_partition(u, "{a,b}|{c,x}|{d}"), InvalidArgument);
}

TEST_CASE("lattice covers equal brute-force transitive reduction") {
    for (std::size_t n = 1; n <= 5; ++n) {
        const auto lat = build_lattice(letters(n));
        const auto& ns = lat.nodes;
        std::set<std::pair<std::size_t, std::size_t>> want;
        for (std::size_t lo = 0; lo < ns.size(); ++lo) {
            for (std::size_t hi = 0; hi < ns.size(); ++hi) {
                if (lo == hi || !refines(ns[hi], ns[lo])) continue;
                bool between = false;
                for (std::size_t m = 0; m < ns.size() && !between; ++m) {
                    between = m != lo && m != hi && refines(ns[m], ns[lo]) && refines(ns[hi], ns[m]);
                }
                if (!between) want.emplace(lo, hi);
            }
        }
        REQUIRE(std::set(lat.covers.begin(), lat.covers.end()) == want);
    }
    CHECK(build_lattice(letters(1)).nodes.size() == 1);
    CHECK(build_lattice(letters(1)).covers.empty());
    CHECK(build_lattice(letters(3)).nodes.size() == 5);
}

TEST_CASE("lattice rendering") {
    const std::string want =
        "lattice U: 5 partitions, 6 covering edges\n"
        "rank 3:  {a}|{b}|{c}\n"
        "rank 2:  {a,b}|{c}  {a,c}|{b}  {a}|{b,c}\n"
        "rank 1:  {a,b,c}\n"
        "edges:\n"
        "  {a,b,c} < {a,b}|{c}\n"
        "  {a,b,c} < {a,c}|{b}\n"
        "  {a,b,c} < {a}|{b,c}\n"
        "  {a,b}|{c} < {a}|{b}|{c}\n"
        "  {a,c}|{b} < {a}|{b}|{c}\n"
        "  {a}|{b,c} < {a}|{b}|{c}\n";
    CHECK(render_lattice(build_lattice(letters(3))) == want);
    CHECK_THROWS_AS(build_lattice(letters(7)), BoundExceeded);
}
