#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "qmsets/attribute.hpp"
#include "qmsets/error.hpp"
#include "support.hpp"

using namespace qmsets;
using testing::letters;

namespace {

const Universe& abc() {
    static const Universe u = letters(3);
    return u;
}

Attribute f_example() { return Attribute("f", abc(), {"1", "1", "2"}); }
Attribute g_example() { return Attribute("g", abc(), {"x", "y", "y"}); }

}  // namespace

TEST_CASE("value ordering") {
    CHECK(Value("2") < Value("10"));
    CHECK(Value("-1.5") < Value("0"));
    CHECK(Value("10") < Value("a"));
    CHECK(Value("a") < Value("b"));
    CHECK(Value("1.0") != Value("1"));
    CHECK(Value("nan") > Value("99"));
    CHECK(Value(7LL).text() == "7");
}

TEST_CASE("attribute construction") {
    CHECK_THROWS_AS(Attribute("h", abc(), {"1", "2"}), InvalidArgument);
    const auto f = Attribute::from_pairs("f", abc(), {{"c", "2"}, {"a", "1"}, {"b", "1"}});
    CHECK(f.values() == f_example().values());
    CHECK_THROWS_AS(Attribute::from_pairs("f", abc(), {{"a", "1"}, {"b", "1"}}), InvalidArgument);
    CHECK_THROWS_AS(Attribute::from_pairs("f", abc(), {{"a", "1"}, {"a", "2"}, {"b", "1"}, {"c", "1"}}),
                    InvalidArgument);
    CHECK_THROWS_AS(Attribute::from_pairs("f", abc(), {{"a", "1"}, {"b", "1"}, {"z", "1"}}), InvalidArgument);
    CHECK(f.range() == std::vector<Value>{"1", "2"});
    CHECK(f.preimage("1") == 0b011);
    CHECK(f.preimage("3") == 0);
}

TEST_CASE("inverse image partition") {
    CHECK(to_string(inverse_image_partition(f_example())) == "{a,b}|{c}");
    CHECK(inverse_image_partition(Attribute("k", abc(), {"0", "0", "0"})) == indiscrete(abc()));
    CHECK(inverse_image_partition(Attribute("i", abc(), {"3", "1", "2"})) == discrete(abc()));
}

TEST_CASE("compatibility") {
    const Universe other("Up", {"a'", "b'", "c'"});
    CHECK(compatible(f_example(), g_example()));
    CHECK(compatible(f_example(), f_example()));
    CHECK_FALSE(compatible(f_example(), Attribute("h", other, {"1", "1", "2"})));
    CHECK_THROWS_AS(AttributeSet({f_example(), Attribute("h", other, {"1", "1", "2"})}), CompatibilityError);
    CHECK_THROWS_AS(AttributeSet({}), InvalidArgument);
}

TEST_CASE("join of attributes with value tuples") {
    const auto j = join_attributes(AttributeSet({f_example(), g_example()}));
    CHECK(j.partition == discrete(abc()));
    REQUIRE(j.tuples.size() == 3);
    CHECK(to_string(j.tuples[0]) == "(1,x)");
    CHECK(to_string(j.tuples[1]) == "(1,y)");
    CHECK(to_string(j.tuples[2]) == "(2,y)");
    CHECK(join_attributes(AttributeSet({f_example()})).partition == inverse_image_partition(f_example()));
    CHECK(join_attributes(AttributeSet({f_example(), f_example()})).partition ==
          inverse_image_partition(f_example()));
}

TEST_CASE("csca") {
    CHECK(is_csca(AttributeSet({f_example(), g_example()})));
    CHECK_FALSE(is_csca(AttributeSet({Attribute("k", abc(), {"0", "0", "0"})})));
    CHECK(is_csca(AttributeSet({Attribute("i", abc(), {"3", "1", "2"})})));
    CHECK(is_csca(AttributeSet({Attribute("k", letters(1), {"0"})})));
}

TEST_CASE("eigen sets") {
    const auto f = f_example();
    std::vector<std::string> one;
    for (const auto& k : eigen_sets(f, "1")) one.push_back(abc().format(k.subset()));
    CHECK(one == std::vector<std::string>{"{a}", "{b}", "{a,b}"});
    const auto two = eigen_sets(f, "2");
    REQUIRE(two.size() == 1);
    CHECK(two[0].subset() == 0b100);
    CHECK(eigen_sets(f, "3").empty());
}

TEST_CASE("join properties over small attribute sets") {
    for (std::size_t n = 1; n <= 4; ++n) {
        const Universe u = letters(n);
        const auto fns = testing::all_functions(n, 3);
        std::vector<Attribute> attrs;
        for (std::size_t k = 0; k < fns.size(); ++k) attrs.push_back(testing::attribute_of("f", u, fns[k]));
        // Eigenspace dimension law.
        for (const auto& f : attrs) {
            std::size_t total = 0;
            for (const auto& r : f.range()) total += static_cast<std::size_t>(cardinality(f.preimage(r)));
            REQUIRE(total == n);
        }
        // Pair-valued attribute oracle and order insensitivity.
        const std::size_t step = n >= 4 ? 7 : 1;
        for (std::size_t i = 0; i < attrs.size(); i += step) {
            for (std::size_t k = 0; k < attrs.size(); k += step) {
                const auto& f = attrs[i];
                const auto& g = attrs[k];
                std::vector<Value> paired;
                for (std::size_t e = 0; e < n; ++e) paired.emplace_back(f(e).text() + "/" + g(e).text());
                const Attribute fg("fg", u, paired);
                const auto j = join_attributes(AttributeSet({f, g}));
                REQUIRE(j.partition == inverse_image_partition(fg));
                REQUIRE(j.partition == join_attributes(AttributeSet({g, f})).partition);
                if (is_csca(AttributeSet({f, g}))) {
                    std::set<std::vector<Value>> seen(j.tuples.begin(), j.tuples.end());
                    REQUIRE(seen.size() == n);
                }
                if (n <= 3) {
                    for (std::size_t m = 0; m < attrs.size(); m += 3) {
                        const auto& h = attrs[m];
                        const auto fgh = join_attributes(AttributeSet({f, g, h})).partition;
                        REQUIRE(fgh == join_attributes(AttributeSet({h, f, g})).partition);
                        REQUIRE(fgh == join_attributes(AttributeSet({g, h, f})).partition);
                    }
                }
            }
        }
    }
}

TEST_CASE("orderings of four letters grouped by first two") {
    std::string word = "abcd";
    std::vector<std::string> orderings;
    do orderings.push_back(word);
    while (std::next_permutation(word.begin(), word.end()));
    REQUIRE(orderings.size() == 24);
    const Universe u("O", orderings);
    std::vector<Value> firsts;
    for (const auto& o : orderings) {
        std::string two = o.substr(0, 2);
        std::sort(two.begin(), two.end());
        firsts.emplace_back(two);
    }
    const auto p = inverse_image_partition(Attribute("first2", u, firsts));
    CHECK(block_sizes(p) == std::vector<std::size_t>(6, 4));
    const Mask b = p.blocks()[p.block_of(u.require_index("abcd"))];
    CHECK(b == u.mask_of({"abcd", "bacd", "abdc", "badc"}));
}
