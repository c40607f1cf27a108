#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>
#include <boost/version.hpp>

#if BOOST_VERSION < 107500
namespace boost {
// Boost.Rational before 1.75 defines integer == rational as rational == integer,
// which C++20 rewrites back into the same call; these exact matches win instead.
#define QMSETS_RATIONAL_EQ(Int)                                                               \
    inline bool operator==(const rational<std::int64_t>& a, Int b) {                          \
        return a.denominator() == 1 && a.numerator() == static_cast<std::int64_t>(b);          \
    }                                                                                         \
    inline bool operator==(Int a, const rational<std::int64_t>& b) { return b == a; }
QMSETS_RATIONAL_EQ(int)
QMSETS_RATIONAL_EQ(long)
QMSETS_RATIONAL_EQ(long long)
#undef QMSETS_RATIONAL_EQ
}  // namespace boost
#endif

namespace qmsets {

/// Exact probabilities and entropies.
using Rational = boost::rational<std::int64_t>;

/// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// Fixed-point rendering with the given number of decimals (display only).
std::string to_decimal(const Rational& r, int decimals = 6);

}  // namespace qmsets
