#include "qmsets/rational.hpp"

#include <cstdlib>

namespace qmsets {

namespace {
__extension__ typedef __int128 wide_int;
}  // namespace

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string to_decimal(const Rational& r, int decimals) {
    // Round half away from zero on the exact value.
    std::int64_t num = r.numerator();
    const std::int64_t den = r.denominator();
    const bool negative = num < 0;
    if (negative) num = -num;
    std::int64_t scale = 1;
    for (int i = 0; i < decimals; ++i) scale *= 10;
    const wide_int scaled = (static_cast<wide_int>(num) * scale * 2 + den) / (2 * den);
    const auto whole = static_cast<std::int64_t>(scaled / scale);
    const auto frac = static_cast<std::int64_t>(scaled % scale);
    std::string out = negative && scaled != 0 ? "-" : "";
    out += std::to_string(whole);
    if (decimals > 0) {
        std::string f = std::to_string(frac);
        out += '.';
        out += std::string(static_cast<std::size_t>(decimals) - f.size(), '0');
        out += f;
    }
    return out;
}

}  // namespace qmsets
