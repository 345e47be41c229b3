#include "kntw/arith.hpp"

#include <limits>

#include "kntw/errors.hpp"

namespace kntw {

BigInt binomial(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    // result stays integral: after step i it equals C(n - k + i, i)
    for (std::int64_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

std::uint64_t binomial_u64(std::int64_t n, std::int64_t k) {
    BigInt value = binomial(n, k);
    if (value > std::numeric_limits<std::uint64_t>::max())
        throw ResourceError("C(" + std::to_string(n) + "," + std::to_string(k) +
                            ") does not fit in 64 bits");
    return value.convert_to<std::uint64_t>();
}

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
    if (text.empty()) throw InvalidInput("malformed rational '" + std::string(whole) + "'");
    std::size_t pos = 0;
    bool negative = false;
    if (text[0] == '-' || text[0] == '+') {
        negative = text[0] == '-';
        pos = 1;
    }
    if (pos == text.size()) throw InvalidInput("malformed rational '" + std::string(whole) + "'");
    BigInt value = 0;
    for (; pos < text.size(); ++pos) {
        char c = text[pos];
        if (c < '0' || c > '9')
            throw InvalidInput("malformed rational '" + std::string(whole) + "'");
        value = value * 10 + (c - '0');
    }
    return negative ? BigInt(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
    BigInt num = parse_integer(text.substr(0, slash), text);
    BigInt den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

std::string to_string(const Rational& r) {
    auto num = boost::multiprecision::numerator(r);
    auto den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

BigInt ceil(const Rational& r) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    BigInt q = num / den;  // truncates toward zero
    if (q * den != num && num > 0) q += 1;
    return q;
}

}  // namespace kntw
