#include "segre/rational.hpp"

#include "segre/errors.hpp"

#include <cctype>
#include <stdexcept>

namespace segre {

namespace {

// Optional sign followed by at least one digit; no whitespace, no base
// prefixes. cpp_int's own string constructor accepts hex, which we do not.
Int parse_integer(std::string_view text, std::string_view whole) {
    bool negative = false;
    std::size_t pos = 0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }
    if (pos == text.size())
        throw ParseError("invalid rational \"" + std::string(whole) + "\": missing digits");
    for (std::size_t i = pos; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw ParseError("invalid rational \"" + std::string(whole) +
                             "\": unexpected character '" + text[i] + "'");
    Int magnitude(std::string(text.substr(pos)));
    return negative ? Int(-magnitude) : magnitude;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const std::size_t slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
    Int num = parse_integer(text.substr(0, slash), text);
    Int den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) throw ParseError("invalid rational \"" + std::string(text) + "\": zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

std::string to_string(const Rational& value) {
    std::string out = numerator(value).str();
    if (denominator(value) != 1) {
        out += '/';
        out += denominator(value).str();
    }
    return out;
}

Int binomial(Exp n, Exp k) {
    if (k < 0) return 0;
    Int result = 1;
    // Exact at every step: after multiplying i consecutive integers, i!
    // divides the running product.
    for (Exp i = 1; i <= k; ++i) {
        result *= Int(n - i + 1);
        result /= Int(i);
    }
    return result;
}

}  // namespace segre
