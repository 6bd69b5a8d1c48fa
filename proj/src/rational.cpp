#include "symdeg/rational.hpp"

#include "symdeg/errors.hpp"

#include <cctype>

namespace symdeg {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw PreconditionError("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

Integer parse_integer(std::string_view text) {
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    if (i == text.size()) throw ParseError("expected integer", i);
    for (std::size_t k = i; k < text.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(text[k])))
            throw ParseError("unexpected character '" + std::string(1, text[k]) + "'", k);
    }
    std::string digits(text.substr(i));
    Integer z(digits, 10);
    return (!text.empty() && text[0] == '-') ? Integer(-z) : z;
}

} // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    return make_rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

Rational pow(const Rational& base, std::uint32_t exponent) {
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), exponent);
    Rational q(num, den);
    return q; // powers of a reduced fraction stay reduced
}

} // namespace symdeg
