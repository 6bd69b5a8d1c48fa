#include "symdeg/poly_parser.hpp"

#include "symdeg/errors.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <set>

namespace symdeg {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Parser {
public:
    Parser(std::string_view text, const std::vector<std::string>& vars) : text_(text), vars_(vars) {}

    MultiPoly parse() {
        MultiPoly result = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return result;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    MultiPoly expr() {
        MultiPoly acc = term();
        for (;;) {
            if (accept('+')) acc += term();
            else if (accept('-')) acc -= term();
            else return acc;
        }
    }

    MultiPoly term() {
        MultiPoly acc = unary();
        while (accept('*')) acc = acc * unary();
        return acc;
    }

    MultiPoly unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    MultiPoly power() {
        MultiPoly base = primary();
        if (!accept('^')) return base;
        skip_ws();
        const auto digits = read_digits();
        if (digits.empty()) fail("expected exponent after '^'");
        const Integer e(std::string(digits), 10);
        if (e > std::numeric_limits<std::uint32_t>::max()) fail("exponent too large");
        return base.pow(static_cast<std::uint32_t>(e.get_ui()));
    }

    std::string_view read_digits() {
        const auto start = pos_;
        while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
        return text_.substr(start, pos_ - start);
    }

    MultiPoly primary() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            MultiPoly inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (is_digit(c)) {
            Integer num(std::string(read_digits()), 10);
            Integer den = 1;
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '/') {
                ++pos_;
                skip_ws();
                const auto digits = read_digits();
                if (digits.empty()) fail("expected denominator after '/'");
                den = Integer(std::string(digits), 10);
                if (den == 0) fail("zero denominator");
            }
            return MultiPoly::constant(vars_.size(), make_rational(num, den));
        }
        if (is_ident_start(c)) {
            const auto start = pos_;
            while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
            const std::string name(text_.substr(start, pos_ - start));
            const auto it = std::find(vars_.begin(), vars_.end(), name);
            if (it == vars_.end()) {
                pos_ = start;
                fail("unknown variable '" + name + "'");
            }
            return MultiPoly::variable(vars_.size(), static_cast<std::size_t>(it - vars_.begin()));
        }
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    const std::vector<std::string>& vars_;
    std::size_t pos_ = 0;
};

} // namespace

MultiPoly parse_poly(std::string_view text, const std::vector<std::string>& vars) {
    return Parser(text, vars).parse();
}

std::vector<std::string> infer_variables(std::string_view text) {
    std::set<std::string> names;
    for (std::size_t i = 0; i < text.size();) {
        if (is_ident_start(text[i])) {
            const auto start = i;
            while (i < text.size() && is_ident_char(text[i])) ++i;
            names.emplace(text.substr(start, i - start));
        } else if (is_digit(text[i])) {
            while (i < text.size() && is_digit(text[i])) ++i;
        } else {
            ++i;
        }
    }
    if (names.empty()) return {};

    std::string prefix;
    std::size_t max_index = 0;
    bool indexed = true;
    for (const auto& name : names) {
        const auto split = name.find_last_not_of("0123456789");
        if (split == std::string::npos || split + 1 == name.size() || name.size() - split - 1 > 6) {
            indexed = false;
            break;
        }
        const std::string head = name.substr(0, split + 1);
        const std::string tail = name.substr(split + 1);
        if (tail.size() > 1 && tail[0] == '0') {
            indexed = false;
            break;
        }
        if (prefix.empty()) prefix = head;
        if (head != prefix) {
            indexed = false;
            break;
        }
        max_index = std::max<std::size_t>(max_index, std::stoul(tail));
    }
    if (!indexed) return {names.begin(), names.end()};

    std::vector<std::string> vars;
    for (std::size_t i = 0; i <= max_index; ++i) vars.push_back(prefix + std::to_string(i));
    return vars;
}

PointQ parse_point(std::string_view text) {
    PointQ p;
    std::size_t start = 0;
    for (;;) {
        const auto comma = text.find(',', start);
        auto field = text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                         : comma - start);
        while (!field.empty() && std::isspace(static_cast<unsigned char>(field.front())))
            field.remove_prefix(1);
        while (!field.empty() && std::isspace(static_cast<unsigned char>(field.back())))
            field.remove_suffix(1);
        if (field.empty()) throw ParseError("empty coordinate", start);
        p.coords.push_back(parse_rational(field));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return p;
}

} // namespace symdeg
