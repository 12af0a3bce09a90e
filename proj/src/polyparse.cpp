#include "latcert/polyparse.hpp"

#include <cctype>
#include <map>

#include "latcert/errors.hpp"

namespace latcert {

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++i;
            return true;
        }
        return false;
    }
};

Integer parse_nat(Cursor& c) {
    c.skip_ws();
    size_t start = c.i;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
    if (c.i == start) fail(errc::parse_error, "expected a digit at position " + std::to_string(start));
    return Integer(c.s.substr(start, c.i - start));
}

// mono := coeff ['*'] [var ['^' nat]] | var ['^' nat], coeff := nat ['/' nat]
void parse_monomial(Cursor& c, char& var, std::map<long, Rational>& acc, int sign) {
    Rational coeff(1);
    bool saw_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
        Integer num = parse_nat(c);
        Integer den(1);
        if (c.accept('/')) {
            den = parse_nat(c);
            if (den == 0) fail(errc::parse_error, "zero denominator");
        }
        coeff = Rational(num, den);
        coeff.canonicalize();
        saw_coeff = true;
        c.accept('*');
    }
    long exponent = 0;
    char ch = c.peek();
    if (std::isalpha(static_cast<unsigned char>(ch))) {
        if (var == '\0') var = ch;
        if (ch != var) fail(errc::parse_error, std::string("second variable '") + ch + "'");
        ++c.i;
        exponent = 1;
        if (c.accept('^')) {
            Integer e = parse_nat(c);
            if (e > 64) fail(errc::parse_error, "exponent too large");
            exponent = e.get_si();
        }
        // coefficient may also trail a variable only via '/', e.g. "t/2"
        if (c.accept('/')) {
            Integer den = parse_nat(c);
            if (den == 0) fail(errc::parse_error, "zero denominator");
            coeff /= Rational(den);
        }
    } else if (!saw_coeff) {
        fail(errc::parse_error, "expected a term at position " + std::to_string(c.i));
    }
    acc[exponent] += sign * coeff;
}

RatPoly parse_expression(const std::string& text) {
    Cursor c{text};
    std::map<long, Rational> acc;
    char var = '\0';
    int sign = 1;
    if (c.accept('-')) sign = -1;
    else c.accept('+');
    parse_monomial(c, var, acc, sign);
    while (!c.eof()) {
        if (c.accept('+')) sign = 1;
        else if (c.accept('-')) sign = -1;
        else fail(errc::parse_error, "expected + or - at position " + std::to_string(c.i));
        parse_monomial(c, var, acc, sign);
    }
    long deg = 0;
    for (const auto& [e, v] : acc)
        if (v != 0) deg = std::max(deg, e);
    std::vector<Rational> coeffs(static_cast<size_t>(deg) + 1, Rational(0));
    for (const auto& [e, v] : acc) coeffs[static_cast<size_t>(e)] = v;
    return RatPoly(std::move(coeffs));
}

} // namespace

Rational parse_rational(const std::string& text) {
    Cursor c{text};
    int sign = 1;
    if (c.accept('-')) sign = -1;
    else c.accept('+');
    Integer num = parse_nat(c);
    Integer den(1);
    if (c.accept('/')) {
        den = parse_nat(c);
        if (den == 0) fail(errc::parse_error, "zero denominator");
    }
    if (!c.eof()) fail(errc::parse_error, "trailing characters in '" + text + "'");
    Rational r(sign * num, den);
    r.canonicalize();
    return r;
}

RatPoly parse_poly(const std::string& text) {
    if (text.empty()) fail(errc::parse_error, "empty polynomial");
    if (text.find(',') != std::string::npos) {
        std::vector<Rational> coeffs;
        size_t start = 0;
        while (true) {
            size_t comma = text.find(',', start);
            std::string tok = text.substr(start, comma == std::string::npos ? comma : comma - start);
            coeffs.push_back(parse_rational(tok));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        return RatPoly(std::move(coeffs));
    }
    return parse_expression(text);
}

QMatrix parse_matrix(const Json& rows) {
    if (!rows.is_array() || rows.empty()) fail(errc::parse_error, "matrix must be a non-empty array");
    long d = static_cast<long>(rows.size());
    std::vector<std::vector<Rational>> m;
    for (const auto& row : rows) {
        if (!row.is_array() || static_cast<long>(row.size()) != d)
            fail(errc::parse_error, "matrix must be square");
        std::vector<Rational> r;
        for (const auto& e : row) {
            if (e.is_number_integer())
                r.push_back(Rational(Integer(e.get<long>())));
            else if (e.is_string())
                r.push_back(parse_rational(e.get<std::string>()));
            else
                fail(errc::parse_error, "matrix entries must be integers or rational strings");
        }
        m.push_back(std::move(r));
    }
    return QMatrix::from_rows(m);
}

} // namespace latcert
