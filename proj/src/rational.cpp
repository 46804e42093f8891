#include "flg/rational.hpp"

#include <cctype>
#include <cstdlib>

#include "flg/errors.hpp"

namespace flg {

namespace {

bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

// mpz_set_str does not accept a leading '+'.
std::string strip_plus(const std::string& s) { return s[0] == '+' ? s.substr(1) : s; }

Rational parse_decimal(const std::string& text) {
    // [sign] digits [ "." digits ] [ ("e"|"E") [sign] digits ]
    std::string mantissa = text;
    long exponent = 0;
    const std::size_t epos = text.find_first_of("eE");
    if (epos != std::string::npos) {
        const std::string exp_part = text.substr(epos + 1);
        if (!is_integer_token(exp_part)) throw InputError("invalid rational literal '" + text + "'");
        exponent = std::strtol(exp_part.c_str(), nullptr, 10);
        if (exponent > 9999 || exponent < -9999)
            throw InputError("exponent out of range in '" + text + "'");
        mantissa = text.substr(0, epos);
    }
    std::string digits;
    const std::size_t dot = mantissa.find('.');
    if (dot != std::string::npos) {
        digits = mantissa.substr(0, dot) + mantissa.substr(dot + 1);
        exponent -= static_cast<long>(mantissa.size() - dot - 1);
    } else {
        digits = mantissa;
    }
    if (!is_integer_token(digits)) throw InputError("invalid rational literal '" + text + "'");

    Rational value{mpz_class(strip_plus(digits), 10)};
    const Rational ten(10);
    for (long i = 0; i < exponent; ++i) value *= ten;
    for (long i = 0; i > exponent; --i) value /= ten;
    value.canonicalize();
    return value;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw InputError("empty rational literal");
    const std::size_t slash = text.find('/');
    if (slash != std::string::npos) {
        const std::string num = text.substr(0, slash);
        const std::string den = text.substr(slash + 1);
        if (!is_integer_token(num) || !is_integer_token(den))
            throw InputError("invalid rational literal '" + text + "'");
        const mpz_class d(strip_plus(den), 10);
        if (d == 0) throw InputError("zero denominator in '" + text + "'");
        Rational value(mpz_class(strip_plus(num), 10), d);
        value.canonicalize();
        return value;
    }
    if (is_integer_token(text)) {
        Rational value{mpz_class(strip_plus(text), 10)};
        return value;
    }
    return parse_decimal(text);
}

std::string rational_str(const Rational& value) { return value.get_str(); }

double to_double(const Rational& value) { return value.get_d(); }

Rational rational_from_double(double value) {
    Rational q;
    mpq_set_d(q.get_mpq_t(), value);
    return q;
}

std::vector<Rational> harmonic_prefix(int n) {
    std::vector<Rational> h(static_cast<std::size_t>(n) + 1, Rational(0));
    for (int j = 1; j <= n; ++j) h[j] = h[j - 1] + Rational(1, j);
    return h;
}

}  // namespace flg
