#include "monocross/rational.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cctype>

namespace monocross {

BigInt binomial(const BigInt& n, unsigned k) {
    if (n < 0 || BigInt(k) > n) return 0;
    BigInt num = 1;
    BigInt den = 1;
    for (unsigned i = 0; i < k; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    return num / den;
}

Rational parse_rational(const std::string& token) {
    auto parse_int = [](const std::string& s) -> BigInt {
        if (s.empty()) throw std::invalid_argument("empty number");
        std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
        if (i == s.size()) throw std::invalid_argument("bare sign: '" + s + "'");
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                throw std::invalid_argument("not an integer: '" + s + "'");
        return BigInt(s);
    };
    auto slash = token.find('/');
    if (slash == std::string::npos) return Rational(parse_int(token));
    BigInt num = parse_int(token.substr(0, slash));
    BigInt den = parse_int(token.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: '" + token + "'");
    return Rational(num, den);
}

std::string format_rational(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

std::string decimal_string(const Rational& r, int digits) {
    if (digits < 0) throw std::invalid_argument("negative digit count");
    BigInt num = numerator(r);
    BigInt den = denominator(r);
    bool negative = num < 0;
    if (negative) num = -num;
    // scale so that one extra digit is available for rounding
    BigInt scale = 1;
    for (int i = 0; i <= digits; ++i) scale *= 10;
    BigInt v = num * scale / den;  // floor of |r| * 10^(digits+1)
    BigInt last = v % 10;
    v /= 10;
    if (last >= 5) v += 1;
    std::string raw = v.str();
    if (static_cast<int>(raw.size()) <= digits)
        raw.insert(0, digits + 1 - raw.size(), '0');
    std::string out;
    if (negative && v != 0) out += "-";
    out += raw.substr(0, raw.size() - digits);
    if (digits > 0) {
        out += ".";
        out += raw.substr(raw.size() - digits);
    }
    return out;
}

}  // namespace monocross
