#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sqdist {

// Expression templates are switched off: we take lots of references into
// matrices and polynomials while writing back into them, and eager
// evaluation keeps those aliases safe.
using BigInt =
    boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                  boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline std::string to_string(const Rational& r) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

class RationalParseError : public std::invalid_argument {
public:
    explicit RationalParseError(const std::string& what) : std::invalid_argument(what) {}
};

namespace detail {

// Decimal-only integer parse; avoids the octal reading cpp_int gives
// strings with leading zeros.
inline BigInt parse_big_int(std::string digits, const std::string& original) {
    std::string sign;
    if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) {
        sign = digits[0] == '-' ? "-" : "";
        digits.erase(digits.begin());
    }
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw RationalParseError("bad rational literal: " + original);
    std::size_t first = digits.find_first_not_of('0');
    digits = first == std::string::npos ? "0" : digits.substr(first);
    return BigInt(sign + digits);
}

}  // namespace detail

// Accepts "p", "p/q", plain decimals like "0.25" and scientific forms like
// "1e-9" or "2.5e3". The result is exact.
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw RationalParseError("empty rational literal");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        BigInt num = detail::parse_big_int(text.substr(0, slash), text);
        BigInt den = detail::parse_big_int(text.substr(slash + 1), text);
        if (den == 0) throw RationalParseError("zero denominator: " + text);
        return Rational(num, den);
    }

    std::string mantissa = text;
    long exponent = 0;
    auto epos = text.find_first_of("eE");
    if (epos != std::string::npos) {
        mantissa = text.substr(0, epos);
        try {
            exponent = std::stol(text.substr(epos + 1));
        } catch (const std::exception&) {
            throw RationalParseError("bad exponent: " + text);
        }
    }

    std::string digits;
    long frac_digits = 0;
    bool seen_point = false;
    for (std::size_t i = 0; i < mantissa.size(); ++i) {
        char c = mantissa[i];
        if (c == '.') {
            if (seen_point) throw RationalParseError("bad rational literal: " + text);
            seen_point = true;
        } else {
            if (seen_point) ++frac_digits;
            digits.push_back(c);
        }
    }
    BigInt num = detail::parse_big_int(digits, text);
    long net = exponent - frac_digits;
    BigInt pow10 = 1;
    for (long i = 0; i < (net < 0 ? -net : net); ++i) pow10 *= 10;
    if (net >= 0) return Rational(num * pow10);
    return Rational(num, pow10);
}

// Decimal rendering for human-readable output only; never fed back into
// exact computation.
inline std::string to_decimal(const Rational& r, int digits = 9) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    bool negative = num < 0;
    if (negative) num = -num;
    BigInt scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    BigInt scaled = (num * scale + den / 2) / den;
    BigInt whole = scaled / scale;
    BigInt frac = scaled % scale;
    std::string fs = frac.str();
    while (static_cast<int>(fs.size()) < digits) fs.insert(fs.begin(), '0');
    std::string out = (negative ? "-" : "") + whole.str();
    if (digits > 0) out += "." + fs;
    return out;
}

}  // namespace sqdist
