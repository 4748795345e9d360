#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace su2mod {

using Integer  = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// value - floor(value), always in [0, 1)
inline Rational mod_one(const Rational& value) {
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
    return value - Rational(fl);
}

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

// "p" when the value is an integer, "p/q" otherwise
inline std::string to_string(const Rational& value) {
    if (is_integer(value)) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

// accepts "p", "p/q" and plain decimals such as "-0.125"
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("parse_rational: empty string");
    if (const auto slash = text.find('/'); slash != std::string::npos) {
        const Integer num(text.substr(0, slash), 10);
        const Integer den(text.substr(slash + 1), 10);
        if (den == 0) throw std::invalid_argument("parse_rational: zero denominator");
        Rational r(num);
        r /= Rational(den);
        return r;
    }
    const auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(Integer(text, 10));
    const std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    const Integer num(digits, 10);
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(text.size() - dot - 1));
    Rational r(num);
    r /= Rational(den);
    return r;
}

}  // namespace su2mod
