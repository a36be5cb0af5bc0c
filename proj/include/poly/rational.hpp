#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace poly {

// Exact rationals. mpq_class keeps gcd-canonical form with positive
// denominator as long as every value entering arithmetic is canonical,
// so construction goes through the helpers below.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p" or "p/q" in base 10.
inline Rational parse_rational(const std::string& s) {
    Rational r;
    if (s.empty() || r.set_str(s, 10) != 0)
        throw std::invalid_argument("malformed rational '" + s + "'");
    if (r.get_den() == 0) throw std::domain_error("rational with zero denominator");
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

// C(n, k), zero outside 0 <= k <= n.
inline Integer binom(long n, long k) {
    if (k < 0 || k > n || n < 0) return Integer(0);
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

}  // namespace poly
