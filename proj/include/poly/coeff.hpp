#pragma once

#include "poly/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace poly {

// Exponent vector of one monomial in I_1..I_n, eps, q.
// I is trimmed of trailing zeros so equal monomials compare equal.
struct Monomial {
    int q = 0;
    int eps = 0;
    std::vector<int> I;  // I[t] = exponent of I_{t+1}

    void trim() {
        while (!I.empty() && I.back() == 0) I.pop_back();
    }
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Storage order: lexicographic on (q, eps, I_n, ..., I_1). Determinism only.
struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse multivariate polynomial over Rational. Values of the map are never
// zero; the empty map is the zero polynomial.
class Coeff {
public:
    using TermMap = std::map<Monomial, Rational, MonomialLess>;

    Coeff() = default;
    explicit Coeff(const Rational& c);
    explicit Coeff(long c);

    static Coeff monomial(Monomial m, const Rational& c);
    static Coeff var_I(int i);  // i >= 1
    static Coeff var_eps();
    static Coeff var_q();

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Constant term; the whole value when is_constant().
    Rational constant_value() const;

    // Max over terms of sum(i * e_{I_i}) + e_eps + n * e_q; -1 for zero.
    int weighted_degree(int n) const;

    Coeff& operator+=(const Coeff& o);
    Coeff& operator-=(const Coeff& o);
    Coeff& operator*=(const Coeff& o);
    friend Coeff operator+(Coeff a, const Coeff& b) { return a += b; }
    friend Coeff operator-(Coeff a, const Coeff& b) { return a -= b; }
    friend Coeff operator*(const Coeff& a, const Coeff& b);
    Coeff operator-() const;
    Coeff& scale(const Rational& c);
    friend bool operator==(const Coeff&, const Coeff&) = default;

    // Simultaneous substitution; unbound indeterminates stay themselves.
    struct Bindings;
    Coeff substitute(const Bindings& b) const;

    const TermMap& terms() const { return terms_; }
    std::string str() const;

private:
    void add_term(const Monomial& m, const Rational& c);
    TermMap terms_;
};

struct Coeff::Bindings {
    std::map<int, Coeff> I;
    std::optional<Coeff> eps;
    std::optional<Coeff> q;
    static Bindings numeric_I(const std::vector<Rational>& values);  // values[i] binds I_{i+1}
};

Coeff pow(const Coeff& base, int e);

}  // namespace poly
