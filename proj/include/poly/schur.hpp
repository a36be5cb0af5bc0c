#pragma once

#include "poly/coeff.hpp"
#include "poly/partition.hpp"

#include <limits>
#include <map>
#include <string>

namespace poly {

inline constexpr int kUnboundedRows = std::numeric_limits<int>::max();

// Littlewood-Richardson coefficient c^nu_{lambda,mu}: the number of LR skew
// semistandard tableaux of shape nu/lambda and content mu (rows weakly
// increasing, columns strictly increasing, reverse reading word a lattice
// word). Memoized behind a shared mutex; the cache never changes results.
long lr_coeff(const Partition& lambda, const Partition& mu, const Partition& nu);

// Element of Lambda_k (symmetric functions in k indeterminates when
// row_bound = k) in the Schur basis, with polynomial coefficients.
// Partition keys never exceed row_bound rows; values are never zero.
class SchurClass {
public:
    using TermMap = std::map<Partition, Coeff, CanonicalLess>;

    explicit SchurClass(int row_bound = kUnboundedRows);
    static SchurClass kappa(const Partition& p, int row_bound);  // projects to zero if too many rows
    static SchurClass one(int row_bound);

    int row_bound() const { return row_bound_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    Coeff coeff(const Partition& p) const;

    // += c * kappa_p, dropping keys beyond row_bound.
    void add(const Partition& p, const Coeff& c);

    SchurClass& operator+=(const SchurClass& o);
    SchurClass& operator-=(const SchurClass& o);
    friend SchurClass operator+(SchurClass a, const SchurClass& b) { return a += b; }
    friend SchurClass operator-(SchurClass a, const SchurClass& b) { return a -= b; }
    // Bilinear extension of the LR rule, truncated to row_bound.
    friend SchurClass operator*(const SchurClass& a, const SchurClass& b);
    SchurClass operator-() const;
    SchurClass& scale(const Coeff& c);
    friend bool operator==(const SchurClass&, const SchurClass&) = default;

    SchurClass substitute(const Coeff::Bindings& b) const;

    // True when all keys share one weight (zero counts as homogeneous).
    bool is_homogeneous() const;
    // Common weight of a nonzero homogeneous class.
    int degree() const;

    std::string str() const;

private:
    int row_bound_;
    TermMap terms_;
};

// kappa_lambda as the Jacobi-Trudi determinant det(kappa_(lambda_i + j - i))
// of one-row classes, expanded through the LR product. Identity with
// kappa(lambda) is a tested invariant; the same determinant shape with a
// substituted first row drives the deformed classes in the ring module.
SchurClass giambelli(const Partition& lambda, int row_bound);

}  // namespace poly
