#pragma once

#include "poly/ring.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace poly {

// Finite sum of coeff * q^d * kappa_nu over a fixed RingSpec, graded with
// deg q = n. The quantum relations are a conjecture; every consumer-facing
// output is labeled accordingly.
class QuantumClass {
public:
    using Key = std::pair<int, Partition>;  // (q-power, partition)
    struct KeyLess {
        bool operator()(const Key& a, const Key& b) const {
            if (a.first != b.first) return a.first < b.first;
            return canonical_less(a.second, b.second);
        }
    };
    using TermMap = std::map<Key, Coeff, KeyLess>;

    explicit QuantumClass(const RingSpec& spec);
    static QuantumClass from_classical(const RingSpec& spec, const SchurClass& x);

    const RingSpec& spec() const { return spec_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    Coeff coeff(int d, const Partition& nu) const;

    // += c * q^d * kappa_nu; drops partitions with more than k parts.
    void add(int d, const Partition& nu, const Coeff& c);

    QuantumClass& operator+=(const QuantumClass& o);
    QuantumClass& operator-=(const QuantumClass& o);
    friend QuantumClass operator+(QuantumClass a, const QuantumClass& b) { return a += b; }
    friend QuantumClass operator-(QuantumClass a, const QuantumClass& b) { return a -= b; }
    QuantumClass& scale(const Coeff& c);
    friend bool operator==(const QuantumClass& a, const QuantumClass& b) {
        return a.spec_ == b.spec_ && a.terms_ == b.terms_;
    }

    // d*n + weight(nu) constant across terms; zero counts as homogeneous.
    bool is_homogeneous() const;
    int degree() const;

    // q -> 0: the d = 0 part as a SchurClass.
    SchurClass classical_limit() const;

    std::string str() const;

private:
    RingSpec spec_;
    TermMap terms_;
};

// Degree-s slice of the conjectured relation ideal: q^d * kappa_mu * g over
// g in {kappa_tilde(r) : n-k+1 <= r <= n-1} u {kappa_tilde(n+i) + q kappa_(i) :
// i >= 0}, ordered by generator degree, then d, then mu canonical.
std::vector<QuantumClass> q_relations(const RingSpec& spec, int s);

// Reduction against the echelonized q_relations on the ambient basis
// {q^d kappa_nu : d*n + |nu| = s, <= k parts}; result supported on box
// partitions. Numeric I only; linear and idempotent.
QuantumClass q_normal_form(const QuantumClass& x);

// q_normal_form of kappa_lambda * kappa_mu.
QuantumClass q_mult(const RingSpec& spec, const Partition& lambda, const Partition& mu);
// Same product extended bilinearly to arbitrary classes.
QuantumClass q_mult(const QuantumClass& a, const QuantumClass& b);

}  // namespace poly
