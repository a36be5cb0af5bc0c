#pragma once

#include "poly/coeff.hpp"
#include "poly/deform.hpp"
#include "poly/partition.hpp"
#include "poly/rational.hpp"
#include "poly/schur.hpp"

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace poly {

// Deformation data for the cohomology ring of G(k,n). I is either symbolic
// (computations carry I_1..I_n as variables) or a numeric vector
// (I_0,...,I_n) with I_0 = 1.
class RingSpec {
public:
    static RingSpec symbolic(int k, int n);
    static RingSpec numeric(int k, int n, const std::vector<Rational>& I);

    int k() const { return k_; }
    int n() const { return n_; }
    bool is_symbolic() const { return !I_.has_value(); }
    const std::vector<Rational>& numeric_invariants() const;
    // I_i as a coefficient: the variable I_i when symbolic, a constant when
    // numeric; I_0 is always 1.
    Coeff invariant(int i) const;
    // The deformation theorems assume 1 < k < n-1; callers outside that range
    // still get exact answers but should surface the flag.
    bool outside_standard_range() const { return !(1 < k_ && k_ < n_ - 1); }
    int max_degree() const { return k_ * (n_ - k_); }

    friend bool operator==(const RingSpec&, const RingSpec&) = default;

private:
    RingSpec(int k, int n, std::optional<std::vector<Rational>> I);
    int k_, n_;
    std::optional<std::vector<Rational>> I_;
};

// kappa_tilde(r) = sum_{i=0}^{min(r,n)} I_i kappa_(r-i) kappa_(1)^i in
// Lambda_k; homogeneous of weight r. Requires r >= 1.
SchurClass kappa_tilde(const RingSpec& spec, int r);

// Determinant with first row kappa_tilde_(lambda_1+j-1) and row i >= 2 equal
// to kappa_(lambda_i+j-i), lambda zero-padded to k parts. Reduces to plain
// Giambelli at I = 0 and to kappa_tilde(r) for lambda = (r).
SchurClass kappa_tilde_lambda(const RingSpec& spec, const Partition& lambda);

// Degree-s slice of the relation ideal: kappa_tilde(r)*kappa_mu for
// n-k+1 <= r <= s and mu of weight s-r with at most k parts, r ascending and
// mu in canonical order.
std::vector<SchurClass> relation_span(const RingSpec& spec, int s);

struct GradedDimReport {
    int dim = 0;         // basis_size - rank
    int rank = 0;
    int basis_size = 0;  // partitions of weight s with <= k parts
    // "numeric": rank over Q; "symbolic-minors": exact nonzero-minor search;
    // "symbolic-sampled": max rank over random numeric I (lower bound that is
    // exact with high probability)
    std::string mode;
    int samples = 0;
};

GradedDimReport graded_dim_report(const RingSpec& spec, int s, unsigned seed = 1);
int graded_dim(const RingSpec& spec, int s, unsigned seed = 1);

// Unique representative of x modulo the degree-s relations, supported on the
// non-pivot partitions of the echelonized span (pivots chosen in canonical
// order). Numeric I only; x must be homogeneous with row_bound k.
SchurClass normal_form(const RingSpec& spec, const SchurClass& x);

// normal_form(a*b).
SchurClass mult_mod(const RingSpec& spec, const SchurClass& a, const SchurClass& b);

// Checks, as an identity of classes with epsilon-polynomial coefficients and
// I_i := C(n,i) eps^i, that
//   sum_{t=0}^{r} C(k+r-1,t) eps^t kappa_(r-t) kappa_(1)^t
//     = sum_{j=0}^{k+r-n-1} eps^j C(k+r-n-1,j) kappa_(1)^j kappa_tilde(r-j).
// Requires r > n-k.
bool b_eps_identity_check(int k, int n, int r);

struct VlocusResult {
    // set for numeric I (and for the trivially independent empty set)
    std::optional<bool> dependent;
    // symbolic mode: all maximal minors of the coefficient matrix; their
    // common vanishing cuts out the locus
    std::vector<Coeff> witness_minors;
    int nrows = 0;  // number of kappa_tilde_lambda classes
    int ncols = 0;  // ambient basis size in that degree
};

// Linear (in)dependence of {kappa_tilde_lambda : |lambda| = m, lambda_1 >=
// n-k, <= k parts} inside the degree-m slice of Lambda_k.
VlocusResult vlocus_test(const RingSpec& spec, int m);

// graded_dim for s = 0..max_degree inclusive.
std::vector<int> betti(const RingSpec& spec, int max_degree, unsigned seed = 1);
// Same values, degrees evaluated in parallel.
std::vector<int> betti_parallel(const RingSpec& spec, int max_degree, unsigned seed = 1);

// Random small-integer invariants (I_0,...,I_n) whose companion matrix passes
// the nondegeneracy test for the given k.
std::vector<Rational> random_generic_invariants(int k, int n, std::mt19937& rng);

// Companion-type matrix with det(lambda*Id + B) = lambda^n + sum I_i lambda^{n-i}.
BMatrix companion_for_invariants(const std::vector<Rational>& I);

}  // namespace poly
