#pragma once

#include "poly/partition.hpp"
#include "poly/rational.hpp"

#include <vector>

namespace poly {

// GL(n) weight; the length is the rank and is fixed by the caller.
using Weight = std::vector<int>;

struct MutationResult {
    bool vanishes = true;
    int degree = 0;       // number of mutations performed
    Weight dominant;      // weakly decreasing when !vanishes
};

struct BwbResult {
    bool vanishes = true;
    int degree = 0;
    Weight dominant;
    Integer dim = 0;
    // set when (k,n) falls outside 1 < k < n-1; results are still exact
    bool outside_standard_range = false;
};

// Closed form: with rho = (n-1,...,0), a repeated entry of alpha+rho means the
// cohomology vanishes; otherwise degree = inversions of alpha+rho and the
// dominant weight is sort-descending(alpha+rho) - rho.
MutationResult mutate_to_dominant(const Weight& alpha);

// Reference implementation: repeatedly rewrite the leftmost ascent
// (alpha_i, alpha_{i+1}) with alpha_i < alpha_{i+1} to (alpha_{i+1}-1, alpha_i+1),
// reporting vanishing when the rewrite fixes the pair. Agreement with the
// closed form is a tested invariant.
MutationResult mutate_iterative(Weight alpha);

// Dimension of the irreducible GL(n) module with highest weight alpha
// (n = alpha.size()): prod_{i<j} (alpha_i - alpha_j + j - i)/(j - i).
Integer weyl_dim(const Weight& alpha);

// S*-weight of the bundle K_lambda S on G(k,n): (-lambda_k,...,-lambda_1),
// lambda zero-padded to k parts.
Weight from_KS(const Partition& lambda, int k);

// Cohomology of K_beta S* (x) K_gamma Q* on G(k,n): concatenate alpha = (beta,
// gamma), mutate to dominant, attach the Weyl dimension. beta and gamma must
// each be weakly decreasing with lengths k and n-k.
BwbResult bundle_cohomology(int k, int n, const Weight& beta, const Weight& gamma);

}  // namespace poly
