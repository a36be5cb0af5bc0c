#pragma once

#include "poly/linalg.hpp"
#include "poly/rational.hpp"

#include <vector>

namespace poly {

// Square matrix of the deformation data; the size is entries.size().
using BMatrix = QMatrix;

// (I_0, I_1, ..., I_n) with det(lambda*Id + B) = sum I_i lambda^{n-i}; I_0 = 1.
using Invariants = std::vector<Rational>;

struct DegeneracyResult {
    bool degenerate = false;
    Rational determinant;
};

Invariants char_invariants(const BMatrix& B);

// Matrix of Id + D_B on the k-th exterior power, D_B the derivation extension
// of B, in the lexicographic basis of k-subsets. Columns hold images
// (T e_S = sum_S' M[S'][S] e_S', same convention as B itself).
QMatrix induced_wedge_operator(const BMatrix& B, int k);

// Degenerate iff det(Id + D_B) = 0 on the k-th exterior power, equivalently
// some k-subset of eigenvalues sums to -1. The determinant is exact.
DegeneracyResult is_degenerate(const BMatrix& B, int k);

// (1+k*eps)B + eps*Id; rejects 1+k*eps = 0.
BMatrix et_transform(const BMatrix& B, int k, const Rational& eps);

// g B g^{-1}; rejects singular g.
BMatrix conjugate(const BMatrix& B, const BMatrix& g);

// Newton's identities over any commutative Q-algebra: power traces
// p_m = tr(B^m), then m*e_m = sum_{i=1..m} (-1)^{i-1} e_{m-i} p_i.
// Only integer denominators appear, so entries stay polynomial.
template <class R>
std::vector<R> char_invariants_ring(const std::vector<std::vector<R>>& B,
                                    const R& zero, const R& one) {
    const int n = static_cast<int>(B.size());
    std::vector<R> p(n + 1, zero);
    std::vector<std::vector<R>> pw = B;
    for (int m = 1; m <= n; ++m) {
        if (m > 1) {
            std::vector<std::vector<R>> next(n, std::vector<R>(n, zero));
            for (int i = 0; i < n; ++i)
                for (int t = 0; t < n; ++t)
                    for (int j = 0; j < n; ++j)
                        next[i][j] += pw[i][t] * B[t][j];
            pw = std::move(next);
        }
        for (int i = 0; i < n; ++i) p[m] += pw[i][i];
    }
    std::vector<R> e(n + 1, zero);
    e[0] = one;
    for (int m = 1; m <= n; ++m) {
        R acc = zero;
        for (int i = 1; i <= m; ++i) {
            R term = e[m - i] * p[i];
            if (i % 2 == 1)
                acc += term;
            else
                acc -= term;
        }
        R inv_m(make_rational(1, m));
        e[m] = acc * inv_m;
    }
    return e;
}

}  // namespace poly
