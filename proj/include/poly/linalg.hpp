#pragma once

#include "poly/rational.hpp"

#include <optional>
#include <vector>

namespace poly {

// Row-major rectangular matrix over Rational.
using QMatrix = std::vector<std::vector<Rational>>;

// Reduced row echelon form in place; returns pivot column indices ascending.
// Pivot choice scans columns left to right, so column order decides which
// coordinates get eliminated.
std::vector<int> rref(QMatrix& m);

int rank(QMatrix m);

// Exact determinant by fraction-free Bareiss elimination on a row-scaled
// integer matrix.
Rational det(QMatrix m);

std::optional<QMatrix> inverse(const QMatrix& m);

QMatrix mat_mul(const QMatrix& a, const QMatrix& b);
QMatrix identity_matrix(int n);

// Determinant over any commutative ring via cofactor expansion; fine for the
// small orders used here (Giambelli-type determinants, symbolic minors).
template <class R>
R det_ring(const std::vector<std::vector<R>>& m, const R& zero) {
    const size_t n = m.size();
    if (n == 0) throw std::invalid_argument("empty determinant");
    if (n == 1) return m[0][0];
    R acc = zero;
    for (size_t j = 0; j < n; ++j) {
        std::vector<std::vector<R>> minor;
        minor.reserve(n - 1);
        for (size_t i = 1; i < n; ++i) {
            std::vector<R> row;
            row.reserve(n - 1);
            for (size_t t = 0; t < n; ++t)
                if (t != j) row.push_back(m[i][t]);
            minor.push_back(std::move(row));
        }
        R term = m[0][j] * det_ring(minor, zero);
        if (j % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

}  // namespace poly
