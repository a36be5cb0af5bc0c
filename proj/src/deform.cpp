#include "poly/deform.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace poly {

namespace {

int checked_size(const BMatrix& B) {
    const int n = static_cast<int>(B.size());
    for (const auto& row : B)
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("matrix is not square");
    return n;
}

// All k-subsets of {0,...,n-1}, lexicographic.
std::vector<std::vector<int>> k_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v < n; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

int inversion_sign(const std::vector<int>& seq) {
    int inv = 0;
    for (size_t i = 0; i < seq.size(); ++i)
        for (size_t j = i + 1; j < seq.size(); ++j)
            if (seq[i] > seq[j]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

}  // namespace

Invariants char_invariants(const BMatrix& B) {
    checked_size(B);
    return char_invariants_ring<Rational>(B, Rational(0), Rational(1));
}

QMatrix induced_wedge_operator(const BMatrix& B, int k) {
    const int n = checked_size(B);
    if (k < 1 || k > n) throw std::invalid_argument("k out of range");
    const auto subsets = k_subsets(n, k);
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < subsets.size(); ++i) index[subsets[i]] = static_cast<int>(i);

    const int N = static_cast<int>(subsets.size());
    QMatrix M(N, std::vector<Rational>(N, Rational(0)));
    for (int col = 0; col < N; ++col) {
        const auto& S = subsets[col];
        M[col][col] += 1;
        for (int t = 0; t < k; ++t) {
            for (int j = 0; j < n; ++j) {
                const Rational& b = B[j][S[t]];
                if (b == 0) continue;
                if (j == S[t]) {
                    M[col][col] += b;
                    continue;
                }
                if (std::binary_search(S.begin(), S.end(), j)) continue;  // repeated factor
                std::vector<int> seq = S;
                seq[t] = j;
                int sign = inversion_sign(seq);
                std::sort(seq.begin(), seq.end());
                M[index.at(seq)][col] += sign > 0 ? b : Rational(-b);
            }
        }
    }
    return M;
}

DegeneracyResult is_degenerate(const BMatrix& B, int k) {
    DegeneracyResult r;
    r.determinant = det(induced_wedge_operator(B, k));
    r.degenerate = (r.determinant == 0);
    return r;
}

BMatrix et_transform(const BMatrix& B, int k, const Rational& eps) {
    const int n = checked_size(B);
    Rational scale = Rational(1) + Rational(k) * eps;
    if (scale == 0) throw std::domain_error("epsilon-transformation undefined: 1 + k*eps = 0");
    BMatrix out = B;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) out[i][j] *= scale;
        out[i][i] += eps;
    }
    return out;
}

BMatrix conjugate(const BMatrix& B, const BMatrix& g) {
    const int n = checked_size(B);
    if (checked_size(g) != n) throw std::invalid_argument("size mismatch");
    auto gi = inverse(g);
    if (!gi) throw std::invalid_argument("conjugating matrix is singular");
    return mat_mul(mat_mul(g, B), *gi);
}

}  // namespace poly
