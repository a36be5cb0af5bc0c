#include "poly/linalg.hpp"

#include <stdexcept>

namespace poly {

namespace {

void check_rect(const QMatrix& m) {
    for (const auto& row : m)
        if (row.size() != m[0].size()) throw std::invalid_argument("ragged matrix");
}

}  // namespace

std::vector<int> rref(QMatrix& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    check_rect(m);
    const size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = r;
        while (sel < rows && m[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[r]);
        Rational inv = 1 / m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

int rank(QMatrix m) { return static_cast<int>(rref(m).size()); }

Rational det(QMatrix m) {
    const size_t n = m.size();
    if (n == 0) throw std::invalid_argument("empty determinant");
    check_rect(m);
    if (m[0].size() != n) throw std::invalid_argument("determinant of non-square matrix");

    // Scale each row to integers, remembering the factor.
    Rational scale(1);
    std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
    for (size_t i = 0; i < n; ++i) {
        Integer lcm(1);
        for (size_t j = 0; j < n; ++j) {
            Integer den = m[i][j].get_den();
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        }
        scale *= Rational(lcm);
        for (size_t j = 0; j < n; ++j) {
            Rational v = m[i][j] * Rational(lcm);
            a[i][j] = v.get_num();  // denominator is 1 by construction
        }
    }

    // Bareiss: every division below is exact over the integers.
    Integer prev(1);
    int sign = 1;
    for (size_t p = 0; p + 1 < n; ++p) {
        if (a[p][p] == 0) {
            size_t sel = p + 1;
            while (sel < n && a[sel][p] == 0) ++sel;
            if (sel == n) return Rational(0);
            std::swap(a[sel], a[p]);
            sign = -sign;
        }
        for (size_t i = p + 1; i < n; ++i) {
            for (size_t j = p + 1; j < n; ++j) {
                Integer t = a[i][j] * a[p][p] - a[i][p] * a[p][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][p] = 0;
        }
        prev = a[p][p];
    }
    Rational result = Rational(a[n - 1][n - 1]) / scale;
    result.canonicalize();
    return sign > 0 ? result : Rational(-result);
}

std::optional<QMatrix> inverse(const QMatrix& m) {
    const size_t n = m.size();
    if (n == 0) return QMatrix{};
    check_rect(m);
    if (m[0].size() != n) throw std::invalid_argument("inverse of non-square matrix");
    QMatrix aug(n, std::vector<Rational>(2 * n, Rational(0)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
        aug[i][n + i] = 1;
    }
    auto pivots = rref(aug);
    if (pivots.size() != n || pivots.back() != static_cast<int>(n - 1)) return std::nullopt;
    QMatrix inv(n, std::vector<Rational>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

QMatrix mat_mul(const QMatrix& a, const QMatrix& b) {
    if (a.empty() || b.empty()) return {};
    check_rect(a);
    check_rect(b);
    if (a[0].size() != b.size()) throw std::invalid_argument("dimension mismatch in mat_mul");
    QMatrix c(a.size(), std::vector<Rational>(b[0].size(), Rational(0)));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t t = 0; t < b.size(); ++t) {
            if (a[i][t] == 0) continue;
            for (size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][t] * b[t][j];
        }
    return c;
}

QMatrix identity_matrix(int n) {
    QMatrix m(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

}  // namespace poly
