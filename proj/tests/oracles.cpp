#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace oracle {

using poly::Integer;
using poly::Partition;
using poly::Rational;

namespace {

// Rows weakly increase left to right, columns strictly increase downward.
void fill_ssyt(const Partition& shape, int nvars, std::vector<std::vector<int>>& t,
               int r, int c, MonomialMap& out) {
    if (r == static_cast<int>(shape.size())) {
        std::vector<int> expo(nvars, 0);
        for (const auto& row : t)
            for (int v : row) expo[v - 1]++;
        out[expo] += 1;
        return;
    }
    if (c == shape[r]) {
        fill_ssyt(shape, nvars, t, r + 1, 0, out);
        return;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, t[r][c - 1]);
    if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);
    for (int v = lo; v <= nvars; ++v) {
        t[r][c] = v;
        fill_ssyt(shape, nvars, t, r, c + 1, out);
    }
}

}  // namespace

MonomialMap schur_monomials(const Partition& lambda, int nvars) {
    MonomialMap out;
    if (static_cast<int>(lambda.size()) > nvars) return out;
    std::vector<std::vector<int>> t;
    for (int len : lambda) t.emplace_back(len, 0);
    fill_ssyt(lambda, nvars, t, 0, 0, out);
    return out;
}

MonomialMap convolve(const MonomialMap& a, const MonomialMap& b) {
    MonomialMap out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            std::vector<int> e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out[e] += ca * cb;
        }
    return out;
}

std::map<Partition, Integer> product_schur_expansion(const Partition& lambda,
                                                     const Partition& mu) {
    const int nvars = std::max<int>(1, static_cast<int>(lambda.size() + mu.size()));
    MonomialMap p = convolve(schur_monomials(lambda, nvars), schur_monomials(mu, nvars));
    std::map<Partition, Integer> out;
    while (!p.empty()) {
        // The lex-largest exponent of any Schur combination is the largest
        // remaining shape itself, with the sought coefficient.
        auto it = std::prev(p.end());
        std::vector<int> lead = it->first;
        const Integer c = it->second;
        if (!std::is_sorted(lead.begin(), lead.end(), std::greater<int>()))
            throw std::logic_error("schur peel: leading exponent is not a partition");
        while (!lead.empty() && lead.back() == 0) lead.pop_back();
        for (const auto& [e, m] : schur_monomials(lead, nvars)) {
            auto jt = p.find(e);
            if (jt == p.end()) {
                p.emplace(e, -c * m);
                continue;
            }
            jt->second -= c * m;
            if (jt->second == 0) p.erase(jt);
        }
        out[lead] = c;
    }
    return out;
}

std::map<std::pair<int, Partition>, Integer> rim_hook_product(const Partition& lambda,
                                                              const Partition& mu, int k,
                                                              int n) {
    std::map<std::pair<int, Partition>, Integer> out;
    for (const auto& [nu, c] : product_schur_expansion(lambda, mu)) {
        if (static_cast<int>(nu.size()) > k) continue;
        std::vector<long> beta(k);
        for (int i = 0; i < k; ++i)
            beta[i] = (i < static_cast<int>(nu.size()) ? nu[i] : 0) + k - 1 - i;
        int d = 0, sign = 1;
        bool dead = false;
        while (true) {
            int imax = static_cast<int>(std::max_element(beta.begin(), beta.end()) -
                                        beta.begin());
            if (beta[imax] <= n - 1) break;
            const long to = beta[imax] - n;
            int crossings = 0;
            for (int j = 0; j < k; ++j) {
                if (j == imax) continue;
                if (beta[j] == to) {
                    dead = true;
                    break;
                }
                if (to < beta[j] && beta[j] < beta[imax]) crossings++;
            }
            if (dead) break;
            beta[imax] = to;
            d++;
            if ((k - (crossings + 1)) % 2 != 0) sign = -sign;
        }
        if (dead) continue;
        std::sort(beta.begin(), beta.end(), std::greater<long>());
        Partition rho(k);
        for (int i = 0; i < k; ++i) rho[i] = static_cast<int>(beta[i] - (k - 1 - i));
        while (!rho.empty() && rho.back() == 0) rho.pop_back();
        auto& slot = out[{d, rho}];
        slot += sign > 0 ? c : -c;
        if (slot == 0) out.erase({d, rho});
    }
    return out;
}

bool subset_sum_degenerate(const std::vector<Rational>& diag, int k) {
    const int n = static_cast<int>(diag.size());
    if (k < 0 || k > n) return false;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != k) continue;
        Rational sum(0);
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) sum += diag[i];
        if (sum == -1) return true;
    }
    return false;
}

namespace {

long bounded_count(int s, int rows, int maxpart) {
    if (s == 0) return 1;
    if (rows == 0 || maxpart == 0) return 0;
    long total = 0;
    for (int p = 1; p <= std::min(maxpart, s); ++p) total += bounded_count(s - p, rows - 1, p);
    return total;
}

}  // namespace

long box_count(int k, int n, int s) {
    if (s < 0) return 0;
    return bounded_count(s, k, n - k);
}

}  // namespace oracle
