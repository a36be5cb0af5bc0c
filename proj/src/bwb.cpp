#include "poly/bwb.hpp"

#include <algorithm>
#include <stdexcept>

namespace poly {

namespace {

std::vector<int> rho_shifted(const Weight& alpha) {
    const int n = static_cast<int>(alpha.size());
    std::vector<int> a(n);
    for (int i = 0; i < n; ++i) a[i] = alpha[i] + (n - 1 - i);
    return a;
}

bool weakly_decreasing(const Weight& w) {
    for (size_t i = 1; i < w.size(); ++i)
        if (w[i - 1] < w[i]) return false;
    return true;
}

}  // namespace

MutationResult mutate_to_dominant(const Weight& alpha) {
    const int n = static_cast<int>(alpha.size());
    std::vector<int> a = rho_shifted(alpha);
    std::vector<int> sorted = a;
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    for (int i = 1; i < n; ++i)
        if (sorted[i - 1] == sorted[i]) return MutationResult{};
    int inv = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (a[i] < a[j]) ++inv;
    MutationResult r;
    r.vanishes = false;
    r.degree = inv;
    r.dominant.resize(n);
    for (int i = 0; i < n; ++i) r.dominant[i] = sorted[i] - (n - 1 - i);
    return r;
}

MutationResult mutate_iterative(Weight alpha) {
    const int n = static_cast<int>(alpha.size());
    int steps = 0;
    for (;;) {
        int i = 0;
        while (i + 1 < n && alpha[i] >= alpha[i + 1]) ++i;
        if (i + 1 >= n) {
            MutationResult r;
            r.vanishes = false;
            r.degree = steps;
            r.dominant = std::move(alpha);
            return r;
        }
        if (alpha[i] + 1 == alpha[i + 1]) return MutationResult{};  // fixed point
        int lo = alpha[i];
        alpha[i] = alpha[i + 1] - 1;
        alpha[i + 1] = lo + 1;
        ++steps;
    }
}

Integer weyl_dim(const Weight& alpha) {
    if (!weakly_decreasing(alpha)) throw std::invalid_argument("weight is not dominant");
    const int n = static_cast<int>(alpha.size());
    Rational acc(1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            acc *= make_rational(alpha[i] - alpha[j] + j - i, j - i);
    if (acc.get_den() != 1) throw std::logic_error("Weyl dimension is not integral");
    return acc.get_num();
}

Weight from_KS(const Partition& lambda, int k) {
    Partition p = make_partition(lambda);
    if (num_parts(p) > k) throw std::invalid_argument("partition has more than k parts");
    Weight w(k, 0);
    for (int i = 0; i < num_parts(p); ++i) w[k - 1 - i] = -p[i];
    return w;
}

BwbResult bundle_cohomology(int k, int n, const Weight& beta, const Weight& gamma) {
    if (k < 0 || n < 0 || k > n) throw std::invalid_argument("need 0 <= k <= n");
    if (static_cast<int>(beta.size()) != k || static_cast<int>(gamma.size()) != n - k)
        throw std::invalid_argument("weight lengths must be k and n-k");
    if (!weakly_decreasing(beta) || !weakly_decreasing(gamma))
        throw std::invalid_argument("beta and gamma must be weakly decreasing");
    BwbResult r;
    r.outside_standard_range = !(1 < k && k < n - 1);
    Weight alpha = beta;
    alpha.insert(alpha.end(), gamma.begin(), gamma.end());
    MutationResult m = mutate_to_dominant(alpha);
    if (m.vanishes) return r;
    r.vanishes = false;
    r.degree = m.degree;
    r.dominant = std::move(m.dominant);
    r.dim = weyl_dim(r.dominant);
    return r;
}

}  // namespace poly
