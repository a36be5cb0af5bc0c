#include "poly/ring.hpp"

#include "poly/linalg.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace poly {

namespace {

// Echelonized degree-s relations for a numeric spec, shared by normal_form,
// graded_dim and the quantum layer's classical limit checks.
struct DegreeEchelon {
    std::vector<Partition> basis;  // canonical order
    QMatrix rows;                  // rref'd, one row per pivot
    std::vector<int> pivots;
};

using EchelonKey = std::tuple<int, int, std::vector<Rational>, int>;
std::map<EchelonKey, std::shared_ptr<const DegreeEchelon>> echelon_cache;
std::shared_mutex echelon_cache_mutex;

Rational constant_of(const Coeff& c) { return c.constant_value(); }

std::vector<Rational> coords(const SchurClass& x, const std::vector<Partition>& basis) {
    std::map<Partition, int, CanonicalLess> index;
    for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i);
    std::vector<Rational> v(basis.size(), Rational(0));
    for (const auto& [p, c] : x.terms()) v[index.at(p)] = constant_of(c);
    return v;
}

std::shared_ptr<const DegreeEchelon> get_echelon(const RingSpec& spec, int s) {
    EchelonKey key{spec.k(), spec.n(), spec.numeric_invariants(), s};
    {
        std::shared_lock lock(echelon_cache_mutex);
        auto it = echelon_cache.find(key);
        if (it != echelon_cache.end()) return it->second;
    }
    auto e = std::make_shared<DegreeEchelon>();
    e->basis = enumerate_partitions(s, spec.k());
    QMatrix m;
    for (const auto& rel : relation_span(spec, s)) m.push_back(coords(rel, e->basis));
    e->pivots = rref(m);
    m.resize(e->pivots.size());  // rows below the pivot rows are zero
    e->rows = std::move(m);
    {
        std::unique_lock lock(echelon_cache_mutex);
        echelon_cache.emplace(std::move(key), e);
    }
    return e;
}

std::vector<Rational> reduce_against(const DegreeEchelon& e, std::vector<Rational> v) {
    for (size_t i = 0; i < e.rows.size(); ++i) {
        Rational fac = v[e.pivots[i]];  // copy: the loop clears v[pivot]
        if (fac == 0) continue;
        for (size_t j = 0; j < v.size(); ++j)
            if (e.rows[i][j] != 0) v[j] -= fac * e.rows[i][j];
    }
    return v;
}

// Exact symbolic rank by largest nonvanishing minor; only for small matrices.
int symbolic_rank_by_minors(const std::vector<std::vector<Coeff>>& m) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    for (int t = std::min(rows, cols); t >= 1; --t) {
        std::vector<int> rsel(t), csel(t);
        auto pick = [&](auto&& self, std::vector<int>& sel, int limit, int pos, int start,
                        auto&& inner) -> bool {
            if (pos == t) return inner();
            for (int v = start; v < limit; ++v) {
                sel[pos] = v;
                if (self(self, sel, limit, pos + 1, v + 1, inner)) return true;
            }
            return false;
        };
        auto test_minor = [&]() -> bool {
            std::vector<std::vector<Coeff>> sub(t, std::vector<Coeff>(t));
            for (int i = 0; i < t; ++i)
                for (int j = 0; j < t; ++j) sub[i][j] = m[rsel[i]][csel[j]];
            return !det_ring(sub, Coeff()).is_zero();
        };
        auto cols_then_test = [&]() -> bool {
            return pick(pick, csel, cols, 0, 0, test_minor);
        };
        if (pick(pick, rsel, rows, 0, 0, cols_then_test)) return t;
    }
    return 0;
}

}  // namespace

RingSpec::RingSpec(int k, int n, std::optional<std::vector<Rational>> I)
    : k_(k), n_(n), I_(std::move(I)) {
    if (k < 1 || k >= n) throw std::invalid_argument("need 1 <= k < n");
    if (I_) {
        if (static_cast<int>(I_->size()) != n + 1)
            throw std::invalid_argument("invariants must have length n+1");
        if ((*I_)[0] != 1) throw std::invalid_argument("I_0 must be 1");
    }
}

RingSpec RingSpec::symbolic(int k, int n) { return RingSpec(k, n, std::nullopt); }

RingSpec RingSpec::numeric(int k, int n, const std::vector<Rational>& I) {
    return RingSpec(k, n, I);
}

const std::vector<Rational>& RingSpec::numeric_invariants() const {
    if (!I_) throw std::domain_error("spec has symbolic invariants");
    return *I_;
}

Coeff RingSpec::invariant(int i) const {
    if (i < 0 || i > n_) throw std::invalid_argument("invariant index out of range");
    if (i == 0) return Coeff(1L);
    if (I_) return Coeff((*I_)[i]);
    return Coeff::var_I(i);
}

SchurClass kappa_tilde(const RingSpec& spec, int r) {
    if (r < 1) throw std::invalid_argument("kappa_tilde needs r >= 1");
    const int k = spec.k();
    SchurClass acc(k);
    SchurClass pow1 = SchurClass::one(k);
    const SchurClass k1 = SchurClass::kappa({1}, k);
    const int top = std::min(r, spec.n());
    for (int i = 0; i <= top; ++i) {
        if (i > 0) pow1 = pow1 * k1;
        Coeff ci = spec.invariant(i);
        if (ci.is_zero()) continue;
        SchurClass term = (r - i > 0) ? SchurClass::kappa({r - i}, k) * pow1 : pow1;
        term.scale(ci);
        acc += term;
    }
    return acc;
}

namespace {

SchurClass kappa_tilde_entry(const RingSpec& spec, int m) {
    if (m < 0) return SchurClass(spec.k());
    if (m == 0) return SchurClass::one(spec.k());
    return kappa_tilde(spec, m);
}

SchurClass kappa_entry(const RingSpec& spec, int m) {
    if (m < 0) return SchurClass(spec.k());
    if (m == 0) return SchurClass::one(spec.k());
    return SchurClass::kappa({m}, spec.k());
}

}  // namespace

SchurClass kappa_tilde_lambda(const RingSpec& spec, const Partition& lambda) {
    Partition p = make_partition(lambda);
    const int k = spec.k();
    if (num_parts(p) > k) throw std::invalid_argument("partition has more than k parts");
    if (p.empty()) return SchurClass::one(k);
    std::vector<std::vector<SchurClass>> m(k, std::vector<SchurClass>(k, SchurClass(k)));
    for (int j = 0; j < k; ++j) m[0][j] = kappa_tilde_entry(spec, p[0] + j);
    for (int i = 1; i < k; ++i)
        for (int j = 0; j < k; ++j) m[i][j] = kappa_entry(spec, part(p, i + 1) + j - i);
    return det_ring(m, SchurClass(k));
}

std::vector<SchurClass> relation_span(const RingSpec& spec, int s) {
    if (s < 0) throw std::invalid_argument("negative degree");
    std::vector<SchurClass> out;
    for (int r = spec.n() - spec.k() + 1; r <= s; ++r) {
        SchurClass kt = kappa_tilde(spec, r);
        for (const auto& mu : enumerate_partitions(s - r, spec.k())) {
            if (mu.empty())
                out.push_back(kt);
            else
                out.push_back(kt * SchurClass::kappa(mu, spec.k()));
        }
    }
    return out;
}

GradedDimReport graded_dim_report(const RingSpec& spec, int s, unsigned seed) {
    GradedDimReport rep;
    rep.basis_size = static_cast<int>(enumerate_partitions(s, spec.k()).size());
    if (!spec.is_symbolic()) {
        rep.rank = static_cast<int>(get_echelon(spec, s)->pivots.size());
        rep.mode = "numeric";
        rep.dim = rep.basis_size - rep.rank;
        return rep;
    }
    auto span = relation_span(spec, s);
    auto basis = enumerate_partitions(s, spec.k());
    std::map<Partition, int, CanonicalLess> index;
    for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i);
    std::vector<std::vector<Coeff>> m(span.size(), std::vector<Coeff>(basis.size()));
    for (size_t i = 0; i < span.size(); ++i)
        for (const auto& [p, c] : span[i].terms()) m[i][index.at(p)] = c;

    if (m.size() <= 6 && basis.size() <= 6) {
        rep.rank = symbolic_rank_by_minors(m);
        rep.mode = "symbolic-minors";
    } else {
        // Schwartz-Zippel style: rank can only drop on a measure-zero set, so
        // the max over a few random integer evaluations is the generic rank.
        std::mt19937 rng(seed);
        std::uniform_int_distribution<int> dist(-7, 7);
        const int kSamples = 6;
        int best = 0;
        for (int t = 0; t < kSamples; ++t) {
            std::vector<Rational> vals(spec.n());
            for (auto& v : vals) v = dist(rng);
            Coeff::Bindings b = Coeff::Bindings::numeric_I(vals);
            QMatrix q(m.size(), std::vector<Rational>(basis.size()));
            for (size_t i = 0; i < m.size(); ++i)
                for (size_t j = 0; j < basis.size(); ++j)
                    q[i][j] = m[i][j].substitute(b).constant_value();
            best = std::max(best, rank(std::move(q)));
        }
        rep.rank = best;
        rep.mode = "symbolic-sampled";
        rep.samples = kSamples;
    }
    rep.dim = rep.basis_size - rep.rank;
    return rep;
}

int graded_dim(const RingSpec& spec, int s, unsigned seed) {
    return graded_dim_report(spec, s, seed).dim;
}

SchurClass normal_form(const RingSpec& spec, const SchurClass& x) {
    if (spec.is_symbolic())
        throw std::domain_error("normal form requires numeric invariants");
    if (x.row_bound() != spec.k()) throw std::invalid_argument("row bound must equal k");
    if (!x.is_homogeneous()) throw std::invalid_argument("normal form needs homogeneous input");
    if (x.is_zero()) return x;
    const int s = x.degree();
    auto e = get_echelon(spec, s);
    std::vector<Rational> v = reduce_against(*e, coords(x, e->basis));
    SchurClass out(spec.k());
    for (size_t j = 0; j < v.size(); ++j)
        if (v[j] != 0) out.add(e->basis[j], Coeff(v[j]));
    return out;
}

SchurClass mult_mod(const RingSpec& spec, const SchurClass& a, const SchurClass& b) {
    return normal_form(spec, a * b);
}

bool b_eps_identity_check(int k, int n, int r) {
    if (k < 1 || k >= n) throw std::invalid_argument("need 1 <= k < n");
    if (r <= n - k) throw std::invalid_argument("identity needs r > n-k");
    const Coeff eps = Coeff::var_eps();

    SchurClass lhs(k);
    const SchurClass k1 = SchurClass::kappa({1}, k);
    SchurClass pow1 = SchurClass::one(k);
    for (int t = 0; t <= r; ++t) {
        if (t > 0) pow1 = pow1 * k1;
        SchurClass term = (r - t > 0) ? SchurClass::kappa({r - t}, k) * pow1 : pow1;
        Coeff c = pow(eps, t);
        c.scale(Rational(binom(k + r - 1, t)));
        term.scale(c);
        lhs += term;
    }

    // kappa_tilde with I_i := C(n,i) eps^i
    Coeff::Bindings bind;
    for (int i = 1; i <= n; ++i) {
        Coeff v = pow(eps, i);
        v.scale(Rational(binom(n, i)));
        bind.I[i] = v;
    }
    RingSpec sym = RingSpec::symbolic(k, n);
    SchurClass rhs(k);
    pow1 = SchurClass::one(k);
    for (int j = 0; j <= k + r - n - 1; ++j) {
        if (j > 0) pow1 = pow1 * k1;
        SchurClass term = pow1 * kappa_tilde(sym, r - j).substitute(bind);
        Coeff c = pow(eps, j);
        c.scale(Rational(binom(k + r - n - 1, j)));
        term.scale(c);
        rhs += term;
    }
    return lhs == rhs;
}

VlocusResult vlocus_test(const RingSpec& spec, int m) {
    VlocusResult res;
    const int k = spec.k(), n = spec.n();
    std::vector<Partition> shapes;
    for (const auto& p : enumerate_partitions(m, k))
        if (!p.empty() && p[0] >= n - k) shapes.push_back(p);
    auto basis = enumerate_partitions(m, k);
    res.nrows = static_cast<int>(shapes.size());
    res.ncols = static_cast<int>(basis.size());
    if (shapes.empty()) {
        res.dependent = false;
        return res;
    }
    std::map<Partition, int, CanonicalLess> index;
    for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i);

    if (!spec.is_symbolic()) {
        QMatrix q(shapes.size(), std::vector<Rational>(basis.size(), Rational(0)));
        for (size_t i = 0; i < shapes.size(); ++i) {
            const SchurClass cls = kappa_tilde_lambda(spec, shapes[i]);
            for (const auto& [p, c] : cls.terms()) q[i][index.at(p)] = c.constant_value();
        }
        res.dependent = rank(std::move(q)) < res.nrows;
        return res;
    }

    if (res.nrows > 6 || res.ncols > 12)
        throw std::domain_error("symbolic vlocus limited to at most 6 classes in a basis of 12");
    std::vector<std::vector<Coeff>> mat(shapes.size(), std::vector<Coeff>(basis.size()));
    for (size_t i = 0; i < shapes.size(); ++i) {
        const SchurClass cls = kappa_tilde_lambda(spec, shapes[i]);
        for (const auto& [p, c] : cls.terms()) mat[i][index.at(p)] = c;
    }
    // all maximal (nrows x nrows) minors, columns chosen in increasing order
    std::vector<int> csel(res.nrows);
    auto walk = [&](auto&& self, int pos, int start) -> void {
        if (pos == res.nrows) {
            std::vector<std::vector<Coeff>> sub(res.nrows, std::vector<Coeff>(res.nrows));
            for (int i = 0; i < res.nrows; ++i)
                for (int j = 0; j < res.nrows; ++j) sub[i][j] = mat[i][csel[j]];
            res.witness_minors.push_back(det_ring(sub, Coeff()));
            return;
        }
        for (int v = start; v < res.ncols; ++v) {
            csel[pos] = v;
            self(self, pos + 1, v + 1);
        }
    };
    walk(walk, 0, 0);
    return res;
}

std::vector<int> betti(const RingSpec& spec, int max_degree, unsigned seed) {
    std::vector<int> dims(max_degree + 1);
    for (int s = 0; s <= max_degree; ++s) dims[s] = graded_dim(spec, s, seed);
    return dims;
}

std::vector<int> betti_parallel(const RingSpec& spec, int max_degree, unsigned seed) {
    std::vector<int> dims(max_degree + 1);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int s = 0; s <= max_degree; ++s) dims[s] = graded_dim(spec, s, seed);
    return dims;
}

BMatrix companion_for_invariants(const std::vector<Rational>& I) {
    const int n = static_cast<int>(I.size()) - 1;
    if (n < 1) throw std::invalid_argument("need at least I_0, I_1");
    if (I[0] != 1) throw std::invalid_argument("I_0 must be 1");
    BMatrix B(n, std::vector<Rational>(n, Rational(0)));
    for (int j = 0; j + 1 < n; ++j) B[j + 1][j] = -1;
    for (int i = 0; i < n; ++i) B[i][n - 1] = I[n - i];
    return B;
}

std::vector<Rational> random_generic_invariants(int k, int n, std::mt19937& rng) {
    std::uniform_int_distribution<int> dist(-3, 3);
    for (;;) {
        std::vector<Rational> I(n + 1, Rational(0));
        I[0] = 1;
        for (int i = 1; i <= n; ++i) I[i] = dist(rng);
        if (!is_degenerate(companion_for_invariants(I), k).degenerate) return I;
    }
}

}  // namespace poly
