// End-to-end acceptance gate. Runs eight independent checks, each with a
// wall-clock budget, and prints one PASS/FAIL line per check. Exit code is
// the number of failures. argv[1] must point at the poly CLI binary.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "poly/bwb.hpp"
#include "poly/deform.hpp"
#include "poly/jsonio.hpp"
#include "poly/linalg.hpp"
#include "poly/quantum.hpp"

using namespace poly;

namespace {

std::string g_cli;

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    CliResult r;
    std::string cmd = g_cli + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
    int status = pclose(p);
    r.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return r;
}

struct Budget {
    std::ostringstream why;
    bool ok = true;
    long checks = 0;

    template <class T, class U>
    void expect(const T& got, const U& want, const std::string& what) {
        ++checks;
        if (!(got == want)) {
            ok = false;
            why << "  " << what << "\n";
        }
    }
    void expect_true(bool got, const std::string& what) { expect(got, true, what); }
};

Weight padded(const Partition& p, int len) {
    Weight w(len, 0);
    for (size_t i = 0; i < p.size(); ++i) w[i] = p[i];
    return w;
}

std::vector<Rational> zero_invariants(int n) {
    std::vector<Rational> v(n + 1, Rational(0));
    v[0] = 1;
    return v;
}

BMatrix random_triangular(std::mt19937& rng, int n, bool upper) {
    std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
    BMatrix m(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i == j || (upper ? j > i : j < i)) m[i][j] = make_rational(num(rng), den(rng));
    return m;
}

BMatrix random_invertible(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> num(-3, 3);
    while (true) {
        BMatrix g(n, std::vector<Rational>(n));
        for (auto& row : g)
            for (auto& e : row) e = Rational(num(rng));
        if (det(g) != 0) return g;
    }
}

// 1. The deformed relation generator in the two families with a closed
// displayed expansion, both through the library and through the CLI, plus the
// documented one-shot CLI examples.
void check_relation_examples(Budget& b) {
    const Coeff one(1L);
    const Coeff i1 = Coeff::var_I(1), i2 = Coeff::var_I(2), i3 = Coeff::var_I(3);

    SchurClass e24(3);
    e24.add({2}, one + i1 + i2);
    e24.add({1, 1}, i1 + i2);
    b.expect(kappa_tilde(RingSpec::symbolic(3, 4), 2), e24, "kappa_tilde(3,4;r=2) expansion");

    SchurClass e35(3);
    e35.add({3}, one + i1 + i2 + i3);
    e35.add({2, 1}, i1 + i2 * Coeff(2L) + i3 * Coeff(2L));
    e35.add({1, 1, 1}, i2 + i3);
    b.expect(kappa_tilde(RingSpec::symbolic(3, 5), 3), e35, "kappa_tilde(3,5;r=3) expansion");

    auto r1 = run_cli("relation --k 3 --n 4 --r 2 --symbolic");
    b.expect(r1.exit_code, 0, "relation CLI (3,4) exit code");
    b.expect(schur_from_json(Json::parse(r1.out)), e24, "relation CLI (3,4) payload");

    auto r2 = run_cli("relation --k 3 --n 5 --r 3 --symbolic");
    b.expect(r2.exit_code, 0, "relation CLI (3,5) exit code");
    b.expect(schur_from_json(Json::parse(r2.out)), e35, "relation CLI (3,5) payload");

    auto r3 = run_cli("bwb --k 2 --n 4 --s-star -1,-2 --q-star 2,1");
    b.expect(r3.exit_code, 0, "bwb CLI exit code");
    Json j3 = Json::parse(r3.out);
    b.expect(j3.at("vanishes") == false && j3.at("degree") == 3 &&
                 j3.at("dominant") == Json::array({0, 0, 0, 0}) && j3.at("dim") == 1,
             true, "bwb CLI payload");

    auto r4 = run_cli("betti --k 2 --n 4 --I 0,0,0,0");
    b.expect(r4.exit_code, 0, "betti CLI exit code");
    b.expect(Json::parse(r4.out).at("dims") == Json::array({1, 1, 2, 1, 1}), true,
             "betti CLI payload");
}

// 2. With all deformation invariants zero the graded dimensions are the
// classical box-partition counts in every degree.
void check_classical_betti(Budget& b) {
    for (auto [k, n] : {std::pair{2, 4}, {2, 5}, {3, 6}}) {
        auto spec = RingSpec::numeric(k, n, zero_invariants(n));
        auto dims = betti(spec, k * (n - k));
        b.expect((int)dims.size(), k * (n - k) + 1, "betti vector length");
        for (int s = 0; s <= k * (n - k); ++s)
            b.expect(dims[s], oracle::box_count(k, n, s),
                     "graded dim G(" + std::to_string(k) + "," + std::to_string(n) + ") s=" +
                         std::to_string(s));
    }
}

// 3. Twisted-bundle cohomology: the one-line nonvanishing family, the
// covering-failure vanishing family, and the wedge-power corollary.
void check_bwb_suites(Budget& b) {
    for (auto [k, n] : {std::pair{2, 4}, {2, 5}, {3, 6}}) {
        for (const auto& la : box_partitions(k, n - k)) {
            auto res = bundle_cohomology(k, n, from_KS(la, k), padded(transpose(la), n - k));
            b.expect_true(!res.vanishes && res.degree == weight(la) && res.dim == 1,
                          "one-line cohomology at " + to_string(la));
        }

        for (int r = 0; r <= 4; ++r)
            for (const auto& la : enumerate_partitions(r, k, n - k))
                for (int s = 0; s <= 4; ++s)
                    for (const auto& mu : enumerate_partitions(s, n - k)) {
                        Partition mut = transpose(mu);
                        bool fails = false;
                        for (int j = 1; j <= num_parts(la); ++j)
                            if (part(mut, j) < part(la, j)) fails = true;
                        if (!fails) continue;
                        b.expect_true(
                            bundle_cohomology(k, n, from_KS(la, k), padded(mu, n - k)).vanishes,
                            "vanishing at " + to_string(la) + "," + to_string(mu));
                    }

        for (int s = 1; s <= 15; ++s)
            for (const auto& la : enumerate_partitions(s, 3, 5)) {
                if (num_parts(la) > k) continue;
                int witness = 0;
                for (int j = 1; j <= num_parts(la); ++j)
                    if (part(la, j) >= n - k + j && part(la, j + 1) <= j) witness = j;
                auto res = bundle_cohomology(k, n, from_KS(la, k), Weight(n - k, 0));
                bool ok = res.vanishes == (witness == 0);
                if (witness > 0) {
                    const int j = witness;
                    Weight expect;
                    for (int i = k; i >= j + 1; --i) expect.push_back(-part(la, i));
                    expect.insert(expect.end(), n - k, -j);
                    for (int i = j; i >= 1; --i) expect.push_back(-part(la, i) + (n - k));
                    ok = ok && res.degree == j * (n - k) && res.dominant == expect &&
                         res.dim == weyl_dim(expect);
                }
                ok = ok && (res.vanishes || res.degree != weight(la));
                b.expect_true(ok, "wedge-power corollary at " + to_string(la) + " on G(" +
                                      std::to_string(k) + "," + std::to_string(n) + ")");
            }
    }
}

// 4. Degeneracy of the deformed bundle map: the wedge determinant agrees with
// the eigenvalue subset-sum oracle on triangular matrices and is unchanged by
// similarity conjugation.
void check_degenerate_locus(Budget& b) {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + trial % 5;
        int k = 1 + trial % std::min(3, n);
        BMatrix B = random_triangular(rng, n, trial % 2 == 0);
        std::vector<Rational> d(n);
        for (int i = 0; i < n; ++i) d[i] = B[i][i];
        auto res = is_degenerate(B, k);
        b.expect(res.degenerate, oracle::subset_sum_degenerate(d, k),
                 "triangular degeneracy trial " + std::to_string(trial));
        for (int c = 0; c < 20; ++c) {
            auto conj = is_degenerate(conjugate(B, random_invertible(rng, n)), k);
            b.expect_true(conj.degenerate == res.degenerate && conj.determinant == res.determinant,
                          "conjugation invariance trial " + std::to_string(trial));
        }
    }
}

// 5. The epsilon-multiple-of-identity deformation matches its closed form.
void check_eps_identity(Budget& b) {
    for (auto [k, n, r] :
         {std::tuple{2, 4, 3}, {2, 4, 4}, {3, 5, 3}, {3, 5, 4}}) {
        b.expect_true(b_eps_identity_check(k, n, r),
                      "eps identity (" + std::to_string(k) + "," + std::to_string(n) + "," +
                          std::to_string(r) + ")");
    }
}

// 6. The first relation is stable in n: shared coefficients agree between
// G(k,n) and G(k+1,n+1) at r = n-k+1.
void check_n_stability(Budget& b) {
    for (auto [k, n] : {std::pair{2, 4}, {2, 5}}) {
        int r = n - k + 1;
        auto small = kappa_tilde(RingSpec::symbolic(k, n), r);
        auto big = kappa_tilde(RingSpec::symbolic(k + 1, n + 1), r);
        for (const auto& la : enumerate_partitions(r, k))
            b.expect(small.coeff(la), big.coeff(la),
                     "stability of " + to_string(la) + " at n=" + std::to_string(n));
    }
}

// 7. Quantum products at zero invariants reduce to the rim-hook rule, and
// dropping q recovers the classical quotient product.
void check_quantum_recovery(Budget& b) {
    for (auto [k, n] : {std::pair{2, 4}, {2, 5}}) {
        auto spec = RingSpec::numeric(k, n, zero_invariants(n));
        auto shapes = box_partitions(k, n - k);
        for (const auto& la : shapes)
            for (const auto& mu : shapes) {
                auto got = q_mult(spec, la, mu);
                auto want = oracle::rim_hook_product(la, mu, k, n);
                bool same = got.terms().size() == want.size();
                for (const auto& [key, c] : want) {
                    Coeff cf = got.coeff(key.first, key.second);
                    same = same && cf.is_constant() && cf.constant_value() == Rational(c);
                }
                b.expect_true(same, "rim-hook at " + to_string(la) + "*" + to_string(mu));
                b.expect(got.classical_limit(),
                         mult_mod(spec, SchurClass::kappa(la, k), SchurClass::kappa(mu, k)),
                         "q->0 limit at " + to_string(la) + "*" + to_string(mu));
            }
    }
    auto g24 = RingSpec::numeric(2, 4, zero_invariants(4));
    QuantumClass p1(g24);
    p1.add(0, {2, 2}, Coeff(1L));
    p1.add(1, {}, Coeff(1L));
    b.expect(q_mult(g24, {2, 1}, {1}), p1, "(2,1)*(1) = kappa_(2,2) + q");
    QuantumClass p2(g24);
    p2.add(1, {1}, Coeff(1L));
    b.expect(q_mult(g24, {2, 2}, {1}), p2, "(2,2)*(1) = q kappa_(1)");
}

// 8. Algebraic property suites: LR symmetries, Giambelli determinants, the
// monomial multiplication oracle, normal-form linearity, quantum
// associativity, and the weighted-degree bound on relation coefficients.
void check_property_suites(Budget& b) {
    for (int w = 0; w <= 6; ++w)
        for (int wl = 0; wl <= w; ++wl)
            for (const auto& la : enumerate_partitions(wl, w))
                for (const auto& mu : enumerate_partitions(w - wl, w))
                    for (const auto& nu : enumerate_partitions(w, w)) {
                        long c = lr_coeff(la, mu, nu);
                        b.expect(lr_coeff(mu, la, nu), c, "LR symmetry");
                        b.expect(lr_coeff(transpose(la), transpose(mu), transpose(nu)), c,
                                 "LR transpose symmetry");
                    }

    for (int s = 0; s <= 12; ++s)
        for (const auto& la : enumerate_partitions(s, 3, 4))
            b.expect(giambelli(la, 3), SchurClass::kappa(la, 3), "giambelli at " + to_string(la));

    for (int w = 0; w <= 6; ++w)
        for (int wl = 0; wl <= w; ++wl)
            for (const auto& la : enumerate_partitions(wl, wl))
                for (const auto& mu : enumerate_partitions(w - wl, w - wl)) {
                    auto got = SchurClass::kappa(la, kUnboundedRows) *
                               SchurClass::kappa(mu, kUnboundedRows);
                    auto want = oracle::product_schur_expansion(la, mu);
                    bool same = got.terms().size() == want.size();
                    for (const auto& [nu, c] : want) {
                        Coeff cf = got.coeff(nu);
                        same = same && cf.is_constant() && cf.constant_value() == Rational(c);
                    }
                    b.expect_true(same, "monomial oracle at " + to_string(la) + "*" + to_string(mu));
                }

    std::mt19937 rng(8);
    auto gen25 = RingSpec::numeric(2, 5, random_generic_invariants(2, 5, rng));
    for (int s = 1; s <= 6; ++s) {
        auto shapes = enumerate_partitions(s, 2);
        std::uniform_int_distribution<size_t> pick(0, shapes.size() - 1);
        std::uniform_int_distribution<int> scl(-3, 3);
        for (int trial = 0; trial < 5; ++trial) {
            SchurClass x = SchurClass::kappa(shapes[pick(rng)], 2);
            x.scale(Coeff((long)scl(rng)));
            SchurClass y = SchurClass::kappa(shapes[pick(rng)], 2);
            auto nx = normal_form(gen25, x), ny = normal_form(gen25, y);
            b.expect(normal_form(gen25, nx), nx, "normal_form idempotence");
            b.expect(normal_form(gen25, x + y), nx + ny, "normal_form linearity");
        }
    }

    for (auto [k, n] : {std::pair{2, 4}, {3, 6}}) {
        auto gen = RingSpec::numeric(k, n, random_generic_invariants(k, n, rng));
        auto shapes = box_partitions(k, n - k);
        std::uniform_int_distribution<size_t> pick(0, shapes.size() - 1);
        for (int trial = 0; trial < 25; ++trial) {
            auto a = QuantumClass::from_classical(gen, SchurClass::kappa(shapes[pick(rng)], k));
            auto bb = QuantumClass::from_classical(gen, SchurClass::kappa(shapes[pick(rng)], k));
            auto c = QuantumClass::from_classical(gen, SchurClass::kappa(shapes[pick(rng)], k));
            b.expect(q_mult(q_mult(a, bb), c), q_mult(a, q_mult(bb, c)),
                     "quantum associativity trial " + std::to_string(trial));
        }
    }

    for (auto [k, n] : {std::pair{2, 4}, {2, 5}, {3, 6}}) {
        auto spec = RingSpec::symbolic(k, n);
        for (int r = 1; r <= k * (n - k); ++r) {
            const SchurClass rel = kappa_tilde(spec, r);
            bool ok = true;
            for (const auto& [p, c] : rel.terms()) {
                (void)p;
                ok = ok && c.weighted_degree(n) <= r;
            }
            b.expect_true(ok, "weighted degree bound at r=" + std::to_string(r));
        }
    }
}

struct Criterion {
    std::string label;
    double budget_sec;
    std::function<void(Budget&)> fn;
};

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-poly-cli>\n";
        return 64;
    }
    g_cli = argv[1];

    const std::vector<Criterion> criteria{
        {"relation worked examples + CLI one-shots", 1.0, check_relation_examples},
        {"classical graded dimensions at I=0", 10.0, check_classical_betti},
        {"twisted-bundle cohomology suites", 30.0, check_bwb_suites},
        {"degenerate locus vs eigenvalue oracle", 30.0, check_degenerate_locus},
        {"eps-identity closed form", 5.0, check_eps_identity},
        {"relation stability in n", 5.0, check_n_stability},
        {"quantum recovery at I=0", 30.0, check_quantum_recovery},
        {"algebraic property suites", 60.0, check_property_suites},
    };

    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        Budget b;
        auto t0 = std::chrono::steady_clock::now();
        try {
            criteria[i].fn(b);
        } catch (const std::exception& e) {
            b.ok = false;
            b.why << "  unexpected exception: " << e.what() << "\n";
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_budget = secs < criteria[i].budget_sec;
        bool pass = b.ok && in_budget;
        failures += pass ? 0 : 1;
        std::printf("[%s] %zu. %s: %ld checks in %.2fs (budget %.0fs)\n", pass ? "PASS" : "FAIL",
                    i + 1, criteria[i].label.c_str(), b.checks, secs, criteria[i].budget_sec);
        if (!b.ok) std::cout << b.why.str();
        if (b.ok && !in_budget) std::cout << "  over budget\n";
    }
    return failures;
}
