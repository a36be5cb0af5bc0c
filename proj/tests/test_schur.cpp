#include "doctest.h"
#include "oracles.hpp"
#include "poly/jsonio.hpp"
#include "poly/schur.hpp"

#include <random>

using namespace poly;

namespace {

std::vector<Partition> all_upto(int wmax) {
    std::vector<Partition> out;
    for (int w = 0; w <= wmax; ++w)
        for (const auto& p : enumerate_partitions(w, w == 0 ? 1 : w)) out.push_back(p);
    return out;
}

SchurClass project(const SchurClass& x, int k) {
    SchurClass out(k);
    for (const auto& [p, c] : x.terms()) out.add(p, c);
    return out;
}

}  // namespace

TEST_CASE("lr_coeff pinned values") {
    CHECK(lr_coeff({1, 1}, {1}, {2, 1}) == 1);
    CHECK(lr_coeff({2, 1}, {2, 1}, {3, 2, 1}) == 2);
    CHECK(lr_coeff({1}, {1}, {3}) == 0);
    CHECK(lr_coeff({}, {}, {}) == 1);
    CHECK(lr_coeff({2}, {1}, {2, 1}) == 1);
    CHECK(lr_coeff({2}, {1}, {1, 1, 1}) == 0);
    // multiplicity two the other way around as well
    CHECK(lr_coeff({3, 2, 1}, {2, 1}, {4, 3, 2, 2, 1}) == lr_coeff({2, 1}, {3, 2, 1}, {4, 3, 2, 2, 1}));
}

TEST_CASE("LR symmetry and transpose symmetry, exhaustive to weight 6") {
    auto ps = all_upto(6);
    for (const auto& la : ps)
        for (const auto& mu : ps) {
            const int total = weight(la) + weight(mu);
            if (total > 6) continue;
            for (const auto& nu : enumerate_partitions(total, total == 0 ? 1 : total)) {
                const long c = lr_coeff(la, mu, nu);
                CHECK(c == lr_coeff(mu, la, nu));
                CHECK(c == lr_coeff(transpose(la), transpose(mu), transpose(nu)));
            }
        }
}

TEST_CASE("mult matches the tableau-free monomial oracle to weight 6") {
    auto ps = all_upto(6);
    for (const auto& la : ps)
        for (const auto& mu : ps) {
            if (weight(la) + weight(mu) > 6) continue;
            auto expected = oracle::product_schur_expansion(la, mu);
            SchurClass prod =
                SchurClass::kappa(la, kUnboundedRows) * SchurClass::kappa(mu, kUnboundedRows);
            CHECK(prod.terms().size() == expected.size());
            for (const auto& [nu, c] : expected) {
                Coeff got = prod.coeff(nu);
                REQUIRE(got.is_constant());
                CHECK(got.constant_value() == Rational(c));
            }
        }
}

TEST_CASE("row bound truncates products") {
    auto two = SchurClass::kappa({1}, 2) * SchurClass::kappa({1}, 2);
    CHECK(two == SchurClass::kappa({2}, 2) + SchurClass::kappa({1, 1}, 2));
    auto one = SchurClass::kappa({1}, 1) * SchurClass::kappa({1}, 1);
    CHECK(one == SchurClass::kappa({2}, 1));
    auto pieri = SchurClass::kappa({2}, kUnboundedRows) * SchurClass::kappa({1}, kUnboundedRows);
    CHECK(pieri ==
          SchurClass::kappa({3}, kUnboundedRows) + SchurClass::kappa({2, 1}, kUnboundedRows));
}

TEST_CASE("truncation commutes with mult (ideal property), weight 6, k <= 3") {
    auto ps = all_upto(4);
    for (int k = 1; k <= 3; ++k)
        for (const auto& la : ps)
            for (const auto& mu : ps) {
                if (weight(la) + weight(mu) > 6) continue;
                SchurClass a = SchurClass::kappa(la, kUnboundedRows);
                SchurClass b = SchurClass::kappa(mu, kUnboundedRows);
                CHECK(project(a * b, k) == project(a, k) * project(b, k));
            }
}

TEST_CASE("giambelli pinned shapes") {
    for (int r = 0; r <= 5; ++r)
        CHECK(giambelli(r == 0 ? Partition{} : Partition{r}, kUnboundedRows) ==
              SchurClass::kappa(r == 0 ? Partition{} : Partition{r}, kUnboundedRows));
    auto k1 = SchurClass::kappa({1}, kUnboundedRows);
    auto k2 = SchurClass::kappa({2}, kUnboundedRows);
    auto k3 = SchurClass::kappa({3}, kUnboundedRows);
    CHECK(giambelli({1, 1}, kUnboundedRows) == k1 * k1 - k2);
    CHECK(giambelli({2, 2}, kUnboundedRows) == k2 * k2 - k3 * k1);
    CHECK_THROWS(giambelli({2, 1, 1}, 2));
}

TEST_CASE("giambelli equals kappa across the 3x4 box") {
    for (int s = 0; s <= 12; ++s)
        for (const auto& la : enumerate_partitions(s, 3, 4))
            CHECK(giambelli(la, 3) == SchurClass::kappa(la, 3));
}

TEST_CASE("mult is associative on random triples, weight <= 8") {
    auto ps = all_upto(4);
    std::mt19937 rng(23);
    std::uniform_int_distribution<size_t> pick(0, ps.size() - 1);
    int done = 0;
    while (done < 30) {
        Partition la = ps[pick(rng)], mu = ps[pick(rng)], nu = ps[pick(rng)];
        if (weight(la) + weight(mu) + weight(nu) > 8) continue;
        done++;
        auto a = SchurClass::kappa(la, kUnboundedRows);
        auto b = SchurClass::kappa(mu, kUnboundedRows);
        auto c = SchurClass::kappa(nu, kUnboundedRows);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("class plumbing") {
    CHECK(SchurClass::kappa({1, 1, 1}, 2).is_zero());
    CHECK(SchurClass::one(3) == SchurClass::kappa({}, 3));
    CHECK_THROWS(SchurClass::kappa({1}, 2) + SchurClass::kappa({1}, 3));

    SchurClass x = SchurClass::kappa({2}, 2);
    x.scale(Coeff::var_I(1));
    CHECK(x.coeff({2}) == Coeff::var_I(1));
    CHECK(x.is_homogeneous());
    CHECK(x.degree() == 2);

    SchurClass mixed = SchurClass::kappa({2}, 2) + SchurClass::kappa({1}, 2);
    CHECK_FALSE(mixed.is_homogeneous());
    CHECK_THROWS(mixed.degree());
    CHECK(SchurClass(2).is_homogeneous());

    Coeff::Bindings kill;
    kill.I[1] = Coeff();
    SchurClass y = SchurClass::kappa({1}, 2);
    y.scale(Coeff::var_I(1));
    CHECK(y.substitute(kill).is_zero());
}

TEST_CASE("schur JSON round-trip keeps symbolic coefficients") {
    SchurClass x = SchurClass::kappa({2, 1}, 3);
    x.scale(Coeff::var_I(2) + Coeff(1L));
    x += SchurClass::kappa({1, 1, 1}, 3);
    Json j = to_json(x);
    CHECK(schur_from_json(j) == x);
}
