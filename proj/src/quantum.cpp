#include "poly/quantum.hpp"

#include "poly/linalg.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>

namespace poly {

QuantumClass::QuantumClass(const RingSpec& spec) : spec_(spec) {}

QuantumClass QuantumClass::from_classical(const RingSpec& spec, const SchurClass& x) {
    if (x.row_bound() != spec.k()) throw std::invalid_argument("row bound must equal k");
    QuantumClass out(spec);
    for (const auto& [p, c] : x.terms()) out.add(0, p, c);
    return out;
}

Coeff QuantumClass::coeff(int d, const Partition& nu) const {
    auto it = terms_.find({d, nu});
    return it == terms_.end() ? Coeff() : it->second;
}

void QuantumClass::add(int d, const Partition& nu, const Coeff& c) {
    if (d < 0) throw std::invalid_argument("negative q power");
    if (c.is_zero() || num_parts(nu) > spec_.k()) return;
    Key key{d, nu};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

QuantumClass& QuantumClass::operator+=(const QuantumClass& o) {
    if (!(spec_ == o.spec_)) throw std::invalid_argument("spec mismatch");
    for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
    return *this;
}

QuantumClass& QuantumClass::operator-=(const QuantumClass& o) {
    if (!(spec_ == o.spec_)) throw std::invalid_argument("spec mismatch");
    for (const auto& [k, c] : o.terms_) add(k.first, k.second, -c);
    return *this;
}

QuantumClass& QuantumClass::scale(const Coeff& c) {
    TermMap next;
    for (const auto& [k, v] : terms_) {
        Coeff w = v * c;
        if (!w.is_zero()) next.emplace(k, std::move(w));
    }
    terms_ = std::move(next);
    return *this;
}

bool QuantumClass::is_homogeneous() const {
    int s = -1;
    for (const auto& [k, c] : terms_) {
        int d = k.first * spec_.n() + weight(k.second);
        if (s < 0)
            s = d;
        else if (d != s)
            return false;
    }
    return true;
}

int QuantumClass::degree() const {
    if (terms_.empty() || !is_homogeneous())
        throw std::domain_error("degree of zero or inhomogeneous class");
    const auto& k = terms_.begin()->first;
    return k.first * spec_.n() + weight(k.second);
}

SchurClass QuantumClass::classical_limit() const {
    SchurClass out(spec_.k());
    for (const auto& [k, c] : terms_)
        if (k.first == 0) out.add(k.second, c);
    return out;
}

std::string QuantumClass::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
        if (!out.empty()) out += " + ";
        std::string base;
        if (k.first == 1)
            base = "q";
        else if (k.first > 1)
            base = "q^" + std::to_string(k.first);
        if (!k.second.empty()) {
            if (!base.empty()) base += "*";
            base += "k" + to_string(k.second);
        }
        if (base.empty()) base = "1";
        if (c.is_constant() && c.constant_value() == 1 && !(base == "1"))
            out += base;
        else if (base == "1")
            out += "(" + c.str() + ")";
        else
            out += "(" + c.str() + ")*" + base;
    }
    return out;
}

namespace {

// q^d * kappa_mu * g, computed through the classical LR product.
QuantumClass shift_mult(const QuantumClass& g, int d, const Partition& mu) {
    QuantumClass out(g.spec());
    const int k = g.spec().k();
    const SchurClass kmu = SchurClass::kappa(mu, k);
    for (const auto& [key, c] : g.terms()) {
        SchurClass prod = SchurClass::kappa(key.second, k) * kmu;
        for (const auto& [nu, w] : prod.terms()) out.add(key.first + d, nu, w * c);
    }
    return out;
}

struct QEchelon {
    std::vector<QuantumClass::Key> basis;  // d ascending, then canonical
    QMatrix rows;
    std::vector<int> pivots;
};

using QKey = std::tuple<int, int, std::vector<Rational>, int>;
std::map<QKey, std::shared_ptr<const QEchelon>> q_echelon_cache;
std::shared_mutex q_echelon_cache_mutex;

std::vector<QuantumClass::Key> ambient_basis(const RingSpec& spec, int s) {
    std::vector<QuantumClass::Key> basis;
    for (int d = 0; d * spec.n() <= s; ++d)
        for (const auto& nu : enumerate_partitions(s - d * spec.n(), spec.k()))
            basis.emplace_back(d, nu);
    return basis;
}

std::shared_ptr<const QEchelon> get_q_echelon(const RingSpec& spec, int s) {
    QKey key{spec.k(), spec.n(), spec.numeric_invariants(), s};
    {
        std::shared_lock lock(q_echelon_cache_mutex);
        auto it = q_echelon_cache.find(key);
        if (it != q_echelon_cache.end()) return it->second;
    }
    auto e = std::make_shared<QEchelon>();
    e->basis = ambient_basis(spec, s);
    std::map<QuantumClass::Key, int, QuantumClass::KeyLess> index;
    for (size_t i = 0; i < e->basis.size(); ++i) index[e->basis[i]] = static_cast<int>(i);
    QMatrix m;
    for (const auto& rel : q_relations(spec, s)) {
        std::vector<Rational> row(e->basis.size(), Rational(0));
        for (const auto& [kk, c] : rel.terms()) row[index.at(kk)] = c.constant_value();
        m.push_back(std::move(row));
    }
    e->pivots = rref(m);
    m.resize(e->pivots.size());
    e->rows = std::move(m);
    {
        std::unique_lock lock(q_echelon_cache_mutex);
        q_echelon_cache.emplace(std::move(key), e);
    }
    return e;
}

}  // namespace

std::vector<QuantumClass> q_relations(const RingSpec& spec, int s) {
    if (s < 0) throw std::invalid_argument("negative degree");
    const int k = spec.k(), n = spec.n();
    std::vector<QuantumClass> out;
    auto emit_all = [&](const QuantumClass& g, int deg_g) {
        for (int d = 0; deg_g + d * n <= s; ++d)
            for (const auto& mu : enumerate_partitions(s - deg_g - d * n, k))
                out.push_back(shift_mult(g, d, mu));
    };
    for (int r = n - k + 1; r <= n - 1 && r <= s; ++r)
        emit_all(QuantumClass::from_classical(spec, kappa_tilde(spec, r)), r);
    for (int i = 0; n + i <= s; ++i) {
        QuantumClass g = QuantumClass::from_classical(spec, kappa_tilde(spec, n + i));
        g.add(1, i == 0 ? Partition{} : Partition{i}, Coeff(1L));
        emit_all(g, n + i);
    }
    return out;
}

QuantumClass q_normal_form(const QuantumClass& x) {
    const RingSpec& spec = x.spec();
    if (spec.is_symbolic())
        throw std::domain_error("quantum normal form requires numeric invariants");
    if (!x.is_homogeneous())
        throw std::invalid_argument("quantum normal form needs homogeneous input");
    if (x.is_zero()) return x;
    const int s = x.degree();
    auto e = get_q_echelon(spec, s);
    std::map<QuantumClass::Key, int, QuantumClass::KeyLess> index;
    for (size_t i = 0; i < e->basis.size(); ++i) index[e->basis[i]] = static_cast<int>(i);
    std::vector<Rational> v(e->basis.size(), Rational(0));
    for (const auto& [kk, c] : x.terms()) v[index.at(kk)] = c.constant_value();
    for (size_t i = 0; i < e->rows.size(); ++i) {
        Rational fac = v[e->pivots[i]];
        if (fac == 0) continue;
        for (size_t j = 0; j < v.size(); ++j)
            if (e->rows[i][j] != 0) v[j] -= fac * e->rows[i][j];
    }
    QuantumClass out(spec);
    for (size_t j = 0; j < v.size(); ++j)
        if (v[j] != 0) out.add(e->basis[j].first, e->basis[j].second, Coeff(v[j]));
    return out;
}

QuantumClass q_mult(const RingSpec& spec, const Partition& lambda, const Partition& mu) {
    SchurClass prod =
        SchurClass::kappa(lambda, spec.k()) * SchurClass::kappa(mu, spec.k());
    return q_normal_form(QuantumClass::from_classical(spec, prod));
}

QuantumClass q_mult(const QuantumClass& a, const QuantumClass& b) {
    if (!(a.spec() == b.spec())) throw std::invalid_argument("spec mismatch");
    const int k = a.spec().k();
    QuantumClass acc(a.spec());
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            SchurClass prod = SchurClass::kappa(ka.second, k) * SchurClass::kappa(kb.second, k);
            Coeff c = ca * cb;
            for (const auto& [nu, w] : prod.terms()) acc.add(ka.first + kb.first, nu, w * c);
        }
    }
    return q_normal_form(acc);
}

}  // namespace poly
