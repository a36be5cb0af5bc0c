#include "poly/coeff.hpp"

#include <algorithm>
#include <stdexcept>

namespace poly {

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const {
    if (a.q != b.q) return a.q < b.q;
    if (a.eps != b.eps) return a.eps < b.eps;
    size_t len = std::max(a.I.size(), b.I.size());
    for (size_t t = len; t-- > 0;) {
        int ea = t < a.I.size() ? a.I[t] : 0;
        int eb = t < b.I.size() ? b.I[t] : 0;
        if (ea != eb) return ea < eb;
    }
    return false;
}

Coeff::Coeff(const Rational& c) {
    if (c != 0) terms_[Monomial{}] = c;
}

Coeff::Coeff(long c) : Coeff(Rational(c)) {}

Coeff Coeff::monomial(Monomial m, const Rational& c) {
    Coeff r;
    m.trim();
    if (c != 0) r.terms_[std::move(m)] = c;
    return r;
}

Coeff Coeff::var_I(int i) {
    if (i < 1) throw std::invalid_argument("I index must be >= 1");
    Monomial m;
    m.I.assign(i, 0);
    m.I[i - 1] = 1;
    return monomial(std::move(m), Rational(1));
}

Coeff Coeff::var_eps() {
    Monomial m;
    m.eps = 1;
    return monomial(std::move(m), Rational(1));
}

Coeff Coeff::var_q() {
    Monomial m;
    m.q = 1;
    return monomial(std::move(m), Rational(1));
}

bool Coeff::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first == Monomial{};
}

Rational Coeff::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw std::domain_error("coefficient is not constant: " + str());
    return terms_.begin()->second;
}

int Coeff::weighted_degree(int n) const {
    int deg = -1;
    for (const auto& [m, c] : terms_) {
        int d = m.eps + n * m.q;
        for (size_t t = 0; t < m.I.size(); ++t) d += static_cast<int>(t + 1) * m.I[t];
        deg = std::max(deg, d);
    }
    return deg;
}

void Coeff::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Coeff& Coeff::operator+=(const Coeff& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Coeff& Coeff::operator-=(const Coeff& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, Rational(-c));
    return *this;
}

Coeff operator*(const Coeff& a, const Coeff& b) {
    Coeff r;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m;
            m.q = ma.q + mb.q;
            m.eps = ma.eps + mb.eps;
            m.I.assign(std::max(ma.I.size(), mb.I.size()), 0);
            for (size_t t = 0; t < ma.I.size(); ++t) m.I[t] += ma.I[t];
            for (size_t t = 0; t < mb.I.size(); ++t) m.I[t] += mb.I[t];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

Coeff& Coeff::operator*=(const Coeff& o) { return *this = *this * o; }

Coeff Coeff::operator-() const {
    Coeff r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

Coeff& Coeff::scale(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

Coeff pow(const Coeff& base, int e) {
    if (e < 0) throw std::invalid_argument("negative power");
    Coeff r(1L);
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

Coeff::Bindings Coeff::Bindings::numeric_I(const std::vector<Rational>& values) {
    Bindings b;
    for (size_t t = 0; t < values.size(); ++t) b.I[static_cast<int>(t + 1)] = Coeff(values[t]);
    return b;
}

Coeff Coeff::substitute(const Bindings& b) const {
    Coeff out;
    for (const auto& [m, c] : terms_) {
        Coeff acc{c};
        for (size_t t = 0; t < m.I.size(); ++t) {
            if (m.I[t] == 0) continue;
            auto it = b.I.find(static_cast<int>(t + 1));
            const Coeff base = (it != b.I.end()) ? it->second : var_I(static_cast<int>(t + 1));
            acc *= pow(base, m.I[t]);
        }
        if (m.eps) acc *= pow(b.eps ? *b.eps : var_eps(), m.eps);
        if (m.q) acc *= pow(b.q ? *b.q : var_q(), m.q);
        out += acc;
    }
    return out;
}

namespace {

std::string monomial_str(const Monomial& m) {
    std::string s;
    auto append = [&s](const std::string& var, int e) {
        if (e == 0) return;
        if (!s.empty()) s += "*";
        s += var;
        if (e > 1) s += "^" + std::to_string(e);
    };
    for (size_t t = 0; t < m.I.size(); ++t) append("I" + std::to_string(t + 1), m.I[t]);
    append("eps", m.eps);
    append("q", m.q);
    return s;
}

}  // namespace

std::string Coeff::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += (c < 0) ? " - " : " + ";
        }
        std::string mono = monomial_str(m);
        if (mono.empty()) {
            out += to_string(mag);
        } else {
            if (mag != 1) out += to_string(mag) + "*";
            out += mono;
        }
    }
    return out;
}

}  // namespace poly
