#include "poly/schur.hpp"

#include "poly/linalg.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>

namespace poly {

namespace {

// Backtracking count of LR tableaux of shape nu/lambda, content mu.
// Cells are visited in reverse reading word order (rows top to bottom, each
// row right to left), which makes the lattice condition a prefix check.
class LrCounter {
public:
    LrCounter(const Partition& lambda, const Partition& mu, const Partition& nu)
        : lambda_(lambda), mu_(mu), nu_(nu), rows_(static_cast<int>(nu.size())),
          values_(static_cast<int>(mu.size())), count_(0) {
        fill_.assign(rows_, std::vector<int>(rows_ ? nu_[0] : 0, 0));
        cnt_.assign(values_ + 1, 0);
    }

    long run() {
        walk(0, rows_ ? nu_[0] - 1 : -1);
        return count_;
    }

private:
    void walk(int i, int j) {
        while (i < rows_ && j < part_at(lambda_, i)) {
            ++i;
            j = (i < rows_) ? nu_[i] - 1 : -1;
        }
        if (i >= rows_) {
            ++count_;
            return;
        }
        int right = (j + 1 < nu_[i]) ? fill_[i][j + 1] : values_;
        int above = (i > 0 && j < nu_[i - 1] && j >= part_at(lambda_, i - 1)) ? fill_[i - 1][j] : 0;
        for (int v = above + 1; v <= right; ++v) {
            if (cnt_[v] >= mu_[v - 1]) continue;
            if (v > 1 && cnt_[v] >= cnt_[v - 1]) continue;  // lattice word prefix
            fill_[i][j] = v;
            ++cnt_[v];
            if (j > part_at(lambda_, i))
                walk(i, j - 1);
            else
                walk(i + 1, (i + 1 < rows_) ? nu_[i + 1] - 1 : -1);
            --cnt_[v];
        }
    }

    static int part_at(const Partition& p, int i) {
        return i < static_cast<int>(p.size()) ? p[i] : 0;
    }

    const Partition &lambda_, &mu_, &nu_;
    int rows_, values_;
    long count_;
    std::vector<std::vector<int>> fill_;
    std::vector<int> cnt_;
};

long lr_enumerate(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (weight(nu) != weight(lambda) + weight(mu)) return 0;
    if (!contains(nu, lambda)) return 0;
    if (static_cast<int>(mu.size()) < static_cast<int>(nu.size()) - static_cast<int>(lambda.size()))
        return 0;  // some skew row needs entries from more values than mu has
    if (mu.empty()) return 1;
    return LrCounter(lambda, mu, nu).run();
}

std::map<std::tuple<Partition, Partition, Partition>, long> lr_cache;
std::shared_mutex lr_cache_mutex;

}  // namespace

long lr_coeff(const Partition& lambda, const Partition& mu, const Partition& nu) {
    auto key = std::make_tuple(lambda, mu, nu);
    {
        std::shared_lock lock(lr_cache_mutex);
        auto it = lr_cache.find(key);
        if (it != lr_cache.end()) return it->second;
    }
    long value = lr_enumerate(lambda, mu, nu);
    {
        std::unique_lock lock(lr_cache_mutex);
        lr_cache.emplace(std::move(key), value);
    }
    return value;
}

SchurClass::SchurClass(int row_bound) : row_bound_(row_bound) {
    if (row_bound < 0) throw std::invalid_argument("negative row bound");
}

SchurClass SchurClass::kappa(const Partition& p, int row_bound) {
    SchurClass s(row_bound);
    s.add(make_partition(p), Coeff(1L));
    return s;
}

SchurClass SchurClass::one(int row_bound) { return kappa({}, row_bound); }

Coeff SchurClass::coeff(const Partition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Coeff() : it->second;
}

void SchurClass::add(const Partition& p, const Coeff& c) {
    if (c.is_zero() || num_parts(p) > row_bound_) return;
    auto it = terms_.find(p);
    if (it == terms_.end()) {
        terms_.emplace(p, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SchurClass& SchurClass::operator+=(const SchurClass& o) {
    if (row_bound_ != o.row_bound_) throw std::invalid_argument("row_bound mismatch");
    for (const auto& [p, c] : o.terms_) add(p, c);
    return *this;
}

SchurClass& SchurClass::operator-=(const SchurClass& o) {
    if (row_bound_ != o.row_bound_) throw std::invalid_argument("row_bound mismatch");
    for (const auto& [p, c] : o.terms_) add(p, -c);
    return *this;
}

SchurClass operator*(const SchurClass& a, const SchurClass& b) {
    if (a.row_bound_ != b.row_bound_) throw std::invalid_argument("row_bound mismatch");
    SchurClass r(a.row_bound_);
    for (const auto& [la, ca] : a.terms_) {
        for (const auto& [mu, cb] : b.terms_) {
            Coeff c = ca * cb;
            // orient the enumeration so the smaller factor is the content
            const Partition& base = weight(la) >= weight(mu) ? la : mu;
            const Partition& content = weight(la) >= weight(mu) ? mu : la;
            int max_rows = std::min<long>(a.row_bound_,
                                          static_cast<long>(la.size()) + static_cast<long>(mu.size()));
            for (const auto& nu : enumerate_partitions(weight(la) + weight(mu), max_rows)) {
                long m = lr_coeff(base, content, nu);
                if (m == 0) continue;
                Coeff t = c;
                t.scale(Rational(m));
                r.add(nu, t);
            }
        }
    }
    return r;
}

SchurClass SchurClass::operator-() const {
    SchurClass r(row_bound_);
    for (const auto& [p, c] : terms_) r.terms_.emplace(p, -c);
    return r;
}

SchurClass& SchurClass::scale(const Coeff& c) {
    SchurClass r(row_bound_);
    for (const auto& [p, v] : terms_) r.add(p, v * c);
    return *this = std::move(r);
}

SchurClass SchurClass::substitute(const Coeff::Bindings& b) const {
    SchurClass r(row_bound_);
    for (const auto& [p, v] : terms_) r.add(p, v.substitute(b));
    return r;
}

bool SchurClass::is_homogeneous() const {
    int w = -1;
    for (const auto& [p, c] : terms_) {
        if (w < 0)
            w = weight(p);
        else if (weight(p) != w)
            return false;
    }
    return true;
}

int SchurClass::degree() const {
    if (terms_.empty() || !is_homogeneous())
        throw std::domain_error("degree of zero or inhomogeneous class");
    return weight(terms_.begin()->first);
}

std::string SchurClass::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [p, c] : terms_) {
        if (!out.empty()) out += " + ";
        std::string kappa = "k" + to_string(p);
        if (c.is_constant() && c.constant_value() == 1)
            out += kappa;
        else
            out += "(" + c.str() + ")*" + kappa;
    }
    return out;
}

SchurClass giambelli(const Partition& lambda, int row_bound) {
    Partition p = make_partition(lambda);
    if (num_parts(p) > row_bound) throw std::invalid_argument("partition exceeds row bound");
    if (p.empty()) return SchurClass::one(row_bound);
    const int l = num_parts(p);
    std::vector<std::vector<SchurClass>> m(l, std::vector<SchurClass>(l, SchurClass(row_bound)));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            int r = p[i] + j - i;
            if (r == 0)
                m[i][j] = SchurClass::one(row_bound);
            else if (r > 0)
                m[i][j] = SchurClass::kappa({r}, row_bound);
        }
    return det_ring(m, SchurClass(row_bound));
}

}  // namespace poly
