#include "poly/jsonio.hpp"

#include <stdexcept>

namespace poly {

namespace {

Json monomial_to_json(const Monomial& m) {
    Json j = Json::object();
    for (size_t t = 0; t < m.I.size(); ++t)
        if (m.I[t] != 0) j["I" + std::to_string(t + 1)] = m.I[t];
    j["eps"] = m.eps;
    j["q"] = m.q;
    return j;
}

Monomial monomial_from_json(const Json& j) {
    Monomial m;
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& key = it.key();
        int e = it.value().get<int>();
        if (key == "eps") {
            m.eps = e;
        } else if (key == "q") {
            m.q = e;
        } else if (key.size() > 1 && key[0] == 'I') {
            int idx = std::stoi(key.substr(1));
            if (idx < 1) throw std::invalid_argument("bad monomial key: " + key);
            if (static_cast<int>(m.I.size()) < idx) m.I.resize(idx, 0);
            m.I[idx - 1] = e;
        } else {
            throw std::invalid_argument("bad monomial key: " + key);
        }
    }
    m.trim();
    return m;
}

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw std::invalid_argument("rational must be a string or integer");
}

Json partition_to_json(const Partition& p) { return Json(p); }

Partition partition_from_json(const Json& j) {
    return make_partition(j.get<std::vector<int>>());
}

}  // namespace

Json to_json(const Coeff& c) {
    Json terms = Json::array();
    for (const auto& [m, v] : c.terms())
        terms.push_back({{"monomial", monomial_to_json(m)}, {"coeff", to_string(v)}});
    return Json{{"terms", terms}};
}

Coeff coeff_from_json(const Json& j) {
    Coeff c;
    for (const auto& t : j.at("terms"))
        c += Coeff::monomial(monomial_from_json(t.at("monomial")),
                             rational_from_json(t.at("coeff")));
    return c;
}

Json to_json(const SchurClass& x) {
    Json terms = Json::array();
    for (const auto& [p, c] : x.terms())
        terms.push_back({{"partition", partition_to_json(p)}, {"coeff", to_json(c)}});
    return Json{{"row_bound", x.row_bound()}, {"terms", terms}};
}

SchurClass schur_from_json(const Json& j) {
    SchurClass x(j.at("row_bound").get<int>());
    for (const auto& t : j.at("terms"))
        x.add(partition_from_json(t.at("partition")), coeff_from_json(t.at("coeff")));
    return x;
}

Json to_json(const BwbResult& r) {
    Json j;
    j["vanishes"] = r.vanishes;
    if (!r.vanishes) {
        j["degree"] = r.degree;
        j["dominant"] = r.dominant;
        if (r.dim.fits_slong_p())
            j["dim"] = static_cast<long>(r.dim.get_si());
        else
            j["dim"] = r.dim.get_str();
    }
    if (r.outside_standard_range) j["warning"] = "k outside the standing range 1 < k < n-1";
    return j;
}

Json to_json(const QuantumClass& x) {
    Json terms = Json::array();
    for (const auto& [key, c] : x.terms()) {
        Json t{{"qpow", key.first}, {"partition", partition_to_json(key.second)}};
        if (c.is_constant())
            t["coeff"] = to_string(c.constant_value());
        else
            t["coeff"] = to_json(c);
        terms.push_back(std::move(t));
    }
    Json j{{"terms", terms}, {"conjectural", true}};
    if (!x.is_zero() && x.is_homogeneous()) j["degree"] = x.degree();
    return j;
}

QuantumClass quantum_from_json(const Json& j, const RingSpec& spec) {
    QuantumClass x(spec);
    for (const auto& t : j.at("terms")) {
        const Json& c = t.at("coeff");
        Coeff v = c.is_object() ? coeff_from_json(c) : Coeff(rational_from_json(c));
        x.add(t.at("qpow").get<int>(), partition_from_json(t.at("partition")), v);
    }
    return x;
}

Json invariants_to_json(const Invariants& I) {
    Json vals = Json::array();
    for (const auto& v : I) vals.push_back(to_string(v));
    return Json{{"I", vals}};
}

Invariants invariants_from_json(const Json& j) {
    Invariants I;
    for (const auto& v : j.at("I")) I.push_back(rational_from_json(v));
    return I;
}

Json matrix_to_json(const BMatrix& B) {
    Json rows = Json::array();
    for (const auto& row : B) {
        Json r = Json::array();
        for (const auto& v : row) r.push_back(to_string(v));
        rows.push_back(std::move(r));
    }
    return Json{{"n", static_cast<int>(B.size())}, {"entries", rows}};
}

BMatrix matrix_from_json(const Json& j) {
    BMatrix B;
    for (const auto& row : j.at("entries")) {
        std::vector<Rational> r;
        for (const auto& v : row) r.push_back(rational_from_json(v));
        B.push_back(std::move(r));
    }
    const size_t n = B.size();
    for (const auto& row : B)
        if (row.size() != n) throw std::invalid_argument("matrix is not square");
    if (j.contains("n") && j.at("n").get<size_t>() != n)
        throw std::invalid_argument("matrix size does not match the n field");
    return B;
}

Json to_json(const DegeneracyResult& r) {
    return Json{{"degenerate", r.degenerate}, {"determinant", to_string(r.determinant)}};
}

Json to_json(const VlocusResult& r) {
    Json j{{"nrows", r.nrows}, {"ncols", r.ncols}};
    if (r.dependent) j["dependent"] = *r.dependent;
    Json minors = Json::array();
    for (const auto& m : r.witness_minors) minors.push_back(to_json(m));
    j["witness_minors"] = minors;
    return j;
}

}  // namespace poly
