#include "mdt/serialize.hpp"

#include <sstream>

namespace mdt {

namespace {

mpz_class mpz_from_string(const std::string& s) {
    mpz_class v;
    if (mpz_set_str(v.get_mpz_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("malformed integer literal: " + s);
    return v;
}

mpq_class mpq_from_string(const std::string& s) {
    mpq_class v;
    if (mpq_set_str(v.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("malformed rational literal: " + s);
    if (v.get_den() == 0) throw std::invalid_argument("rational literal with zero denominator: " + s);
    v.canonicalize();
    return v;
}

long long_from_string(const std::string& s) {
    size_t pos = 0;
    long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("malformed exponent: " + s);
    return v;
}

} // namespace

json tpoly_to_json(const TPoly& p) {
    json j = json::object();
    for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = c.get_str();
    return j;
}

TPoly tpoly_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("polynomial JSON must be an object");
    TPoly p;
    for (const auto& [key, val] : j.items()) p.add_term(long_from_string(key), mpz_from_string(val.get<std::string>()));
    return p;
}

json trat_to_json(const TRat& r) {
    return json{{"num", tpoly_to_json(r.num())}, {"den", tpoly_to_json(r.den())}};
}

TRat trat_from_json(const json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw std::invalid_argument("rational-function JSON must carry num and den");
    return TRat(tpoly_from_json(j.at("num")), tpoly_from_json(j.at("den")));
}

json qseries_to_json(const QSeries& s, int r) {
    json coeffs = json::array();
    for (long n = 0; n <= s.trunc(); ++n) coeffs.push_back(trat_to_json(s.coeff(n)));
    return json{{"r", r}, {"trunc", s.trunc()}, {"coeffs", coeffs}};
}

QSeries qseries_from_json(const json& j, int* r_out) {
    if (!j.is_object() || !j.contains("trunc") || !j.contains("coeffs"))
        throw std::invalid_argument("series JSON must carry trunc and coeffs");
    long trunc = j.at("trunc").get<long>();
    const json& coeffs = j.at("coeffs");
    if (!coeffs.is_array() || static_cast<long>(coeffs.size()) != trunc + 1)
        throw std::invalid_argument("series JSON coefficient count does not match trunc");
    QSeries s(trunc);
    for (long n = 0; n <= trunc; ++n) s.set_coeff(n, trat_from_json(coeffs[static_cast<size_t>(n)]));
    if (r_out) *r_out = j.value("r", 0);
    return s;
}

std::string qseries_to_csv(const QSeries& s) {
    std::ostringstream os;
    os << "n,t_exponent,coefficient\n";
    for (long n = 0; n <= s.trunc(); ++n) {
        TPoly p = s.coeff(n).polynomial();
        for (const auto& [e, c] : p.terms()) os << n << "," << e << "," << c.get_str() << "\n";
    }
    return os.str();
}

json tripoly_to_json(const TriPoly& p) {
    json j = json::object();
    for (const auto& [k, c] : p.terms())
        j[std::to_string(k[0]) + "," + std::to_string(k[1]) + "," + std::to_string(k[2])] = c.get_str();
    return j;
}

TriPoly tripoly_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("trivariate JSON must be an object");
    TriPoly p;
    for (const auto& [key, val] : j.items()) {
        std::istringstream is(key);
        std::string part;
        TriPoly::Key k{};
        for (int i = 0; i < 3; ++i) {
            if (!std::getline(is, part, ',')) throw std::invalid_argument("malformed exponent triple: " + key);
            k[static_cast<size_t>(i)] = long_from_string(part);
        }
        if (std::getline(is, part, ',')) throw std::invalid_argument("malformed exponent triple: " + key);
        p.add_term(k, mpz_from_string(val.get<std::string>()));
    }
    return p;
}

json quiver_to_json(const Quiver& q) {
    json edges = json::array();
    for (const auto& [t, h] : q.edges) edges.push_back(json::array({t, h}));
    return json{{"vertices", q.vertices}, {"edges", edges}};
}

Quiver quiver_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw std::invalid_argument("quiver JSON must carry vertices and edges");
    Quiver q;
    q.vertices = j.at("vertices").get<int>();
    for (const json& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("quiver edge must be a pair");
        q.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    q.validate();
    return q;
}

namespace {

json qmat_to_json(const QMat& m) {
    json rows = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const auto& v : row) r.push_back(v.get_str());
        rows.push_back(r);
    }
    return rows;
}

QMat qmat_from_json(const json& j, size_t n) {
    if (!j.is_array() || j.size() != n) throw std::invalid_argument("matrix JSON has the wrong row count");
    QMat m;
    for (const json& row : j) {
        if (!row.is_array() || row.size() != n)
            throw std::invalid_argument("matrix JSON has the wrong column count");
        QVec v;
        for (const json& entry : row) v.push_back(mpq_from_string(entry.get<std::string>()));
        m.push_back(std::move(v));
    }
    return m;
}

} // namespace

json framed_rep_to_json(const FramedRep& rep) {
    json us = json::array();
    for (const QVec& v : rep.u) {
        json row = json::array();
        for (const auto& x : v) row.push_back(x.get_str());
        us.push_back(row);
    }
    return json{{"n", rep.n},
                {"A1", qmat_to_json(rep.a[0])},
                {"A2", qmat_to_json(rep.a[1])},
                {"A3", qmat_to_json(rep.a[2])},
                {"u", us}};
}

FramedRep framed_rep_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("A1") || !j.contains("A2") ||
        !j.contains("A3") || !j.contains("u"))
        throw std::invalid_argument("representation JSON must carry n, A1, A2, A3 and u");
    FramedRep rep;
    rep.n = j.at("n").get<long>();
    const char* keys[3] = {"A1", "A2", "A3"};
    for (size_t i = 0; i < 3; ++i)
        rep.a[i] = qmat_from_json(j.at(keys[i]), static_cast<size_t>(rep.n));
    for (const json& v : j.at("u")) {
        QVec vec;
        if (!v.is_array() || v.size() != static_cast<size_t>(rep.n))
            throw std::invalid_argument("framing vector length does not match n");
        for (const json& entry : v) vec.push_back(mpq_from_string(entry.get<std::string>()));
        rep.u.push_back(std::move(vec));
    }
    rep.validate();
    return rep;
}

json distribution_to_json(const Distribution& d, int r, long n) {
    json hist = json::object();
    for (const auto& [s, c] : d.histogram) hist[std::to_string(s)] = c.get_str();
    return json{{"r", r},
                {"n", n},
                {"total", d.total.get_str()},
                {"mean", d.mean.get_str()},
                {"variance", d.variance.get_str()},
                {"histogram", hist}};
}

std::string distribution_to_csv(const Distribution& d, int r, long n) {
    std::ostringstream os;
    os << "r,n,s_value,count\n";
    for (const auto& [s, c] : d.histogram) os << r << "," << n << "," << s << "," << c.get_str() << "\n";
    return os.str();
}

} // namespace mdt
