#pragma once

// JSON encodings of scalars, weights, algebra elements, modules and
// Cartan-part elements.  Every container is emitted in a canonical order.

#include <string>
#include <vector>

#include "json.hpp"

#include "qcentre/harishchandra.hpp"
#include "qcentre/module.hpp"
#include "qcentre/uqalg.hpp"

namespace qcentre {

using Json = nlohmann::ordered_json;

inline constexpr const char* kFormat = "qcentre/1";

inline Json to_json(const LaurentPoly& p)
{
    Json o = Json::object();
    for (const auto& [e, c] : p.terms()) o[std::to_string(e)] = c.get_str();
    return o;
}

inline LaurentPoly laurent_from_json(const Json& j)
{
    if (!j.is_object()) throw PreconditionError("Laurent polynomial must be a JSON object");
    LaurentPoly p;
    for (const auto& [k, v] : j.items()) {
        long e = 0;
        try {
            e = std::stol(k);
        } catch (const std::exception&) {
            throw PreconditionError("bad exponent key: " + k);
        }
        Rational c;
        if (v.is_string()) {
            if (c.set_str(v.get<std::string>(), 10) != 0) throw PreconditionError("bad rational: " + v.dump());
        } else if (v.is_number_integer()) {
            c = v.get<long>();
        } else {
            throw PreconditionError("bad coefficient: " + v.dump());
        }
        c.canonicalize();
        p += LaurentPoly::monomial(e, c);
    }
    return p;
}

/// {"num": {exp: "p/q"}, "den": {...}}; exponents count powers of v = q^{1/unit}.
inline Json to_json(const QScalar& s)
{
    Json o = Json::object();
    o["num"] = to_json(s.num());
    o["den"] = to_json(s.den());
    return o;
}

inline QScalar qscalar_from_json(const Json& j)
{
    if (j.is_number_integer()) return QScalar(j.get<long>());
    if (!j.is_object() || !j.contains("num")) throw PreconditionError("scalar must be an object with \"num\"");
    LaurentPoly num = laurent_from_json(j.at("num"));
    LaurentPoly den = j.contains("den") ? laurent_from_json(j.at("den")) : LaurentPoly::constant(1);
    return QScalar::fraction(std::move(num), std::move(den));
}

inline Json to_json(const Weight& w) { return Json(w.coords()); }

inline std::string weight_key(const Weight& w)
{
    std::string s;
    for (int i = 0; i < w.rank(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
    return s;
}

/// "1,0" or "(1,0)" -> Weight of the given rank.
inline Weight parse_weight(const std::string& text, int rank)
{
    std::vector<int> cs;
    std::string cur;
    auto flush = [&]() {
        if (cur.empty()) throw PreconditionError("bad weight: " + text);
        try {
            std::size_t used = 0;
            cs.push_back(std::stoi(cur, &used));
            if (used != cur.size()) throw PreconditionError("bad weight: " + text);
        } catch (const std::logic_error&) {
            throw PreconditionError("bad weight: " + text);
        }
        cur.clear();
    };
    for (char c : text) {
        if (c == '(' || c == ')' || c == ' ') continue;
        if (c == ',') {
            flush();
        } else {
            cur += c;
        }
    }
    flush();
    if (static_cast<int>(cs.size()) != rank)
        throw PreconditionError("weight " + text + " needs " + std::to_string(rank) + " coordinates");
    return Weight::from(cs);
}

inline Weight weight_from_json(const Json& j, int rank)
{
    if (j.is_string()) return parse_weight(j.get<std::string>(), rank);
    if (!j.is_array() || static_cast<int>(j.size()) != rank) throw PreconditionError("weight must be an array of length rank");
    return Weight::from(j.get<std::vector<int>>());
}

/// {"terms": [{"coeff": scalar, "word": ["F2", "K:(-1,2)", "E1"]}]}.
inline Json to_json(const AlgebraElement& x)
{
    Json terms = Json::array();
    for (const auto& [m, c] : x.terms()) {
        Json t = Json::object();
        t["coeff"] = to_json(c);
        t["word"] = m.tokens();
        terms.push_back(std::move(t));
    }
    Json o = Json::object();
    o["terms"] = std::move(terms);
    return o;
}

inline AlgebraElement element_from_json(const QuantumGroup& qg, const Json& j)
{
    if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array())
        throw PreconditionError("element must be an object with a \"terms\" array");
    AlgebraElement out;
    for (const auto& t : j.at("terms")) {
        if (!t.contains("word") || !t.at("word").is_array()) throw PreconditionError("term without \"word\"");
        QScalar c = t.contains("coeff") ? qscalar_from_json(t.at("coeff")) : QScalar(1);
        out += qg.parse_word(t.at("word").get<std::vector<std::string>>()) * c;
    }
    return out;
}

/// {"2,0": scalar, ...}: the coefficient of K_mu keyed by the coordinates of mu.
inline Json to_json(const U0Element& h)
{
    Json o = Json::object();
    for (const auto& [w, c] : h.terms()) o[weight_key(w)] = to_json(c);
    return o;
}

inline U0Element u0_from_json(const Json& j, int rank)
{
    if (!j.is_object()) throw PreconditionError("Cartan element must be a JSON object");
    U0Element h;
    for (const auto& [k, v] : j.items()) h.add(parse_weight(k, rank), qscalar_from_json(v));
    return h;
}

inline Json to_json(const FundamentalPolynomial& p)
{
    Json arr = Json::array();
    for (auto it = p.terms.rbegin(); it != p.terms.rend(); ++it) {
        Json t = Json::object();
        t["exponents"] = it->first;
        t["coefficient"] = to_json(it->second);
        arr.push_back(std::move(t));
    }
    return arr;
}

inline FundamentalPolynomial polynomial_from_json(const Json& j)
{
    if (!j.is_array()) throw PreconditionError("polynomial must be an array of terms");
    FundamentalPolynomial p;
    for (const auto& t : j) p.add(t.at("exponents").get<std::vector<int>>(), qscalar_from_json(t.at("coefficient")));
    return p;
}

inline Json to_json(const Matrix& m)
{
    Json entries = Json::array();
    for (int r = 0; r < m.rows(); ++r)
        for (const auto& [c, v] : m.row(r)) entries.push_back(Json::array({r, c, to_json(v)}));
    return entries;
}

inline Json to_json(const WeightModule& m)
{
    Json o = Json::object();
    o["label"] = m.label;
    if (m.highest_weight) o["highest_weight"] = to_json(*m.highest_weight);
    o["dim"] = m.dim();
    Json ws = Json::array();
    for (const auto& w : m.weights) ws.push_back(to_json(w));
    o["weights"] = std::move(ws);
    Json e = Json::array(), f = Json::array();
    for (const auto& x : m.e) e.push_back(to_json(x));
    for (const auto& x : m.f) f.push_back(to_json(x));
    o["E"] = std::move(e);
    o["F"] = std::move(f);
    return o;
}

inline WeightModule module_from_json(const Json& j, int rank)
{
    WeightModule m;
    m.label = j.value("label", std::string());
    if (j.contains("highest_weight")) m.highest_weight = weight_from_json(j.at("highest_weight"), rank);
    for (const auto& w : j.at("weights")) m.weights.push_back(weight_from_json(w, rank));
    const int dim = m.dim();
    auto read = [&](const Json& arr, std::vector<Matrix>& out) {
        if (!arr.is_array() || static_cast<int>(arr.size()) != rank) throw PreconditionError("module needs one matrix per generator");
        for (const auto& mat : arr) {
            Matrix x(dim, dim);
            for (const auto& ent : mat) {
                const int r = ent.at(0).get<int>(), c = ent.at(1).get<int>();
                if (r < 0 || r >= dim || c < 0 || c >= dim) throw PreconditionError("matrix entry out of range");
                x.set(r, c, qscalar_from_json(ent.at(2)));
            }
            out.push_back(std::move(x));
        }
    };
    read(j.at("E"), m.e);
    read(j.at("F"), m.f);
    return m;
}

} // namespace qcentre
