#pragma once

// The command layer behind the qcentre executable.  Each command maps a
// JobConfig to a JSON document and an exit code.

#include <cctype>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qcentre/battery.hpp"
#include "qcentre/braid.hpp"
#include "qcentre/harishchandra.hpp"
#include "qcentre/json_io.hpp"
#include "qcentre/pairing.hpp"
#include "qcentre/repbuilder.hpp"
#include "qcentre/rmatrix.hpp"

namespace qcentre {

enum ExitCode : int { kExitOk = 0, kExitUsage = 2, kExitVerification = 3, kExitDomain = 4 };

struct JobConfig {
    std::string type;      // "A2", or a bare letter combined with rank
    int rank = 0;
    std::string weight;    // comma-separated coordinates
    int power = 1;
    std::string reduced_word;  // 1-based letters, comma-separated; empty = default
    std::string battery = "default";
    std::string input;     // --in
    std::string x, y;      // pairing arguments: file paths or inline JSON
    int max_height = 4;
    std::string out;
};

struct CommandResult {
    int exit_code = kExitOk;
    Json document;
    std::string error;
};

namespace detail {

inline CartanDatum datum_from(const JobConfig& cfg)
{
    if (cfg.type.empty()) throw PreconditionError("missing --type");
    if (cfg.type.size() == 1) {
        if (cfg.rank < 1) throw PreconditionError("--type " + cfg.type + " needs --rank");
        return CartanDatum::make(cfg.type[0], cfg.rank);
    }
    for (std::size_t i = 1; i < cfg.type.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(cfg.type[i]))) throw PreconditionError("bad type: " + cfg.type);
    CartanDatum d = CartanDatum::parse(cfg.type);
    if (cfg.rank != 0 && cfg.rank != d.rank()) throw PreconditionError("--rank contradicts --type");
    return d;
}

inline ReducedWord word_from(const CartanDatum& d, const std::string& text)
{
    if (text.empty()) return d.default_reduced_word();
    ReducedWord w;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            w.letters.push_back(std::stoi(tok) - 1);
        } catch (const std::logic_error&) {
            throw PreconditionError("bad reduced word: " + text);
        }
    }
    d.positive_roots(w);  // validates
    return w;
}

inline Json header(const CartanDatum& d, const std::string& command)
{
    Json o = Json::object();
    o["format"] = kFormat;
    o["command"] = command;
    o["type"] = d.label();
    o["unit"] = d.unit();
    return o;
}

inline Json read_json_arg(const std::string& arg)
{
    std::string text = arg;
    auto first = arg.find_first_not_of(" \t\n");
    if (first == std::string::npos) throw PreconditionError("empty JSON argument");
    if (arg[first] != '{' && arg[first] != '[') {
        std::ifstream in(arg);
        if (!in) throw PreconditionError("cannot read " + arg);
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw PreconditionError(std::string("invalid JSON: ") + e.what());
    }
}

inline CartanDatum datum_of_file(const Json& j)
{
    if (!j.contains("type") || !j.at("type").is_string()) throw PreconditionError("input file has no \"type\"");
    return CartanDatum::parse(j.at("type").get<std::string>());
}

inline Json word_json(const ReducedWord& w)
{
    Json a = Json::array();
    for (int i : w.letters) a.push_back(i + 1);
    return a;
}

} // namespace detail

/// Matrix is c * identity for some c.
inline std::optional<QScalar> scalar_of(const Matrix& m)
{
    if (m.rows() != m.cols()) return std::nullopt;
    if (m.rows() == 0) return QScalar();
    QScalar c = m.get(0, 0);
    for (int r = 0; r < m.rows(); ++r) {
        const auto& row = m.row(r);
        for (const auto& [col, v] : row)
            if (col != r) return std::nullopt;
        if (!(m.get(r, r) == c)) return std::nullopt;
    }
    return c;
}

struct ModuleVerdict {
    std::string module;
    bool commutes = true;
    std::optional<bool> scalar;                 // only for simple modules
    std::optional<bool> eigenvalue_matches;     // only for simple modules, degree-zero input
};

/// Commutation with every E_i, F_i, K_{varpi_i}; scalar action and the
/// Harish-Chandra eigenvalue on simple modules.
inline ModuleVerdict verdict_on(const QuantumGroup& qg, const AlgebraElement& c, const WeightModule& m,
                                const std::optional<U0Element>& hc)
{
    const CartanDatum& d = qg.datum();
    ModuleVerdict v;
    v.module = m.label;
    Evaluator ev(qg, m);
    Matrix cm = ev(c);
    for (int i = 0; i < d.rank() && v.commutes; ++i) {
        const Matrix& e = m.e[static_cast<std::size_t>(i)];
        const Matrix& f = m.f[static_cast<std::size_t>(i)];
        Matrix k = k_matrix(qg, m, d.fundamental(i));
        v.commutes = cm * e == e * cm && cm * f == f * cm && cm * k == k * cm;
    }
    if (m.highest_weight) {
        auto s = scalar_of(cm);
        v.scalar = s.has_value();
        if (hc) v.eigenvalue_matches = s && *s == chi_eval(d, *m.highest_weight + d.rho(), *hc);
    }
    return v;
}

inline bool passed(const ModuleVerdict& v)
{
    return v.commutes && v.scalar.value_or(true) && v.eigenvalue_matches.value_or(true);
}

inline Json to_json(const ModuleVerdict& v)
{
    Json o = Json::object();
    o["module"] = v.module;
    o["commutes"] = v.commutes;
    if (v.scalar) o["scalar"] = *v.scalar;
    if (v.eigenvalue_matches) o["eigenvalue"] = *v.eigenvalue_matches;
    return o;
}

inline CommandResult run_guarded(const std::function<CommandResult()>& body)
{
    try {
        return body();
    } catch (const PreconditionError& e) {
        return {kExitUsage, Json(), e.what()};
    } catch (const DomainError& e) {
        return {kExitDomain, Json(), e.what()};
    } catch (const Json::exception& e) {
        return {kExitUsage, Json(), e.what()};
    }
}

/// C_lambda^(m) with its Harish-Chandra image and battery verdicts.
inline CommandResult cmd_central(const JobConfig& cfg)
{
    return run_guarded([&]() {
        CartanDatum d = detail::datum_from(cfg);
        if (cfg.weight.empty()) throw PreconditionError("missing --weight");
        Weight lambda = parse_weight(cfg.weight, d.rank());
        if (!lambda.is_dominant()) throw PreconditionError("weight " + lambda.to_string() + " is not dominant");
        if (cfg.power < 1) throw PreconditionError("--power must be positive");
        QuantumGroup qg(d);
        ReducedWord word = detail::word_from(d, cfg.reduced_word);
        WeightModule v = simple_module(qg, lambda);
        AlgebraElement c = central_element(qg, v, root_vectors(qg, word), cfg.power);
        U0Element hc = hc_image(qg, c);
        Battery bat = make_battery(qg, cfg.battery);

        Json doc = detail::header(d, "central");
        doc["lambda"] = to_json(lambda);
        doc["power"] = cfg.power;
        doc["reduced_word"] = detail::word_json(word);
        doc["element"] = to_json(c);
        doc["hc_image"] = to_json(hc);
        Json verdicts = Json::array();
        bool ok = true;
        for (const auto& m : bat.modules) {
            ModuleVerdict mv = verdict_on(qg, c, m, hc);
            ok = ok && passed(mv);
            verdicts.push_back(to_json(mv));
        }
        Json b = Json::object();
        b["name"] = bat.name;
        b["results"] = std::move(verdicts);
        doc["battery"] = std::move(b);
        doc["verified"] = ok;
        return CommandResult{ok ? kExitOk : kExitVerification, std::move(doc), ok ? "" : "centrality battery failed"};
    });
}

/// Centrality, Harish-Chandra and eigenvalue checks on an element file.
inline CommandResult cmd_verify(const JobConfig& cfg)
{
    return run_guarded([&]() {
        Json in = detail::read_json_arg(cfg.input);
        CartanDatum d = detail::datum_of_file(in);
        QuantumGroup qg(d);
        if (!in.contains("element")) throw PreconditionError("input has no \"element\"");
        AlgebraElement c = element_from_json(qg, in.at("element"));
        Battery bat = make_battery(qg, cfg.battery);
        if (bat.modules.empty()) throw PreconditionError("battery is empty");

        Json checks = Json::array();
        bool ok = true;
        auto record = [&](const std::string& name, const std::string& subject, bool pass) {
            Json o = Json::object();
            o["check"] = name;
            o["subject"] = subject;
            o["pass"] = pass;
            checks.push_back(std::move(o));
            ok = ok && pass;
        };
        auto g = qg.grading(c);
        const bool degree_zero = g && g->is_zero();
        record("degree-zero", "element", degree_zero);
        std::optional<U0Element> hc;
        if (degree_zero) {
            hc = hc_image(qg, c);
            record("hc-weyl-invariant", "element", is_W_invariant(d, *hc));
            record("hc-even", "element", is_even(*hc));
            if (in.contains("lambda") && in.value("power", 1) == 1) {
                Weight lambda = weight_from_json(in.at("lambda"), d.rank());
                record("hc-character", "V" + lambda.to_string(), *hc == character(d, lambda));
            }
        }
        for (const auto& m : bat.modules) {
            ModuleVerdict mv = verdict_on(qg, c, m, hc);
            record("commutes", m.label, mv.commutes);
            if (mv.scalar) record("scalar", m.label, *mv.scalar);
            if (mv.eigenvalue_matches) record("eigenvalue", m.label, *mv.eigenvalue_matches);
        }
        Json doc = detail::header(d, "verify");
        doc["battery"] = bat.name;
        doc["checks"] = std::move(checks);
        doc["pass"] = ok;
        return CommandResult{ok ? kExitOk : kExitVerification, std::move(doc), ok ? "" : "verification failed"};
    });
}

inline CommandResult cmd_hc(const JobConfig& cfg)
{
    return run_guarded([&]() {
        Json in = detail::read_json_arg(cfg.input);
        CartanDatum d = detail::datum_of_file(in);
        QuantumGroup qg(d);
        if (!in.contains("element")) throw PreconditionError("input has no \"element\"");
        AlgebraElement c = element_from_json(qg, in.at("element"));
        auto g = qg.grading(c);
        if (!g || !g->is_zero()) throw DomainError("element does not have degree zero");
        Json doc = detail::header(d, "hc");
        doc["hc_image"] = to_json(hc_image(qg, c));
        return CommandResult{kExitOk, std::move(doc), ""};
    });
}

/// Polynomial in x_i = ch V(varpi_i) for a central element or Cartan-part file.
inline CommandResult cmd_decompose(const JobConfig& cfg)
{
    return run_guarded([&]() {
        Json in = detail::read_json_arg(cfg.input);
        CartanDatum d = detail::datum_of_file(in);
        QuantumGroup qg(d);
        U0Element h;
        if (in.contains("element")) {
            AlgebraElement c = element_from_json(qg, in.at("element"));
            auto g = qg.grading(c);
            if (!g || !g->is_zero()) throw DomainError("element does not have degree zero");
            h = hc_image(qg, c);
        } else if (in.contains("hc_image")) {
            h = u0_from_json(in.at("hc_image"), d.rank());
        } else {
            throw PreconditionError("input has neither \"element\" nor \"hc_image\"");
        }
        FundamentalPolynomial p = decompose_in_fundamentals(d, h);
        Json doc = detail::header(d, "decompose");
        doc["polynomial"] = to_json(p);
        return CommandResult{kExitOk, std::move(doc), ""};
    });
}

inline CommandResult cmd_module(const JobConfig& cfg)
{
    return run_guarded([&]() {
        CartanDatum d = detail::datum_from(cfg);
        if (cfg.weight.empty()) throw PreconditionError("missing --weight");
        Weight lambda = parse_weight(cfg.weight, d.rank());
        QuantumGroup qg(d);
        Json doc = detail::header(d, "module");
        doc["module"] = to_json(simple_module(qg, lambda));
        return CommandResult{kExitOk, std::move(doc), ""};
    });
}

/// (x, y) for x in U^{<=0}, y in U^{>=0}.
inline CommandResult cmd_pairing(const JobConfig& cfg)
{
    return run_guarded([&]() {
        CartanDatum d = detail::datum_from(cfg);
        QuantumGroup qg(d);
        Json jx = detail::read_json_arg(cfg.x), jy = detail::read_json_arg(cfg.y);
        AlgebraElement x = element_from_json(qg, jx.contains("element") ? jx.at("element") : jx);
        AlgebraElement y = element_from_json(qg, jy.contains("element") ? jy.at("element") : jy);
        Json doc = detail::header(d, "pairing");
        doc["value"] = to_json(rosso_form(qg, x, y));
        return CommandResult{kExitOk, std::move(doc), ""};
    });
}

/// Gram matrices of PBW monomials, for one weight (root coordinates) or all
/// nonzero weights in Q+ up to the height bound.
inline CommandResult cmd_gram(const JobConfig& cfg)
{
    return run_guarded([&]() {
        CartanDatum d = detail::datum_from(cfg);
        QuantumGroup qg(d);
        RootVectorTable tbl = root_vectors(qg, detail::word_from(d, cfg.reduced_word));
        std::vector<std::vector<int>> targets;
        if (!cfg.weight.empty()) {
            Weight rc = parse_weight(cfg.weight, d.rank());
            for (int i = 0; i < d.rank(); ++i)
                if (rc[i] < 0) throw PreconditionError("weight must lie in Q+");
            targets.push_back(rc.coords());
        } else {
            if (cfg.max_height < 1) throw PreconditionError("--max-height must be positive");
            for (int h = 1; h <= cfg.max_height; ++h)
                for (const auto& w : detail::dominant_up_to(d.rank(), h)) {
                    int s = 0;
                    for (int i = 0; i < d.rank(); ++i) s += w[i];
                    if (s == h) targets.push_back(w.coords());
                }
        }
        Json rows = Json::array();
        bool all_full = true;
        for (const auto& rc : targets) {
            GramResult g = gram_rank(qg, d.from_root_coords(rc), tbl);
            Json o = Json::object();
            o["root_coords"] = rc;
            o["partitions"] = g.partitions;
            o["rank"] = g.rank;
            o["full_rank"] = g.full_rank();
            Json m = Json::array();
            for (const auto& row : g.gram) {
                Json r = Json::array();
                for (const auto& v : row) r.push_back(to_json(v));
                m.push_back(std::move(r));
            }
            o["gram"] = std::move(m);
            all_full = all_full && g.full_rank();
            rows.push_back(std::move(o));
        }
        Json doc = detail::header(d, "gram");
        doc["reduced_word"] = detail::word_json(tbl.word);
        doc["weights"] = std::move(rows);
        doc["all_full_rank"] = all_full;
        return CommandResult{kExitOk, std::move(doc), ""};
    });
}

} // namespace qcentre
