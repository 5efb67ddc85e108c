// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "qcentre/battery.hpp"
#include "qcentre/commands.hpp"
#include "qcentre/pairing.hpp"
#include "qcentre/rmatrix.hpp"

using namespace qcentre;

namespace {

const std::vector<std::string> kCoreTypes{"A1", "A2", "B2", "G2"};

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what)
    {
        if (ok) return;
        if (pass) detail = what;
        pass = false;
    }
};

std::vector<AlgebraElement> generators(const QuantumGroup& qg)
{
    std::vector<AlgebraElement> out;
    for (int i = 0; i < qg.rank(); ++i) {
        out.push_back(qg.E(i));
        out.push_back(qg.F(i));
        out.push_back(qg.K(qg.datum().fundamental(i)));
    }
    return out;
}

U0Element multiplicity_image(const CartanDatum& d, const Weight& lambda)
{
    U0Element h;
    for (const auto& [mu, m] : freudenthal(d, lambda)) h.add(2 * mu, QScalar(m));
    return h;
}

std::string slurp(const std::string& file)
{
    std::ifstream in(file, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome ac1_relations()
{
    Outcome o;
    for (const auto& t : kCoreTypes) {
        QuantumGroup qg(CartanDatum::parse(t));
        const Battery bat = make_battery(qg, "default");
        for (const auto& m : bat.modules)
            for (const auto& [name, r] : relation_residues(qg, m)) o.require(r.is_zero(), t + " " + m.label + " " + name);
    }
    return o;
}

Outcome ac2_modules()
{
    Outcome o;
    for (const auto& t : kCoreTypes) {
        QuantumGroup qg(CartanDatum::parse(t));
        const CartanDatum& d = qg.datum();
        for (const auto& lam : detail::dominant_up_to(d.rank(), 2)) {
            WeightModule v = simple_module(qg, lam);
            o.require(weight_multiplicities(v) == freudenthal(d, lam), t + " multiplicities " + lam.to_string());
            o.require(Integer(v.dim()) == weyl_dimension(d, lam), t + " dimension " + lam.to_string());
        }
    }
    QuantumGroup a2(CartanDatum::parse("A2"));
    WeightModule adj = simple_module(a2, Weight{1, 1});
    o.require(adj.dim() == 8 && weight_multiplicities(adj)[Weight{0, 0}] == 2, "A2 adjoint");
    return o;
}

Outcome ac3_centrality()
{
    Outcome o;
    auto check = [&](const QuantumGroup& qg, const std::vector<WeightModule>& bat, const AlgebraElement& c,
                     const std::string& what) {
        for (const auto& m : bat) {
            ModuleVerdict v = verdict_on(qg, c, m, std::nullopt);
            o.require(v.commutes, what + " commutes on " + m.label);
            o.require(v.scalar.value_or(true), what + " scalar on " + m.label);
        }
    };
    for (const auto& t : kCoreTypes) {
        QuantumGroup qg(CartanDatum::parse(t));
        RootVectorTable tbl = root_vectors(qg);
        std::vector<WeightModule> bat = make_battery(qg, "default").modules;
        for (int i = 0; i < qg.rank(); ++i) {
            WeightModule v = simple_module(qg, qg.datum().fundamental(i));
            check(qg, bat, central_element(qg, v, tbl, 1), t + " C(varpi" + std::to_string(i + 1) + ")");
        }
    }
    for (const std::string t : {"A1", "A2"}) {
        QuantumGroup qg(CartanDatum::parse(t));
        check(qg, make_battery(qg, "default").modules, central_element(qg, qg.datum().fundamental(0), 2),
              t + " C(varpi1)^(2)");
    }
    return o;
}

Outcome ac4_intertwining()
{
    Outcome o;
    for (const std::string t : {"A1", "A2", "B2"}) {
        QuantumGroup qg(CartanDatum::parse(t));
        RootVectorTable tbl = root_vectors(qg);
        WeightModule v = simple_module(qg, qg.datum().fundamental(0));
        for (const auto& x : generators(qg))
            o.require(intertwining_residue(qg, v, v, tbl, x).is_zero(), t + " " + x.to_string());
    }
    return o;
}

Outcome ac5_hc_image()
{
    Outcome o;
    for (const auto& t : kCoreTypes) {
        QuantumGroup qg(CartanDatum::parse(t));
        const CartanDatum& d = qg.datum();
        RootVectorTable tbl = root_vectors(qg);
        o.require(hc_image(qg, central_element(qg, d.zero(), 1)) == u0_one(d), t + " trivial weight");
        for (int i = 0; i < d.rank(); ++i) {
            const Weight lam = d.fundamental(i);
            U0Element h = hc_image(qg, central_element(qg, simple_module(qg, lam), tbl, 1));
            o.require(h == multiplicity_image(d, lam), t + " image " + lam.to_string());
            o.require(is_W_invariant(d, h) && is_even(h), t + " invariance " + lam.to_string());
        }
    }
    return o;
}

Outcome ac6_eigenvalues()
{
    Outcome o;
    for (const auto& t : kCoreTypes) {
        QuantumGroup qg(CartanDatum::parse(t));
        const CartanDatum& d = qg.datum();
        RootVectorTable tbl = root_vectors(qg);
        std::vector<WeightModule> bat = make_battery(qg, "default").modules;
        for (int i = 0; i < d.rank(); ++i) {
            AlgebraElement c = central_element(qg, simple_module(qg, d.fundamental(i)), tbl, 1);
            U0Element h = hc_image(qg, c);
            for (const auto& m : bat) {
                if (!m.highest_weight) continue;
                Matrix expected = Matrix::identity(m.dim()) * chi_eval(d, *m.highest_weight + d.rho(), h);
                o.require(evaluate(qg, c, m) == expected, t + " " + m.label);
            }
        }
    }
    QuantumGroup a1(CartanDatum::parse("A1"));
    AlgebraElement c = central_element(a1, Weight{1}, 1);
    for (int n = 0; n <= 4; ++n) {
        WeightModule v = simple_module(a1, Weight{n});
        QScalar closed = QScalar::vpow((n + 1) * a1.unit()) + QScalar::vpow(-(n + 1) * a1.unit());
        o.require(evaluate(a1, c, v) == Matrix::identity(v.dim()) * closed, "A1 closed value n=" + std::to_string(n));
    }
    return o;
}

Outcome ac7_closed_formula()
{
    Outcome o;
    for (const std::string t : {"A1", "A2", "B2"}) {
        QuantumGroup qg(CartanDatum::parse(t));
        RootVectorTable tbl = root_vectors(qg);
        for (int i = 0; i < qg.rank(); ++i) {
            WeightModule v = simple_module(qg, qg.datum().fundamental(i));
            o.require(closed_formula(qg, v, tbl) == central_element(qg, v, tbl, 1), t + " varpi" + std::to_string(i + 1));
        }
    }
    return o;
}

Outcome ac8_polynomial_algebra()
{
    Outcome o;
    for (const std::string t : {"A2", "B2"}) {
        QuantumGroup qg(CartanDatum::parse(t));
        const CartanDatum& d = qg.datum();
        FundamentalCharacters fc(d);
        for (const auto& lam : detail::dominant_up_to(2, 3)) {
            WeightModule v = simple_module(qg, lam);
            U0Element h = hc_image(qg, central_element_cartan_part(qg, v));
            const std::string tag = t + " " + lam.to_string();
            o.require(h == ch(v), tag + " image");
            FundamentalPolynomial p;
            try {
                p = decompose_in_fundamentals(fc, h);
            } catch (const std::exception& e) {
                o.require(false, tag + " decompose: " + e.what());
                continue;
            }
            o.require(fc.expand(p) == h, tag + " round trip");
            std::vector<int> k(lam.coords());
            auto lead = p.terms.find(k);
            bool lower = true;
            for (const auto& [a, c] : p.terms) {
                if (a == k) continue;
                Weight w = d.zero();
                for (int i = 0; i < 2; ++i) w = w + a[i] * d.fundamental(i);
                lower = lower && d.dominance_leq(w, lam) && !(w == lam);
            }
            o.require(lead != p.terms.end() && lead->second == QScalar(1) && lower, tag + " leading term");
            o.require(triangularity_certificate(fc, k), tag + " triangularity");
        }
        RootVectorTable tbl = root_vectors(qg);
        for (int i = 0; i < 2; ++i) {
            WeightModule v = simple_module(qg, d.fundamental(i));
            o.require(project_pi(qg, central_element(qg, v, tbl, 1)) == project_pi(qg, central_element_cartan_part(qg, v)),
                      t + " Cartan part of C(varpi" + std::to_string(i + 1) + ")");
        }
    }
    return o;
}

Outcome ac9_pairing()
{
    Outcome o;
    QuantumGroup a2(CartanDatum::parse("A2"));
    const CartanDatum& d = a2.datum();
    RossoForm form(a2);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            QScalar expected = i == j ? (a2.q_i(i) - a2.q_i(i).inverse()).inverse() : QScalar();
            o.require(form(a2.F(i), a2.E(j)) == expected, "(F_i, E_j)");
        }
        o.require(form(a2.K(d.fundamental(i)), a2.E(i)).is_zero(), "(K, E_i)");
        o.require(form(a2.F(i), a2.K(d.fundamental(i))).is_zero(), "(F_i, K)");
    }
    const Weight l{1, -2}, m{2, 1};
    o.require(form(a2.K(l), a2.K(m)) == QScalar::vpow(-d.inner_v(l, m)), "(K, K)");

    std::vector<Weight> upto3;
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; a + b <= 3; ++b) upto3.push_back(d.from_root_coords({a, b}));
    for (const auto& nu : upto3)
        for (const auto& mu : upto3)
            if (!(nu == mu)) o.require(graded_orthogonality_check(a2, nu, mu), "orthogonality " + nu.to_string() + " " + mu.to_string());

    RootVectorTable tbl = root_vectors(a2);
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; a + b <= 4; ++b)
            if (a + b > 0) o.require(gram_rank(a2, d.from_root_coords({a, b}), tbl).full_rank(), "Gram " + std::to_string(a) + "," + std::to_string(b));

    std::mt19937 rng(20261018);
    std::uniform_int_distribution<int> c(-3, 3);
    for (const auto& t : kCoreTypes) {
        QuantumGroup qg(CartanDatum::parse(t));
        for (int i = 0; i < qg.rank(); ++i) {
            WeightModule v = simple_module(qg, qg.datum().fundamental(i));
            for (int s = 0; s < 10; ++s) {
                Weight mu(qg.rank());
                for (int k = 0; k < qg.rank(); ++k) mu[k] = c(rng);
                o.require(verify_z_trace(qg, v, mu), t + " z-trace " + mu.to_string());
            }
        }
    }
    return o;
}

Outcome ac10_determinism()
{
    Outcome o;
    JobConfig cfg;
    cfg.type = "A2";
    cfg.weight = "1,0";
    CommandResult a = cmd_central(cfg), b = cmd_central(cfg);
    o.require(a.exit_code == 0 && b.exit_code == 0, "cmd_central exit code");
    o.require(a.document.dump(2) == b.document.dump(2), "in-process output differs");

    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / ("qcentre_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    std::string outs[2];
    for (int k = 0; k < 2; ++k) {
        const fs::path file = dir / ("run" + std::to_string(k) + ".json");
        const std::string cmd = std::string(QCENTRE_CLI_PATH) + " central --type B2 --weight 0,1 --out " + file.string();
        const int status = std::system(cmd.c_str());
        o.require(WIFEXITED(status) && WEXITSTATUS(status) == 0, "cli exit status");
        outs[k] = slurp(file.string());
    }
    fs::remove_all(dir);
    o.require(!outs[0].empty() && outs[0] == outs[1], "cli output differs between runs");
    return o;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"AC-1", ac1_relations},      {"AC-2", ac2_modules},        {"AC-3", ac3_centrality},
        {"AC-4", ac4_intertwining},   {"AC-5", ac5_hc_image},       {"AC-6", ac6_eigenvalues},
        {"AC-7", ac7_closed_formula}, {"AC-8", ac8_polynomial_algebra}, {"AC-9", ac9_pairing},
        {"AC-10", ac10_determinism},
    };
    bool all = true;
    for (const auto& [name, run] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        all = all && o.pass;
        std::printf("%s %s (%.1f s)%s%s\n", name.c_str(), o.pass ? "PASS" : "FAIL", secs, o.pass ? "" : ": ",
                    o.detail.c_str());
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
