#pragma once

// Simple modules V(lambda) as quotients of a truncated Verma module by the
// radical of the contravariant form, plus classical multiplicity oracles.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "qcentre/linalg.hpp"
#include "qcentre/module.hpp"
#include "qcentre/uqalg.hpp"

namespace qcentre {

namespace detail {

// One weight space of V(lambda) under construction.
struct WeightSpace {
    Weight wt;
    int level = 0;
    // basis vector k is F_{gen[k]} applied to basis vector src[k] of wt + alpha_{gen[k]}
    std::vector<int> gen;
    std::vector<int> src;
    DenseMatrix gram;
    // e_to[j]: matrix of E_j from this space to wt + alpha_j (rows = target basis)
    std::map<int, DenseMatrix> e_to;
    // f_from[i]: matrix of F_i from wt + alpha_i into this space (rows = this basis)
    std::map<int, DenseMatrix> f_from;
    int dim() const { return static_cast<int>(gram.size()); }
};

} // namespace detail

inline WeightModule simple_module(const QuantumGroup& qg, const Weight& lambda)
{
    const CartanDatum& d = qg.datum();
    const int n = d.rank();
    if (lambda.rank() != n || !lambda.is_dominant()) throw PreconditionError("highest weight must be dominant");
    const int depth = *d.height(lambda - d.apply_word(d.default_reduced_word().letters, lambda));

    std::map<Weight, detail::WeightSpace> spaces;
    std::vector<std::vector<Weight>> levels;
    {
        detail::WeightSpace top;
        top.wt = lambda;
        top.gram = DenseMatrix{{QScalar(1)}};
        spaces.emplace(lambda, std::move(top));
        levels.push_back({lambda});
    }

    for (int lev = 1; lev <= depth; ++lev) {
        std::set<Weight> next;
        for (const auto& w : levels.back())
            for (int i = 0; i < n; ++i) next.insert(w - d.simple_root(i));
        std::vector<Weight> built;
        for (const auto& nu : next) {
            // candidates F_i b, b in V_{nu + alpha_i}
            std::vector<std::pair<int, int>> cand;
            for (int i = 0; i < n; ++i) {
                auto it = spaces.find(nu + d.simple_root(i));
                if (it == spaces.end()) continue;
                for (int b = 0; b < it->second.dim(); ++b) cand.emplace_back(i, b);
            }
            if (cand.empty()) continue;
            const std::size_t nc = cand.size();
            // E_j (F_i b) in coordinates of V_{nu + alpha_j}
            std::vector<std::map<int, std::vector<QScalar>>> ecoords(nc);
            for (std::size_t c = 0; c < nc; ++c) {
                auto [i, b] = cand[c];
                const auto& src = spaces.at(nu + d.simple_root(i));
                for (int j = 0; j < n; ++j) {
                    auto tgt = spaces.find(nu + d.simple_root(j));
                    if (tgt == spaces.end()) continue;
                    std::vector<QScalar> v(static_cast<std::size_t>(tgt->second.dim()));
                    // F_i E_j b
                    auto ej = src.e_to.find(j);
                    if (ej != src.e_to.end()) {
                        const auto& up = spaces.at(nu + d.simple_root(i) + d.simple_root(j));
                        const auto& fi = tgt->second.f_from.at(i);
                        for (int x = 0; x < up.dim(); ++x) {
                            const QScalar& ex = ej->second[static_cast<std::size_t>(x)][static_cast<std::size_t>(b)];
                            if (ex.is_zero()) continue;
                            for (std::size_t y = 0; y < v.size(); ++y) {
                                const QScalar& fy = fi[y][static_cast<std::size_t>(x)];
                                if (!fy.is_zero()) v[y] += fy * ex;
                            }
                        }
                    }
                    if (i == j) {
                        const long h = (nu + d.simple_root(i))[i];
                        v[static_cast<std::size_t>(b)] += q_int_signed(h, d.d(i), d.unit());
                    }
                    ecoords[c].emplace(j, std::move(v));
                }
            }
            // contravariant form: (F_i b, y) = (b, E_i y)
            DenseMatrix g(nc, std::vector<QScalar>(nc));
            for (std::size_t c = 0; c < nc; ++c) {
                auto [i, b] = cand[c];
                const auto& src = spaces.at(nu + d.simple_root(i));
                for (std::size_t c2 = 0; c2 < nc; ++c2) {
                    const auto& v = ecoords[c2].at(i);
                    QScalar s;
                    for (std::size_t x = 0; x < v.size(); ++x)
                        if (!v[x].is_zero()) s += src.gram[static_cast<std::size_t>(b)][x] * v[x];
                    g[c][c2] = s;
                }
            }
            DenseMatrix red = g;
            std::vector<int> piv = row_reduce(red);
            if (piv.empty()) continue;
            const std::size_t r = piv.size();
            detail::WeightSpace ws;
            ws.wt = nu;
            ws.level = lev;
            DenseMatrix gjj(r, std::vector<QScalar>(r));
            DenseMatrix gjc(r, std::vector<QScalar>(nc));
            for (std::size_t a = 0; a < r; ++a) {
                auto ca = static_cast<std::size_t>(piv[a]);
                ws.gen.push_back(cand[ca].first);
                ws.src.push_back(cand[ca].second);
                for (std::size_t b2 = 0; b2 < r; ++b2) gjj[a][b2] = g[ca][static_cast<std::size_t>(piv[b2])];
                for (std::size_t c = 0; c < nc; ++c) gjc[a][c] = g[ca][c];
            }
            // coordinates of every candidate in the chosen basis
            DenseMatrix coords = solve(gjj, gjc);
            for (std::size_t c = 0; c < nc; ++c) {
                auto [i, b] = cand[c];
                auto& fm = ws.f_from[i];
                if (fm.empty()) {
                    fm.assign(r, std::vector<QScalar>(static_cast<std::size_t>(spaces.at(nu + d.simple_root(i)).dim())));
                }
                for (std::size_t a = 0; a < r; ++a) fm[a][static_cast<std::size_t>(b)] = coords[a][c];
            }
            for (int j = 0; j < n; ++j) {
                auto tgt = spaces.find(nu + d.simple_root(j));
                if (tgt == spaces.end()) continue;
                DenseMatrix em(static_cast<std::size_t>(tgt->second.dim()), std::vector<QScalar>(r));
                for (std::size_t a = 0; a < r; ++a) {
                    const auto& v = ecoords[static_cast<std::size_t>(piv[a])].at(j);
                    for (std::size_t y = 0; y < v.size(); ++y) em[y][a] = v[y];
                }
                ws.e_to.emplace(j, std::move(em));
            }
            ws.gram = std::move(gjj);
            spaces.emplace(nu, std::move(ws));
            built.push_back(nu);
        }
        if (built.empty()) break;
        levels.push_back(std::move(built));
    }

    // global basis: by level, then weight descending, then index
    WeightModule m;
    m.highest_weight = lambda;
    m.label = "V" + lambda.to_string();
    std::map<Weight, int> offset;
    for (const auto& lev : levels) {
        std::vector<Weight> ws = lev;
        std::sort(ws.begin(), ws.end(), [](const Weight& a, const Weight& b) { return b < a; });
        for (const auto& w : ws) {
            offset[w] = m.dim();
            for (int k = 0; k < spaces.at(w).dim(); ++k) m.weights.push_back(w);
        }
    }
    const int dim = m.dim();
    m.e.assign(static_cast<std::size_t>(n), Matrix(dim, dim));
    m.f.assign(static_cast<std::size_t>(n), Matrix(dim, dim));
    for (const auto& [w, ws] : spaces) {
        const int off = offset.at(w);
        for (const auto& [j, em] : ws.e_to) {
            const int toff = offset.at(w + d.simple_root(j));
            for (std::size_t y = 0; y < em.size(); ++y)
                for (std::size_t a = 0; a < em[y].size(); ++a)
                    m.e[static_cast<std::size_t>(j)].set(toff + static_cast<int>(y), off + static_cast<int>(a), em[y][a]);
        }
        for (const auto& [i, fm] : ws.f_from) {
            const int soff = offset.at(w + d.simple_root(i));
            for (std::size_t a = 0; a < fm.size(); ++a)
                for (std::size_t b = 0; b < fm[a].size(); ++b)
                    m.f[static_cast<std::size_t>(i)].set(off + static_cast<int>(a), soff + static_cast<int>(b), fm[a][b]);
        }
    }
    return m;
}

/// Weight multiplicities of a module, read off its basis.
inline std::map<Weight, int> weight_multiplicities(const WeightModule& m)
{
    std::map<Weight, int> out;
    for (const auto& w : m.weights) ++out[w];
    return out;
}

/// Classical weight multiplicities of V(lambda) by Freudenthal's recursion.
inline std::map<Weight, int> freudenthal(const CartanDatum& d, const Weight& lambda)
{
    if (!lambda.is_dominant()) throw PreconditionError("highest weight must be dominant");
    const Weight rho = d.rho();
    const Rational top = d.inner(lambda + rho, lambda + rho);
    std::map<Weight, int> mult;
    mult[lambda] = 1;
    // visit lambda - beta by increasing height of beta
    std::vector<Weight> frontier{lambda};
    std::set<Weight> seen{lambda};
    while (!frontier.empty()) {
        std::vector<Weight> next;
        for (const auto& w : frontier)
            for (int i = 0; i < d.rank(); ++i) {
                Weight mu = w - d.simple_root(i);
                if (!seen.insert(mu).second) continue;
                Rational den = top - d.inner(mu + rho, mu + rho);
                if (den <= 0) continue;
                Rational s = 0;
                for (const auto& al : d.positive_roots())
                    for (int k = 1;; ++k) {
                        Weight up = mu + k * al;
                        if (!d.dominance_leq(up, lambda)) break;
                        auto it = mult.find(up);
                        if (it != mult.end()) s += it->second * d.inner(up, al);
                    }
                Rational m = 2 * s / den;
                if (m.get_den() != 1) throw DomainError("non-integral Freudenthal multiplicity");
                if (m > 0) {
                    mult[mu] = static_cast<int>(m.get_num().get_si());
                    next.push_back(mu);
                }
            }
        std::sort(next.begin(), next.end());
        frontier = std::move(next);
    }
    return mult;
}

inline int multiplicity(const CartanDatum& d, const Weight& lambda, const Weight& mu)
{
    auto m = freudenthal(d, lambda);
    auto it = m.find(mu);
    return it == m.end() ? 0 : it->second;
}

/// Weyl dimension formula prod (lambda + rho, alpha) / (rho, alpha).
inline Integer weyl_dimension(const CartanDatum& d, const Weight& lambda)
{
    Rational p = 1;
    for (const auto& al : d.positive_roots()) p *= d.inner(lambda + d.rho(), al) / d.inner(d.rho(), al);
    if (p.get_den() != 1) throw DomainError("non-integral Weyl dimension");
    return p.get_num();
}

} // namespace qcentre
