#pragma once

// Named sets of test modules used for equality probes and centrality checks.

#include <functional>
#include <string>
#include <vector>

#include "qcentre/module.hpp"
#include "qcentre/repbuilder.hpp"

namespace qcentre {

struct Battery {
    std::string name;
    std::vector<WeightModule> modules;  // simple modules carry highest_weight; tensor products do not
};

namespace detail {

inline void add_simple(Battery& b, const QuantumGroup& qg, const Weight& lambda)
{
    b.modules.push_back(simple_module(qg, lambda));
}

inline void add_fundamental_square(Battery& b, const QuantumGroup& qg)
{
    WeightModule v = simple_module(qg, qg.datum().fundamental(0));
    b.modules.push_back(tensor(qg, v, v));
}

// All dominant weights with coordinate sum at most s.
inline std::vector<Weight> dominant_up_to(int rank, int s)
{
    std::vector<Weight> out;
    Weight w(rank);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == rank) {
            out.push_back(w);
            return;
        }
        for (int k = 0; k <= left; ++k) {
            w[i] = k;
            rec(i + 1, left - k);
        }
        w[i] = 0;
    };
    rec(0, s);
    return out;
}

} // namespace detail

/// Preset names:
///   rank1-default  V(n varpi_1), n <= 4, and V(varpi_1)^{(x)2}        (rank 1)
///   rank2-default  V(a varpi_1 + b varpi_2), a + b <= 2, and V(varpi_1)^{(x)2}  (rank 2)
///   g2-default     V(0), V(varpi_1), V(varpi_2), V(2 varpi_1), V(varpi_1)^{(x)2}  (G2)
///   rank3-smoke    V(0), the fundamental modules and V(varpi_1)^{(x)2}  (any rank)
///   fundamental    V(0) and the fundamental modules                    (any rank)
///   empty          no modules
///   default        rank1-default, rank2-default, g2-default or rank3-smoke by type
inline Battery make_battery(const QuantumGroup& qg, const std::string& name)
{
    const CartanDatum& d = qg.datum();
    const int n = d.rank();
    Battery b;
    b.name = name;
    if (name == "default") {
        if (n == 1) return make_battery(qg, "rank1-default");
        if (d.type() == 'G') return make_battery(qg, "g2-default");
        if (n == 2) return make_battery(qg, "rank2-default");
        return make_battery(qg, "rank3-smoke");
    }
    if (name == "empty") return b;
    if (name == "rank1-default") {
        if (n != 1) throw PreconditionError("rank1-default needs rank 1");
        for (int k = 0; k <= 4; ++k) detail::add_simple(b, qg, Weight{k});
        detail::add_fundamental_square(b, qg);
        return b;
    }
    if (name == "rank2-default") {
        if (n != 2) throw PreconditionError("rank2-default needs rank 2");
        for (const auto& w : detail::dominant_up_to(2, 2)) detail::add_simple(b, qg, w);
        detail::add_fundamental_square(b, qg);
        return b;
    }
    if (name == "g2-default") {
        if (d.type() != 'G') throw PreconditionError("g2-default needs type G2");
        for (const auto& w : {Weight{0, 0}, Weight{1, 0}, Weight{0, 1}, Weight{2, 0}}) detail::add_simple(b, qg, w);
        detail::add_fundamental_square(b, qg);
        return b;
    }
    if (name == "rank3-smoke" || name == "fundamental") {
        detail::add_simple(b, qg, d.zero());
        for (int i = 0; i < n; ++i) detail::add_simple(b, qg, d.fundamental(i));
        if (name == "rank3-smoke") detail::add_fundamental_square(b, qg);
        return b;
    }
    throw PreconditionError("unknown battery: " + name);
}

} // namespace qcentre
