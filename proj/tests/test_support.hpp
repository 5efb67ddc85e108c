#pragma once

#include <random>
#include <vector>

#include "qcentre/uqalg.hpp"

namespace qcentre::testing {

/// Product of up to max_len random generators E_i, F_i, K_{+-varpi_i}.
inline AlgebraElement random_word(const QuantumGroup& qg, std::mt19937& rng, int max_len)
{
    const int n = qg.rank();
    std::uniform_int_distribution<int> len(0, max_len), kind(0, 3), idx(0, n - 1);
    AlgebraElement x = qg.one();
    for (int k = len(rng); k-- > 0;) {
        const int i = idx(rng);
        switch (kind(rng)) {
        case 0: x = qg.multiply(x, qg.E(i)); break;
        case 1: x = qg.multiply(x, qg.F(i)); break;
        case 2: x = qg.multiply(x, qg.K(qg.datum().fundamental(i))); break;
        default: x = qg.multiply(x, qg.K(-qg.datum().fundamental(i))); break;
        }
    }
    return x;
}

inline std::vector<AlgebraElement> generators(const QuantumGroup& qg)
{
    std::vector<AlgebraElement> out;
    for (int i = 0; i < qg.rank(); ++i) {
        out.push_back(qg.E(i));
        out.push_back(qg.F(i));
        out.push_back(qg.K(qg.datum().fundamental(i)));
    }
    return out;
}

} // namespace qcentre::testing
