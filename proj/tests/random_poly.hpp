#pragma once

#include "flagcw/poly.hpp"

#include <random>

namespace flagcw::testing {

inline Polynomial random_polynomial(std::mt19937& rng, const Vars& vars, int max_exp, int terms, int coef = 9)
{
    std::uniform_int_distribution<int> e(0, max_exp), c(-coef, coef);
    std::vector<Polynomial::Term> t;
    for (int i = 0; i < terms; ++i) {
        Exponents x(vars->size());
        for (auto& v : x) v = e(rng);
        t.emplace_back(std::move(x), c(rng));
    }
    return Polynomial::from_terms(vars, std::move(t));
}

// Random homogeneous polynomial of the given weighted degree.
inline Polynomial random_homogeneous(std::mt19937& rng, const Vars& vars, int degree, int terms, int coef = 9)
{
    std::uniform_int_distribution<int> c(-coef, coef);
    std::uniform_int_distribution<size_t> pick(0, vars->size() - 1);
    std::vector<Polynomial::Term> t;
    for (int i = 0; i < terms; ++i) {
        Exponents x(vars->size(), 0);
        int left = degree, guard = 0;
        while (left > 0 && guard++ < 1000) {
            size_t v = pick(rng);
            if (vars->weight(v) <= left) {
                ++x[v];
                left -= vars->weight(v);
            }
        }
        if (left == 0) t.emplace_back(std::move(x), c(rng));
    }
    return Polynomial::from_terms(vars, std::move(t));
}

}  // namespace flagcw::testing
