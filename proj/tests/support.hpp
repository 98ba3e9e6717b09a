// Copyright 2026 The seminorm Authors
// SPDX-License-Identifier: Apache-2.0

// Shared fixtures and brute-force oracles for the test binaries.

#ifndef SEMINORM_TESTS_SUPPORT_HPP
#define SEMINORM_TESTS_SUPPORT_HPP

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include <boost/rational.hpp>

#include "seminorm/monomial_ideal.hpp"
#include "seminorm/polynomial.hpp"

namespace seminorm::testing {

using Q = boost::rational<std::int64_t>;

inline MonomialIdeal ideal2(std::initializer_list<std::pair<std::int64_t, std::int64_t>> gens) {
    std::vector<ExponentVector> v;
    for (auto [a, b] : gens) v.push_back({a, b});
    return MonomialIdeal(2, std::move(v));
}

inline MonomialIdeal running_ideal() { return ideal2({{6, 0}, {2, 4}, {0, 6}}); }

inline MonomialIdeal edge_family(std::int64_t n) { return ideal2({{n, 0}, {2, n - 2}, {0, n}}); }

inline std::set<ExponentVector> as_set(const std::vector<ExponentVector>& v) { return {v.begin(), v.end()}; }

/// Proper 2-variable ideal with exactly k minimal generators, k uniform in
/// [1, max_gens], coordinates in [0, max_coord].
inline MonomialIdeal random_ideal2(std::mt19937& rng, int max_gens = 5, int max_coord = 8) {
    std::uniform_int_distribution<int> count(1, max_gens), coord(0, max_coord);
    const auto k = static_cast<std::size_t>(count(rng));
    for (;;) {
        std::vector<ExponentVector> gens;
        for (std::size_t i = 0; i < k; ++i) gens.push_back({coord(rng), coord(rng)});
        MonomialIdeal ideal(2, std::move(gens));
        if (!ideal.is_unit() && ideal.generators().size() == k) return ideal;
    }
}

/// The 25-ideal corpus shared by the oracle and valuation suites.
inline std::vector<MonomialIdeal> seeded_corpus(std::uint32_t seed = 20260417, int size = 25) {
    std::mt19937 rng(seed);
    std::vector<MonomialIdeal> out;
    while (static_cast<int>(out.size()) < size) out.push_back(random_ideal2(rng));
    return out;
}

/// gamma in conv(gens) + R^2_+, decided pairwise: in the plane the lower
/// boundary is made of segments, so two generators always suffice.
inline bool newton_contains_2d(const std::vector<ExponentVector>& gens, const ExponentVector& gamma) {
    for (const auto& g : gens)
        for (const auto& h : gens) {
            // Need t in [0,1] with gamma_j >= t g_j + (1-t) h_j, i.e. t (g_j - h_j) <= gamma_j - h_j.
            Q lo(0), hi(1);
            bool feasible = true;
            for (std::size_t j = 0; j < 2 && feasible; ++j) {
                const std::int64_t a = g[j] - h[j], b = gamma[j] - h[j];
                if (a == 0) feasible = b >= 0;
                else if (a > 0) hi = std::min(hi, Q(b, a));
                else lo = std::max(lo, Q(b, a));
            }
            if (feasible && lo <= hi) return true;
        }
    return false;
}

/// Minimal elements of Gamma(I^k), built one factor at a time.
inline std::vector<ExponentVector> power_generators(const MonomialIdeal& ideal, std::int64_t k) {
    std::vector<ExponentVector> cur{ExponentVector(ideal.dim())};
    for (std::int64_t i = 0; i < k; ++i) {
        std::vector<ExponentVector> next;
        for (const auto& a : cur)
            for (const auto& g : ideal.generators()) next.push_back(a + g);
        cur = minimal_elements(std::move(next));
    }
    return cur;
}

inline bool dominates_any(const std::vector<ExponentVector>& gens, const ExponentVector& x) {
    return std::any_of(gens.begin(), gens.end(), [&](const ExponentVector& g) { return x.dominates(g); });
}

/// All points of [0, upper]^dim in lexicographic order.
inline std::vector<ExponentVector> box_points(const IntVector& upper) {
    std::vector<ExponentVector> out;
    IntVector p(upper.size(), 0);
    for (;;) {
        out.emplace_back(p);
        std::size_t j = p.size();
        while (j > 0 && p[j - 1] == upper[j - 1]) p[--j] = 0;
        if (j == 0) return out;
        ++p[j - 1];
    }
}

/// Members of the monoid generated by `gens` inside [0, upper], by closure.
inline std::set<IntVector> monoid_points(const std::vector<IntVector>& gens, const IntVector& upper) {
    std::set<IntVector> seen{IntVector(upper.size(), 0)};
    std::vector<IntVector> frontier{IntVector(upper.size(), 0)};
    while (!frontier.empty()) {
        auto x = frontier.back();
        frontier.pop_back();
        for (const auto& g : gens) {
            IntVector y(x.size());
            bool inside = true;
            for (std::size_t j = 0; j < x.size(); ++j) {
                y[j] = x[j] + g[j];
                inside = inside && y[j] <= upper[j];
            }
            if (inside && seen.insert(y).second) frontier.push_back(y);
        }
    }
    return seen;
}

/// Membership table of a numerical semigroup on [0, limit].
inline std::vector<bool> semigroup_table(const std::vector<std::int64_t>& gens, std::int64_t limit) {
    std::vector<bool> in(static_cast<std::size_t>(limit) + 1, false);
    in[0] = true;
    for (std::int64_t x = 1; x <= limit; ++x)
        for (auto g : gens)
            if (g <= x && in[static_cast<std::size_t>(x - g)]) {
                in[static_cast<std::size_t>(x)] = true;
                break;
            }
    return in;
}

/// Value of f at an integer point, as an element of the coefficient field.
inline Coeff evaluate(const SparsePolynomial& f, const std::vector<std::int64_t>& point) {
    Coeff total = 0;
    for (const auto& [e, c] : f.terms()) {
        Coeff term = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::int64_t k = 0; k < e[i]; ++k) term *= point[i];
        total += term;
    }
    return reduce_coefficient(f.field(), total);
}

inline SparsePolynomial random_polynomial(std::mt19937& rng, CharSpec field, const std::vector<std::string>& vars,
                                          int max_degree, int max_terms, int max_coeff = 5) {
    std::uniform_int_distribution<int> deg(0, max_degree), terms(0, max_terms), coeff(-max_coeff, max_coeff);
    SparsePolynomial f(field, vars);
    const int k = terms(rng);
    for (int i = 0; i < k; ++i) {
        IntVector e(vars.size());
        int budget = deg(rng);
        for (auto& x : e) {
            std::uniform_int_distribution<int> part(0, budget);
            x = part(rng);
            budget -= static_cast<int>(x);
        }
        f.add_term(e, Coeff(coeff(rng)));
    }
    return f;
}

} // namespace seminorm::testing

#endif
