// Copyright 2026 The seminorm Authors
// SPDX-License-Identifier: Apache-2.0

#include "seminorm/valuations.hpp"

#include <algorithm>

namespace seminorm {

std::string to_string(const Rational& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {

void require_proper_nonzero(const MonomialIdeal& ideal, const char* what) {
    if (ideal.is_zero() || ideal.is_unit())
        throw std::invalid_argument(std::string(what) + ": ideal must be proper and nonzero");
}

} // namespace

std::vector<MonomialValuation> rees_valuations(const MonomialIdeal& ideal) {
    require_proper_nonzero(ideal, "rees_valuations");
    std::vector<MonomialValuation> out;
    const auto polyhedron = newton_polyhedron(ideal);
    for (const auto& f : polyhedron.facets())
        if (f.offset > 0) out.push_back({f.normal, f.offset});
    return out;
}

Rational samuel_value(const MonomialIdeal& ideal, const ExponentVector& gamma) {
    require_same_dim(gamma.dim(), ideal.dim(), "samuel_value");
    const auto vals = rees_valuations(ideal);
    Rational best(vals.front()(gamma), vals.front().ideal_value);
    for (const auto& v : vals) best = std::min(best, Rational(v(gamma), v.ideal_value));
    return best;
}

Rational samuel_estimate(const MonomialIdeal& ideal, const ExponentVector& gamma, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("samuel_estimate: n must be positive");
    return Rational(ord(ideal, gamma.scaled(n)).value, n);
}

ClosureResult i_greater(const MonomialIdeal& ideal, kernels::Execution exec) {
    const auto vals = rees_valuations(ideal);
    std::vector<Facet> shifted;
    for (const auto& v : vals) shifted.push_back({v.normal, checked_add(v.ideal_value, 1)});
    auto member = [&](const ExponentVector& e) {
        return std::all_of(shifted.begin(), shifted.end(), [&](const Facet& f) { return f.satisfied_by(e.coords()); });
    };
    ClosureResult out{MonomialIdeal(ideal.dim()), default_search_box(ideal, shifted), false, {}};
    auto search = upset_generators(out.box, member, exec);
    out.ideal = MonomialIdeal(ideal.dim(), std::move(search.generators));
    out.box_certified = search.certified;
    return out;
}

} // namespace seminorm
