// Copyright 2026 The seminorm Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SEMINORM_VALUATIONS_HPP
#define SEMINORM_VALUATIONS_HPP

#include <boost/rational.hpp>

#include "seminorm/monomial_ideal.hpp"

namespace seminorm {

using Rational = boost::rational<std::int64_t>;

std::string to_string(const Rational& r);

/// Monomial valuation v(x^g) = <normal, g> attached to a Newton facet of
/// positive offset; ideal_value = v(I).
struct MonomialValuation {
    IntVector normal;
    std::int64_t ideal_value = 0;

    std::int64_t operator()(const ExponentVector& gamma) const { return dot(normal, gamma.coords()); }
    bool operator==(const MonomialValuation&) const = default;
};

std::vector<MonomialValuation> rees_valuations(const MonomialIdeal& ideal);

/// min over Rees valuations of v(gamma) / v(I).
Rational samuel_value(const MonomialIdeal& ideal, const ExponentVector& gamma);

/// ord_I(n gamma) / n.
Rational samuel_estimate(const MonomialIdeal& ideal, const ExponentVector& gamma, std::int64_t n);

/// The ideal of monomials whose asymptotic Samuel value exceeds 1.
ClosureResult i_greater(const MonomialIdeal& ideal,
                        kernels::Execution exec = kernels::Execution::parallel);

} // namespace seminorm

#endif
