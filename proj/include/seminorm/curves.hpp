// Copyright 2026 The seminorm Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SEMINORM_CURVES_HPP
#define SEMINORM_CURVES_HPP

#include <string>

#include "seminorm/polynomial.hpp"

namespace seminorm {

enum class Verdict { no, yes, indeterminate };

std::string to_string(Verdict v);

/// Greatest common divisor of two polynomials in two variables, normalized
/// so that its leading coefficient is 1. gcd(0, 0) = 0.
SparsePolynomial bivariate_gcd(const SparsePolynomial& a, const SparsePolynomial& b);

/// True if no square of a nonconstant polynomial divides f.
bool is_squarefree(const SparsePolynomial& f);

/// Reduced plane curve through the origin.
class PlaneCurveGerm {
public:
    explicit PlaneCurveGerm(SparsePolynomial f);

    const SparsePolynomial& polynomial() const noexcept { return f_; }

private:
    SparsePolynomial f_;
};

/// f(x + a, y + b); the germ of f at (a, b) moved to the origin.
SparsePolynomial translate_to_origin(const SparsePolynomial& f, const IntVector& point);

struct InitialForm {
    std::int64_t multiplicity = 0;
    SparsePolynomial form;
};

InitialForm initial_form(const PlaneCurveGerm& g);

/// Multiplicity-many distinct tangents. Indeterminate when both partials of
/// the initial form vanish (characteristic p).
Verdict is_ordinary_point(const PlaneCurveGerm& g);
Verdict is_seminormal_at_origin(const PlaneCurveGerm& g);

} // namespace seminorm

#endif
