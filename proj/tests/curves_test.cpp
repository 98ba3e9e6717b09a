// Copyright 2026 The seminorm Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "seminorm/cli.hpp"
#include "seminorm/curves.hpp"
#include "support.hpp"

using namespace seminorm;
using namespace seminorm::testing;

namespace {

const std::vector<std::string> xy{"x", "y"};

SparsePolynomial P(const std::string& text, CharSpec field = CharSpec::zero()) {
    return cli::parse_polynomial(text, field, xy);
}

Verdict verdict(const std::string& text, CharSpec field = CharSpec::zero()) {
    return is_seminormal_at_origin(PlaneCurveGerm(P(text, field)));
}

// f(a x + b y, c x + d y) for a matrix of determinant +-1.
SparsePolynomial linear_change(const SparsePolynomial& f, std::int64_t a, std::int64_t b, std::int64_t c,
                               std::int64_t d) {
    const auto x = SparsePolynomial::variable(f.field(), xy, 0), y = SparsePolynomial::variable(f.field(), xy, 1);
    return f.compose({x.scaled(a) + y.scaled(b), x.scaled(c) + y.scaled(d)});
}

SparsePolynomial linear_form(std::int64_t a, std::int64_t b) {
    const auto x = SparsePolynomial::variable(CharSpec::zero(), xy, 0);
    const auto y = SparsePolynomial::variable(CharSpec::zero(), xy, 1);
    return x.scaled(a) + y.scaled(b);
}

} // namespace

TEST_CASE("bivariate_gcd and is_squarefree") {
    CHECK(bivariate_gcd(P("x^2 - y^2"), P("x^2 + 2*x*y + y^2")) == P("x + y"));
    CHECK(bivariate_gcd(P("x*y"), P("x^2 + 1")) == P("1"));
    CHECK(bivariate_gcd(P("0"), P("0")).is_zero());
    CHECK(bivariate_gcd(P("0"), P("3*x*y")) == P("x*y"));
    CHECK(bivariate_gcd(P("(x + y^2)*(x - y)^2"), P("(x + y^2)*(x + 1)")) == P("x + y^2"));
    CHECK(is_squarefree(P("x*y - x^6 - y^6")));
    CHECK_FALSE(is_squarefree(P("(x - y^2)^2*(x + 1)")));
    CHECK_FALSE(is_squarefree(P("x^2 + y^2", CharSpec(2))));
}

TEST_CASE("property: gcd divides both inputs and recovers a common factor") {
    std::mt19937 rng(127);
    for (int trial = 0; trial < 40; ++trial) {
        const CharSpec field = trial % 4 == 3 ? CharSpec(7) : CharSpec::zero();
        const auto common = random_polynomial(rng, field, xy, 2, 3);
        const auto f = random_polynomial(rng, field, xy, 3, 3), g = random_polynomial(rng, field, xy, 3, 3);
        if (common.is_zero() || f.is_zero() || g.is_zero()) continue;
        const auto d = bivariate_gcd(common * f, common * g);
        // common divides d: gcd(d, common) has common's degree.
        CHECK(bivariate_gcd(d, common).total_degree() == common.total_degree());
        CHECK(bivariate_gcd(d, common * f) == d);
        CHECK(bivariate_gcd(d, common * g) == d);
    }
}

TEST_CASE("germ construction") {
    CHECK_THROWS(PlaneCurveGerm(P("0")));
    CHECK_THROWS(PlaneCurveGerm(P("x + 1")));
    CHECK_THROWS(PlaneCurveGerm(P("x^2")));
    CHECK_THROWS(PlaneCurveGerm(cli::parse_polynomial("x", CharSpec::zero(), {"x"})));
    CHECK(translate_to_origin(P("(x - 1)^2 - (y - 2)^3"), {1, 2}) == P("x^2 - y^3"));
}

TEST_CASE("initial_form examples") {
    const auto node = initial_form(PlaneCurveGerm(P("x*y - x^6 - y^6")));
    CHECK(node.multiplicity == 2);
    CHECK(node.form == P("x*y"));
    const auto tac = initial_form(PlaneCurveGerm(P("x^2 - x^4 - y^4")));
    CHECK(tac.multiplicity == 2);
    CHECK(tac.form == P("x^2"));
    const auto smooth = initial_form(PlaneCurveGerm(P("x")));
    CHECK(smooth.multiplicity == 1);
    CHECK(smooth.form == P("x"));
}

TEST_CASE("seminormality examples") {
    CHECK(verdict("x*y - x^6 - y^6") == Verdict::yes);
    CHECK(verdict("x^2 - x^4 - y^4") == Verdict::no);
    CHECK(verdict("y^2 - x^3") == Verdict::no);
    CHECK(verdict("x + y^5 + x*y") == Verdict::yes);
    CHECK(verdict("x^3 - y^3 + x^5") == Verdict::yes);
    CHECK(is_ordinary_point(PlaneCurveGerm(P("y^2 - x^3"))) == Verdict::no);
    CHECK(to_string(Verdict::yes) == "true");
    CHECK(to_string(Verdict::no) == "false");
    CHECK(to_string(Verdict::indeterminate) == "indeterminate");
}

TEST_CASE("characteristic p degenerations") {
    const CharSpec f2(2), f3(3);
    CHECK(verdict("x^2 + y^3", f2) == Verdict::indeterminate);
    CHECK(verdict("x*y + x^3", f2) == Verdict::yes);
    CHECK(verdict("x^3 + y^3 + x^4", f3) == Verdict::indeterminate);
    CHECK(verdict("x^2 - y^2 + y^3", f3) == Verdict::yes);
}

TEST_CASE("property: multiplicity and verdict survive unimodular changes") {
    std::mt19937 rng(131);
    std::uniform_int_distribution<int> entry(-2, 2);
    for (int trial = 0; trial < 60; ++trial) {
        auto f = random_polynomial(rng, CharSpec::zero(), xy, 5, 5);
        f = f - f.constant_like(f.coefficient({0, 0}));
        if (f.is_zero() || !is_squarefree(f)) continue;
        std::int64_t a, b, c, d;
        do {
            a = entry(rng), b = entry(rng), c = entry(rng), d = entry(rng);
        } while (a * d - b * c != 1 && a * d - b * c != -1);
        const PlaneCurveGerm g(f), h(linear_change(f, a, b, c, d));
        CHECK(initial_form(g).multiplicity == initial_form(h).multiplicity);
        CHECK(is_ordinary_point(g) == is_ordinary_point(h));
    }
}

TEST_CASE("property: distinct tangents are seminormal, a repeated tangent is not") {
    std::mt19937 rng(137);
    std::uniform_int_distribution<int> count(1, 4), coef(-3, 3);
    for (int trial = 0; trial < 60; ++trial) {
        std::set<std::pair<int, int>> slopes;
        const int m = count(rng);
        while (static_cast<int>(slopes.size()) < m) {
            int a = coef(rng), b = coef(rng);
            if (a == 0 && b == 0) continue;
            // Normalize projectively so that distinct entries are distinct lines.
            const int g = std::gcd(a, b);
            a /= g, b /= g;
            if (a < 0 || (a == 0 && b < 0)) a = -a, b = -b;
            slopes.insert({a, b});
        }
        auto product = linear_form(1, 0).constant_like(1);
        for (auto [a, b] : slopes) product = product * linear_form(a, b);
        auto noise = random_polynomial(rng, CharSpec::zero(), xy, m + 4, 3);
        noise = noise - noise.constant_like(0);
        SparsePolynomial high(CharSpec::zero(), xy);
        for (const auto& [e, c] : noise.terms())
            if (e[0] + e[1] > m + 1) high.add_term(e, c);
        const auto f = product + high;
        if (!is_squarefree(f)) continue;
        CHECK(verdict(f.to_string()) == Verdict::yes);
        const auto [a0, b0] = *slopes.begin();
        const auto squared = product * linear_form(a0, b0) + high;
        if (!is_squarefree(squared)) continue;
        CHECK(is_seminormal_at_origin(PlaneCurveGerm(squared)) == Verdict::no);
        CHECK(initial_form(PlaneCurveGerm(squared)).multiplicity == m + 1);
    }
}
