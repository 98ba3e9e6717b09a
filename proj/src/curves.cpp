// Copyright 2026 The seminorm Authors
// SPDX-License-Identifier: Apache-2.0

#include "seminorm/curves.hpp"

#include <stdexcept>
#include <utility>

namespace seminorm {

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::yes: return "true";
    case Verdict::no: return "false";
    case Verdict::indeterminate: return "indeterminate";
    }
    return "indeterminate";
}

namespace {

// Dense univariate polynomials over the field, lowest degree first.
using Upoly = std::vector<Coeff>;
// Polynomials in y with coefficients in k[x], lowest y-degree first.
using Bpoly = std::vector<Upoly>;

struct Field {
    CharSpec ch;
    Coeff norm(const Coeff& c) const { return reduce_coefficient(ch, c); }
    Coeff inv(const Coeff& c) const { return field_inverse(ch, c); }
};

void trim(Upoly& u) {
    while (!u.empty() && u.back() == 0) u.pop_back();
}
void trim(Bpoly& b) {
    while (!b.empty() && b.back().empty()) b.pop_back();
}

Upoly u_mul(const Field& k, const Upoly& a, const Upoly& b) {
    if (a.empty() || b.empty()) return {};
    Upoly out(a.size() + b.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    for (auto& c : out) c = k.norm(c);
    trim(out);
    return out;
}

Upoly u_sub(const Field& k, Upoly a, const Upoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Coeff(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = k.norm(a[i] - b[i]);
    trim(a);
    return a;
}

Upoly u_monic(const Field& k, Upoly a) {
    if (a.empty()) return a;
    const Coeff s = k.inv(a.back());
    for (auto& c : a) c = k.norm(c * s);
    return a;
}

// Remainder and quotient of a by b != 0.
std::pair<Upoly, Upoly> u_divmod(const Field& k, Upoly a, const Upoly& b) {
    Upoly q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Coeff(0));
    const Coeff lead_inv = k.inv(b.back());
    while (!a.empty() && a.size() >= b.size()) {
        const std::size_t shift = a.size() - b.size();
        const Coeff f = k.norm(a.back() * lead_inv);
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = k.norm(a[i + shift] - f * b[i]);
        trim(a);
    }
    trim(q);
    return {std::move(q), std::move(a)};
}

Upoly u_gcd(const Field& k, Upoly a, Upoly b) {
    while (!b.empty()) {
        auto r = u_divmod(k, a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return u_monic(k, std::move(a));
}

Upoly content(const Field& k, const Bpoly& f) {
    Upoly g;
    for (const auto& c : f) g = u_gcd(k, g, c);
    return g;
}

Bpoly primitive_part(const Field& k, const Bpoly& f) {
    if (f.empty()) return f;
    const Upoly c = content(k, f);
    Bpoly out;
    for (const auto& coef : f) out.push_back(u_divmod(k, coef, c).first);
    trim(out);
    return out;
}

// lc(b)^(deg a - deg b + 1) * a mod b, in k[x][y].
Bpoly pseudo_remainder(const Field& k, Bpoly a, const Bpoly& b) {
    const Upoly& lb = b.back();
    while (!a.empty() && a.size() >= b.size()) {
        const std::size_t shift = a.size() - b.size();
        const Upoly la = a.back();
        for (auto& c : a) c = u_mul(k, c, lb);
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = u_sub(k, a[i + shift], u_mul(k, la, b[i]));
        trim(a);
    }
    return a;
}

Bpoly to_bpoly(const Field& k, const SparsePolynomial& f) {
    Bpoly out;
    for (const auto& [e, c] : f.terms()) {
        const auto ix = static_cast<std::size_t>(e[0]);
        const auto iy = static_cast<std::size_t>(e[1]);
        if (out.size() <= iy) out.resize(iy + 1);
        if (out[iy].size() <= ix) out[iy].resize(ix + 1, Coeff(0));
        out[iy][ix] = k.norm(c);
    }
    for (auto& u : out) trim(u);
    trim(out);
    return out;
}

SparsePolynomial from_bpoly(const SparsePolynomial& like, const Bpoly& b) {
    SparsePolynomial out = like.constant_like(0);
    for (std::size_t iy = 0; iy < b.size(); ++iy)
        for (std::size_t ix = 0; ix < b[iy].size(); ++ix)
            if (b[iy][ix] != 0)
                out.add_term({static_cast<std::int64_t>(ix), static_cast<std::int64_t>(iy)}, b[iy][ix]);
    return out;
}

void require_bivariate(const SparsePolynomial& f, const char* what) {
    if (f.nvars() != 2) throw std::invalid_argument(std::string(what) + ": expected two variables");
}

} // namespace

SparsePolynomial bivariate_gcd(const SparsePolynomial& a, const SparsePolynomial& b) {
    require_bivariate(a, "bivariate_gcd");
    require_bivariate(b, "bivariate_gcd");
    if (a.field() != b.field() || a.vars() != b.vars())
        throw std::invalid_argument("bivariate_gcd: operands live in different rings");
    const Field k{a.field()};
    Bpoly A = to_bpoly(k, a), B = to_bpoly(k, b);
    if (A.empty()) std::swap(A, B);
    if (A.empty()) return a.constant_like(0);
    if (B.empty()) {
        // Normalize A alone.
    } else {
        const Upoly c = u_gcd(k, content(k, A), content(k, B));
        A = primitive_part(k, A);
        B = primitive_part(k, B);
        if (A.size() < B.size()) std::swap(A, B);
        while (!B.empty() && B.size() > 1) {
            Bpoly r = primitive_part(k, pseudo_remainder(k, A, B));
            A = std::move(B);
            B = std::move(r);
        }
        // B is a nonzero element of k[x] (degree 0 in y): the primitive gcd is 1.
        if (!B.empty()) A = Bpoly{Upoly{Coeff(1)}};
        for (auto& coef : A) coef = u_mul(k, coef, c);
        trim(A);
    }
    SparsePolynomial g = from_bpoly(a, A);
    const Coeff lead = g.terms().rbegin()->second;
    return g.scaled(field_inverse(a.field(), lead));
}

bool is_squarefree(const SparsePolynomial& f) {
    require_bivariate(f, "is_squarefree");
    if (f.is_zero()) return false;
    if (f.is_constant()) return true;
    const auto g = bivariate_gcd(bivariate_gcd(f, f.derivative(0)), f.derivative(1));
    return g.is_constant();
}

PlaneCurveGerm::PlaneCurveGerm(SparsePolynomial f) : f_(std::move(f)) {
    require_bivariate(f_, "PlaneCurveGerm");
    if (f_.is_zero()) throw std::invalid_argument("PlaneCurveGerm: zero polynomial");
    if (f_.coefficient({0, 0}) != 0) throw std::invalid_argument("PlaneCurveGerm: f(0,0) != 0");
    if (!is_squarefree(f_)) throw std::invalid_argument("PlaneCurveGerm: f is not squarefree");
}

SparsePolynomial translate_to_origin(const SparsePolynomial& f, const IntVector& point) {
    require_bivariate(f, "translate_to_origin");
    require_same_dim(point.size(), 2, "translate_to_origin");
    std::vector<SparsePolynomial> images;
    for (std::size_t i = 0; i < 2; ++i)
        images.push_back(SparsePolynomial::variable(f.field(), f.vars(), i) + f.constant_like(Coeff(point[i])));
    return f.compose(images);
}

InitialForm initial_form(const PlaneCurveGerm& g) {
    const auto& f = g.polynomial();
    const auto m = f.min_total_degree();
    return {m, f.homogeneous_part(m)};
}

Verdict is_ordinary_point(const PlaneCurveGerm& g) {
    const auto form = initial_form(g).form;
    const auto fx = form.derivative(0), fy = form.derivative(1);
    if (fx.is_zero() && fy.is_zero()) return Verdict::indeterminate;
    return bivariate_gcd(bivariate_gcd(form, fx), fy).is_constant() ? Verdict::yes : Verdict::no;
}

Verdict is_seminormal_at_origin(const PlaneCurveGerm& g) { return is_ordinary_point(g); }

} // namespace seminorm
