// Copyright 2026 The seminorm Authors
// SPDX-License-Identifier: Apache-2.0

#include "seminorm/criteria.hpp"

#include <algorithm>

#include "seminorm/valuations.hpp"

namespace seminorm {

namespace {

void require_field(const MonomialAlgebraContext& ctx, const SparsePolynomial& p, const char* what) {
    if (ctx.characteristic != p.field())
        throw std::invalid_argument(std::string(what) + ": polynomial field differs from the algebra's");
    require_same_dim(p.nvars(), ctx.dim(), what);
}

std::vector<SparsePolynomial> powers_of(const SparsePolynomial& b, std::int64_t top) {
    std::vector<SparsePolynomial> out{b.constant_like(1)};
    for (std::int64_t i = 1; i <= top; ++i) out.push_back(out.back() * b);
    return out;
}

Coeff as_coeff(const BigInt& v) { return Coeff(v); }

void require_monomial_or_zero(const SparsePolynomial& p, const char* what) {
    if (p.terms().size() > 1) throw std::invalid_argument(std::string(what) + ": expected a monomial");
}

} // namespace

bool verify_sosi(const MonomialAlgebraContext& ctx, const SparsePolynomial& b, const SOSICertificate& cert) {
    require_field(ctx, b, "verify_sosi");
    if (cert.q < 0 || cert.n_start < 1) throw std::invalid_argument("verify_sosi: need q >= 0 and N >= 1");
    if (static_cast<std::int64_t>(cert.c.size()) != cert.q)
        throw std::invalid_argument("verify_sosi: certificate must list exactly q elements");
    for (const auto& c : cert.c) require_field(ctx, c, "verify_sosi");
    const std::int64_t last = 2 * cert.n_start + 2 * cert.q - 1;
    const auto bp = powers_of(b, last);
    for (std::int64_t n = cert.n_start; n <= last; ++n) {
        SparsePolynomial value = bp[static_cast<std::size_t>(n)];
        for (std::int64_t i = 1; i <= cert.q && i <= n; ++i)
            value += (cert.c[static_cast<std::size_t>(i - 1)] * bp[static_cast<std::size_t>(n - i)])
                         .scaled(as_coeff(binomial(n, i)));
        if (!algebra_contains(ctx, value)) return false;
    }
    return true;
}

namespace {

// b^n + sum_{i=1}^n sign^i C(n,i) a_i b^{n-i} for q+1 <= n <= 2q+1.
bool structured_equations_hold(const SparsePolynomial& b, const WSICertificate& cert, bool alternating) {
    const std::int64_t top = 2 * cert.q + 1;
    const auto bp = powers_of(b, top);
    for (std::int64_t n = cert.q + 1; n <= top; ++n) {
        SparsePolynomial value = bp[static_cast<std::size_t>(n)];
        for (std::int64_t i = 1; i <= n; ++i) {
            Coeff k = as_coeff(binomial(n, i));
            if (alternating && i % 2 == 1) k = -k;
            value += (cert.a[static_cast<std::size_t>(i - 1)] * bp[static_cast<std::size_t>(n - i)]).scaled(k);
        }
        if (!value.is_zero()) return false;
    }
    return true;
}

void require_wsi_shape(const WSICertificate& cert, const char* what) {
    if (cert.q < 0) throw std::invalid_argument(std::string(what) + ": q must be nonnegative");
    if (static_cast<std::int64_t>(cert.a.size()) != 2 * cert.q + 1)
        throw std::invalid_argument(std::string(what) + ": certificate must list exactly 2q+1 elements");
}

} // namespace

bool verify_wsi_ring(const MonomialAlgebraContext& ctx, const SparsePolynomial& b, const WSICertificate& cert,
                     bool check_membership) {
    require_field(ctx, b, "verify_wsi_ring");
    require_wsi_shape(cert, "verify_wsi_ring");
    for (const auto& a : cert.a) {
        require_field(ctx, a, "verify_wsi_ring");
        if (check_membership && !algebra_contains(ctx, a)) return false;
    }
    return structured_equations_hold(b, cert, true);
}

bool verify_wsi_ideal(const MonomialIdeal& ideal, const SparsePolynomial& b, const WSICertificate& cert) {
    require_wsi_shape(cert, "verify_wsi_ideal");
    require_same_dim(b.nvars(), ideal.dim(), "verify_wsi_ideal");
    if (!b.is_monomial()) throw std::invalid_argument("verify_wsi_ideal: b must be a monomial");
    for (std::size_t i = 0; i < cert.a.size(); ++i) {
        const auto& a = cert.a[i];
        require_monomial_or_zero(a, "verify_wsi_ideal");
        if (a.is_zero()) continue;
        if (!power_contains(ideal, static_cast<std::int64_t>(i) + 1, ExponentVector(a.terms().begin()->first)))
            return false;
    }
    return structured_equations_hold(b, cert, false);
}

std::optional<WSICertificate> wsi_certificate_from_high_powers(const MonomialIdeal& ideal,
                                                               const SparsePolynomial& b, std::int64_t q_max) {
    require_same_dim(b.nvars(), ideal.dim(), "wsi_certificate_from_high_powers");
    if (!b.is_monomial()) throw std::invalid_argument("wsi_certificate_from_high_powers: b must be a monomial");
    const ExponentVector beta(b.terms().begin()->first);
    if (ideal.is_zero()) return std::nullopt;
    if (!ideal.is_unit() && samuel_value(ideal, beta) < 1) return std::nullopt;

    for (std::int64_t q = 0; q <= q_max; ++q) {
        bool window = true;
        for (std::int64_t n = q + 1; n <= 2 * q + 1 && window; ++n)
            window = power_contains(ideal, n, beta.scaled(n));
        if (!window) continue;

        const auto bp = powers_of(b, 2 * q + 1);
        WSICertificate cert{q, std::vector<SparsePolynomial>(static_cast<std::size_t>(2 * q + 1), b.constant_like(0))};
        for (std::int64_t n = q + 1; n <= 2 * q + 1; ++n) {
            SparsePolynomial acc = bp[static_cast<std::size_t>(n)];
            for (std::int64_t i = q + 1; i < n; ++i)
                acc += (cert.a[static_cast<std::size_t>(i - 1)] * bp[static_cast<std::size_t>(n - i)])
                           .scaled(as_coeff(binomial(n, i)));
            cert.a[static_cast<std::size_t>(n - 1)] = -acc;
        }
        return cert;
    }
    return std::nullopt;
}

WSICertificate alternate_signs(WSICertificate cert) {
    for (std::size_t i = 0; i < cert.a.size(); i += 2) cert.a[i] = -cert.a[i];
    return cert;
}

SparsePolynomial build_characteristic_poly(const WSICertificate& cert, const std::string& tvar) {
    require_wsi_shape(cert, "build_characteristic_poly");
    const auto& base = cert.a.front();
    if (base.var_index(tvar)) throw std::invalid_argument("build_characteristic_poly: '" + tvar + "' already in use");
    auto vars = base.vars();
    vars.push_back(tvar);
    const std::size_t t = vars.size() - 1;
    const std::int64_t n = 2 * cert.q + 1;
    const auto field = base.field();
    const auto tee = SparsePolynomial::variable(field, vars, t);
    SparsePolynomial f = tee.pow(n);
    for (std::int64_t i = 1; i <= n; ++i) {
        Coeff k = as_coeff(binomial(n, i));
        if (i % 2 == 1) k = -k;
        f += (cert.a[static_cast<std::size_t>(i - 1)].with_vars(vars) * tee.pow(n - i)).scaled(k);
    }
    return f;
}

bool derivative_criterion(const SparsePolynomial& f, const SparsePolynomial& b, const std::string& tvar) {
    const auto t = f.var_index(tvar);
    if (!t) throw std::invalid_argument("derivative_criterion: F has no variable '" + tvar + "'");
    const std::int64_t n = f.degree_in(*t);
    if (n < 1) throw std::invalid_argument("derivative_criterion: F must have positive degree");
    if (f.coefficient_in(*t, n) != f.constant_like(1))
        throw std::invalid_argument("derivative_criterion: F must be monic");
    if (b.field() != f.field()) throw std::invalid_argument("derivative_criterion: fields differ");
    const auto value = b.with_vars(f.vars());
    if (value.degree_in(*t) > 0) throw std::invalid_argument("derivative_criterion: b must not involve " + tvar);
    SparsePolynomial d = f;
    for (std::int64_t k = 0; k <= n / 2; ++k) {
        if (!d.substitute(*t, value).is_zero()) return false;
        d = d.derivative(*t);
    }
    return true;
}

SwanOutcome swan_root_test(const MonomialAlgebraContext& ctx, const SparsePolynomial& b,
                           const SparsePolynomial& c) {
    require_field(ctx, b, "swan_root_test");
    require_field(ctx, c, "swan_root_test");
    require_monomial_or_zero(b, "swan_root_test");
    require_monomial_or_zero(c, "swan_root_test");
    if (b.pow(3) != c.pow(2)) throw std::invalid_argument("swan_root_test: b^3 != c^2");
    if (!algebra_contains(ctx, b) || !algebra_contains(ctx, c))
        throw std::invalid_argument("swan_root_test: b and c must lie in the algebra");
    if (b.is_zero()) return {SwanOutcome::Kind::root, b};

    const auto& [eb, cb] = *b.terms().begin();
    const auto& [ec, cc] = *c.terms().begin();
    IntVector ea(eb.size());
    for (std::size_t i = 0; i < ea.size(); ++i) ea[i] = ec[i] - eb[i];
    auto a = SparsePolynomial::monomial(b.field(), b.vars(), ea, cc * field_inverse(b.field(), cb));
    if (a.pow(2) != b || a.pow(3) != c) throw std::logic_error("swan_root_test: quotient is not a root");
    const auto kind = algebra_contains(ctx, a) ? SwanOutcome::Kind::root : SwanOutcome::Kind::witness;
    return {kind, std::move(a)};
}

SchanuelReport schanuel_matrix(const SparsePolynomial& a_in, const std::string& xvar) {
    if (a_in.var_index(xvar)) throw std::invalid_argument("schanuel_matrix: '" + xvar + "' already in use");
    auto vars = a_in.vars();
    vars.push_back(xvar);
    const auto a = a_in.with_vars(vars);
    const auto x = SparsePolynomial::variable(a.field(), vars, vars.size() - 1);
    const auto one = a.constant_like(1);
    const auto b = a * a;

    SchanuelReport r;
    r.f1 = one + a * x;
    r.f2 = b * x * x;
    r.g1 = (one - a * x) * (one + b * x * x);
    r.g2 = b * x * x;
    const std::array<SparsePolynomial, 2> f{r.f1, r.f2}, g{r.g1, r.g2};
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) r.matrix[i][j] = f[i] * g[j];

    r.unimodular = (r.f1 * r.g1 + r.f2 * r.g2) == one;
    r.idempotent = true;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            const auto entry = r.matrix[i][0] * r.matrix[0][j] + r.matrix[i][1] * r.matrix[1][j];
            r.idempotent = r.idempotent && entry == r.matrix[i][j];
        }
    const auto zero = a.constant_like(0);
    const std::size_t xi = vars.size() - 1;
    r.reduces_to_p2 = r.matrix[0][0].substitute(xi, zero) == one && r.matrix[0][1].substitute(xi, zero).is_zero() &&
                      r.matrix[1][0].substitute(xi, zero).is_zero() && r.matrix[1][1].substitute(xi, zero).is_zero();
    return r;
}

std::optional<SOSICertificate> search_sosi(const MonomialAlgebraContext& ctx, const SparsePolynomial& b,
                                           std::int64_t q_max, std::int64_t n_max,
                                           const std::vector<Coeff>& lambdas) {
    require_field(ctx, b, "search_sosi");
    if (lambdas.empty()) throw std::invalid_argument("search_sosi: empty coefficient list");
    for (std::int64_t q = 0; q <= q_max; ++q) {
        std::vector<std::size_t> pick(static_cast<std::size_t>(q), 0);
        for (;;) {
            SOSICertificate cert{q, 1, {}};
            for (std::int64_t i = 1; i <= q; ++i)
                cert.c.push_back(b.pow(i).scaled(lambdas[pick[static_cast<std::size_t>(i - 1)]]));
            for (std::int64_t n = 1; n <= n_max; ++n) {
                cert.n_start = n;
                if (verify_sosi(ctx, b, cert)) return cert;
            }
            std::size_t k = 0;
            while (k < pick.size() && ++pick[k] == lambdas.size()) pick[k++] = 0;
            if (k == pick.size()) break;
        }
    }
    return std::nullopt;
}

} // namespace seminorm
