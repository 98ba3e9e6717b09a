// Copyright 2026 The seminorm Authors
// SPDX-License-Identifier: Apache-2.0

#include "seminorm/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace seminorm {

BigInt binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

namespace {

BigInt mod_nonneg(const BigInt& a, std::int64_t p) {
    BigInt r = a % p;
    if (r < 0) r += p;
    return r;
}

BigInt mod_inverse(const BigInt& a, std::int64_t p) {
    // a^(p-2) mod p
    return boost::multiprecision::powm(mod_nonneg(a, p), BigInt(p - 2), BigInt(p));
}

} // namespace

Coeff reduce_coefficient(CharSpec field, const Coeff& c) {
    if (field.is_zero()) return c;
    const std::int64_t p = field.value();
    const BigInt num = boost::multiprecision::numerator(c);
    const BigInt den = boost::multiprecision::denominator(c);
    if (mod_nonneg(den, p) == 0)
        throw std::domain_error("coefficient " + c.str() + " has no image in F_" + std::to_string(p));
    return Coeff(mod_nonneg(num * mod_inverse(den, p), p));
}

Coeff field_inverse(CharSpec field, const Coeff& c) {
    const Coeff r = reduce_coefficient(field, c);
    if (r == 0) throw std::domain_error("division by zero in coefficient field");
    if (field.is_zero()) return Coeff(1) / r;
    return Coeff(mod_inverse(boost::multiprecision::numerator(r), field.value()));
}

std::string coefficient_to_string(const Coeff& c) { return c.str(); }

SparsePolynomial::SparsePolynomial(CharSpec field, std::vector<std::string> vars)
    : field_(field), vars_(std::move(vars)) {}

SparsePolynomial SparsePolynomial::constant(CharSpec field, std::vector<std::string> vars, const Coeff& c) {
    SparsePolynomial p(field, std::move(vars));
    p.add_term(Exponents(p.nvars(), 0), c);
    return p;
}

SparsePolynomial SparsePolynomial::variable(CharSpec field, std::vector<std::string> vars, std::size_t index) {
    SparsePolynomial p(field, std::move(vars));
    Exponents e(p.nvars(), 0);
    e.at(index) = 1;
    p.add_term(e, 1);
    return p;
}

SparsePolynomial SparsePolynomial::monomial(CharSpec field, std::vector<std::string> vars, Exponents e,
                                            const Coeff& c) {
    SparsePolynomial p(field, std::move(vars));
    require_same_dim(e.size(), p.nvars(), "monomial exponents");
    p.add_term(e, c);
    return p;
}

std::optional<std::size_t> SparsePolynomial::var_index(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - vars_.begin());
}

bool SparsePolynomial::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
}

namespace {
std::int64_t degree_of(const IntVector& e) {
    std::int64_t s = 0;
    for (auto x : e) s = checked_add(s, x);
    return s;
}
} // namespace

std::int64_t SparsePolynomial::total_degree() const {
    std::int64_t d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, degree_of(e));
    return d;
}

std::int64_t SparsePolynomial::min_total_degree() const {
    if (terms_.empty()) return -1;
    std::int64_t d = degree_of(terms_.begin()->first);
    for (const auto& [e, c] : terms_) d = std::min(d, degree_of(e));
    return d;
}

std::int64_t SparsePolynomial::degree_in(std::size_t var) const {
    std::int64_t d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.at(var));
    return d;
}

Coeff SparsePolynomial::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Coeff(0) : it->second;
}

SparsePolynomial SparsePolynomial::homogeneous_part(std::int64_t degree) const {
    SparsePolynomial out(field_, vars_);
    for (const auto& [e, c] : terms_)
        if (degree_of(e) == degree) out.terms_.emplace(e, c);
    return out;
}

SparsePolynomial SparsePolynomial::coefficient_in(std::size_t var, std::int64_t power) const {
    SparsePolynomial out(field_, vars_);
    for (const auto& [e, c] : terms_) {
        if (e.at(var) != power) continue;
        Exponents f = e;
        f[var] = 0;
        out.terms_.emplace(std::move(f), c);
    }
    return out;
}

void SparsePolynomial::add_term(const Exponents& e, const Coeff& c) {
    require_same_dim(e.size(), nvars(), "polynomial term");
    for (auto x : e)
        if (x < 0) throw std::invalid_argument("negative exponent in polynomial term");
    const Coeff r = reduce_coefficient(field_, c);
    if (r == 0) return;
    auto [it, inserted] = terms_.emplace(e, r);
    if (!inserted) {
        it->second = reduce_coefficient(field_, it->second + r);
        if (it->second == 0) terms_.erase(it);
    }
}

void SparsePolynomial::require_compatible(const SparsePolynomial& o, const char* what) const {
    if (field_ != o.field_) throw std::invalid_argument(std::string(what) + ": coefficient fields differ");
    if (vars_ != o.vars_) throw DimensionError(std::string(what) + ": variable lists differ");
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& o) {
    require_compatible(o, "polynomial sum");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& o) {
    require_compatible(o, "polynomial difference");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

SparsePolynomial SparsePolynomial::operator+(const SparsePolynomial& o) const {
    SparsePolynomial r = *this;
    r += o;
    return r;
}

SparsePolynomial SparsePolynomial::operator-(const SparsePolynomial& o) const {
    SparsePolynomial r = *this;
    r -= o;
    return r;
}

SparsePolynomial SparsePolynomial::operator-() const { return scaled(-1); }

SparsePolynomial SparsePolynomial::operator*(const SparsePolynomial& o) const {
    require_compatible(o, "polynomial product");
    SparsePolynomial r(field_, vars_);
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            Exponents e(e1.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = checked_add(e1[i], e2[i]);
            r.add_term(e, c1 * c2);
        }
    }
    return r;
}

SparsePolynomial SparsePolynomial::scaled(const Coeff& c) const {
    SparsePolynomial r(field_, vars_);
    for (const auto& [e, k] : terms_) r.add_term(e, k * c);
    return r;
}

SparsePolynomial SparsePolynomial::pow(std::int64_t k) const {
    if (k < 0) throw std::invalid_argument("negative polynomial power");
    SparsePolynomial result = constant_like(1);
    SparsePolynomial base = *this;
    while (k > 0) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return result;
}

SparsePolynomial SparsePolynomial::derivative(std::size_t var) const {
    if (var >= nvars()) throw std::out_of_range("derivative: variable index out of range");
    SparsePolynomial r(field_, vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents f = e;
        f[var] -= 1;
        r.add_term(f, c * e[var]);
    }
    return r;
}

SparsePolynomial SparsePolynomial::substitute(std::size_t var, const SparsePolynomial& value) const {
    require_compatible(value, "substitute");
    if (var >= nvars()) throw std::out_of_range("substitute: variable index out of range");
    std::map<std::int64_t, SparsePolynomial> powers;
    SparsePolynomial r(field_, vars_);
    for (const auto& [e, c] : terms_) {
        const std::int64_t k = e[var];
        auto it = powers.find(k);
        if (it == powers.end()) it = powers.emplace(k, value.pow(k)).first;
        Exponents rest = e;
        rest[var] = 0;
        r += monomial(field_, vars_, rest, c) * it->second;
    }
    return r;
}

SparsePolynomial SparsePolynomial::compose(const std::vector<SparsePolynomial>& images) const {
    require_same_dim(images.size(), nvars(), "compose");
    if (images.empty()) return *this;
    const auto& target_vars = images.front().vars();
    for (const auto& img : images) {
        if (img.field() != field_) throw std::invalid_argument("compose: coefficient fields differ");
        if (img.vars() != target_vars) throw DimensionError("compose: images use different variable lists");
    }
    SparsePolynomial r(field_, target_vars);
    for (const auto& [e, c] : terms_) {
        SparsePolynomial term = constant(field_, target_vars, c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) term = term * images[i].pow(e[i]);
        r += term;
    }
    return r;
}

SparsePolynomial SparsePolynomial::with_vars(const std::vector<std::string>& vars) const {
    std::vector<std::size_t> where(nvars());
    for (std::size_t i = 0; i < nvars(); ++i) {
        auto it = std::find(vars.begin(), vars.end(), vars_[i]);
        if (it == vars.end()) {
            if (degree_in(i) > 0) throw DimensionError("with_vars: variable '" + vars_[i] + "' is not available");
            where[i] = vars.size();
        } else {
            where[i] = static_cast<std::size_t>(it - vars.begin());
        }
    }
    SparsePolynomial r(field_, vars);
    for (const auto& [e, c] : terms_) {
        Exponents f(vars.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (where[i] < vars.size()) f[where[i]] = e[i];
        r.add_term(f, c);
    }
    return r;
}

std::string SparsePolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Coeff mag = c;
        bool negative = false;
        if (field_.is_zero() && c < 0) {
            negative = true;
            mag = -c;
        }
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        std::vector<std::string> factors;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            factors.push_back(e[i] == 1 ? vars_[i] : vars_[i] + "^" + std::to_string(e[i]));
        }
        if (factors.empty() || mag != 1) os << mag.str() << (factors.empty() ? "" : "*");
        for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
    }
    return os.str();
}

bool SparsePolynomial::operator==(const SparsePolynomial& o) const {
    return field_ == o.field_ && vars_ == o.vars_ && terms_ == o.terms_;
}

} // namespace seminorm
