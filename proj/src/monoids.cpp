// Copyright 2026 The seminorm Authors
// SPDX-License-Identifier: Apache-2.0

#include "seminorm/monoids.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace seminorm {

NumericalSemigroup::NumericalSemigroup(std::vector<std::int64_t> generators) {
    if (generators.empty()) throw std::invalid_argument("numerical semigroup needs at least one generator");
    std::int64_t d = 0;
    for (auto g : generators) {
        if (g <= 0) throw std::invalid_argument("numerical semigroup generators must be positive");
        d = std::gcd(d, g);
    }
    gcd_ = d;
    std::vector<std::int64_t> scaled;
    for (auto g : generators) scaled.push_back(g / d);
    std::sort(scaled.begin(), scaled.end());
    scaled.erase(std::unique(scaled.begin(), scaled.end()), scaled.end());
    const std::int64_t lo = scaled.front(), hi = scaled.back();

    // Frobenius number of the scaled semigroup is below (lo - 1)(hi - 1).
    const std::int64_t limit = checked_add(checked_mul(lo - 1, hi - 1), lo);
    std::vector<bool> reach(static_cast<std::size_t>(limit) + 1, false);
    reach[0] = true;
    for (std::int64_t x = 1; x <= limit; ++x)
        for (auto a : scaled)
            if (a <= x && reach[static_cast<std::size_t>(x - a)]) {
                reach[static_cast<std::size_t>(x)] = true;
                break;
            }
    std::int64_t last_gap = -1;
    for (std::int64_t x = 0; x <= limit; ++x)
        if (!reach[static_cast<std::size_t>(x)]) last_gap = x;
    const std::int64_t cond_scaled = last_gap + 1;
    conductor_ = checked_mul(cond_scaled, d);
    table_.assign(reach.begin(), reach.begin() + cond_scaled);

    auto member = [&](std::int64_t i) { return i >= cond_scaled || reach[static_cast<std::size_t>(i)]; };
    for (std::int64_t x = 1; x <= cond_scaled + lo; ++x) {
        if (!member(x)) continue;
        bool decomposes = false;
        for (std::int64_t y = 1; y <= x / 2 && !decomposes; ++y) decomposes = member(y) && member(x - y);
        if (!decomposes) minimal_.push_back(x * d);
    }
}

std::vector<std::int64_t> NumericalSemigroup::gaps() const {
    std::vector<std::int64_t> out;
    for (std::size_t i = 1; i < table_.size(); ++i)
        if (!table_[i]) out.push_back(static_cast<std::int64_t>(i) * gcd_);
    return out;
}

bool NumericalSemigroup::contains(std::int64_t x) const {
    if (x < 0 || x % gcd_ != 0) return false;
    const std::int64_t i = x / gcd_;
    if (i >= static_cast<std::int64_t>(table_.size())) return true;
    return table_[static_cast<std::size_t>(i)];
}

bool ns_membership(const NumericalSemigroup& s, std::int64_t x) { return s.contains(x); }

namespace {

void require_subset(const NumericalSemigroup& s, const NumericalSemigroup& t) {
    for (auto g : s.generators())
        if (!t.contains(g)) throw std::invalid_argument("extension requires S inside T; generator " +
                                                        std::to_string(g) + " is not in T");
}

// Adjoins the smallest firing candidate until no rule fires. Every firing
// candidate lies below T's conductor + U's conductor + gcd(U).
ExtensionResult saturate(const NumericalSemigroup& s, const NumericalSemigroup& t, std::int64_t p) {
    require_subset(s, t);
    ExtensionResult out{s, {}};
    for (;;) {
        const auto& u = out.result;
        const std::int64_t bound = checked_add(checked_add(t.conductor(), u.conductor()), u.gcd());
        std::int64_t fired = -1;
        for (std::int64_t x = 1; x <= bound && fired < 0; ++x) {
            if (u.contains(x) || !t.contains(x)) continue;
            const bool two_three = u.contains(2 * x) && u.contains(3 * x);
            const bool frobenius = p > 0 && u.contains(checked_mul(p, x));
            if (two_three || frobenius) fired = x;
        }
        if (fired < 0) return out;
        auto gens = u.generators();
        gens.push_back(fired);
        out.result = NumericalSemigroup(std::move(gens));
        out.adjoined.push_back(fired);
    }
}

} // namespace

ExtensionResult relative_seminormalization(const NumericalSemigroup& s, const NumericalSemigroup& t) {
    return saturate(s, t, 0);
}

ExtensionResult relative_weak_normalization(const NumericalSemigroup& s, const NumericalSemigroup& t,
                                            std::int64_t p) {
    if (p != 0 && !is_prime(p)) throw std::invalid_argument("weak normalization: p must be 0 or prime");
    return saturate(s, t, p);
}

ExtensionResult ns_seminormalize(const NumericalSemigroup& s) {
    if (s.gcd() != 1) throw std::invalid_argument("ns_seminormalize: generators must have gcd 1");
    return relative_seminormalization(s, NumericalSemigroup::naturals());
}

AffineMonoid::AffineMonoid(std::size_t dim, std::vector<ExponentVector> generators) : dim_(dim) {
    std::set<ExponentVector> unique;
    for (auto& g : generators) {
        require_same_dim(g.dim(), dim, "affine monoid generator");
        if (g.total_degree() > 0) unique.insert(std::move(g));
    }
    generators_.assign(unique.begin(), unique.end());
    std::vector<IntVector> rows;
    for (const auto& g : generators_) rows.push_back(g.coords());
    group_ = hermite_basis(dim, rows);
    cone_ = describe_cone(dim, rows);
}

namespace {

class MonoidSearch {
public:
    explicit MonoidSearch(const AffineMonoid& m) : gens_(m.generators()) {
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            std::vector<IntVector> rest;
            for (std::size_t j = i; j < gens_.size(); ++j) rest.push_back(gens_[j].coords());
            suffix_.push_back(describe_cone(m.dim(), rest));
        }
    }

    bool run(std::size_t idx, IntVector& rem) {
        if (std::all_of(rem.begin(), rem.end(), [](auto x) { return x == 0; })) return true;
        if (idx == gens_.size() || !suffix_[idx].contains(rem)) return false;
        IntVector key = rem;
        key.push_back(static_cast<std::int64_t>(idx));
        if (failed_.count(key)) return false;
        const auto& g = gens_[idx];
        std::int64_t most = -1;
        for (std::size_t j = 0; j < rem.size(); ++j)
            if (g[j] > 0) most = most < 0 ? rem[j] / g[j] : std::min(most, rem[j] / g[j]);
        for (std::int64_t c = most; c >= 0; --c) {
            for (std::size_t j = 0; j < rem.size(); ++j) rem[j] -= c * g[j];
            const bool ok = run(idx + 1, rem);
            for (std::size_t j = 0; j < rem.size(); ++j) rem[j] += c * g[j];
            if (ok) return true;
        }
        failed_.insert(std::move(key));
        return false;
    }

private:
    const std::vector<ExponentVector>& gens_;
    std::vector<ConeDescription> suffix_;
    std::set<IntVector> failed_;
};

} // namespace

bool monoid_membership(const AffineMonoid& m, const ExponentVector& x) {
    require_same_dim(x.dim(), m.dim(), "monoid_membership");
    if (!m.cone().contains(x.coords()) || !lattice_contains(m.group(), x.coords())) return false;
    MonoidSearch search(m);
    IntVector rem = x.coords();
    return search.run(0, rem);
}

bool seminormalization_contains(const AffineMonoid& m, const ExponentVector& x) {
    require_same_dim(x.dim(), m.dim(), "seminormalization_contains");
    const auto& cone = m.cone();
    if (!cone.contains(x.coords())) return false;
    const auto active = cone.tight_facets(x.coords());
    std::vector<IntVector> on_face;
    for (const auto& g : m.generators()) {
        bool on = std::all_of(active.begin(), active.end(),
                              [&](std::size_t i) { return dot(cone.facets[i], g.coords()) == 0; });
        if (on) on_face.push_back(g.coords());
    }
    return lattice_contains(hermite_basis(m.dim(), std::move(on_face)), x.coords());
}

SeminormalityReport is_seminormal_monoid(const AffineMonoid& m, const IntVector& box, kernels::Execution exec) {
    require_same_dim(box.size(), m.dim(), "is_seminormal_monoid box");
    SeminormalityReport out;
    out.box = box;
    out.witnesses = kernels::scan_box(
        box, [&](const ExponentVector& x) { return seminormalization_contains(m, x) && !monoid_membership(m, x); },
        exec);
    out.seminormal = out.witnesses.empty();
    return out;
}

std::size_t MonomialAlgebraContext::dim() const {
    if (const auto* a = std::get_if<AffineMonoid>(&monoid)) return a->dim();
    return 1;
}

bool MonomialAlgebraContext::contains_exponent(const IntVector& e) const {
    require_same_dim(e.size(), dim(), "algebra membership");
    if (const auto* a = std::get_if<AffineMonoid>(&monoid)) return monoid_membership(*a, ExponentVector(e));
    return std::get<NumericalSemigroup>(monoid).contains(e[0]);
}

bool algebra_contains(const MonomialAlgebraContext& ctx, const SparsePolynomial& f) {
    require_same_dim(f.nvars(), ctx.dim(), "algebra_contains");
    return std::all_of(f.terms().begin(), f.terms().end(),
                       [&](const auto& term) { return ctx.contains_exponent(term.first); });
}

} // namespace seminorm
