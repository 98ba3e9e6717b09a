// Copyright 2026 The seminorm Authors
// SPDX-License-Identifier: Apache-2.0

#include "seminorm/monomial_ideal.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace seminorm {

std::vector<ExponentVector> minimal_elements(std::vector<ExponentVector> points) {
    if (points.empty()) return points;
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    const std::size_t n = points.front().dim();
    std::vector<ExponentVector> kept;
    if (n <= 2) {
        // Sorted lexicographically, a point survives iff its last coordinate
        // beats every earlier survivor.
        std::int64_t best = std::numeric_limits<std::int64_t>::max();
        for (auto& p : points) {
            const std::int64_t last = n == 0 ? 0 : p[n - 1];
            if (kept.empty() || last < best) {
                best = last;
                kept.push_back(std::move(p));
            }
        }
        return kept;
    }
    std::stable_sort(points.begin(), points.end(), [](const auto& a, const auto& b) {
        return a.total_degree() < b.total_degree();
    });
    for (auto& p : points) {
        bool dominated = std::any_of(kept.begin(), kept.end(), [&](const auto& k) { return p.dominates(k); });
        if (!dominated) kept.push_back(std::move(p));
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

MonomialIdeal::MonomialIdeal(std::size_t dim, std::vector<ExponentVector> generators) : dim_(dim) {
    for (const auto& g : generators) require_same_dim(g.dim(), dim, "monomial ideal generator");
    generators_ = minimal_elements(std::move(generators));
}

MonomialIdeal MonomialIdeal::maximal_power(std::size_t dim, std::int64_t k) {
    std::vector<ExponentVector> gens;
    IntVector box(dim, k);
    for (auto& p : kernels::scan_box_serial(box, [&](const ExponentVector& e) { return e.total_degree() == k; }))
        gens.push_back(std::move(p));
    return MonomialIdeal(dim, std::move(gens));
}

bool MonomialIdeal::is_unit() const noexcept {
    return std::any_of(generators_.begin(), generators_.end(), [](const auto& g) {
        return std::all_of(g.coords().begin(), g.coords().end(), [](auto c) { return c == 0; });
    });
}

bool MonomialIdeal::contains(const ExponentVector& gamma) const {
    require_same_dim(gamma.dim(), dim_, "ideal membership");
    return std::any_of(generators_.begin(), generators_.end(), [&](const auto& g) { return gamma.dominates(g); });
}

IntVector MonomialIdeal::generator_bound() const {
    IntVector m(dim_, 0);
    for (const auto& g : generators_)
        for (std::size_t j = 0; j < dim_; ++j) m[j] = std::max(m[j], g[j]);
    return m;
}

bool contains(const MonomialIdeal& ideal, const ExponentVector& gamma) { return ideal.contains(gamma); }

namespace {

class PowerSearch {
public:
    PowerSearch(std::vector<IntVector> gens, std::size_t dim) : gens_(std::move(gens)), dim_(dim) {
        suffix_min_.assign(gens_.size() + 1, IntVector(dim_, std::numeric_limits<std::int64_t>::max()));
        for (std::size_t i = gens_.size(); i-- > 0;)
            for (std::size_t j = 0; j < dim_; ++j)
                suffix_min_[i][j] = std::min(suffix_min_[i + 1][j], gens_[i][j]);
    }

    bool run(std::size_t idx, std::int64_t remaining, IntVector& budget) {
        if (remaining == 0) return true;
        if (idx == gens_.size()) return false;
        for (std::size_t j = 0; j < dim_; ++j)
            if (checked_mul(remaining, suffix_min_[idx][j]) > budget[j]) return false;
        std::vector<std::int64_t> key(budget);
        key.push_back(remaining);
        key.push_back(static_cast<std::int64_t>(idx));
        if (failed_.count(key)) return false;

        const auto& g = gens_[idx];
        std::int64_t most = remaining;
        for (std::size_t j = 0; j < dim_; ++j)
            if (g[j] > 0) most = std::min(most, budget[j] / g[j]);
        const bool last = idx + 1 == gens_.size();
        for (std::int64_t c = most; c >= 0; --c) {
            if (last && c != remaining) break;
            for (std::size_t j = 0; j < dim_; ++j) budget[j] -= c * g[j];
            const bool ok = run(idx + 1, remaining - c, budget);
            for (std::size_t j = 0; j < dim_; ++j) budget[j] += c * g[j];
            if (ok) return true;
        }
        failed_.insert(std::move(key));
        return false;
    }

private:
    std::vector<IntVector> gens_;
    std::size_t dim_;
    std::vector<IntVector> suffix_min_;
    std::set<std::vector<std::int64_t>> failed_;
};

} // namespace

bool power_contains(const MonomialIdeal& ideal, std::int64_t k, const ExponentVector& gamma) {
    require_same_dim(gamma.dim(), ideal.dim(), "power_contains");
    if (k < 0) throw std::invalid_argument("power_contains: negative power");
    if (k == 0) return true;
    std::vector<IntVector> usable;
    for (const auto& g : ideal.generators())
        if (gamma.dominates(g)) usable.push_back(g.coords());
    if (usable.empty()) return false;
    // Cheap generators first so feasible instances terminate early.
    std::sort(usable.begin(), usable.end(), [](const IntVector& a, const IntVector& b) {
        std::int64_t sa = 0, sb = 0;
        for (auto x : a) sa += x;
        for (auto x : b) sb += x;
        return sa != sb ? sa < sb : a < b;
    });
    PowerSearch search(std::move(usable), ideal.dim());
    IntVector budget = gamma.coords();
    return search.run(0, k, budget);
}

namespace {

MonomialIdeal unit_ideal(std::size_t dim) { return MonomialIdeal(dim, {ExponentVector(dim)}); }

ExponentVector componentwise_max(const ExponentVector& a, const ExponentVector& b) {
    IntVector r(a.dim());
    for (std::size_t j = 0; j < r.size(); ++j) r[j] = std::max(a[j], b[j]);
    return ExponentVector(std::move(r));
}

MonomialIdeal colon_by_monomial(const MonomialIdeal& ideal, const ExponentVector& g) {
    std::vector<ExponentVector> gens;
    for (const auto& h : ideal.generators()) {
        IntVector r(h.dim());
        for (std::size_t j = 0; j < r.size(); ++j) r[j] = std::max<std::int64_t>(h[j] - g[j], 0);
        gens.emplace_back(std::move(r));
    }
    return MonomialIdeal(ideal.dim(), std::move(gens));
}

} // namespace

MonomialIdeal combine(IdealOp op, const MonomialIdeal& lhs, const MonomialIdeal& rhs) {
    require_same_dim(lhs.dim(), rhs.dim(), "combine");
    const std::size_t n = lhs.dim();
    std::vector<ExponentVector> gens;
    switch (op) {
    case IdealOp::sum:
        gens = lhs.generators();
        gens.insert(gens.end(), rhs.generators().begin(), rhs.generators().end());
        return MonomialIdeal(n, std::move(gens));
    case IdealOp::product:
        for (const auto& a : lhs.generators())
            for (const auto& b : rhs.generators()) gens.push_back(a + b);
        return MonomialIdeal(n, std::move(gens));
    case IdealOp::intersection:
        for (const auto& a : lhs.generators())
            for (const auto& b : rhs.generators()) gens.push_back(componentwise_max(a, b));
        return MonomialIdeal(n, std::move(gens));
    case IdealOp::colon: {
        MonomialIdeal result = unit_ideal(n);
        for (const auto& g : rhs.generators())
            result = combine(IdealOp::intersection, result, colon_by_monomial(lhs, g));
        return result;
    }
    }
    throw std::logic_error("combine: unknown operation");
}

MonomialIdeal power(const MonomialIdeal& ideal, std::int64_t k) {
    if (k < 0) throw std::invalid_argument("power: negative exponent");
    MonomialIdeal result = unit_ideal(ideal.dim());
    for (std::int64_t i = 0; i < k; ++i) result = combine(IdealOp::product, result, ideal);
    return result;
}

IdealOrder ord(const MonomialIdeal& ideal, const ExponentVector& gamma) {
    require_same_dim(gamma.dim(), ideal.dim(), "ord");
    if (ideal.is_unit()) throw std::invalid_argument("ord: the unit ideal has no order function");
    if (!ideal.contains(gamma)) return {0, false};
    std::int64_t min_degree = std::numeric_limits<std::int64_t>::max();
    for (const auto& g : ideal.generators()) min_degree = std::min(min_degree, g.total_degree());
    // Upward doubling, then binary search on the monotone predicate.
    std::int64_t lo = 1, hi = gamma.total_degree() / min_degree;
    std::int64_t probe = 1;
    while (probe * 2 <= hi && power_contains(ideal, probe * 2, gamma)) probe *= 2;
    lo = probe;
    hi = std::min(hi, probe * 2 - 1);
    while (lo < hi) {
        const std::int64_t mid = lo + (hi - lo + 1) / 2;
        if (power_contains(ideal, mid, gamma))
            lo = mid;
        else
            hi = mid - 1;
    }
    return {lo, false};
}

BoxSearch upset_generators(const IntVector& box,
                           const std::function<bool(const ExponentVector&)>& member,
                           kernels::Execution exec) {
    auto points = kernels::scan_box(box, member, exec);
    BoxSearch out;
    out.generators = minimal_elements(std::move(points));
    out.certified = std::all_of(out.generators.begin(), out.generators.end(), [&](const auto& g) {
        for (std::size_t j = 0; j < box.size(); ++j)
            if (g[j] >= box[j]) return false;
        return true;
    });
    return out;
}

IntVector default_search_box(const MonomialIdeal& ideal, const std::vector<Facet>& facets) {
    std::int64_t spread = 1;
    for (const auto& f : facets) spread = checked_add(spread, checked_add(f.offset, 1));
    IntVector box = ideal.generator_bound();
    for (auto& b : box) b = std::max(b + 1, spread);
    return box;
}

RationalPolyhedron newton_polyhedron(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) throw std::invalid_argument("the zero ideal has no Newton polyhedron");
    return facet_description(ideal.generators());
}

ClosureResult integral_closure(const MonomialIdeal& ideal, kernels::Execution exec) {
    const auto poly = newton_polyhedron(ideal);
    ClosureResult out{MonomialIdeal(ideal.dim()), default_search_box(ideal, poly.facets()), false, {}};
    auto search = upset_generators(out.box, [&](const ExponentVector& e) { return poly.contains(e.coords()); }, exec);
    out.ideal = MonomialIdeal(ideal.dim(), std::move(search.generators));
    out.box_certified = search.certified;
    out.added = kernels::scan_box(
        out.box, [&](const ExponentVector& e) { return poly.contains(e.coords()) && !ideal.contains(e); }, exec);
    return out;
}

RatliffRushResult ratliff_rush(const MonomialIdeal& ideal, std::int64_t horizon) {
    if (ideal.is_zero() || ideal.is_unit())
        throw std::invalid_argument("ratliff_rush: ideal must be proper and nonzero");
    if (horizon < 1) throw std::invalid_argument("ratliff_rush: horizon must be positive");
    RatliffRushResult out{ideal, false};
    MonomialIdeal lower = unit_ideal(ideal.dim()); // I^n
    MonomialIdeal upper = ideal;                   // I^{n+1}
    MonomialIdeal previous(ideal.dim());
    for (std::int64_t n = 0; n <= horizon; ++n) {
        MonomialIdeal term = combine(IdealOp::colon, upper, lower);
        if (n > 0 && term == previous) out.stabilized = true;
        out.ideal = combine(IdealOp::sum, out.ideal, term);
        previous = std::move(term);
        lower = upper;
        upper = combine(IdealOp::product, upper, ideal);
    }
    return out;
}

bool is_subideal(const MonomialIdeal& inner, const MonomialIdeal& outer) {
    require_same_dim(inner.dim(), outer.dim(), "is_subideal");
    return std::all_of(inner.generators().begin(), inner.generators().end(),
                       [&](const auto& g) { return outer.contains(g); });
}

} // namespace seminorm
