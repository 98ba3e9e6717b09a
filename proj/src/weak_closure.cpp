// Copyright 2026 The seminorm Authors
// SPDX-License-Identifier: Apache-2.0

#include "seminorm/weak_closure.hpp"

#include <algorithm>
#include <map>

namespace seminorm {

namespace {

void require_proper_nonzero(const MonomialIdeal& ideal, const char* what) {
    if (ideal.is_zero()) throw std::invalid_argument(std::string(what) + ": zero ideal");
    if (ideal.is_unit()) throw std::invalid_argument(std::string(what) + ": unit ideal");
}

bool on_face(const RationalPolyhedron& poly, const Face& face, const ExponentVector& g) {
    return std::all_of(face.active.begin(), face.active.end(),
                       [&](std::size_t i) { return poly.facets()[i].tight_at(g.coords()); });
}

IntegerLattice group_on_face(const RationalPolyhedron& poly, const MonomialIdeal& ideal, const Face& face) {
    std::vector<IntVector> gens;
    for (const auto& g : ideal.generators())
        if (on_face(poly, face, g)) gens.push_back(g.coords());
    for (const auto& r : face.rays) gens.push_back(r);
    return hermite_basis(ideal.dim(), std::move(gens));
}

// Products stop once a single product would exceed this many candidate pairs.
constexpr std::size_t kFrobeniusWorkLimit = 50'000'000;

} // namespace

IntegerLattice face_group(const MonomialIdeal& ideal, const Face& face) {
    return group_on_face(newton_polyhedron(ideal), ideal, face);
}

StarFaceResult star_face(const MonomialIdeal& ideal, const Face& face, const IntVector& box) {
    const auto poly = newton_polyhedron(ideal);
    require_same_dim(box.size(), poly.dim(), "star_face box");
    auto rebuilt = face_from_active(poly, face.active);
    if (!rebuilt || rebuilt->active != face.active || rebuilt->vertices != face.vertices)
        throw std::invalid_argument("star_face: face does not belong to the ideal's Newton polyhedron");
    StarFaceResult out{*rebuilt, group_on_face(poly, ideal, *rebuilt), {}};
    out.members = kernels::scan_box_serial(box, [&](const ExponentVector& e) {
        return poly.contains(e.coords()) && poly.tight_facets(e.coords()) == out.face.active &&
               lattice_contains(out.group, e.coords());
    });
    return out;
}

ClosureResult weak_closure_char0(const MonomialIdeal& ideal, kernels::Execution exec) {
    require_proper_nonzero(ideal, "weak_closure_char0");
    const auto poly = newton_polyhedron(ideal);
    std::map<std::vector<std::size_t>, IntegerLattice> groups;
    for (const auto& face : enumerate_faces(poly)) groups.emplace(face.active, group_on_face(poly, ideal, face));

    auto member = [&](const ExponentVector& e) {
        if (!poly.contains(e.coords())) return false;
        return lattice_contains(groups.at(poly.tight_facets(e.coords())), e.coords());
    };
    ClosureResult out{MonomialIdeal(ideal.dim()), default_search_box(ideal, poly.facets()), false, {}};
    auto search = upset_generators(out.box, member, exec);
    out.ideal = MonomialIdeal(ideal.dim(), std::move(search.generators));
    out.box_certified = search.certified;
    out.added = kernels::scan_box(out.box, [&](const ExponentVector& e) { return member(e) && !ideal.contains(e); },
                                  exec);
    return out;
}

CharpClosureResult weak_closure_charp(const MonomialIdeal& ideal, std::int64_t p, std::int64_t m_max,
                                      kernels::Execution exec) {
    require_proper_nonzero(ideal, "weak_closure_charp");
    if (!is_prime(p)) throw std::invalid_argument("weak_closure_charp: p must be prime");
    if (m_max < 1) throw std::invalid_argument("weak_closure_charp: m_max must be positive");
    const auto poly = newton_polyhedron(ideal);
    const IntVector box = default_search_box(ideal, poly.facets());

    // Only exponents of the integral closure can pass a Frobenius test.
    auto undecided = kernels::scan_box(
        box, [&](const ExponentVector& e) { return poly.contains(e.coords()) && !ideal.contains(e); }, exec);
    std::vector<ExponentVector> accepted;

    MonomialIdeal frobenius = ideal; // I^{p^m}
    std::int64_t q = 1;              // p^m
    bool exhausted = false;
    for (std::int64_t m = 1; m <= m_max && !undecided.empty(); ++m) {
        MonomialIdeal next = frobenius;
        for (std::int64_t i = 1; i < p; ++i) {
            if (next.generators().size() * frobenius.generators().size() > kFrobeniusWorkLimit) {
                exhausted = true;
                break;
            }
            next = combine(IdealOp::product, next, frobenius);
        }
        if (exhausted) break;
        frobenius = std::move(next);
        q = checked_mul(q, p);
        auto passes = [&](const ExponentVector& e) { return frobenius.contains(e.scaled(q)); };
        auto hits = kernels::filter(undecided, passes, exec);
        accepted.insert(accepted.end(), hits.begin(), hits.end());
        std::vector<ExponentVector> rest;
        std::set_difference(undecided.begin(), undecided.end(), hits.begin(), hits.end(), std::back_inserter(rest));
        undecided = std::move(rest);
    }

    std::vector<ExponentVector> gens = ideal.generators();
    gens.insert(gens.end(), accepted.begin(), accepted.end());
    MonomialIdeal result(ideal.dim(), std::move(gens));
    const bool box_certified = std::all_of(result.generators().begin(), result.generators().end(), [&](const auto& g) {
        for (std::size_t j = 0; j < box.size(); ++j)
            if (g[j] >= box[j]) return false;
        return true;
    });
    // Members of the closure inside the box but outside I.
    auto added = kernels::scan_box(
        box, [&](const ExponentVector& e) { return result.contains(e) && !ideal.contains(e); }, exec);
    const bool certified = undecided.empty();
    return {ClosureResult{std::move(result), box, box_certified, std::move(added)}, certified, std::move(undecided)};
}

CharpClosureResult weak_closure(const MonomialIdeal& ideal, CharSpec characteristic, std::int64_t m_max,
                                kernels::Execution exec) {
    if (characteristic.is_zero()) {
        return {weak_closure_char0(ideal, exec), true, {}};
    }
    return weak_closure_charp(ideal, characteristic.value(), m_max, exec);
}

OracleVerdict wsi_membership_oracle_char0(const MonomialIdeal& ideal, const ExponentVector& gamma,
                                          std::int64_t m_lo, std::int64_t m_hi) {
    if (m_lo < 1 || m_lo > m_hi) throw std::invalid_argument("oracle: need 1 <= m_lo <= m_hi");
    for (std::int64_t m = m_lo; m <= m_hi; ++m)
        if (!power_contains(ideal, m, gamma.scaled(m))) return {false, m};
    return {true, 0};
}

} // namespace seminorm
