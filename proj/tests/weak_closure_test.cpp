// Copyright 2026 The seminorm Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "seminorm/weak_closure.hpp"
#include "support.hpp"

using namespace seminorm;
using namespace seminorm::testing;

namespace {

Face oblique_edge(const MonomialIdeal& ideal, const ExponentVector& on_edge) {
    const auto face = carrier_face(newton_polyhedron(ideal), on_edge);
    REQUIRE(face.has_value());
    REQUIRE(face->dimension == 1);
    return *face;
}

} // namespace

TEST_CASE("weak_closure_char0 of the running example") {
    const auto w = weak_closure_char0(running_ideal());
    CHECK(w.box_certified);
    CHECK(as_set(w.added) == std::set<ExponentVector>{{4, 2}, {4, 3}, {5, 2}, {5, 3}});
    CHECK(w.ideal.generators() == std::vector<ExponentVector>{{0, 6}, {2, 4}, {4, 2}, {6, 0}});
}

TEST_CASE("weak_closure_char0 small examples") {
    const auto max = ideal2({{1, 0}, {0, 1}});
    CHECK(weak_closure_char0(max).ideal == max);
    const auto diamond = ideal2({{2, 0}, {0, 2}});
    CHECK(weak_closure_char0(diamond).ideal == diamond);
    CHECK(integral_closure(diamond).ideal.contains({1, 1}));
}

TEST_CASE("star_face on the edge family") {
    for (std::int64_t n : {5, 7}) {
        const auto ideal = edge_family(n);
        const auto edge = oblique_edge(ideal, {1, n - 1});
        const auto r = star_face(ideal, edge, {n + 1, n + 1});
        std::vector<ExponentVector> interior;
        for (std::int64_t a = 1; a < n; ++a) interior.push_back({a, n - a});
        CHECK(as_set(r.members) == as_set(interior));
    }
    for (std::int64_t n : {6, 8}) {
        const auto ideal = edge_family(n);
        const auto edge = oblique_edge(ideal, {2, n - 2});
        const auto r = star_face(ideal, edge, {n + 1, n + 1});
        std::vector<ExponentVector> even;
        for (std::int64_t a = 2; a < n; a += 2) even.push_back({a, n - a});
        CHECK(as_set(r.members) == as_set(even));
    }
}

TEST_CASE("star_face of a vertex is the vertex") {
    const auto ideal = running_ideal();
    const auto vertex = carrier_face(newton_polyhedron(ideal), {6, 0});
    REQUIRE(vertex.has_value());
    const auto r = star_face(ideal, *vertex, {10, 10});
    CHECK(r.members == std::vector<ExponentVector>{{6, 0}});
}

TEST_CASE("star_face rejects foreign faces") {
    const auto other = carrier_face(newton_polyhedron(ideal2({{2, 0}, {0, 2}})), {1, 1});
    REQUIRE(other.has_value());
    CHECK_THROWS(star_face(running_ideal(), *other, {8, 8}));
}

TEST_CASE("property: star_face members lie in the face and its group") {
    std::mt19937 rng(101);
    for (int trial = 0; trial < 40; ++trial) {
        const auto ideal = random_ideal2(rng);
        const auto poly = newton_polyhedron(ideal);
        for (const auto& face : enumerate_faces(poly)) {
            const auto r = star_face(ideal, face, {12, 12});
            for (const auto& m : r.members) {
                CHECK(lattice_contains(r.group, m.coords()));
                const auto carrier = carrier_face(poly, m);
                REQUIRE(carrier.has_value());
                CHECK(*carrier == face);
            }
        }
    }
}

TEST_CASE("weak_closure_charp examples") {
    const auto p2 = weak_closure_charp(running_ideal(), 2);
    CHECK(p2.certified);
    CHECK(p2.closure.ideal == integral_closure(running_ideal()).ideal);
    CHECK(weak_closure_charp(ideal2({{2, 0}, {0, 2}}), 2).closure.ideal == ideal2({{2, 0}, {1, 1}, {0, 2}}));
    const auto p3 = weak_closure_charp(ideal2({{3, 0}, {0, 3}}), 3);
    CHECK(p3.closure.ideal.contains({1, 2}));
    CHECK(p3.closure.ideal.contains({2, 1}));
    CHECK_FALSE(p3.closure.ideal.contains({1, 1}));
    CHECK(p3.certified);
    CHECK_THROWS(weak_closure_charp(running_ideal(), 4));
}

TEST_CASE("weak_closure_charp reports undecided candidates at small depth") {
    // (1,1) over (x^3, y^3) stays out for every m; depth 1 cannot decide (1,2).
    const auto r = weak_closure(ideal2({{5, 0}, {0, 5}}), CharSpec(2), 1);
    CHECK_FALSE(r.certified);
    CHECK_FALSE(r.undecided.empty());
    const auto zero = weak_closure(running_ideal(), CharSpec::zero());
    CHECK(zero.certified);
    CHECK(zero.closure.ideal == weak_closure_char0(running_ideal()).ideal);
}

TEST_CASE("wsi_membership_oracle_char0 examples") {
    const auto ideal = running_ideal();
    CHECK(wsi_membership_oracle_char0(ideal, {4, 2}, 20, 40).all_pass);
    const auto fail = wsi_membership_oracle_char0(ideal, {1, 5}, 20, 40);
    CHECK_FALSE(fail.all_pass);
    CHECK(fail.fails_at >= 20);
    CHECK(fail.fails_at <= 40);
    CHECK(wsi_membership_oracle_char0(ideal, {2, 4}, 1, 30).all_pass);
    CHECK_THROWS(wsi_membership_oracle_char0(ideal, {2, 4}, 5, 4));
}

TEST_CASE("property: sandwich, idempotence, oracle agreement") {
    std::mt19937 rng(211);
    for (int trial = 0; trial < 25; ++trial) {
        const auto ideal = random_ideal2(rng);
        const auto w = weak_closure_char0(ideal);
        const auto c = integral_closure(ideal);
        CHECK(w.box_certified);
        CHECK(is_subideal(ideal, w.ideal));
        CHECK(is_subideal(w.ideal, c.ideal));
        CHECK(weak_closure_char0(w.ideal).ideal == w.ideal);
        // Membership of m*gamma in I^m can stabilize after m = 20; see the pinned case below.
        for (const auto& g : w.added) CHECK(wsi_membership_oracle_char0(ideal, g, 60, 100).all_pass);
        for (const auto& g : c.added)
            if (!w.ideal.contains(g)) CHECK_FALSE(wsi_membership_oracle_char0(ideal, g, 20, 40).all_pass);
    }
}

TEST_CASE("late stabilization: (5,3) over (y^6, x^8 y)") {
    // 5m/8 >= a >= 3m/5 must hold for a generators x^8 y among m factors; the
    // window has width m/40 and contains an integer for every m >= 28.
    const auto ideal = ideal2({{0, 6}, {8, 1}});
    const ExponentVector gamma{5, 3};
    CHECK(weak_closure_char0(ideal).ideal.contains(gamma));
    CHECK(wsi_membership_oracle_char0(ideal, gamma, 20, 40).fails_at == 22);
    CHECK_FALSE(power_contains(ideal, 27, gamma.scaled(27)));
    CHECK(wsi_membership_oracle_char0(ideal, gamma, 28, 200).all_pass);
}

TEST_CASE("property: char p closure contains every high-power member") {
    std::mt19937 rng(307);
    for (int trial = 0; trial < 15; ++trial) {
        const auto ideal = random_ideal2(rng, 4, 6);
        for (std::int64_t p : {2, 3}) {
            const std::int64_t m_max = 2;
            const auto r = weak_closure_charp(ideal, p, m_max);
            const auto c = integral_closure(ideal);
            CHECK(is_subideal(ideal, r.closure.ideal));
            CHECK(is_subideal(r.closure.ideal, c.ideal));
            std::int64_t top = 1;
            for (std::int64_t i = 0; i < m_max; ++i) top *= p;
            for (const auto& g : c.added) {
                bool all = true;
                for (std::int64_t m = 1; m <= top && all; ++m) all = power_contains(ideal, m, g.scaled(m));
                if (all) CHECK(r.closure.ideal.contains(g));
            }
        }
    }
}

TEST_CASE("serial and parallel closures agree") {
    std::mt19937 rng(401);
    for (int trial = 0; trial < 20; ++trial) {
        const auto ideal = random_ideal2(rng);
        CHECK(weak_closure_char0(ideal, kernels::Execution::serial).added ==
              weak_closure_char0(ideal, kernels::Execution::parallel).added);
        const auto s = weak_closure_charp(ideal, 2, 3, kernels::Execution::serial);
        const auto p = weak_closure_charp(ideal, 2, 3, kernels::Execution::parallel);
        CHECK(s.closure.added == p.closure.added);
        CHECK(s.undecided == p.undecided);
    }
}

TEST_CASE("face_group uses generators on the face and its rays") {
    const auto ideal = running_ideal();
    const auto poly = newton_polyhedron(ideal);
    const auto e1 = carrier_face(poly, {0, 9});
    REQUIRE(e1.has_value());
    // Generators on E1: (0,6); ray (0,1). Group: Z(0,1).
    CHECK(face_group(ideal, *e1).basis() == std::vector<IntVector>{{0, 1}});
    const auto top = carrier_face(poly, {4, 3});
    CHECK(face_group(ideal, *top).is_full());
}
