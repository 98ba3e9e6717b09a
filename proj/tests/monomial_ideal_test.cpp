// Copyright 2026 The seminorm Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "seminorm/weak_closure.hpp"
#include "support.hpp"

using namespace seminorm;
using namespace seminorm::testing;

TEST_CASE("ideals are stored by sorted minimal generators") {
    const MonomialIdeal a(2, {{2, 4}, {6, 0}, {0, 6}, {3, 5}, {6, 0}});
    CHECK(a.generators() == std::vector<ExponentVector>{{0, 6}, {2, 4}, {6, 0}});
    CHECK(a == running_ideal());
    CHECK(MonomialIdeal(2, {{0, 0}, {3, 1}}).is_unit());
    CHECK(MonomialIdeal(2).is_zero());
    CHECK_THROWS_AS(MonomialIdeal(2, {{1, 2, 3}}), DimensionError);
    CHECK(MonomialIdeal::maximal_power(2, 2).generators() == std::vector<ExponentVector>{{0, 2}, {1, 1}, {2, 0}});
}

TEST_CASE("contains examples") {
    const auto ideal = running_ideal();
    CHECK(ideal.contains({0, 7}));
    CHECK_FALSE(ideal.contains({4, 2}));
    for (const auto& g : ideal.generators()) CHECK(ideal.contains(g));
    CHECK_THROWS_AS(ideal.contains({1, 1, 1}), DimensionError);
}

TEST_CASE("power_contains examples") {
    CHECK(power_contains(ideal2({{2, 0}, {0, 2}}), 2, {2, 2}));
    CHECK_FALSE(power_contains(ideal2({{3, 0}, {0, 3}}), 3, {3, 3}));
    const auto ideal = running_ideal();
    for (const auto& v : box_points({8, 8})) CHECK(power_contains(ideal, 1, v) == ideal.contains(v));
}

TEST_CASE("property: power_contains agrees with explicit powers") {
    std::mt19937 rng(9);
    for (int trial = 0; trial < 60; ++trial) {
        const auto ideal = random_ideal2(rng, 4, 6);
        for (std::int64_t k = 1; k <= 4; ++k) {
            const auto gens = power_generators(ideal, k);
            CHECK(power(ideal, k).generators() == gens);
            for (const auto& v : box_points({6 * k + 2, 6 * k + 2})) {
                const bool in = power_contains(ideal, k, v);
                CHECK(in == dominates_any(gens, v));
                if (in) CHECK(ideal.contains(v));
            }
        }
    }
}

TEST_CASE("combine examples") {
    CHECK(combine(IdealOp::intersection, ideal2({{1, 0}}), ideal2({{0, 1}})) == ideal2({{1, 1}}));
    CHECK(combine(IdealOp::product, ideal2({{2, 0}}), ideal2({{0, 2}})) == ideal2({{2, 2}}));
    const auto rr = ideal2({{4, 0}, {3, 1}, {1, 3}, {0, 4}});
    CHECK(combine(IdealOp::colon, power(rr, 2), rr).contains({2, 2}));
    CHECK(combine(IdealOp::sum, ideal2({{2, 0}}), ideal2({{0, 2}})) == ideal2({{2, 0}, {0, 2}}));
    CHECK_THROWS_AS(combine(IdealOp::sum, ideal2({{1, 0}}), MonomialIdeal(3, {{1, 0, 0}})), DimensionError);
}

TEST_CASE("property: combine agrees with pointwise membership") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 80; ++trial) {
        const auto i = random_ideal2(rng, 4, 6), j = random_ideal2(rng, 4, 6);
        const auto sum = combine(IdealOp::sum, i, j), prod = combine(IdealOp::product, i, j),
                   meet = combine(IdealOp::intersection, i, j), colon = combine(IdealOp::colon, i, j);
        for (const auto* r : {&sum, &prod, &meet, &colon})
            for (std::size_t a = 0; a < r->generators().size(); ++a)
                for (std::size_t b = 0; b < r->generators().size(); ++b)
                    if (a != b) CHECK_FALSE(r->generators()[a].dominates(r->generators()[b]));
        for (const auto& v : box_points({14, 14})) {
            CHECK(sum.contains(v) == (i.contains(v) || j.contains(v)));
            CHECK(meet.contains(v) == (i.contains(v) && j.contains(v)));
            bool in_prod = false;
            for (const auto& g : i.generators())
                for (const auto& h : j.generators()) in_prod = in_prod || v.dominates(g + h);
            CHECK(prod.contains(v) == in_prod);
            bool in_colon = true;
            for (const auto& h : j.generators()) in_colon = in_colon && i.contains(v + h);
            CHECK(colon.contains(v) == in_colon);
        }
    }
}

TEST_CASE("ord examples") {
    CHECK(ord(ideal2({{1, 0}, {0, 1}}), {3, 4}).value == 7);
    CHECK(ord(running_ideal(), {6, 0}).value == 1);
    CHECK(ord(running_ideal(), {1, 1}).value == 0);
    CHECK_THROWS(ord(ideal2({{0, 0}}), {1, 1}));
}

TEST_CASE("property: ord is the largest power containing the point and is super-additive") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        const auto ideal = random_ideal2(rng);
        std::uniform_int_distribution<int> coord(0, 20);
        for (int s = 0; s < 20; ++s) {
            const ExponentVector g{coord(rng), coord(rng)}, h{coord(rng), coord(rng)};
            const auto k = ord(ideal, g).value;
            if (k > 0) CHECK(power_contains(ideal, k, g));
            CHECK_FALSE(power_contains(ideal, k + 1, g));
            CHECK(ord(ideal, g + h).value >= k + ord(ideal, h).value);
        }
    }
}

TEST_CASE("integral_closure examples") {
    const auto c = integral_closure(running_ideal());
    CHECK(c.box_certified);
    CHECK(as_set(c.added) ==
          std::set<ExponentVector>{{1, 5}, {3, 3}, {4, 2}, {4, 3}, {5, 1}, {5, 2}, {5, 3}});
    CHECK(integral_closure(ideal2({{2, 0}, {0, 2}})).ideal == ideal2({{2, 0}, {1, 1}, {0, 2}}));
    CHECK(integral_closure(ideal2({{3, 2}})).ideal == ideal2({{3, 2}}));
}

TEST_CASE("property: integral closure matches the Newton polyhedron oracle") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 80; ++trial) {
        const auto ideal = random_ideal2(rng);
        const auto c = integral_closure(ideal);
        CHECK(c.box_certified);
        for (const auto& v : box_points({12, 12})) {
            CHECK(c.ideal.contains(v) == newton_contains_2d(ideal.generators(), v));
            if (ideal.contains(v)) CHECK(c.ideal.contains(v));
        }
        CHECK(integral_closure(c.ideal).ideal == c.ideal);
        // Monotone: enlarging I enlarges its closure.
        auto bigger = ideal.generators();
        bigger.push_back(ExponentVector{std::uniform_int_distribution<int>(0, 8)(rng), 8});
        const auto cb = integral_closure(MonomialIdeal(2, bigger)).ideal;
        CHECK(is_subideal(c.ideal, cb));
    }
}

TEST_CASE("integral closure in three variables") {
    const MonomialIdeal ideal(3, {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}});
    const auto c = integral_closure(ideal);
    CHECK(c.box_certified);
    CHECK(c.ideal == MonomialIdeal::maximal_power(3, 2));
}

TEST_CASE("serial and parallel closure kernels agree") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        const auto ideal = random_ideal2(rng);
        const auto s = integral_closure(ideal, kernels::Execution::serial);
        const auto p = integral_closure(ideal, kernels::Execution::parallel);
        CHECK(s.ideal == p.ideal);
        CHECK(s.added == p.added);
    }
}

TEST_CASE("ratliff_rush examples") {
    const auto ideal = ideal2({{4, 0}, {3, 1}, {1, 3}, {0, 4}});
    const auto rr = ratliff_rush(ideal, 5);
    CHECK(rr.ideal.contains({2, 2}));
    CHECK(rr.stabilized);
    const auto max = ideal2({{1, 0}, {0, 1}});
    CHECK(ratliff_rush(max, 5).ideal == max);
    CHECK(ratliff_rush(max, 5).stabilized);
    CHECK(ratliff_rush(max, 1).ideal == max);
    CHECK(ratliff_rush(max, 1).stabilized);
}

TEST_CASE("property: I is inside its Ratliff-Rush ideal, which is inside the closures") {
    std::mt19937 rng(53);
    for (int trial = 0; trial < 40; ++trial) {
        const auto ideal = random_ideal2(rng, 4, 6);
        const auto rr = ratliff_rush(ideal, 4).ideal;
        CHECK(is_subideal(ideal, rr));
        CHECK(is_subideal(rr, integral_closure(ideal).ideal));
        CHECK(is_subideal(rr, weak_closure_char0(ideal).ideal));
    }
}

TEST_CASE("upset_generators certifies or flags the box") {
    auto member = [](const ExponentVector& e) { return e[0] + e[1] >= 3; };
    const auto inside = upset_generators({5, 5}, member);
    CHECK(inside.certified);
    CHECK(inside.generators == std::vector<ExponentVector>{{0, 3}, {1, 2}, {2, 1}, {3, 0}});
    const auto tight = upset_generators({2, 2}, member);
    CHECK_FALSE(tight.certified);
}
