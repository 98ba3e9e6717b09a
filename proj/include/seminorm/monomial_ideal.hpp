// Copyright 2026 The seminorm Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SEMINORM_MONOMIAL_IDEAL_HPP
#define SEMINORM_MONOMIAL_IDEAL_HPP

#include <functional>
#include <vector>

#include "seminorm/kernels.hpp"
#include "seminorm/lattice.hpp"
#include "seminorm/polyhedron.hpp"

namespace seminorm {

/// Monomial ideal stored by its minimal generators in lexicographic order.
/// An empty generator list is the zero ideal.
class MonomialIdeal {
public:
    explicit MonomialIdeal(std::size_t dim) : dim_(dim) {}
    MonomialIdeal(std::size_t dim, std::vector<ExponentVector> generators);

    /// The ideal (x_1, ..., x_n)^k.
    static MonomialIdeal maximal_power(std::size_t dim, std::int64_t k);

    std::size_t dim() const noexcept { return dim_; }
    const std::vector<ExponentVector>& generators() const noexcept { return generators_; }
    bool is_zero() const noexcept { return generators_.empty(); }
    bool is_unit() const noexcept;
    bool contains(const ExponentVector& gamma) const;
    /// Componentwise maximum of the generators.
    IntVector generator_bound() const;

    bool operator==(const MonomialIdeal&) const = default;

private:
    std::size_t dim_;
    std::vector<ExponentVector> generators_;
};

/// Antichain of minimal elements, lexicographically sorted.
std::vector<ExponentVector> minimal_elements(std::vector<ExponentVector> points);

bool contains(const MonomialIdeal& ideal, const ExponentVector& gamma);

/// True iff gamma dominates a sum of k generators (with repetition).
bool power_contains(const MonomialIdeal& ideal, std::int64_t k, const ExponentVector& gamma);

enum class IdealOp { sum, product, intersection, colon };

MonomialIdeal combine(IdealOp op, const MonomialIdeal& lhs, const MonomialIdeal& rhs);
MonomialIdeal power(const MonomialIdeal& ideal, std::int64_t k);

/// max k with gamma in I^k. `infinite` is never set for proper ideals.
struct IdealOrder {
    std::int64_t value = 0;
    bool infinite = false;
    bool operator==(const IdealOrder&) const = default;
};

IdealOrder ord(const MonomialIdeal& ideal, const ExponentVector& gamma);

/// Minimal generators of an up-set found by scanning a box.
struct BoxSearch {
    std::vector<ExponentVector> generators;
    /// Every member on the box's upper boundary dominates a generator strictly
    /// inside the box.
    bool certified = false;
};

BoxSearch upset_generators(const IntVector& box,
                           const std::function<bool(const ExponentVector&)>& member,
                           kernels::Execution exec = kernels::Execution::parallel);

/// Default scan box: max(M_j + 1, 1 + sum over facets of (offset + 1)) per coordinate.
IntVector default_search_box(const MonomialIdeal& ideal, const std::vector<Facet>& facets);

/// Closure-type result: the ideal, the scan box, certification and the
/// exponents inside the box that the closure adds to the input.
struct ClosureResult {
    MonomialIdeal ideal;
    IntVector box;
    bool box_certified = false;
    std::vector<ExponentVector> added;
};

RationalPolyhedron newton_polyhedron(const MonomialIdeal& ideal);

ClosureResult integral_closure(const MonomialIdeal& ideal,
                               kernels::Execution exec = kernels::Execution::parallel);

struct RatliffRushResult {
    MonomialIdeal ideal;
    bool stabilized = false;
};

/// Union of (I^{n+1} : I^n) for n = 0..horizon.
RatliffRushResult ratliff_rush(const MonomialIdeal& ideal, std::int64_t horizon);

/// True iff every generator of `inner` lies in `outer`.
bool is_subideal(const MonomialIdeal& inner, const MonomialIdeal& outer);

} // namespace seminorm

#endif
