// Copyright 2026 The seminorm Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SEMINORM_MONOIDS_HPP
#define SEMINORM_MONOIDS_HPP

#include <variant>
#include <vector>

#include "seminorm/field.hpp"
#include "seminorm/kernels.hpp"
#include "seminorm/polyhedron.hpp"
#include "seminorm/polynomial.hpp"

namespace seminorm {

/// Submonoid of N generated by finitely many positive integers. Membership
/// is tabulated up to the conductor; beyond it every multiple of gcd is in.
class NumericalSemigroup {
public:
    explicit NumericalSemigroup(std::vector<std::int64_t> generators);
    static NumericalSemigroup naturals() { return NumericalSemigroup({1}); }

    std::int64_t gcd() const noexcept { return gcd_; }
    /// Minimal generating set, ascending.
    const std::vector<std::int64_t>& generators() const noexcept { return minimal_; }
    /// Smallest c with every multiple of gcd >= c a member.
    std::int64_t conductor() const noexcept { return conductor_; }
    /// Largest multiple of gcd outside the semigroup, or -gcd if there is none.
    std::int64_t frobenius() const noexcept { return conductor_ - gcd_; }
    /// Multiples of gcd outside the semigroup, ascending.
    std::vector<std::int64_t> gaps() const;
    bool contains(std::int64_t x) const;

    bool operator==(const NumericalSemigroup& o) const { return gcd_ == o.gcd_ && table_ == o.table_; }

private:
    std::int64_t gcd_ = 1;
    std::int64_t conductor_ = 0;
    std::vector<std::int64_t> minimal_;
    /// table_[i] says whether i * gcd is a member, for i * gcd < conductor.
    std::vector<bool> table_;
};

bool ns_membership(const NumericalSemigroup& s, std::int64_t x);

struct ExtensionResult {
    NumericalSemigroup result;
    /// Elements adjoined by the saturation, in adjunction order.
    std::vector<std::int64_t> adjoined;
};

/// Smallest U between S and T closed under (2x, 3x in U, x in T) => x in U.
ExtensionResult relative_seminormalization(const NumericalSemigroup& s, const NumericalSemigroup& t);

/// p = 0 gives the seminormalization; for a prime p the rule
/// (p x in U, x in T) => x in U is added.
ExtensionResult relative_weak_normalization(const NumericalSemigroup& s, const NumericalSemigroup& t,
                                            std::int64_t p);

/// Seminormalization inside N for a semigroup of gcd 1.
ExtensionResult ns_seminormalize(const NumericalSemigroup& s);

/// Finitely generated submonoid of N^d with its group and cone.
class AffineMonoid {
public:
    AffineMonoid(std::size_t dim, std::vector<ExponentVector> generators);

    std::size_t dim() const noexcept { return dim_; }
    const std::vector<ExponentVector>& generators() const noexcept { return generators_; }
    const IntegerLattice& group() const noexcept { return group_; }
    const ConeDescription& cone() const noexcept { return cone_; }

private:
    std::size_t dim_;
    std::vector<ExponentVector> generators_;
    IntegerLattice group_;
    ConeDescription cone_;
};

bool monoid_membership(const AffineMonoid& m, const ExponentVector& x);

/// Membership in the seminormalization: x lies in the cone and in the group
/// generated by the generators on its carrier face.
bool seminormalization_contains(const AffineMonoid& m, const ExponentVector& x);

struct SeminormalityReport {
    bool seminormal = true;
    std::vector<ExponentVector> witnesses;
    IntVector box;
};

SeminormalityReport is_seminormal_monoid(const AffineMonoid& m, const IntVector& box,
                                         kernels::Execution exec = kernels::Execution::parallel);

/// K[M] over a field of the given characteristic.
struct MonomialAlgebraContext {
    CharSpec characteristic;
    std::variant<AffineMonoid, NumericalSemigroup> monoid;

    std::size_t dim() const;
    bool contains_exponent(const IntVector& e) const;
};

/// True iff every exponent in f's support lies in the monoid.
bool algebra_contains(const MonomialAlgebraContext& ctx, const SparsePolynomial& f);

} // namespace seminorm

#endif
