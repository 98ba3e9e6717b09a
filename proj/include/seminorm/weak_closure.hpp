// Copyright 2026 The seminorm Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SEMINORM_WEAK_CLOSURE_HPP
#define SEMINORM_WEAK_CLOSURE_HPP

#include "seminorm/field.hpp"
#include "seminorm/monomial_ideal.hpp"

namespace seminorm {

/// Lattice generated by the exponents of I lying on a face: I's generators on
/// the face together with the face's recession rays.
IntegerLattice face_group(const MonomialIdeal& ideal, const Face& face);

struct StarFaceResult {
    Face face;
    IntegerLattice group;
    /// Lattice points of relint(face) in [0, box] that belong to the group.
    std::vector<ExponentVector> members;
};

StarFaceResult star_face(const MonomialIdeal& ideal, const Face& face, const IntVector& box);

/// Weak subintegral closure over a field of characteristic 0.
ClosureResult weak_closure_char0(const MonomialIdeal& ideal,
                                 kernels::Execution exec = kernels::Execution::parallel);

struct CharpClosureResult {
    ClosureResult closure;
    /// False when some candidate of the integral closure stayed undecided.
    bool certified = false;
    std::vector<ExponentVector> undecided;
};

inline constexpr std::int64_t kDefaultFrobeniusDepth = 6;

/// Weak subintegral closure over a field of characteristic p, testing
/// Frobenius powers p^m for m = 1..m_max.
CharpClosureResult weak_closure_charp(const MonomialIdeal& ideal, std::int64_t p,
                                      std::int64_t m_max = kDefaultFrobeniusDepth,
                                      kernels::Execution exec = kernels::Execution::parallel);

/// Dispatches on the characteristic.
CharpClosureResult weak_closure(const MonomialIdeal& ideal, CharSpec characteristic,
                                std::int64_t m_max = kDefaultFrobeniusDepth,
                                kernels::Execution exec = kernels::Execution::parallel);

struct OracleVerdict {
    bool all_pass = true;
    std::int64_t fails_at = 0;
    bool operator==(const OracleVerdict&) const = default;
};

/// Checks gamma^m in I^m for every m in [m_lo, m_hi] by direct search.
OracleVerdict wsi_membership_oracle_char0(const MonomialIdeal& ideal, const ExponentVector& gamma,
                                          std::int64_t m_lo, std::int64_t m_hi);

} // namespace seminorm

#endif
