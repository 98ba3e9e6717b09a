// Copyright 2026 The seminorm Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SEMINORM_CRITERIA_HPP
#define SEMINORM_CRITERIA_HPP

#include <array>
#include <optional>
#include <vector>

#include "seminorm/monoids.hpp"
#include "seminorm/monomial_ideal.hpp"
#include "seminorm/polynomial.hpp"

namespace seminorm {

/// System of subintegrality (q, N, c_1..c_q).
struct SOSICertificate {
    std::int64_t q = 0;
    std::int64_t n_start = 1;
    std::vector<SparsePolynomial> c;
};

/// Coefficients a_1..a_{2q+1} of the structured equations of integral dependence.
struct WSICertificate {
    std::int64_t q = 0;
    std::vector<SparsePolynomial> a;
};

/// b^n + sum_{i<=q} C(n,i) c_i b^{n-i} in A for N <= n <= 2N + 2q - 1.
bool verify_sosi(const MonomialAlgebraContext& ctx, const SparsePolynomial& b, const SOSICertificate& cert);

/// b^n + sum_{i<=n} (-1)^i C(n,i) a_i b^{n-i} = 0 for q+1 <= n <= 2q+1, with
/// every a_i in A unless check_membership is false.
bool verify_wsi_ring(const MonomialAlgebraContext& ctx, const SparsePolynomial& b, const WSICertificate& cert,
                     bool check_membership = true);

/// b^n + sum_{i<=n} C(n,i) a_i b^{n-i} = 0 for q+1 <= n <= 2q+1 with a_i in I^i.
/// b and every a_i must be monomials (or zero).
bool verify_wsi_ideal(const MonomialIdeal& ideal, const SparsePolynomial& b, const WSICertificate& cert);

/// Certificate from b^n in I^n on the window q < n <= 2q+1, smallest q <= q_max.
std::optional<WSICertificate> wsi_certificate_from_high_powers(const MonomialIdeal& ideal,
                                                               const SparsePolynomial& b, std::int64_t q_max);

/// Ideal certificates use b^n + sum C(n,i) a_i b^{n-i} = 0; ring certificates
/// carry (-1)^i. Negates the odd-indexed a_i, converting either way.
WSICertificate alternate_signs(WSICertificate cert);

/// F(T) = T^n + sum (-1)^i C(n,i) a_i T^{n-i}, n = 2q+1, in the certificate's
/// variables plus `tvar` (appended last).
SparsePolynomial build_characteristic_poly(const WSICertificate& cert, const std::string& tvar = "T");

/// True iff F and its first floor(n/2) derivatives in `tvar` vanish at b.
bool derivative_criterion(const SparsePolynomial& f, const SparsePolynomial& b, const std::string& tvar = "T");

struct SwanOutcome {
    enum class Kind { root, witness };
    Kind kind = Kind::root;
    /// The root (kind == root) or the element c/b missing from the algebra.
    SparsePolynomial a;
};

/// For monomials b, c in the algebra with b^3 = c^2, finds a with a^2 = b, a^3 = c.
SwanOutcome swan_root_test(const MonomialAlgebraContext& ctx, const SparsePolynomial& b,
                           const SparsePolynomial& c);

struct SchanuelReport {
    SparsePolynomial f1, f2, g1, g2;
    std::array<std::array<SparsePolynomial, 2>, 2> matrix;
    bool unimodular = false;  ///< f1 g1 + f2 g2 = 1
    bool idempotent = false;  ///< M^2 = M
    bool reduces_to_p2 = false; ///< M(0) = diag(1, 0)
};

/// Projection matrix (f_i g_j) with f1 = 1 + aX, f2 = a^2 X^2,
/// g1 = (1 - aX)(1 + a^2 X^2), g2 = a^2 X^2.
SchanuelReport schanuel_matrix(const SparsePolynomial& a, const std::string& xvar = "X");

/// Bounded search for a SOSI with c_i = lambda_i b^i, lambda_i from `lambdas`,
/// N in [1, n_max] and q in [0, q_max].
std::optional<SOSICertificate> search_sosi(const MonomialAlgebraContext& ctx, const SparsePolynomial& b,
                                           std::int64_t q_max, std::int64_t n_max,
                                           const std::vector<Coeff>& lambdas);

} // namespace seminorm

#endif
