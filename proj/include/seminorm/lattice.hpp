// Copyright 2026 The seminorm Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SEMINORM_LATTICE_HPP
#define SEMINORM_LATTICE_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace seminorm {

using IntVector = std::vector<std::int64_t>;

/// Raised when operands live in different ambient dimensions.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Overflow-checked int64 arithmetic. Throws std::overflow_error.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t floor_div(std::int64_t a, std::int64_t b);
std::int64_t gcd_of(std::span<const std::int64_t> v);
std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b);

/// Exponent of a monomial: a point of the nonnegative integer lattice.
class ExponentVector {
public:
    ExponentVector() = default;
    explicit ExponentVector(std::size_t dim) : coords_(dim, 0) {}
    explicit ExponentVector(IntVector coords);
    ExponentVector(std::initializer_list<std::int64_t> coords)
        : ExponentVector(IntVector(coords)) {}

    std::size_t dim() const noexcept { return coords_.size(); }
    std::int64_t operator[](std::size_t i) const { return coords_[i]; }
    const IntVector& coords() const noexcept { return coords_; }
    std::int64_t total_degree() const;

    /// Componentwise >=.
    bool dominates(const ExponentVector& other) const;
    ExponentVector operator+(const ExponentVector& other) const;
    ExponentVector scaled(std::int64_t k) const;
    static ExponentVector unit(std::size_t dim, std::size_t j);

    auto operator<=>(const ExponentVector&) const = default;
    bool operator==(const ExponentVector&) const = default;

private:
    IntVector coords_;
};

std::ostream& operator<<(std::ostream& os, const ExponentVector& e);
std::string to_string(const IntVector& v);

void require_same_dim(std::size_t a, std::size_t b, const char* what);

/// Sublattice of Z^n in canonical row-style Hermite normal form.
///
/// Rows are in echelon form, pivots are positive and entries above a pivot
/// are reduced into [0, pivot). Identical sublattices have identical bases.
class IntegerLattice {
public:
    explicit IntegerLattice(std::size_t dim = 0) : dim_(dim) {}

    std::size_t dim() const noexcept { return dim_; }
    std::size_t rank() const noexcept { return basis_.size(); }
    const std::vector<IntVector>& basis() const noexcept { return basis_; }
    bool is_full() const noexcept;

    bool operator==(const IntegerLattice&) const = default;

private:
    friend IntegerLattice hermite_basis(std::size_t dim, std::vector<IntVector> points);
    std::size_t dim_;
    std::vector<IntVector> basis_;
    std::vector<std::size_t> pivots_;

    friend bool lattice_contains(const IntegerLattice& lattice, std::span<const std::int64_t> v);
};

/// Lattice of integer combinations of `points`, all of dimension `dim`.
IntegerLattice hermite_basis(std::size_t dim, std::vector<IntVector> points);

bool lattice_contains(const IntegerLattice& lattice, std::span<const std::int64_t> v);

/// Basis of {y in Z^n : <row, y> = 0 for every row}, saturated, in Hermite form.
IntegerLattice integer_kernel(std::size_t dim, const std::vector<IntVector>& rows);

/// Rank over Q of a set of integer vectors.
std::size_t rational_rank(std::size_t dim, std::vector<IntVector> rows);

namespace detail {
// Echelonizes the first `pivot_cols` columns by unimodular row operations.
// Returns the pivot column of each nonzero leading row; rows past the
// returned count are zero on those columns.
std::vector<std::size_t> echelonize(std::vector<IntVector>& rows, std::size_t pivot_cols,
                                    bool reduce_above);
} // namespace detail

} // namespace seminorm

#endif
