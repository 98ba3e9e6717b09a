// Copyright 2026 The seminorm Authors
// SPDX-License-Identifier: Apache-2.0

#include "seminorm/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

namespace seminorm {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in addition");
    return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in subtraction");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in multiplication");
    return r;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::int64_t gcd_of(std::span<const std::int64_t> v) {
    std::int64_t g = 0;
    for (auto x : v) g = std::gcd(g, x);
    return g;
}

std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
    return s;
}

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        std::ostringstream os;
        os << what << ": dimension mismatch (" << a << " vs " << b << ")";
        throw DimensionError(os.str());
    }
}

ExponentVector::ExponentVector(IntVector coords) : coords_(std::move(coords)) {
    for (auto c : coords_)
        if (c < 0) throw std::invalid_argument("exponent vectors must be nonnegative");
}

std::int64_t ExponentVector::total_degree() const {
    std::int64_t s = 0;
    for (auto c : coords_) s = checked_add(s, c);
    return s;
}

bool ExponentVector::dominates(const ExponentVector& other) const {
    require_same_dim(dim(), other.dim(), "dominates");
    for (std::size_t i = 0; i < coords_.size(); ++i)
        if (coords_[i] < other.coords_[i]) return false;
    return true;
}

ExponentVector ExponentVector::operator+(const ExponentVector& other) const {
    require_same_dim(dim(), other.dim(), "exponent sum");
    IntVector r(coords_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = checked_add(coords_[i], other.coords_[i]);
    return ExponentVector(std::move(r));
}

ExponentVector ExponentVector::scaled(std::int64_t k) const {
    IntVector r(coords_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = checked_mul(coords_[i], k);
    return ExponentVector(std::move(r));
}

ExponentVector ExponentVector::unit(std::size_t dim, std::size_t j) {
    IntVector r(dim, 0);
    r.at(j) = 1;
    return ExponentVector(std::move(r));
}

std::string to_string(const IntVector& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const ExponentVector& e) {
    return os << to_string(e.coords());
}

namespace {

// g = x*a + y*b with g >= 0.
std::tuple<std::int64_t, std::int64_t, std::int64_t> ext_gcd(std::int64_t a, std::int64_t b) {
    std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        std::int64_t q = old_r / r;
        std::tie(old_r, r) = std::make_tuple(r, old_r - q * r);
        std::tie(old_s, s) = std::make_tuple(s, checked_sub(old_s, checked_mul(q, s)));
        std::tie(old_t, t) = std::make_tuple(t, checked_sub(old_t, checked_mul(q, t)));
    }
    if (old_r < 0) return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
}

void axpy(IntVector& dst, std::int64_t k, const IntVector& src) {
    if (k == 0) return;
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = checked_add(dst[i], checked_mul(k, src[i]));
}

bool is_zero(const IntVector& v) {
    return std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; });
}

} // namespace

namespace detail {

std::vector<std::size_t> echelonize(std::vector<IntVector>& rows, std::size_t pivot_cols,
                                    bool reduce_above) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t col = 0; col < pivot_cols && r < rows.size(); ++col) {
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][col] == 0) continue;
            const std::int64_t a = rows[r][col], b = rows[i][col];
            auto [g, x, y] = ext_gcd(a, b);
            IntVector top(rows[r].size()), bottom(rows[r].size());
            for (std::size_t k = 0; k < top.size(); ++k) {
                top[k] = checked_add(checked_mul(x, rows[r][k]), checked_mul(y, rows[i][k]));
                bottom[k] = checked_sub(checked_mul(b / g, rows[r][k]), checked_mul(a / g, rows[i][k]));
            }
            rows[r] = std::move(top);
            rows[i] = std::move(bottom);
        }
        if (rows[r][col] == 0) continue;
        if (rows[r][col] < 0)
            for (auto& e : rows[r]) e = -e;
        if (reduce_above) {
            for (std::size_t k = 0; k < r; ++k) {
                const std::int64_t q = floor_div(rows[k][col], rows[r][col]);
                axpy(rows[k], -q, rows[r]);
            }
        }
        pivots.push_back(col);
        ++r;
    }
    return pivots;
}

} // namespace detail

bool IntegerLattice::is_full() const noexcept { return basis_.size() == dim_; }

IntegerLattice hermite_basis(std::size_t dim, std::vector<IntVector> points) {
    for (const auto& p : points) require_same_dim(p.size(), dim, "hermite_basis");
    IntegerLattice lattice(dim);
    lattice.pivots_ = detail::echelonize(points, dim, true);
    points.resize(lattice.pivots_.size());
    lattice.basis_ = std::move(points);
    return lattice;
}

bool lattice_contains(const IntegerLattice& lattice, std::span<const std::int64_t> v) {
    require_same_dim(lattice.dim(), v.size(), "lattice_contains");
    IntVector rest(v.begin(), v.end());
    std::size_t col = 0;
    for (std::size_t i = 0; i < lattice.basis_.size(); ++i) {
        const std::size_t p = lattice.pivots_[i];
        for (; col < p; ++col)
            if (rest[col] != 0) return false;
        const std::int64_t pivot = lattice.basis_[i][p];
        if (rest[p] % pivot != 0) return false;
        axpy(rest, -(rest[p] / pivot), lattice.basis_[i]);
        col = p + 1;
    }
    return is_zero(rest);
}

IntegerLattice integer_kernel(std::size_t dim, const std::vector<IntVector>& rows) {
    for (const auto& r : rows) require_same_dim(r.size(), dim, "integer_kernel");
    const std::size_t k = rows.size();
    // Row j of [A^T | I] tracks which combination of unit vectors produced it.
    std::vector<IntVector> aug(dim, IntVector(k + dim, 0));
    for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t i = 0; i < k; ++i) aug[j][i] = rows[i][j];
        aug[j][k + j] = 1;
    }
    const auto pivots = detail::echelonize(aug, k, false);
    std::vector<IntVector> kernel;
    for (std::size_t j = pivots.size(); j < dim; ++j)
        kernel.emplace_back(aug[j].begin() + static_cast<std::ptrdiff_t>(k), aug[j].end());
    return hermite_basis(dim, std::move(kernel));
}

std::size_t rational_rank(std::size_t dim, std::vector<IntVector> rows) {
    for (const auto& r : rows) require_same_dim(r.size(), dim, "rational_rank");
    return detail::echelonize(rows, dim, false).size();
}

} // namespace seminorm
