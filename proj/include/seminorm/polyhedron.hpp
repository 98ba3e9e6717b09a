// Copyright 2026 The seminorm Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SEMINORM_POLYHEDRON_HPP
#define SEMINORM_POLYHEDRON_HPP

#include <optional>
#include <vector>

#include "seminorm/lattice.hpp"

namespace seminorm {

/// Inequality <normal, x> >= offset with a primitive nonnegative normal.
struct Facet {
    IntVector normal;
    std::int64_t offset = 0;

    bool satisfied_by(std::span<const std::int64_t> x) const { return dot(normal, x) >= offset; }
    bool tight_at(std::span<const std::int64_t> x) const { return dot(normal, x) == offset; }
    auto operator<=>(const Facet&) const = default;
};

/// Convex hull of a finite set of exponent vectors plus the nonnegative orthant.
class RationalPolyhedron {
public:
    std::size_t dim() const noexcept { return dim_; }
    const std::vector<Facet>& facets() const noexcept { return facets_; }
    const std::vector<ExponentVector>& generators() const noexcept { return generators_; }
    /// Generators that are vertices, lexicographically sorted.
    const std::vector<ExponentVector>& vertices() const noexcept { return vertices_; }

    bool contains(std::span<const std::int64_t> x) const;
    /// Indices of facets tight at x (x assumed to lie in the polyhedron).
    std::vector<std::size_t> tight_facets(std::span<const std::int64_t> x) const;

private:
    friend RationalPolyhedron facet_description(const std::vector<ExponentVector>& generators);
    std::size_t dim_ = 0;
    std::vector<Facet> facets_;
    std::vector<ExponentVector> generators_;
    std::vector<ExponentVector> vertices_;
};

/// A nonempty face, identified by the facets containing it.
struct Face {
    std::vector<std::size_t> active;
    /// Relative-interior point sample_num / sample_den.
    IntVector sample_num;
    std::int64_t sample_den = 1;
    /// Integer directions of the affine span.
    IntegerLattice directions;
    /// Primitive recession rays (unit vectors of the orthant).
    std::vector<IntVector> rays;
    std::vector<ExponentVector> vertices;
    std::size_t dimension = 0;

    bool is_bounded() const noexcept { return rays.empty(); }
    bool operator==(const Face& other) const { return active == other.active; }
};

/// Complete irredundant facet list of conv(generators) + orthant, sorted by normal.
RationalPolyhedron facet_description(const std::vector<ExponentVector>& generators);

/// Every nonempty face, ordered by decreasing dimension then active set.
std::vector<Face> enumerate_faces(const RationalPolyhedron& poly);

/// Face whose relative interior contains v, or nullopt if v lies outside.
std::optional<Face> carrier_face(const RationalPolyhedron& poly, const ExponentVector& v);

/// Face determined by the given set of facet indices (closed under containment).
std::optional<Face> face_from_active(const RationalPolyhedron& poly,
                                     const std::vector<std::size_t>& active);

/// Inward facet normals of a full-dimensional pointed cone pos(rays) in Z^dim,
/// computed by incremental double description. Normals are primitive and sorted.
std::vector<IntVector> cone_facets(std::size_t dim, const std::vector<IntVector>& rays);

/// H-description of pos(generators) for generators in N^dim (any dimension of span).
struct ConeDescription {
    std::size_t dim = 0;
    /// <eq, x> = 0 cuts out the linear span.
    std::vector<IntVector> equations;
    /// <f, x> >= 0, irredundant within the span.
    std::vector<IntVector> facets;

    bool contains(std::span<const std::int64_t> x) const;
    std::vector<std::size_t> tight_facets(std::span<const std::int64_t> x) const;
};

ConeDescription describe_cone(std::size_t dim, const std::vector<IntVector>& generators);

} // namespace seminorm

#endif
