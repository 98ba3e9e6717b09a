// Copyright 2026 The seminorm Authors
// SPDX-License-Identifier: Apache-2.0

#include "seminorm/polyhedron.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include <boost/dynamic_bitset.hpp>

namespace seminorm {

namespace {

using Bits = boost::dynamic_bitset<>;

void make_primitive(IntVector& v) {
    const std::int64_t g = gcd_of(v);
    if (g > 1)
        for (auto& x : v) x /= g;
}

struct DualRay {
    IntVector y;
    Bits zeros;
};

} // namespace

std::vector<IntVector> cone_facets(std::size_t dim, const std::vector<IntVector>& input) {
    std::vector<IntVector> rays;
    for (const auto& r : input) {
        require_same_dim(r.size(), dim, "cone_facets");
        if (std::any_of(r.begin(), r.end(), [](auto x) { return x != 0; })) rays.push_back(r);
    }
    if (dim == 0) return {};

    std::vector<std::size_t> basis_idx;
    std::vector<IntVector> basis_rows;
    for (std::size_t i = 0; i < rays.size() && basis_idx.size() < dim; ++i) {
        basis_rows.push_back(rays[i]);
        if (rational_rank(dim, basis_rows) == basis_rows.size()) {
            basis_idx.push_back(i);
        } else {
            basis_rows.pop_back();
        }
    }
    if (basis_idx.size() < dim) throw std::invalid_argument("cone_facets: cone is not full-dimensional");

    const std::size_t m = rays.size();
    Bits processed(m);
    for (auto i : basis_idx) processed.set(i);

    std::vector<DualRay> dual;
    for (std::size_t j = 0; j < dim; ++j) {
        std::vector<IntVector> others;
        for (std::size_t i = 0; i < dim; ++i)
            if (i != j) others.push_back(basis_rows[i]);
        auto kernel = integer_kernel(dim, others);
        IntVector y = kernel.basis().at(0);
        if (dot(y, basis_rows[j]) < 0)
            for (auto& e : y) e = -e;
        Bits zeros(m);
        for (std::size_t i = 0; i < m; ++i)
            if (processed.test(i) && dot(y, rays[i]) == 0) zeros.set(i);
        dual.push_back({std::move(y), std::move(zeros)});
    }

    for (std::size_t k = 0; k < m; ++k) {
        if (processed.test(k)) continue;
        std::vector<std::int64_t> s(dual.size());
        bool any_negative = false;
        for (std::size_t i = 0; i < dual.size(); ++i) {
            s[i] = dot(dual[i].y, rays[k]);
            any_negative |= s[i] < 0;
        }
        std::vector<DualRay> next;
        for (std::size_t i = 0; i < dual.size(); ++i) {
            if (s[i] < 0) continue;
            DualRay kept = dual[i];
            if (s[i] == 0) kept.zeros.set(k);
            next.push_back(std::move(kept));
        }
        if (any_negative) {
            for (std::size_t p = 0; p < dual.size(); ++p) {
                if (s[p] <= 0) continue;
                for (std::size_t n = 0; n < dual.size(); ++n) {
                    if (s[n] >= 0) continue;
                    Bits common = dual[p].zeros & dual[n].zeros;
                    if (common.count() + 2 < dim) continue;
                    bool adjacent = true;
                    for (std::size_t w = 0; w < dual.size() && adjacent; ++w) {
                        if (w == p || w == n) continue;
                        if (common.is_subset_of(dual[w].zeros)) adjacent = false;
                    }
                    if (!adjacent) continue;
                    IntVector y(dim);
                    for (std::size_t c = 0; c < dim; ++c)
                        y[c] = checked_sub(checked_mul(s[p], dual[n].y[c]), checked_mul(s[n], dual[p].y[c]));
                    make_primitive(y);
                    common.set(k);
                    next.push_back({std::move(y), std::move(common)});
                }
            }
        }
        dual = std::move(next);
        processed.set(k);
    }

    std::vector<IntVector> normals;
    normals.reserve(dual.size());
    for (auto& d : dual) {
        make_primitive(d.y);
        normals.push_back(std::move(d.y));
    }
    std::sort(normals.begin(), normals.end());
    normals.erase(std::unique(normals.begin(), normals.end()), normals.end());
    return normals;
}

bool RationalPolyhedron::contains(std::span<const std::int64_t> x) const {
    require_same_dim(x.size(), dim_, "polyhedron membership");
    return std::all_of(facets_.begin(), facets_.end(), [&](const Facet& f) { return f.satisfied_by(x); });
}

std::vector<std::size_t> RationalPolyhedron::tight_facets(std::span<const std::int64_t> x) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < facets_.size(); ++i)
        if (facets_[i].tight_at(x)) out.push_back(i);
    return out;
}

RationalPolyhedron facet_description(const std::vector<ExponentVector>& generators) {
    if (generators.empty()) throw std::invalid_argument("facet_description: empty generator list");
    const std::size_t n = generators.front().dim();
    if (n == 0) throw std::invalid_argument("facet_description: ambient dimension must be positive");
    for (const auto& g : generators) require_same_dim(g.dim(), n, "facet_description");

    // Homogenize: (g, 1) for each generator, (e_j, 0) for the orthant.
    std::vector<IntVector> rays;
    for (const auto& g : generators) {
        IntVector r = g.coords();
        r.push_back(1);
        rays.push_back(std::move(r));
    }
    for (std::size_t j = 0; j < n; ++j) {
        IntVector r(n + 1, 0);
        r[j] = 1;
        rays.push_back(std::move(r));
    }

    RationalPolyhedron poly;
    poly.dim_ = n;
    poly.generators_ = generators;
    for (const auto& y : cone_facets(n + 1, rays)) {
        IntVector a(y.begin(), y.end() - 1);
        if (std::all_of(a.begin(), a.end(), [](auto x) { return x == 0; })) continue; // t >= 0
        make_primitive(a);
        std::int64_t offset = dot(a, generators.front().coords());
        for (const auto& g : generators) offset = std::min(offset, dot(a, g.coords()));
        poly.facets_.push_back({std::move(a), offset});
    }
    std::sort(poly.facets_.begin(), poly.facets_.end());

    std::set<ExponentVector> seen(generators.begin(), generators.end());
    for (const auto& g : seen) {
        std::vector<IntVector> normals;
        for (const auto& f : poly.facets_)
            if (f.tight_at(g.coords())) normals.push_back(f.normal);
        if (rational_rank(n, normals) == n) poly.vertices_.push_back(g);
    }
    return poly;
}

std::optional<Face> face_from_active(const RationalPolyhedron& poly,
                                     const std::vector<std::size_t>& active) {
    const std::size_t n = poly.dim();
    const auto& facets = poly.facets();
    std::vector<ExponentVector> verts;
    for (const auto& v : poly.vertices()) {
        bool on = std::all_of(active.begin(), active.end(),
                              [&](std::size_t i) { return facets.at(i).tight_at(v.coords()); });
        if (on) verts.push_back(v);
    }
    if (verts.empty()) return std::nullopt;
    std::vector<std::size_t> ray_dirs;
    for (std::size_t j = 0; j < n; ++j) {
        bool free = std::all_of(active.begin(), active.end(),
                                [&](std::size_t i) { return facets[i].normal[j] == 0; });
        if (free) ray_dirs.push_back(j);
    }

    Face face;
    std::vector<IntVector> normals;
    for (std::size_t i = 0; i < facets.size(); ++i) {
        const auto& f = facets[i];
        bool contains_face =
            std::all_of(verts.begin(), verts.end(), [&](const auto& v) { return f.tight_at(v.coords()); }) &&
            std::all_of(ray_dirs.begin(), ray_dirs.end(), [&](std::size_t j) { return f.normal[j] == 0; });
        if (contains_face) {
            face.active.push_back(i);
            normals.push_back(f.normal);
        }
    }
    const auto k = static_cast<std::int64_t>(verts.size());
    face.sample_num.assign(n, 0);
    for (const auto& v : verts)
        for (std::size_t j = 0; j < n; ++j) face.sample_num[j] = checked_add(face.sample_num[j], v[j]);
    for (auto j : ray_dirs) face.sample_num[j] = checked_add(face.sample_num[j], k);
    face.sample_den = k;
    for (auto j : ray_dirs) {
        IntVector e(n, 0);
        e[j] = 1;
        face.rays.push_back(std::move(e));
    }
    face.directions = integer_kernel(n, normals);
    face.dimension = face.directions.rank();
    face.vertices = std::move(verts);
    return face;
}

std::vector<Face> enumerate_faces(const RationalPolyhedron& poly) {
    std::map<std::vector<std::size_t>, Face> found;
    std::deque<std::vector<std::size_t>> queue;
    auto top = face_from_active(poly, {});
    if (!top) return {};
    queue.push_back(top->active);
    found.emplace(top->active, std::move(*top));
    while (!queue.empty()) {
        const auto active = queue.front();
        queue.pop_front();
        for (std::size_t f = 0; f < poly.facets().size(); ++f) {
            if (std::binary_search(active.begin(), active.end(), f)) continue;
            auto next = active;
            next.insert(std::upper_bound(next.begin(), next.end(), f), f);
            auto face = face_from_active(poly, next);
            if (!face || found.count(face->active)) continue;
            queue.push_back(face->active);
            found.emplace(face->active, std::move(*face));
        }
    }
    std::vector<Face> faces;
    for (auto& [key, face] : found) faces.push_back(std::move(face));
    std::stable_sort(faces.begin(), faces.end(),
                     [](const Face& a, const Face& b) { return a.dimension > b.dimension; });
    return faces;
}

std::optional<Face> carrier_face(const RationalPolyhedron& poly, const ExponentVector& v) {
    require_same_dim(v.dim(), poly.dim(), "carrier_face");
    if (!poly.contains(v.coords())) return std::nullopt;
    return face_from_active(poly, poly.tight_facets(v.coords()));
}

bool ConeDescription::contains(std::span<const std::int64_t> x) const {
    require_same_dim(x.size(), dim, "cone membership");
    for (const auto& e : equations)
        if (dot(e, x) != 0) return false;
    for (const auto& f : facets)
        if (dot(f, x) < 0) return false;
    return true;
}

std::vector<std::size_t> ConeDescription::tight_facets(std::span<const std::int64_t> x) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < facets.size(); ++i)
        if (dot(facets[i], x) == 0) out.push_back(i);
    return out;
}

ConeDescription describe_cone(std::size_t dim, const std::vector<IntVector>& generators) {
    std::vector<IntVector> gens;
    for (const auto& g : generators) {
        require_same_dim(g.size(), dim, "describe_cone");
        if (std::any_of(g.begin(), g.end(), [](auto x) { return x < 0; }))
            throw std::invalid_argument("describe_cone: generators must be nonnegative");
        if (std::any_of(g.begin(), g.end(), [](auto x) { return x != 0; })) gens.push_back(g);
    }
    ConeDescription cone;
    cone.dim = dim;
    cone.equations = integer_kernel(dim, gens).basis();
    const std::size_t k = rational_rank(dim, gens);
    if (k == 0) return cone;

    // Coordinates on which projection is injective on the span.
    std::vector<std::size_t> coords;
    std::vector<IntVector> columns;
    for (std::size_t j = 0; j < dim && coords.size() < k; ++j) {
        IntVector col(gens.size());
        for (std::size_t i = 0; i < gens.size(); ++i) col[i] = gens[i][j];
        columns.push_back(col);
        if (rational_rank(gens.size(), columns) == columns.size()) {
            coords.push_back(j);
        } else {
            columns.pop_back();
        }
    }
    std::vector<IntVector> projected;
    for (const auto& g : gens) {
        IntVector p(k);
        for (std::size_t i = 0; i < k; ++i) p[i] = g[coords[i]];
        projected.push_back(std::move(p));
    }
    for (const auto& a : cone_facets(k, projected)) {
        IntVector f(dim, 0);
        for (std::size_t i = 0; i < k; ++i) f[coords[i]] = a[i];
        cone.facets.push_back(std::move(f));
    }
    std::sort(cone.facets.begin(), cone.facets.end());
    return cone;
}

} // namespace seminorm
