// Copyright 2026 The seminorm Authors
// SPDX-License-Identifier: Apache-2.0

// Box-scan kernels. Every closure and witness search in the library reduces
// to "which lattice points of [0, upper] satisfy a pure predicate". The
// serial scan is the reference; the OpenMP scan must return the same list.

#ifndef SEMINORM_KERNELS_HPP
#define SEMINORM_KERNELS_HPP

#include <algorithm>
#include <exception>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "seminorm/lattice.hpp"

namespace seminorm::kernels {

enum class Execution { serial, parallel };

/// Number of lattice points in [0, upper_0] x ... x [0, upper_{n-1}].
inline std::size_t box_volume(const IntVector& upper) {
    std::size_t v = 1;
    for (auto u : upper) {
        if (u < 0) return 0;
        v *= static_cast<std::size_t>(u) + 1;
    }
    return v;
}

/// The index-th point in lexicographic order (last coordinate varies fastest).
inline IntVector box_point(const IntVector& upper, std::size_t index) {
    IntVector p(upper.size());
    for (std::size_t j = upper.size(); j-- > 0;) {
        const auto extent = static_cast<std::size_t>(upper[j]) + 1;
        p[j] = static_cast<std::int64_t>(index % extent);
        index /= extent;
    }
    return p;
}

template <class Pred>
std::vector<ExponentVector> scan_box_serial(const IntVector& upper, Pred&& pred) {
    std::vector<ExponentVector> out;
    const std::size_t total = box_volume(upper);
    for (std::size_t i = 0; i < total; ++i) {
        ExponentVector p(box_point(upper, i));
        if (pred(p)) out.push_back(std::move(p));
    }
    return out;
}

template <class Pred>
std::vector<ExponentVector> scan_box_parallel(const IntVector& upper, Pred&& pred) {
    const auto total = static_cast<std::int64_t>(box_volume(upper));
    std::vector<std::vector<ExponentVector>> per_thread;
    std::exception_ptr failure;
#pragma omp parallel
    {
#ifdef _OPENMP
        const int tid = omp_get_thread_num();
#pragma omp single
        per_thread.resize(static_cast<std::size_t>(omp_get_num_threads()));
#else
        const int tid = 0;
        per_thread.resize(1);
#endif
        std::vector<ExponentVector> local;
#pragma omp for schedule(dynamic, 64)
        for (std::int64_t i = 0; i < total; ++i) {
            try {
                ExponentVector p(box_point(upper, static_cast<std::size_t>(i)));
                if (pred(p)) local.push_back(std::move(p));
            } catch (...) {
#pragma omp critical(seminorm_scan_failure)
                if (!failure) failure = std::current_exception();
            }
        }
        per_thread[static_cast<std::size_t>(tid)] = std::move(local);
    }
    if (failure) std::rethrow_exception(failure);
    std::vector<ExponentVector> out;
    for (auto& chunk : per_thread) out.insert(out.end(), chunk.begin(), chunk.end());
    std::sort(out.begin(), out.end());
    return out;
}

template <class Pred>
std::vector<ExponentVector> scan_box(const IntVector& upper, Pred&& pred, Execution exec) {
    if (exec == Execution::serial) return scan_box_serial(upper, pred);
    return scan_box_parallel(upper, pred);
}

/// Subset of `points` satisfying pred, order preserved.
template <class T, class Pred>
std::vector<T> filter(const std::vector<T>& points, Pred&& pred, Execution exec) {
    std::vector<char> keep(points.size(), 0);
    if (exec == Execution::serial) {
        for (std::size_t i = 0; i < points.size(); ++i) keep[i] = pred(points[i]) ? 1 : 0;
    } else {
        std::exception_ptr failure;
        const auto total = static_cast<std::int64_t>(points.size());
#pragma omp parallel for schedule(dynamic, 1)
        for (std::int64_t i = 0; i < total; ++i) {
            try {
                keep[static_cast<std::size_t>(i)] = pred(points[static_cast<std::size_t>(i)]) ? 1 : 0;
            } catch (...) {
#pragma omp critical(seminorm_filter_failure)
                if (!failure) failure = std::current_exception();
            }
        }
        if (failure) std::rethrow_exception(failure);
    }
    std::vector<T> out;
    for (std::size_t i = 0; i < points.size(); ++i)
        if (keep[i]) out.push_back(points[i]);
    return out;
}

} // namespace seminorm::kernels

#endif
