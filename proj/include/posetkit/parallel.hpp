#pragma once

// Scan kernels shared by the checkers. Each kernel has a serial reference
// path and an OpenMP path; both return the first hit in row-major order, so
// reports do not depend on thread count or scheduling.

#include <array>
#include <cstddef>
#include <exception>
#include <limits>
#include <optional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace posetkit {

enum class Exec { serial, parallel };

namespace kernels {

inline constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

/// Smallest (i, j) in row-major order over [0,rows) x [0,cols) with hit(i, j).
template <class Hit>
std::optional<std::array<std::size_t, 2>> first_pair(std::size_t rows, std::size_t cols, Hit&& hit,
                                                     Exec exec = Exec::parallel) {
  if (rows == 0 || cols == 0) return std::nullopt;
  std::size_t best = npos;
  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < rows && best == npos; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (hit(i, j)) {
          best = i * cols + j;
          break;
        }
  } else {
    std::exception_ptr error;
    const auto n = static_cast<long long>(rows);
#pragma omp parallel for schedule(dynamic, 1) shared(best, error)
    for (long long si = 0; si < n; ++si) {
      const auto i = static_cast<std::size_t>(si);
      std::size_t current;
#pragma omp atomic read
      current = best;
      if (i * cols >= current) continue;
      try {
        for (std::size_t j = 0; j < cols; ++j) {
          if (hit(i, j)) {
            const std::size_t lin = i * cols + j;
#pragma omp critical(posetkit_first_hit)
            if (lin < best) best = lin;
            break;
          }
        }
      } catch (...) {
#pragma omp critical(posetkit_first_error)
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
  }
  if (best == npos) return std::nullopt;
  return std::array<std::size_t, 2>{best / cols, best % cols};
}

/// Smallest (i, j, k) in lexicographic order over [0,n)^3 with hit(i, j, k).
/// The outer two coordinates are flattened for the parallel split.
template <class Hit>
std::optional<std::array<std::size_t, 3>> first_triple(std::size_t n, Hit&& hit,
                                                       Exec exec = Exec::parallel) {
  if (n == 0) return std::nullopt;
  const std::size_t nn = n * n;
  std::size_t best = npos;
  if (exec == Exec::serial) {
    for (std::size_t ij = 0; ij < nn && best == npos; ++ij)
      for (std::size_t k = 0; k < n; ++k)
        if (hit(ij / n, ij % n, k)) {
          best = ij * n + k;
          break;
        }
  } else {
    std::exception_ptr error;
    const auto outer = static_cast<long long>(nn);
#pragma omp parallel for schedule(dynamic, 4) shared(best, error)
    for (long long s = 0; s < outer; ++s) {
      const auto ij = static_cast<std::size_t>(s);
      std::size_t current;
#pragma omp atomic read
      current = best;
      if (ij * n >= current) continue;
      try {
        for (std::size_t k = 0; k < n; ++k) {
          if (hit(ij / n, ij % n, k)) {
            const std::size_t lin = ij * n + k;
#pragma omp critical(posetkit_first_hit)
            if (lin < best) best = lin;
            break;
          }
        }
      } catch (...) {
#pragma omp critical(posetkit_first_error)
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
  }
  if (best == npos) return std::nullopt;
  return std::array<std::size_t, 3>{best / nn, (best / n) % n, best % n};
}

/// Smallest i in [0,count) with hit(i).
template <class Hit>
std::optional<std::size_t> first_index(std::size_t count, Hit&& hit, Exec exec = Exec::parallel) {
  auto found = first_pair(count, 1, [&](std::size_t i, std::size_t) { return hit(i); }, exec);
  if (!found) return std::nullopt;
  return (*found)[0];
}

/// Calls body(i) for every i in [0,count). Bodies must write disjoint outputs.
template <class Body>
void for_each_index(std::size_t count, Body&& body, Exec exec = Exec::parallel) {
  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::exception_ptr error;
  const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 8) shared(error)
  for (long long s = 0; s < n; ++s) {
    try {
      body(static_cast<std::size_t>(s));
    } catch (...) {
#pragma omp critical(posetkit_first_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace kernels
}  // namespace posetkit
