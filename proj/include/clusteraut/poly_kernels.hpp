#pragma once

// Sparse product kernels. mul_serial is the reference; mul_parallel splits
// the left operand across OpenMP threads, accumulates into thread-local hash
// tables and merges. Both return canonical (sorted, zero-free) term vectors
// and must agree exactly.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "clusteraut/coeffpoly.hpp"

namespace clusteraut::kernels {

std::vector<Term> mul_serial(const std::vector<Term>& x, const std::vector<Term>& y,
                             std::uint32_t width, std::size_t max_terms);

std::vector<Term> mul_parallel(const std::vector<Term>& x, const std::vector<Term>& y,
                               std::uint32_t width, std::size_t max_terms);

// Product sizes (|x| * |y|) at or above this go to mul_parallel when more
// than one thread is available.
inline constexpr std::size_t kParallelThreshold = std::size_t{1} << 15;

int max_threads();

}  // namespace clusteraut::kernels
