#pragma once

#include <optional>
#include <span>
#include <vector>

#include "richardson/core.hpp"

namespace richardson {

/// Odd entries among d_1..d_r, with 1-based positions.
struct OddEntrySet {
  std::vector<int> indices;
  std::vector<int> values;

  std::size_t size() const noexcept { return values.size(); }
  bool empty() const noexcept { return values.empty(); }
};

OddEntrySet odd_entries(std::span<const int> d);

/// Type A: transpose of the block sizes sorted descending.
Partition richardson_partition_A(const BlockVector& b);

/// Transpose of the Richardson partition for a nice B/C/D parabolic.
/// Throws kUnsupportedFormula when nice_check(b) is false.
Partition richardson_dual_partition_BCD(const BlockVector& b);

/// Jordan type of a Richardson element for a nice B/C/D parabolic.
/// Throws kUnsupportedFormula when nice_check(b) is false.
Partition richardson_partition_BCD(const BlockVector& b);

/// Dispatches on the family.
Partition richardson_partition(const BlockVector& b);

struct RankKernel {
  int rank = 0;
  int kernel_dim = 0;
};

/// Rank of a Richardson element and the dimension of its kernel for odd-block
/// parabolics, using min{d_i, d_{i+1}} on the sorted d.
///
/// Valid when the sorted d satisfies d_r <= central, or for orthogonal kinds
/// d_r = central + 1. Other inputs throw kUnsupportedFormula (for Sp with
/// d_r = central + 1 the count is wrong: d=(3), central=2 has three parts).
RankKernel richardson_rank_and_kernel(const BlockVector& b);
/// Raw evaluation of the rank formula without any domain check; d is sorted
/// internally.
RankKernel richardson_rank_and_kernel(std::span<const int> d, int central);

/// Jordan type from kdims = (dim ker X^0 = 0, dim ker X, ..., dim ker X^m = N).
/// Throws kInvalidKernelProfile on non-monotone or non-concave input.
Partition jordan_from_kernel_dims(std::span<const int> kdims);

}  // namespace richardson
