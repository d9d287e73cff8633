#include "richardson/partition_engine.hpp"

#include <algorithm>

#include "richardson/classifier.hpp"

namespace richardson {

namespace {

bool orthogonal(Family f) { return f == Family::B || f == Family::D; }

// {d_i, d_i} for every entry; odd entries become {d_i - 1, d_i + 1} when
// adjust_odd is set. Zero parts are dropped by from_unsorted.
std::vector<int> pairs(const std::vector<int>& d, bool adjust_odd) {
  std::vector<int> out;
  for (int x : d) {
    if (adjust_odd && x % 2 != 0) {
      out.push_back(x - 1);
      out.push_back(x + 1);
    } else {
      out.push_back(x);
      out.push_back(x);
    }
  }
  return out;
}

bool so_odd_variant(Family f, const std::vector<int>& d, std::optional<int> c) {
  return orthogonal(f) && c && !d.empty() && d.back() == *c + 1;
}

Partition dual_raw(Family f, std::vector<int> d, std::optional<int> c) {
  if (f == Family::C) {
    auto parts = pairs(d, c.has_value());
    if (c) parts.push_back(*c);
    return Partition::from_unsorted(std::move(parts));
  }
  if (!c) return Partition::from_unsorted(pairs(d, true));
  if (so_odd_variant(f, d, c)) {
    d.back() -= 1;
    auto parts = dual_raw(f, d, c).parts();
    parts.front() += 2;
    return Partition(std::move(parts));
  }
  auto parts = pairs(d, false);
  parts.push_back(*c);
  return Partition::from_unsorted(std::move(parts));
}

// (2r)^{d_1}, (2r-2)^{d_2-d_1}, ..., 2^{d_r-d_{r-1}}
Partition sp_even_formula(const std::vector<int>& d) {
  const int r = static_cast<int>(d.size());
  std::vector<int> parts;
  int prev = 0;
  for (int k = 0; k < r; ++k) {
    parts.insert(parts.end(), d[k] - prev, 2 * (r - k));
    prev = d[k];
  }
  return Partition(std::move(parts));
}

// Even number of blocks, orthogonal, exactly one odd d_i at 1-based position i:
// start from the exponents e_k = d_k - d_{k-1} of the parts 2(r-k+1), lower
// e_i and e_{i+1} by one and add two parts 2(r-i)+1.
Partition so_even_one_odd_formula(const std::vector<int>& d, int i) {
  const int r = static_cast<int>(d.size());
  std::vector<int> e(r);
  for (int k = 0; k < r; ++k) e[k] = d[k] - (k ? d[k - 1] : 0);
  e[i - 1] -= 1;
  if (i < r) e[i] -= 1;
  std::vector<int> parts;
  for (int k = 0; k < r; ++k) {
    if (e[k] < 0)
      throw Error(ErrorCode::kInternal, "negative exponent in one-odd formula");
    parts.insert(parts.end(), e[k], 2 * (r - k));
  }
  parts.insert(parts.end(), 2, 2 * (r - i) + 1);
  return Partition::from_unsorted(std::move(parts));
}

Partition partition_raw(Family f, std::vector<int> d, std::optional<int> c) {
  if (f == Family::C && !c) return sp_even_formula(d);
  if (so_odd_variant(f, d, c)) {
    d.back() -= 1;
    return partition_union(partition_raw(f, d, c), Partition({1, 1}));
  }
  Partition lambda = transpose(dual_raw(f, d, c));
  if (orthogonal(f) && !c) {
    auto odd = odd_entries(d);
    if (odd.size() == 1) {
      Partition check = so_even_one_odd_formula(d, odd.indices.front());
      if (!(check == lambda))
        throw Error(ErrorCode::kInternal,
                    "one-odd-entry formula " + check.to_string() +
                        " disagrees with dual route " + lambda.to_string());
    }
  }
  return lambda;
}

void require_nice(const BlockVector& b) {
  if (b.kind().family() == Family::A)
    throw Error(ErrorCode::kUnsupportedKind, "type A uses richardson_partition_A");
  if (!nice_check(b))
    throw Error(ErrorCode::kUnsupportedFormula,
                b.kind().name() + " " + b.to_string() +
                    " has no Richardson element in g_1; use the matrix oracle");
}

}  // namespace

OddEntrySet odd_entries(std::span<const int> d) {
  OddEntrySet out;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] % 2 != 0) {
      out.indices.push_back(static_cast<int>(i) + 1);
      out.values.push_back(d[i]);
    }
  return out;
}

Partition richardson_partition_A(const BlockVector& b) {
  if (b.kind().family() != Family::A)
    throw Error(ErrorCode::kUnsupportedKind, "expected type A");
  return transpose(Partition::from_unsorted(b.d()));
}

Partition richardson_dual_partition_BCD(const BlockVector& b) {
  require_nice(b);
  const BlockVector s = b.sorted();
  return dual_raw(s.kind().family(), s.d(), s.central());
}

Partition richardson_partition_BCD(const BlockVector& b) {
  require_nice(b);
  const BlockVector s = b.sorted();
  return partition_raw(s.kind().family(), s.d(), s.central());
}

Partition richardson_partition(const BlockVector& b) {
  if (b.kind().family() == Family::A) return richardson_partition_A(b);
  return richardson_partition_BCD(b);
}

RankKernel richardson_rank_and_kernel(std::span<const int> d_in, int central) {
  std::vector<int> d(d_in.begin(), d_in.end());
  std::sort(d.begin(), d.end());
  const int r = static_cast<int>(d.size());
  int rank = 0;
  for (int i = 0; i + 1 < r; ++i) rank += 2 * std::min(d[i], d[i + 1]);
  if (r > 0) rank += 2 * std::min(d[r - 1], central);
  int n = central;
  for (int x : d) n += 2 * x;
  return {rank, n - rank};
}

RankKernel richardson_rank_and_kernel(const BlockVector& b) {
  if (!b.central())
    throw Error(ErrorCode::kUnsupportedFormula,
                "rank formula needs an odd number of blocks");
  const BlockVector s = b.sorted();
  const int c = *s.central();
  const int top = s.d().empty() ? 0 : s.d().back();
  const bool ok = top <= c || (s.kind().is_orthogonal() && top == c + 1);
  if (!ok)
    throw Error(ErrorCode::kUnsupportedFormula,
                s.kind().name() + " " + s.to_string() +
                    " is outside the domain of the rank formula");
  return richardson_rank_and_kernel(s.d(), c);
}

Partition jordan_from_kernel_dims(std::span<const int> kdims) {
  if (kdims.empty() || kdims.front() != 0)
    throw Error(ErrorCode::kInvalidKernelProfile,
                "kernel profile must start with dim ker X^0 = 0");
  const int m = static_cast<int>(kdims.size()) - 1;
  const int n = kdims.back();
  for (int j = 1; j <= m; ++j) {
    if (kdims[j] < kdims[j - 1])
      throw Error(ErrorCode::kInvalidKernelProfile, "kernel profile decreases");
    if (j >= 2 && kdims[j] - kdims[j - 1] > kdims[j - 1] - kdims[j - 2])
      throw Error(ErrorCode::kInvalidKernelProfile, "kernel profile is not concave");
  }
  auto k = [&](int j) { return j <= m ? kdims[j] : n; };
  std::vector<int> parts;
  for (int j = m; j >= 1; --j) {
    int a = 2 * k(j) - k(j - 1) - k(j + 1);
    parts.insert(parts.end(), a, j);
  }
  return Partition(std::move(parts));
}

}  // namespace richardson
