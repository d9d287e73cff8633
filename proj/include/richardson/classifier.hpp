#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "richardson/core.hpp"

namespace richardson {

enum class NormalClosure { Normal, NotNormal, OutOfScope };

std::string_view to_string(NormalClosure nc);

// All B/C/D checks below sort d_1..d_r ascending first, so they only depend on
// the multiset of Levi blocks. Type A keeps the given order.

/// Existence of a Richardson element in g_1.
bool nice_check(const BlockVector& b);

/// Nice and birational (G_x = P_x) together, from the block shape alone.
bool birational_via_blocks(const BlockVector& b);

/// G_x = P_x read off the Jordan type lam of a Richardson element: the number
/// of odd parts (and, for SO with an even number of blocks, the drop set).
/// Throws kSizeMismatch when lam does not partition N.
bool birational_via_partition(const LieKind& kind, const BlockVector& b,
                              const Partition& lam);

bool sl2_check(const BlockVector& b);

NormalClosure normal_closure_check(const BlockVector& b);

struct CoveringDegree {
  std::optional<int> degree;
  std::string diagnostic;  // empty unless the degree is withheld for a reason
};

/// Degree of the moment map onto the orbit closure, where it is known.
CoveringDegree covering_degree(const BlockVector& b);

struct ClassifyOptions {
  /// Run the matrix oracle for the partition when no closed form applies.
  bool use_oracle = false;
  /// Also run the oracle for nice inputs and compare with the closed form.
  bool cross_check = false;
  int trials = 3;
  std::uint64_t seed = 1;
};

struct ClassificationReport {
  LieKind kind{Family::A, 1};
  std::optional<Coloring> coloring;
  std::optional<BlockVector> blocks;
  bool nice = false;
  bool birational = false;
  bool sl2_given = false;
  /// Absent for exceptional kinds.
  std::optional<NormalClosure> normal_closure;
  std::optional<Partition> partition;
  std::string partition_source;  // "closed-form", "oracle" or empty
  std::optional<bool> oracle_certified;
  /// birational_via_partition on the reported partition, when it was run.
  std::optional<bool> birational_partition_route;
  std::optional<int> orbit_dim;
  std::optional<int> covering_degree;
  std::optional<std::string> bala_carter_label;
  std::vector<std::string> diagnostics;
};

ClassificationReport classify(const BlockVector& b, const ClassifyOptions& opts = {});
/// Classical colorings go through blocks_from_coloring; exceptional ones use
/// the encoded tables.
ClassificationReport classify(const Coloring& c, const ClassifyOptions& opts = {});

}  // namespace richardson
