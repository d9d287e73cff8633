#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace richardson {

enum class ErrorCode {
  kInvalidKind,
  kUnsupportedKind,
  kInvalidColoring,
  kInvalidBlocks,
  kInvalidPartition,
  kUnsupportedFormula,
  kInvalidKernelProfile,
  kNotNilpotent,
  kNotInAlgebra,
  kSizeMismatch,
  kParseError,
  kInternal,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

enum class Family { A, B, C, D, G2, F4, E6, E7, E8 };

/// A simple complex Lie algebra type: family plus rank.
class LieKind {
 public:
  /// Throws kInvalidKind when the rank is out of range for the family
  /// (A: >=1, B/C: >=2, D: >=3, exceptional: fixed).
  LieKind(Family family, int rank);

  /// Parses "A3", "c4", "E7", "G2".
  static LieKind parse(std::string_view text);

  Family family() const noexcept { return family_; }
  int rank() const noexcept { return rank_; }
  bool is_classical() const noexcept;
  static bool is_classical_family(Family f) noexcept;
  bool is_orthogonal() const noexcept {
    return family_ == Family::B || family_ == Family::D;
  }
  bool is_symplectic() const noexcept { return family_ == Family::C; }

  /// Size N of the defining matrix realization: n+1, 2n+1, 2n, 2n.
  /// Throws kUnsupportedKind for exceptional families.
  int matrix_size() const;

  std::string name() const;

  friend bool operator==(const LieKind&, const LieKind&) = default;

 private:
  Family family_;
  int rank_;
};

std::optional<Family> parse_family(std::string_view text);
std::string family_name(Family f);
/// Smallest admissible rank for a classical family.
int min_rank(Family f);
/// Fixed rank of an exceptional family.
int exceptional_rank(Family f);

/// {0,1} marking on the simple roots (Bourbaki order). u_i = 1 crosses the
/// node: alpha_i is not a root of the Levi factor.
class Coloring {
 public:
  Coloring(LieKind kind, std::vector<int> u);

  const LieKind& kind() const noexcept { return kind_; }
  const std::vector<int>& u() const noexcept { return u_; }
  int operator[](std::size_t i) const { return u_.at(i); }

  std::string to_string() const;  // "(1,0,1)"

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  LieKind kind_;
  std::vector<int> u_;
};

/// Swaps a trailing (1,0) to (0,1) in type D, so that alpha_{n-1} is the Levi
/// root when exactly one of the last two nodes is crossed. Identity otherwise.
Coloring canonicalize(const Coloring& c);

/// Levi block sizes of a standard classical parabolic.
///
/// Type A stores the full block list. Types B/C/D store the half-palindrome
/// d_1..d_r and an optional central block d_{r+1}; the full block sequence is
/// (d_1,...,d_r,[central],d_r,...,d_1).
class BlockVector {
 public:
  /// Validates the sum and parity invariants; throws kInvalidBlocks.
  BlockVector(LieKind kind, std::vector<int> d,
              std::optional<int> central = std::nullopt);

  const LieKind& kind() const noexcept { return kind_; }
  const std::vector<int>& d() const noexcept { return d_; }
  const std::optional<int>& central() const noexcept { return central_; }
  int r() const noexcept { return static_cast<int>(d_.size()); }
  /// True when the Levi has an odd number of blocks (central block present).
  bool odd_blocks() const noexcept { return central_.has_value(); }
  int matrix_size() const { return kind_.matrix_size(); }

  /// Full palindromic expansion (type A: d itself).
  std::vector<int> full_blocks() const;
  /// Same parabolic type with d_1..d_r sorted ascending (type A unchanged).
  BlockVector sorted() const;

  std::string to_string() const;  // "d=(2,2) c=2"

  friend bool operator==(const BlockVector&, const BlockVector&) = default;

 private:
  LieKind kind_;
  std::vector<int> d_;
  std::optional<int> central_;
};

/// Weakly decreasing list of positive integers. The empty partition is valid.
class Partition {
 public:
  Partition() = default;
  /// Throws kInvalidPartition unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  /// Sorts descending and drops zero parts; negative parts still throw.
  static Partition from_unsorted(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int size() const noexcept;  // sum of parts
  bool empty() const noexcept { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_.at(i); }

  std::string to_string() const;  // "(3,3,1)"

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

Partition transpose(const Partition& p);
int n_odd(const Partition& p);
/// 1-based indices j < length(p) with p_j > p_{j+1} and p_j of parity
/// opposite to epsilon (epsilon = 1 for Sp, 0 for SO). Only drops between two
/// parts are counted; the final part dropping to zero is not.
std::vector<int> b_set(const Partition& p, int epsilon);
/// Multiset union of parts.
Partition partition_union(const Partition& a, const Partition& b);
/// True when a dominates b (partial sums of a are >= those of b). Both must
/// have the same size.
bool dominates(const Partition& a, const Partition& b);

/// Diagonal of 2H in the defining realization, where alpha_i(H) = u_i.
/// Input is canonicalized first. Classical kinds only.
std::vector<int> grading_diagonal(const Coloring& c);
BlockVector blocks_from_coloring(const Coloring& c);
Coloring coloring_from_blocks(const BlockVector& b);

/// All 2^rank colorings in lexicographic order.
std::vector<Coloring> all_colorings(const LieKind& kind);
/// All valid block vectors of a classical kind: type A compositions of N;
/// B/C/D half-palindromes with every admissible central block.
std::vector<BlockVector> all_block_vectors(const LieKind& kind);
/// Integer compositions of n (ordered lists of positive parts), lexicographic.
std::vector<std::vector<int>> compositions(int n);

bool is_unimodal(std::span<const int> seq);
bool is_palindromic(std::span<const int> seq);

std::vector<int> parse_int_list(std::string_view text);
std::string join_ints(std::span<const int> values, std::string_view sep = ",");

}  // namespace richardson
