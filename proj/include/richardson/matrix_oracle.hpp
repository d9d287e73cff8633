#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "richardson/core.hpp"
#include "richardson/exact_matrix.hpp"

namespace richardson {

/// One basis vector of g, stored sparsely. Its entry at the lead position is 1
/// and no earlier basis vector (in row-major lead order) has a nonzero entry
/// there, so coordinates come out by subtraction in basis order.
struct BasisElement {
  struct Entry {
    int row;
    int col;
    int value;
  };
  int lead_row = 0;
  int lead_col = 0;
  std::vector<Entry> entries;
};

/// Defining matrix realization of a classical Lie algebra.
///
/// so_N preserves the form with 1 on the skew diagonal; sp_{2n} the one whose
/// skew diagonal reads 1 in the first n rows and -1 in the last n.
class MatrixRealization {
 public:
  explicit MatrixRealization(const LieKind& kind);

  const LieKind& kind() const noexcept { return kind_; }
  int size() const noexcept { return n_; }
  int dim() const noexcept { return static_cast<int>(basis_.size()); }
  const std::vector<BasisElement>& basis() const noexcept { return basis_; }
  /// Bilinear form. Zero for type A, where only the trace condition applies.
  const ExactMatrix& form() const noexcept { return form_; }

  ExactMatrix to_matrix(const BasisElement& e) const;
  /// True when X lies in g (exact check of the defining identities).
  bool contains(const ExactMatrix& x) const;
  /// Coordinates of X in the basis; throws kNotInAlgebra when X is not in g.
  std::vector<mpz_class> coordinates(const ExactMatrix& x) const;

 private:
  LieKind kind_;
  int n_;
  std::vector<BasisElement> basis_;
  ExactMatrix form_;
};

/// Block index (0-based) of each of the N rows for the full block sequence.
std::vector<int> block_index(const BlockVector& b);

/// dim m: basis vectors whose lead sits inside a diagonal block.
int levi_dim(const MatrixRealization& real, const BlockVector& b);
int levi_dim(const BlockVector& b);

/// Sum of c_k B_k over the nilradical basis, with c_k in [1, 10^6] drawn from
/// mt19937_64(seed) in basis order as 1 + (draw mod 10^6).
ExactMatrix generic_nilradical_element(const BlockVector& b, std::uint64_t seed);
/// Same construction restricted to the basis vectors of the given grade
/// (block of column minus block of row).
ExactMatrix generic_graded_element(const BlockVector& b, int grade, std::uint64_t seed);

/// Jordan type of a nilpotent matrix from exact ranks of its powers.
/// Throws kNotNilpotent when X^N != 0.
Partition jordan_partition(const ExactMatrix& x);

/// dim of {Y in g : [X, Y] = 0}, as the kernel of ad X on g.
int centralizer_dim_in_g(const MatrixRealization& real, const ExactMatrix& x);

struct OracleResult {
  Partition partition;
  bool certified = false;
  std::uint64_t seed = 0;       // seed of the sample that produced partition
  int centralizer_dim = 0;      // of that sample
  int levi_dim = 0;
  std::vector<std::string> warnings;
};

/// Runs seeds seed, seed+1, ..., seed+trials-1, keeps the dominance-maximal
/// Jordan type and certifies it with dim g^X = dim m. An uncertified sample is
/// retried with up to `trials` further seeds before giving up with a warning.
OracleResult oracle_richardson_partition(const BlockVector& b, int trials,
                                         std::uint64_t seed = 1);

/// Solves alpha_i(H) = u_i for the diagonal H in the realization and reads
/// the Levi blocks off the constant runs of its diagonal.
BlockVector levi_blocks_from_matrices(const Coloring& c);
/// Goes through coloring_from_blocks, so a type D vector whose innermost block
/// is 1 comes back with central block 2 (the same parabolic).
BlockVector levi_blocks_from_matrices(const BlockVector& b);

}  // namespace richardson
