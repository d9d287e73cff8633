#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace richardson {

/// Dense integer matrix with arbitrary-precision entries. Every matrix the
/// oracle builds is integral, so rationals are never needed for rank.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(int rows, int cols);
  static ExactMatrix identity(int n);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  mpz_class& operator()(int i, int j) { return data_[idx(i, j)]; }
  const mpz_class& operator()(int i, int j) const { return data_[idx(i, j)]; }

  ExactMatrix operator*(const ExactMatrix& o) const;
  ExactMatrix operator+(const ExactMatrix& o) const;
  ExactMatrix operator-(const ExactMatrix& o) const;
  ExactMatrix& operator+=(const ExactMatrix& o);
  ExactMatrix scaled(const mpz_class& s) const;
  ExactMatrix transposed() const;

  bool is_zero() const;
  /// Exact rank by fraction-free (Bareiss) elimination.
  int rank() const;

  std::string to_string() const;

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(j);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<mpz_class> data_;
};

/// Rank of a row-major rows x cols integer array. The array is destroyed.
int bareiss_rank(std::vector<mpz_class>& a, int rows, int cols);

}  // namespace richardson
