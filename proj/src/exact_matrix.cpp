#include "richardson/exact_matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace richardson {

ExactMatrix::ExactMatrix(int rows, int cols)
    : rows_(rows),
      cols_(cols),
      data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

ExactMatrix ExactMatrix::identity(int n) {
  ExactMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
  ExactMatrix out(rows_, o.cols_);
  mpz_class t;
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const mpz_class& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const mpz_class& b = o(k, j);
        if (sgn(b) == 0) continue;
        mpz_addmul(out(i, j).get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      }
    }
  return out;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
  ExactMatrix out = *this;
  out += o;
  return out;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix sum shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix difference shape mismatch");
  ExactMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= o.data_[i];
  return out;
}

ExactMatrix ExactMatrix::scaled(const mpz_class& s) const {
  ExactMatrix out = *this;
  for (auto& x : out.data_) x *= s;
  return out;
}

ExactMatrix ExactMatrix::transposed() const {
  ExactMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

bool ExactMatrix::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

int ExactMatrix::rank() const {
  auto copy = data_;
  return bareiss_rank(copy, rows_, cols_);
}

std::string ExactMatrix::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << '[';
    for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j).get_str();
    os << "]\n";
  }
  return os.str();
}

int bareiss_rank(std::vector<mpz_class>& a, int rows, int cols) {
  auto at = [&](int i, int j) -> mpz_class& {
    return a[static_cast<std::size_t>(i) * cols + j];
  };
  mpz_class prev = 1;
  mpz_class t;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && sgn(at(p, c)) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (int j = c; j < cols; ++j) std::swap(at(p, j), at(r, j));
    const mpz_class& piv = at(r, c);
    for (int i = r + 1; i < rows; ++i) {
      mpz_class& lead = at(i, c);
      const bool lead_zero = sgn(lead) == 0;
      for (int j = c + 1; j < cols; ++j) {
        mpz_class& x = at(i, j);
        // x = (piv * x - lead * a[r][j]) / prev, exact by Sylvester's identity
        mpz_mul(x.get_mpz_t(), x.get_mpz_t(), piv.get_mpz_t());
        if (!lead_zero)
          mpz_submul(x.get_mpz_t(), lead.get_mpz_t(), at(r, j).get_mpz_t());
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
      }
      lead = 0;
    }
    prev = piv;
    ++r;
  }
  return r;
}

}  // namespace richardson
