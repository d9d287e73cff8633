#include "richardson/matrix_oracle.hpp"

#include <random>

#include "richardson/partition_engine.hpp"

namespace richardson {

namespace {

void require_classical(const LieKind& kind) {
  if (!kind.is_classical())
    throw Error(ErrorCode::kUnsupportedKind,
                "no matrix realization for " + kind.name());
}

}  // namespace

MatrixRealization::MatrixRealization(const LieKind& kind)
    : kind_(kind), n_(0) {
  require_classical(kind);
  n_ = kind.matrix_size();
  const int N = n_;
  form_ = ExactMatrix(N, N);
  auto prime = [N](int i) { return N - 1 - i; };

  switch (kind.family()) {
    case Family::A:
      for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
          if (a != b)
            basis_.push_back({a, b, {{a, b, 1}}});
          else if (a + 1 < N)
            basis_.push_back({a, a, {{a, a, 1}, {a + 1, a + 1, -1}}});
        }
      break;
    case Family::B:
    case Family::D:
      for (int i = 0; i < N; ++i) form_(i, prime(i)) = 1;
      for (int a = 0; a < N; ++a)
        for (int b = 0; a + b <= N - 2; ++b)
          basis_.push_back({a, b, {{a, b, 1}, {prime(b), prime(a), -1}}});
      break;
    case Family::C: {
      const int half = N / 2;
      auto s = [half](int i) { return i < half ? 1 : -1; };
      for (int i = 0; i < N; ++i) form_(i, prime(i)) = s(i);
      for (int a = 0; a < N; ++a)
        for (int b = 0; a + b <= N - 1; ++b) {
          if (a + b == N - 1)
            basis_.push_back({a, b, {{a, b, 1}}});
          else
            basis_.push_back(
                {a, b, {{a, b, 1}, {prime(b), prime(a), -s(prime(a)) * s(prime(b))}}});
        }
      break;
    }
    default:
      break;
  }
}

ExactMatrix MatrixRealization::to_matrix(const BasisElement& e) const {
  ExactMatrix m(n_, n_);
  for (const auto& en : e.entries) m(en.row, en.col) += en.value;
  return m;
}

bool MatrixRealization::contains(const ExactMatrix& x) const {
  if (x.rows() != n_ || x.cols() != n_) return false;
  if (kind_.family() == Family::A) {
    mpz_class tr = 0;
    for (int i = 0; i < n_; ++i) tr += x(i, i);
    return tr == 0;
  }
  return (x.transposed() * form_ + form_ * x).is_zero();
}

std::vector<mpz_class> MatrixRealization::coordinates(const ExactMatrix& x) const {
  if (x.rows() != n_ || x.cols() != n_)
    throw Error(ErrorCode::kNotInAlgebra, "matrix has the wrong size");
  ExactMatrix rest = x;
  std::vector<mpz_class> coords(basis_.size());
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const auto& e = basis_[k];
    const mpz_class c = rest(e.lead_row, e.lead_col);
    if (sgn(c) == 0) continue;
    coords[k] = c;
    for (const auto& en : e.entries) rest(en.row, en.col) -= c * en.value;
  }
  if (!rest.is_zero())
    throw Error(ErrorCode::kNotInAlgebra, "matrix is not in " + kind_.name());
  return coords;
}

std::vector<int> block_index(const BlockVector& b) {
  std::vector<int> out;
  const auto full = b.full_blocks();
  for (std::size_t k = 0; k < full.size(); ++k)
    out.insert(out.end(), full[k], static_cast<int>(k));
  return out;
}

int levi_dim(const MatrixRealization& real, const BlockVector& b) {
  const auto blk = block_index(b);
  int count = 0;
  for (const auto& e : real.basis())
    if (blk[e.lead_row] == blk[e.lead_col]) ++count;
  return count;
}

int levi_dim(const BlockVector& b) { return levi_dim(MatrixRealization(b.kind()), b); }

namespace {

// Adds 1 + (draw mod 10^6) times every basis vector accepted by keep.
template <class Keep>
ExactMatrix random_combination(const MatrixRealization& real, std::uint64_t seed,
                               Keep keep) {
  std::mt19937_64 rng(seed);
  ExactMatrix x(real.size(), real.size());
  for (const auto& e : real.basis()) {
    if (!keep(e)) continue;
    const long c = 1 + static_cast<long>(rng() % 1000000u);
    for (const auto& en : e.entries) x(en.row, en.col) += c * en.value;
  }
  return x;
}

}  // namespace

ExactMatrix generic_nilradical_element(const BlockVector& b, std::uint64_t seed) {
  const MatrixRealization real(b.kind());
  const auto blk = block_index(b);
  return random_combination(real, seed, [&](const BasisElement& e) {
    return blk[e.lead_row] < blk[e.lead_col];
  });
}

ExactMatrix generic_graded_element(const BlockVector& b, int grade, std::uint64_t seed) {
  const MatrixRealization real(b.kind());
  const auto blk = block_index(b);
  return random_combination(real, seed, [&](const BasisElement& e) {
    return blk[e.lead_col] - blk[e.lead_row] == grade;
  });
}

Partition jordan_partition(const ExactMatrix& x) {
  if (x.rows() != x.cols())
    throw Error(ErrorCode::kSizeMismatch, "jordan_partition needs a square matrix");
  const int n = x.rows();
  std::vector<int> kdims{0};
  if (n == 0) return Partition();
  ExactMatrix power = x;
  for (int j = 1; j <= n; ++j) {
    const int k = n - power.rank();
    kdims.push_back(k);
    if (k == n) return jordan_from_kernel_dims(kdims);
    power = power * x;
  }
  throw Error(ErrorCode::kNotNilpotent, "matrix is not nilpotent");
}

int centralizer_dim_in_g(const MatrixRealization& real, const ExactMatrix& x) {
  real.coordinates(x);  // membership check
  const int n = real.size();
  const int dim = real.dim();
  std::vector<mpz_class> m(static_cast<std::size_t>(dim) * dim);
  ExactMatrix bracket(n, n);
  for (int k = 0; k < dim; ++k) {
    const auto& e = real.basis()[k];
    bracket = ExactMatrix(n, n);
    // [X, E] = XE - EX with E sparse
    for (const auto& en : e.entries) {
      for (int i = 0; i < n; ++i)
        if (sgn(x(i, en.row)) != 0) bracket(i, en.col) += x(i, en.row) * en.value;
      for (int j = 0; j < n; ++j)
        if (sgn(x(en.col, j)) != 0) bracket(en.row, j) -= x(en.col, j) * en.value;
    }
    const auto coords = real.coordinates(bracket);
    for (int i = 0; i < dim; ++i) m[static_cast<std::size_t>(i) * dim + k] = coords[i];
  }
  return dim - bareiss_rank(m, dim, dim);
}

OracleResult oracle_richardson_partition(const BlockVector& b, int trials,
                                         std::uint64_t seed) {
  if (trials < 1) trials = 1;
  const MatrixRealization real(b.kind());
  OracleResult out;
  out.levi_dim = levi_dim(real, b);

  std::optional<ExactMatrix> best_x;
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(t);
    ExactMatrix x = generic_nilradical_element(b, s);
    Partition lam = jordan_partition(x);
    if (!best_x) {
      out.partition = lam;
      out.seed = s;
      best_x = std::move(x);
      continue;
    }
    if (lam == out.partition) continue;
    if (dominates(lam, out.partition)) {
      out.partition = lam;
      out.seed = s;
      best_x = std::move(x);
    } else if (!dominates(out.partition, lam)) {
      out.warnings.push_back("seed " + std::to_string(s) + " gave " + lam.to_string() +
                             ", incomparable with " + out.partition.to_string());
    }
  }

  out.centralizer_dim = centralizer_dim_in_g(real, *best_x);
  out.certified = out.centralizer_dim == out.levi_dim;
  for (int t = 0; !out.certified && t < trials; ++t) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(trials + t);
    ExactMatrix x = generic_nilradical_element(b, s);
    const int cd = centralizer_dim_in_g(real, x);
    out.warnings.push_back("sample " + std::to_string(out.seed) +
                           " not certified, retrying with seed " + std::to_string(s));
    if (cd == out.levi_dim) {
      out.partition = jordan_partition(x);
      out.seed = s;
      out.centralizer_dim = cd;
      out.certified = true;
    }
  }
  if (!out.certified)
    out.warnings.push_back("no certified Richardson sample for " + b.kind().name() +
                           " " + b.to_string());
  return out;
}

namespace {

// Gauss-Jordan over Q for a square nonsingular system.
std::vector<mpq_class> solve(std::vector<std::vector<mpq_class>> a,
                             std::vector<mpq_class> rhs) {
  const int n = static_cast<int>(rhs.size());
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && sgn(a[p][c]) == 0) ++p;
    if (p == n) throw Error(ErrorCode::kInternal, "singular grading system");
    std::swap(a[p], a[c]);
    std::swap(rhs[p], rhs[c]);
    for (int i = 0; i < n; ++i) {
      if (i == c || sgn(a[i][c]) == 0) continue;
      const mpq_class f = a[i][c] / a[c][c];
      for (int j = c; j < n; ++j) a[i][j] -= f * a[c][j];
      rhs[i] -= f * rhs[c];
    }
  }
  for (int i = 0; i < n; ++i) rhs[i] /= a[i][i];
  return rhs;
}

}  // namespace

BlockVector levi_blocks_from_matrices(const Coloring& input) {
  const LieKind& kind = input.kind();
  require_classical(kind);
  const Coloring c = canonicalize(input);
  const int rank = kind.rank();
  const int N = kind.matrix_size();
  const bool type_a = kind.family() == Family::A;
  const int unknowns = type_a ? N : rank;

  // Diagonal entry k of H as a linear form in the unknowns.
  auto diag_form = [&](int k) {
    std::vector<mpq_class> f(unknowns);
    if (type_a) {
      f[k] = 1;
    } else if (k < rank) {
      f[k] = 1;
    } else if (k >= N - rank) {
      f[N - 1 - k] = -1;
    }
    return f;
  };

  std::vector<std::vector<mpq_class>> a;
  std::vector<mpq_class> rhs;
  for (int i = 0; i < rank; ++i) {
    int row = i, col = i + 1;
    if (i == rank - 1 && kind.family() == Family::D) row = rank - 2, col = rank;
    auto lhs = diag_form(row);
    const auto sub = diag_form(col);
    for (int j = 0; j < unknowns; ++j) lhs[j] -= sub[j];
    a.push_back(std::move(lhs));
    rhs.emplace_back(c[i]);
  }
  if (type_a) {
    a.emplace_back(unknowns, mpq_class(1));
    rhs.emplace_back(0);
  }
  const auto h = solve(std::move(a), std::move(rhs));

  std::vector<mpq_class> diag(N);
  for (int k = 0; k < N; ++k) {
    const auto f = diag_form(k);
    for (int j = 0; j < unknowns; ++j) diag[k] += f[j] * h[j];
  }
  std::vector<int> runs;
  for (int k = 0; k < N; ++k) {
    if (k == 0 || diag[k] != diag[k - 1])
      runs.push_back(1);
    else
      ++runs.back();
  }
  if (type_a) return BlockVector(kind, runs);
  if (!is_palindromic(runs))
    throw Error(ErrorCode::kInternal, "grading runs are not palindromic");
  const std::size_t m = runs.size();
  std::vector<int> d(runs.begin(), runs.begin() + m / 2);
  std::optional<int> central;
  if (m % 2 == 1) central = runs[m / 2];
  return BlockVector(kind, std::move(d), central);
}

BlockVector levi_blocks_from_matrices(const BlockVector& b) {
  return levi_blocks_from_matrices(coloring_from_blocks(b));
}

}  // namespace richardson
