#include "richardson/core.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

namespace richardson {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidKind: return "invalid-kind";
    case ErrorCode::kUnsupportedKind: return "unsupported-kind";
    case ErrorCode::kInvalidColoring: return "invalid-coloring";
    case ErrorCode::kInvalidBlocks: return "invalid-blocks";
    case ErrorCode::kInvalidPartition: return "invalid-partition";
    case ErrorCode::kUnsupportedFormula: return "unsupported-formula";
    case ErrorCode::kInvalidKernelProfile: return "invalid-kernel-profile";
    case ErrorCode::kNotNilpotent: return "not-nilpotent";
    case ErrorCode::kNotInAlgebra: return "not-in-algebra";
    case ErrorCode::kSizeMismatch: return "size-mismatch";
    case ErrorCode::kParseError: return "parse-error";
    case ErrorCode::kInternal: return "internal";
  }
  return "unknown";
}

// ---- LieKind ---------------------------------------------------------------

std::optional<Family> parse_family(std::string_view text) {
  std::string s;
  for (char ch : text) s.push_back(static_cast<char>(std::toupper(ch)));
  if (s == "A") return Family::A;
  if (s == "B") return Family::B;
  if (s == "C") return Family::C;
  if (s == "D") return Family::D;
  if (s == "G2") return Family::G2;
  if (s == "F4") return Family::F4;
  if (s == "E6") return Family::E6;
  if (s == "E7") return Family::E7;
  if (s == "E8") return Family::E8;
  return std::nullopt;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::G2: return "G2";
    case Family::F4: return "F4";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
  }
  return "?";
}

int min_rank(Family f) {
  switch (f) {
    case Family::A: return 1;
    case Family::B:
    case Family::C: return 2;
    case Family::D: return 3;
    default: return exceptional_rank(f);
  }
}

int exceptional_rank(Family f) {
  switch (f) {
    case Family::G2: return 2;
    case Family::F4: return 4;
    case Family::E6: return 6;
    case Family::E7: return 7;
    case Family::E8: return 8;
    default:
      throw Error(ErrorCode::kInvalidKind,
                  family_name(f) + " is not an exceptional family");
  }
}

LieKind::LieKind(Family family, int rank) : family_(family), rank_(rank) {
  bool classical = family == Family::A || family == Family::B ||
                   family == Family::C || family == Family::D;
  if (classical) {
    if (rank < min_rank(family))
      throw Error(ErrorCode::kInvalidKind,
                  "rank " + std::to_string(rank) + " too small for type " +
                      family_name(family) + " (minimum " +
                      std::to_string(min_rank(family)) + ")");
  } else if (rank != exceptional_rank(family)) {
    throw Error(ErrorCode::kInvalidKind,
                family_name(family) + " has rank " +
                    std::to_string(exceptional_rank(family)));
  }
}

LieKind LieKind::parse(std::string_view text) {
  if (auto f = parse_family(text); f && !LieKind::is_classical_family(*f))
    return LieKind(*f, exceptional_rank(*f));
  if (text.size() < 2)
    throw Error(ErrorCode::kInvalidKind, "cannot parse kind '" +
                                             std::string(text) + "'");
  auto f = parse_family(text.substr(0, 1));
  if (!f) throw Error(ErrorCode::kInvalidKind,
                      "unknown family in '" + std::string(text) + "'");
  int rank = 0;
  auto digits = text.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (ec != std::errc() || ptr != digits.data() + digits.size())
    throw Error(ErrorCode::kInvalidKind,
                "cannot parse rank in '" + std::string(text) + "'");
  return LieKind(*f, rank);
}

bool LieKind::is_classical_family(Family f) noexcept {
  return f == Family::A || f == Family::B || f == Family::C || f == Family::D;
}

bool LieKind::is_classical() const noexcept {
  return is_classical_family(family_);
}

int LieKind::matrix_size() const {
  switch (family_) {
    case Family::A: return rank_ + 1;
    case Family::B: return 2 * rank_ + 1;
    case Family::C:
    case Family::D: return 2 * rank_;
    default:
      throw Error(ErrorCode::kUnsupportedKind,
                  name() + " has no matrix realization here");
  }
}

std::string LieKind::name() const {
  if (is_classical()) return family_name(family_) + std::to_string(rank_);
  return family_name(family_);
}

// ---- Coloring --------------------------------------------------------------

Coloring::Coloring(LieKind kind, std::vector<int> u)
    : kind_(kind), u_(std::move(u)) {
  if (static_cast<int>(u_.size()) != kind_.rank())
    throw Error(ErrorCode::kInvalidColoring,
                "coloring has length " + std::to_string(u_.size()) + ", " +
                    kind_.name() + " needs " + std::to_string(kind_.rank()));
  for (int x : u_)
    if (x != 0 && x != 1)
      throw Error(ErrorCode::kInvalidColoring,
                  "coloring entries must be 0 or 1, got " + std::to_string(x));
}

std::string Coloring::to_string() const { return "(" + join_ints(u_) + ")"; }

Coloring canonicalize(const Coloring& c) {
  if (c.kind().family() != Family::D) return c;
  auto u = c.u();
  int n = static_cast<int>(u.size());
  if (u[n - 2] == 1 && u[n - 1] == 0) std::swap(u[n - 2], u[n - 1]);
  return Coloring(c.kind(), std::move(u));
}

// ---- BlockVector -----------------------------------------------------------

BlockVector::BlockVector(LieKind kind, std::vector<int> d,
                         std::optional<int> central)
    : kind_(kind), d_(std::move(d)), central_(central) {
  if (!kind_.is_classical())
    throw Error(ErrorCode::kUnsupportedKind,
                "block vectors need a classical kind, got " + kind_.name());
  for (int x : d_)
    if (x <= 0)
      throw Error(ErrorCode::kInvalidBlocks, "block sizes must be positive");
  const int n = kind_.matrix_size();
  const int sum = std::accumulate(d_.begin(), d_.end(), 0);
  const std::string where = kind_.name() + " " + to_string();
  if (kind_.family() == Family::A) {
    if (central_)
      throw Error(ErrorCode::kInvalidBlocks,
                  where + ": type A takes no central block");
    if (sum != n)
      throw Error(ErrorCode::kInvalidBlocks,
                  where + ": blocks sum to " + std::to_string(sum) +
                      ", expected N=" + std::to_string(n));
    return;
  }
  if (central_ && *central_ <= 0)
    throw Error(ErrorCode::kInvalidBlocks, where + ": central block must be positive");
  const int total = 2 * sum + central_.value_or(0);
  if (total != n)
    throw Error(ErrorCode::kInvalidBlocks,
                where + ": 2*sum(d)+central = " + std::to_string(total) +
                    ", expected N=" + std::to_string(n));
  if (kind_.family() == Family::B && !central_)
    throw Error(ErrorCode::kInvalidBlocks,
                where + ": type B always has a central block");
  if (kind_.family() != Family::B && central_ && *central_ % 2 != 0)
    throw Error(ErrorCode::kInvalidBlocks,
                where + ": central block must be even for types C and D");
}

std::vector<int> BlockVector::full_blocks() const {
  std::vector<int> out = d_;
  if (kind_.family() == Family::A) return out;
  if (central_) out.push_back(*central_);
  out.insert(out.end(), d_.rbegin(), d_.rend());
  return out;
}

BlockVector BlockVector::sorted() const {
  if (kind_.family() == Family::A) return *this;
  auto d = d_;
  std::sort(d.begin(), d.end());
  return BlockVector(kind_, std::move(d), central_);
}

std::string BlockVector::to_string() const {
  std::string s = "d=(" + join_ints(d_) + ")";
  if (central_) s += " c=" + std::to_string(*central_);
  return s;
}

// ---- Partition -------------------------------------------------------------

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw Error(ErrorCode::kInvalidPartition, "partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw Error(ErrorCode::kInvalidPartition,
                  "partition parts must be weakly decreasing");
  }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  for (int x : parts)
    if (x < 0)
      throw Error(ErrorCode::kInvalidPartition, "negative partition part");
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

int Partition::size() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::to_string() const { return "(" + join_ints(parts_) + ")"; }

Partition transpose(const Partition& p) {
  if (p.empty()) return p;
  std::vector<int> t(p[0], 0);
  for (int part : p.parts())
    for (int j = 0; j < part; ++j) ++t[j];
  return Partition(std::move(t));
}

int n_odd(const Partition& p) {
  return static_cast<int>(std::count_if(p.parts().begin(), p.parts().end(),
                                        [](int x) { return x % 2 != 0; }));
}

std::vector<int> b_set(const Partition& p, int epsilon) {
  std::vector<int> out;
  for (int j = 0; j + 1 < p.length(); ++j)
    if (p[j] > p[j + 1] && p[j] % 2 != epsilon % 2) out.push_back(j + 1);
  return out;
}

Partition partition_union(const Partition& a, const Partition& b) {
  auto parts = a.parts();
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  return Partition::from_unsorted(std::move(parts));
}

bool dominates(const Partition& a, const Partition& b) {
  if (a.size() != b.size())
    throw Error(ErrorCode::kSizeMismatch, "dominance needs equal sizes");
  int sa = 0, sb = 0;
  int len = std::max(a.length(), b.length());
  for (int i = 0; i < len; ++i) {
    sa += i < a.length() ? a[i] : 0;
    sb += i < b.length() ? b[i] : 0;
    if (sa < sb) return false;
  }
  return true;
}

// ---- grading and blocks ----------------------------------------------------

std::vector<int> grading_diagonal(const Coloring& input) {
  const LieKind& kind = input.kind();
  if (!kind.is_classical())
    throw Error(ErrorCode::kUnsupportedKind,
                "no matrix grading for " + kind.name());
  const Coloring c = canonicalize(input);
  const auto& u = c.u();
  const int n = kind.rank();

  if (kind.family() == Family::A) {
    // a_i - a_{i+1} = u_i, anchored at a_N = 0. A scalar shift does not move
    // the runs.
    std::vector<int> diag(n + 1, 0);
    for (int i = n - 1; i >= 0; --i) diag[i] = diag[i + 1] + 2 * u[i];
    return diag;
  }

  // a holds 2a_1..2a_n.
  std::vector<int> a(n, 0);
  switch (kind.family()) {
    case Family::B: a[n - 1] = 2 * u[n - 1]; break;
    case Family::C: a[n - 1] = u[n - 1]; break;
    case Family::D:
      a[n - 1] = u[n - 1] - u[n - 2];
      a[n - 2] = u[n - 1] + u[n - 2];
      break;
    default: break;
  }
  const int start = kind.family() == Family::D ? n - 3 : n - 2;
  for (int i = start; i >= 0; --i) a[i] = a[i + 1] + 2 * u[i];

  std::vector<int> diag(a.begin(), a.end());
  if (kind.family() == Family::B) diag.push_back(0);
  for (int i = n - 1; i >= 0; --i) diag.push_back(-a[i]);
  return diag;
}

namespace {

std::vector<int> constant_runs(const std::vector<int>& diag) {
  std::vector<int> runs;
  for (std::size_t i = 0; i < diag.size(); ++i) {
    if (i == 0 || diag[i] != diag[i - 1])
      runs.push_back(1);
    else
      ++runs.back();
  }
  return runs;
}

}  // namespace

BlockVector blocks_from_coloring(const Coloring& c) {
  const auto runs = constant_runs(grading_diagonal(c));
  const LieKind& kind = c.kind();
  if (kind.family() == Family::A) return BlockVector(kind, runs);
  const std::size_t m = runs.size();
  std::vector<int> d(runs.begin(), runs.begin() + m / 2);
  std::optional<int> central;
  if (m % 2 == 1) central = runs[m / 2];
  return BlockVector(kind, std::move(d), central);
}

Coloring coloring_from_blocks(const BlockVector& b) {
  const LieKind& kind = b.kind();
  const int n = kind.rank();
  std::vector<int> block_of;
  {
    const auto full = b.full_blocks();
    for (std::size_t k = 0; k < full.size(); ++k)
      block_of.insert(block_of.end(), full[k], static_cast<int>(k));
  }
  std::vector<int> u(n, 0);
  for (int i = 0; i < n - 1; ++i) u[i] = block_of[i] != block_of[i + 1];
  if (kind.family() == Family::D)
    u[n - 1] = block_of[n - 2] != block_of[n];
  else
    u[n - 1] = block_of[n - 1] != block_of[n];
  return Coloring(kind, std::move(u));
}

// ---- enumeration -----------------------------------------------------------

std::vector<Coloring> all_colorings(const LieKind& kind) {
  const int n = kind.rank();
  std::vector<Coloring> out;
  out.reserve(std::size_t{1} << n);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> u(n);
    for (int i = 0; i < n; ++i) u[i] = (mask >> (n - 1 - i)) & 1u;
    out.emplace_back(kind, std::move(u));
  }
  return out;
}

std::vector<std::vector<int>> compositions(int n) {
  if (n < 0) return {};
  if (n == 0) return {{}};
  std::vector<std::vector<int>> out;
  for (int first = 1; first <= n; ++first)
    for (auto& rest : compositions(n - first)) {
      rest.insert(rest.begin(), first);
      out.push_back(std::move(rest));
    }
  return out;
}

std::vector<BlockVector> all_block_vectors(const LieKind& kind) {
  const int n = kind.matrix_size();
  std::vector<BlockVector> out;
  if (kind.family() == Family::A) {
    for (auto& d : compositions(n)) out.emplace_back(kind, std::move(d));
    return out;
  }
  std::vector<std::optional<int>> centrals;
  if (kind.family() == Family::B) {
    for (int c = 1; c <= n; c += 2) centrals.emplace_back(c);
  } else {
    centrals.emplace_back(std::nullopt);
    for (int c = 2; c <= n; c += 2) centrals.emplace_back(c);
  }
  for (const auto& c : centrals)
    for (auto& d : compositions((n - c.value_or(0)) / 2))
      out.emplace_back(kind, std::move(d), c);
  return out;
}

// ---- small helpers ---------------------------------------------------------

bool is_unimodal(std::span<const int> seq) {
  std::size_t i = 1;
  while (i < seq.size() && seq[i] >= seq[i - 1]) ++i;
  while (i < seq.size() && seq[i] <= seq[i - 1]) ++i;
  return i >= seq.size();
}

bool is_palindromic(std::span<const int> seq) {
  return std::equal(seq.begin(), seq.begin() + seq.size() / 2, seq.rbegin());
}

std::vector<int> parse_int_list(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (ch != '(' && ch != ')' && ch != '[' && ch != ']' &&
        !std::isspace(static_cast<unsigned char>(ch)))
      s.push_back(ch);
  std::vector<int> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
      throw Error(ErrorCode::kParseError,
                  "cannot parse integer list '" + std::string(text) + "'");
    out.push_back(v);
  }
  if (s.back() == ',')
    throw Error(ErrorCode::kParseError,
                "trailing comma in '" + std::string(text) + "'");
  return out;
}

std::string join_ints(std::span<const int> values, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace richardson
