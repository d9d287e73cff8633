#include "richardson/classifier.hpp"

#include <algorithm>
#include <set>

#include "richardson/exceptional.hpp"
#include "richardson/matrix_oracle.hpp"
#include "richardson/partition_engine.hpp"

namespace richardson {

std::string_view to_string(NormalClosure nc) {
  switch (nc) {
    case NormalClosure::Normal: return "normal";
    case NormalClosure::NotNormal: return "not_normal";
    case NormalClosure::OutOfScope: return "out_of_scope";
  }
  return "?";
}

namespace {

struct Shape {
  Family family;
  std::vector<int> d;  // sorted ascending for B/C/D
  std::optional<int> c;

  int r() const { return static_cast<int>(d.size()); }
  int top() const { return d.empty() ? 0 : d.back(); }
  bool orthogonal() const { return family == Family::B || family == Family::D; }
};

Shape shape_of(const BlockVector& b) {
  const BlockVector s = b.sorted();
  return {s.kind().family(), s.d(), s.central()};
}

bool odd_entries_distinct(const std::vector<int>& d) {
  std::set<int> seen;
  for (int x : d)
    if (x % 2 != 0 && !seen.insert(x).second) return false;
  return true;
}

bool all_even(const std::vector<int>& d) {
  return std::all_of(d.begin(), d.end(), [](int x) { return x % 2 == 0; });
}

bool all_equal(std::span<const int> d) {
  return std::adjacent_find(d.begin(), d.end(), std::not_equal_to<>()) == d.end();
}

// d_r = c + 1 with d_{r-1} < d_r: the only shape with d_r > c that still has a
// Richardson element in g_1 (orthogonal, odd number of blocks).
bool so_odd_variant(const Shape& s) {
  return s.orthogonal() && s.c && s.r() > 0 && s.top() == *s.c + 1 &&
         (s.r() == 1 || s.d[s.r() - 2] < s.top());
}

}  // namespace

bool nice_check(const BlockVector& b) {
  if (b.kind().family() == Family::A) return is_unimodal(b.d());
  const Shape s = shape_of(b);
  if (s.family == Family::C) {
    if (!s.c) return true;
    return s.top() <= *s.c && odd_entries_distinct(s.d);
  }
  if (!s.c) return odd_entries_distinct(s.d);
  return s.top() <= *s.c || so_odd_variant(s);
}

bool birational_via_blocks(const BlockVector& b) {
  if (b.kind().family() == Family::A) return is_unimodal(b.d());
  const Shape s = shape_of(b);
  if (s.family == Family::C) {
    if (!s.c) return true;
    return s.top() <= *s.c && all_even(s.d);
  }
  if (s.c) return s.top() <= *s.c;
  const auto odd = odd_entries(s.d);
  if (odd.size() > 1) return false;
  if (odd.empty()) return true;
  const int i = odd.indices.front();
  return i < s.r() && odd.values.front() <= s.top() - 3;
}

bool birational_via_partition(const LieKind& kind, const BlockVector& b,
                              const Partition& lam) {
  if (!(b.kind() == kind))
    throw Error(ErrorCode::kSizeMismatch,
                "block vector is for " + b.kind().name() + ", not " + kind.name());
  if (lam.size() != kind.matrix_size())
    throw Error(ErrorCode::kSizeMismatch,
                "partition " + lam.to_string() + " has size " +
                    std::to_string(lam.size()) + ", expected N=" +
                    std::to_string(kind.matrix_size()));
  if (kind.family() == Family::A) return true;
  if (b.central()) return n_odd(lam) == *b.central();
  if (kind.family() == Family::C) return n_odd(lam) == 0;
  const bool drops = !b_set(lam, 0).empty();
  return drops ? n_odd(lam) == 2 : n_odd(lam) == 0;
}

bool sl2_check(const BlockVector& b) {
  if (b.kind().family() == Family::A)
    return is_unimodal(b.d()) && is_palindromic(b.d());
  if (b.kind().family() == Family::D && !b.central())
    return birational_via_blocks(b) && all_even(b.d());
  return birational_via_blocks(b);
}

NormalClosure normal_closure_check(const BlockVector& b) {
  if (b.kind().family() == Family::A) return NormalClosure::Normal;
  if (!birational_via_blocks(b)) return NormalClosure::OutOfScope;
  const Shape s = shape_of(b);
  const auto& d = s.d;
  const int r = s.r();
  auto verdict = [](bool normal) {
    return normal ? NormalClosure::Normal : NormalClosure::NotNormal;
  };
  if (s.family == Family::C) return verdict(!s.c || all_equal(d));
  if (s.c) return NormalClosure::Normal;

  // a) all equal, even
  if (all_even(d) && all_equal(d)) return NormalClosure::Normal;
  // b) d_1 = ... = d_s, d_{s+1} = d_s + 2 = ... = d_r, even, 1 <= s <= r-1
  if (all_even(d))
    for (int split = 1; split < r; ++split) {
      std::span<const int> lo(d.data(), split), hi(d.data() + split, r - split);
      if (all_equal(lo) && all_equal(hi) && hi.front() == lo.back() + 2)
        return NormalClosure::Normal;
    }
  // c) one odd entry d_i <= d_r - 3
  const auto odd = odd_entries(d);
  if (odd.size() == 1) {
    const int i = odd.indices.front();  // 1-based
    const int di = odd.values.front();
    if (di <= s.top() - 3) {
      std::span<const int> before(d.data(), i - 1), after(d.data() + i, r - i);
      if (i == 1 && all_equal(after)) return NormalClosure::Normal;
      if (i > 1 && all_equal(before) && di - before.back() == 1 && all_equal(after))
        return NormalClosure::Normal;
    }
  }
  return NormalClosure::NotNormal;
}

CoveringDegree covering_degree(const BlockVector& b) {
  if (b.kind().family() == Family::A) return {1, ""};
  if (!nice_check(b)) return {std::nullopt, "no Richardson element in g_1"};
  if (birational_via_blocks(b)) return {1, ""};
  const Shape s = shape_of(b);
  if (s.family == Family::C && s.c) {
    const int exponent = *s.c / 2 - static_cast<int>(odd_entries(s.d).size());
    if (exponent <= 0)
      return {std::nullopt,
              "2^(central/2 - #odd entries) = 1 but the map is not birational; "
              "degree withheld"};
    return {1 << exponent, ""};
  }
  if (so_odd_variant(s)) return {2, ""};
  return {std::nullopt, "covering degree not determined for this shape"};
}

ClassificationReport classify(const BlockVector& b, const ClassifyOptions& opts) {
  ClassificationReport rep;
  rep.kind = b.kind();
  rep.blocks = b;
  rep.coloring = coloring_from_blocks(b);
  const bool type_a = b.kind().family() == Family::A;

  rep.nice = nice_check(b);
  const bool blocks_route = birational_via_blocks(b);
  rep.sl2_given = sl2_check(b);
  rep.normal_closure = normal_closure_check(b);
  if (!type_a && !(b.sorted() == b))
    // The checks read the ascending rearrangement, a parabolic with the same
    // Levi. g_1 of this ordering can lack a Richardson element even then.
    rep.diagnostics.push_back("blocks are not ascending; nice, birational and sl2 refer to " +
                              b.sorted().to_string());

  const MatrixRealization real(b.kind());
  rep.orbit_dim = real.dim() - levi_dim(real, b);

  if (rep.nice) {
    rep.partition = richardson_partition(b);
    rep.partition_source = "closed-form";
  }
  const bool run_oracle = (!rep.nice && opts.use_oracle) || opts.cross_check;
  if (run_oracle) {
    const OracleResult res = oracle_richardson_partition(b, opts.trials, opts.seed);
    rep.oracle_certified = res.certified;
    for (const auto& w : res.warnings) rep.diagnostics.push_back("oracle: " + w);
    if (!rep.partition) {
      rep.partition = res.partition;
      rep.partition_source = "oracle";
    } else if (!(res.partition == *rep.partition)) {
      rep.diagnostics.push_back("closed form " + rep.partition->to_string() +
                                " differs from oracle " + res.partition.to_string());
    }
  }

  if (rep.partition && !type_a)
    rep.birational_partition_route = birational_via_partition(b.kind(), b, *rep.partition);

  if (type_a) {
    // G_x is connected in SL_N, so G_x = P_x for every parabolic.
    rep.birational = true;
  } else if (rep.nice) {
    rep.birational = blocks_route;
    if (rep.birational_partition_route && *rep.birational_partition_route != blocks_route)
      rep.diagnostics.push_back("block criterion and partition criterion disagree");
  } else if (rep.birational_partition_route && rep.partition_source == "oracle" &&
             rep.oracle_certified.value_or(false)) {
    rep.birational = *rep.birational_partition_route;
  } else {
    rep.birational = false;
    rep.diagnostics.push_back(
        "no Richardson element in g_1; birationality needs the oracle partition");
  }

  const auto cov = covering_degree(b);
  rep.covering_degree = cov.degree;
  if (!cov.diagnostic.empty() && rep.nice) rep.diagnostics.push_back(cov.diagnostic);
  if (!rep.covering_degree && rep.birational) rep.covering_degree = 1;
  return rep;
}

ClassificationReport classify(const Coloring& c, const ClassifyOptions& opts) {
  if (c.kind().is_classical()) {
    ClassificationReport rep = classify(blocks_from_coloring(c), opts);
    rep.coloring = c;
    return rep;
  }
  const ExceptionalRecord rec = exceptional_lookup(c);
  ClassificationReport rep;
  rep.kind = c.kind();
  rep.coloring = c;
  rep.nice = rec.nice;
  rep.birational = rec.birational;
  rep.sl2_given = rec.sl2_given;
  rep.orbit_dim = rec.orbit_dim;
  rep.bala_carter_label = rec.bala_carter_label;
  if (rec.birational) rep.covering_degree = 1;
  return rep;
}

}  // namespace richardson
