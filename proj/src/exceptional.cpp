#include "richardson/exceptional.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace richardson {

std::vector<std::vector<int>> cartan_matrix(Family f) {
  switch (f) {
    case Family::G2:
      return {{2, -3}, {-1, 2}};
    case Family::F4:
      return {{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}};
    case Family::E6:
    case Family::E7:
    case Family::E8: {
      const int n = exceptional_rank(f);
      std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
      for (int i = 0; i < n; ++i) a[i][i] = 2;
      // chain 1-3-4-5-...-n with 2 hanging off 4 (1-based)
      std::vector<std::pair<int, int>> edges = {{1, 3}, {2, 4}};
      for (int i = 3; i < n; ++i) edges.emplace_back(i, i + 1);
      for (auto [i, j] : edges) a[i - 1][j - 1] = a[j - 1][i - 1] = -1;
      return a;
    }
    default:
      throw Error(ErrorCode::kUnsupportedKind,
                  family_name(f) + " is not an exceptional family");
  }
}

RootSystem build_root_system(const LieKind& kind) {
  if (kind.is_classical())
    throw Error(ErrorCode::kUnsupportedKind,
                "root systems are built for exceptional kinds only");
  RootSystem rs;
  rs.kind = kind;
  rs.cartan = cartan_matrix(kind.family());
  const int n = kind.rank();

  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> layer;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    layer.push_back(e);
    seen.insert(e);
  }
  while (!layer.empty()) {
    std::sort(layer.begin(), layer.end());
    rs.positive_roots.insert(rs.positive_roots.end(), layer.begin(), layer.end());
    std::vector<std::vector<int>> next;
    for (const auto& beta : layer) {
      for (int i = 0; i < n; ++i) {
        int pairing = 0;  // <beta, alpha_i^vee>
        for (int j = 0; j < n; ++j) pairing += beta[j] * rs.cartan[i][j];
        int p = 0;  // beta - k alpha_i is a root for k = 1..p
        for (auto down = beta; down[i] > 0;) {
          --down[i];
          if (!seen.contains(down)) break;
          ++p;
        }
        if (p - pairing <= 0) continue;
        auto up = beta;
        ++up[i];
        if (seen.insert(up).second) next.push_back(std::move(up));
      }
    }
    layer = std::move(next);
  }
  return rs;
}

const RootSystem& root_system(Family f) {
  static const RootSystem g2 = build_root_system(LieKind(Family::G2, 2));
  static const RootSystem f4 = build_root_system(LieKind(Family::F4, 4));
  static const RootSystem e6 = build_root_system(LieKind(Family::E6, 6));
  static const RootSystem e7 = build_root_system(LieKind(Family::E7, 7));
  static const RootSystem e8 = build_root_system(LieKind(Family::E8, 8));
  switch (f) {
    case Family::G2: return g2;
    case Family::F4: return f4;
    case Family::E6: return e6;
    case Family::E7: return e7;
    case Family::E8: return e8;
    default:
      throw Error(ErrorCode::kUnsupportedKind,
                  family_name(f) + " is not an exceptional family");
  }
}

int GradedDims::total() const {
  int s = 0;
  for (const auto& [grade, d] : dims) s += d;
  return s;
}

GradedDims grading_dims(const RootSystem& rs, const Coloring& c) {
  if (!(c.kind() == rs.kind))
    throw Error(ErrorCode::kInvalidColoring,
                "coloring for " + c.kind().name() + " used with " + rs.kind.name());
  GradedDims out;
  out.dims[0] = rs.rank();
  for (const auto& root : rs.positive_roots) {
    const int grade = std::inner_product(root.begin(), root.end(), c.u().begin(), 0);
    if (grade == 0) {
      out.dims[0] += 2;
    } else {
      out.dims[grade] += 1;
      out.dims[-grade] += 1;
    }
  }
  return out;
}

int orbit_dim(const RootSystem& rs, const Coloring& c) {
  return rs.dim() - grading_dims(rs, c).at(0);
}

ExceptionalRecord exceptional_lookup(const Coloring& c) {
  const LieKind& kind = c.kind();
  if (kind.is_classical())
    throw Error(ErrorCode::kUnsupportedKind,
                "exceptional_lookup needs an exceptional kind, got " + kind.name());
  ExceptionalRecord rec;
  rec.kind = kind;
  rec.coloring = c;
  for (const auto& row : appendix_rows(kind.family()))
    if (row.u == c.u()) {
      rec.in_appendix = true;
      rec.appendix_row = row.row;
    }
  bool e7_exception = false;
  if (kind.family() == Family::E7)
    for (const auto& u : e7_exceptions())
      if (u == c.u()) e7_exception = true;
  rec.nice = rec.in_appendix || e7_exception;
  rec.birational = rec.in_appendix;
  rec.sl2_given = rec.in_appendix;
  for (const auto& row : non_sl2_rows()) {
    if (row.family != kind.family() || row.u != c.u()) continue;
    rec.orbit_dim = row.orbit_dim;
    rec.bala_carter_label = row.label;
    rec.sl2_given = false;
  }
  if (!rec.orbit_dim) rec.orbit_dim = orbit_dim(root_system(kind.family()), c);
  return rec;
}

}  // namespace richardson
