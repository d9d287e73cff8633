#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "richardson/core.hpp"

namespace richardson {

/// Positive roots of an exceptional root system as coefficient vectors over
/// the simple roots (Bourbaki numbering).
struct RootSystem {
  LieKind kind{Family::G2, 2};
  /// cartan[i][j] = <alpha_j, alpha_i^vee>.
  std::vector<std::vector<int>> cartan;
  /// Sorted by height, then lexicographically.
  std::vector<std::vector<int>> positive_roots;

  int rank() const noexcept { return kind.rank(); }
  int dim() const noexcept {
    return rank() + 2 * static_cast<int>(positive_roots.size());
  }
  const std::vector<int>& highest_root() const { return positive_roots.back(); }
};

std::vector<std::vector<int>> cartan_matrix(Family f);

/// Closes the simple roots under root strings. Throws kUnsupportedKind for
/// classical kinds.
RootSystem build_root_system(const LieKind& kind);
/// Cached instance per exceptional family.
const RootSystem& root_system(Family f);

struct GradedDims {
  std::map<int, int> dims;

  int at(int grade) const {
    auto it = dims.find(grade);
    return it == dims.end() ? 0 : it->second;
  }
  int total() const;
};

/// dim g_i for the grading alpha_i(H) = u_i.
GradedDims grading_dims(const RootSystem& rs, const Coloring& c);
/// dim g - dim g_0.
int orbit_dim(const RootSystem& rs, const Coloring& c);

struct ExceptionalRecord {
  LieKind kind{Family::G2, 2};
  Coloring coloring{LieKind(Family::G2, 2), {0, 0}};
  bool in_appendix = false;
  bool nice = false;
  bool birational = false;
  bool sl2_given = false;
  std::optional<int> orbit_dim;
  std::optional<std::string> bala_carter_label;
  /// Row number in the published list, when listed.
  std::optional<int> appendix_row;
};

/// Throws kUnsupportedKind for classical kinds.
ExceptionalRecord exceptional_lookup(const Coloring& c);

struct AppendixRow {
  int row;
  std::vector<int> u;
};

/// Parabolics with a Richardson element in g_1 and G_x = P_x, as listed.
const std::vector<AppendixRow>& appendix_rows(Family f);

/// E7 parabolics with a Richardson element in g_1 but G_x != P_x.
const std::vector<std::vector<int>>& e7_exceptions();

/// Nice parabolics not given by an sl2-triple, with orbit data.
struct NonSl2Row {
  char tag;
  Family family;
  std::vector<int> u;
  int orbit_dim;
  std::string label;
};
const std::vector<NonSl2Row>& non_sl2_rows();

}  // namespace richardson
