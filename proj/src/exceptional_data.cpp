// Published tables for the exceptional types. Row numbers follow the source
// list; E7 rows 5, 20 and 25 are the three parabolics with G_x != P_x and are
// kept separately.

#include "richardson/exceptional.hpp"

namespace richardson {

const std::vector<AppendixRow>& appendix_rows(Family f) {
  // The G2 list prints row 2 as (1,0), numbering the long root first. With
  // alpha_1 short that grading has dim g_2 = 1 < dim g_3 = 2, so no x in g_1
  // can satisfy [g_2, x] = g_3; the intended parabolic is (0,1).
  static const std::vector<AppendixRow> g2 = {
      {1, {1, 1}},
      {2, {0, 1}},
      {3, {0, 0}},
  };
  static const std::vector<AppendixRow> f4 = {
      {1, {1, 1, 1, 1}}, {2, {1, 1, 0, 1}}, {3, {1, 1, 0, 0}},
      {4, {1, 0, 0, 1}}, {5, {0, 1, 0, 1}}, {6, {0, 1, 0, 0}},
      {7, {0, 0, 0, 1}}, {8, {0, 0, 0, 0}},
  };
  static const std::vector<AppendixRow> e6 = {
      {1, {1, 1, 1, 1, 1, 1}},  {2, {1, 1, 1, 0, 1, 1}},
      {3, {1, 1, 1, 0, 1, 0}},  {4, {1, 1, 0, 1, 0, 1}},
      {5, {1, 1, 0, 0, 1, 0}},  {6, {1, 1, 0, 0, 0, 1}},
      {7, {1, 1, 0, 0, 0, 0}},  {8, {1, 0, 1, 1, 0, 1}},
      {9, {1, 0, 1, 0, 0, 1}},  {10, {1, 0, 1, 0, 0, 0}},
      {11, {1, 0, 0, 1, 1, 1}}, {12, {1, 0, 0, 1, 0, 1}},
      {13, {1, 0, 0, 1, 0, 0}}, {14, {1, 0, 0, 0, 1, 1}},
      {15, {1, 0, 0, 0, 1, 0}}, {16, {1, 0, 0, 0, 0, 1}},
      {17, {1, 0, 0, 0, 0, 0}}, {18, {0, 1, 1, 0, 1, 1}},
      {19, {0, 1, 1, 0, 0, 1}}, {20, {0, 1, 0, 1, 0, 0}},
      {21, {0, 1, 0, 0, 0, 1}}, {22, {0, 1, 0, 0, 0, 0}},
      {23, {0, 0, 1, 0, 0, 1}}, {24, {0, 0, 1, 0, 0, 0}},
      {25, {0, 0, 0, 1, 0, 1}}, {26, {0, 0, 0, 1, 0, 0}},
      {27, {0, 0, 0, 0, 1, 1}}, {28, {0, 0, 0, 0, 1, 0}},
      {29, {0, 0, 0, 0, 0, 1}}, {30, {0, 0, 0, 0, 0, 0}},
  };
  static const std::vector<AppendixRow> e7 = {
      {1, {1, 1, 1, 1, 1, 1, 1}},  {2, {1, 1, 1, 0, 1, 1, 1}},
      {3, {1, 1, 1, 0, 1, 0, 1}},  {4, {1, 1, 0, 0, 1, 0, 1}},
      {6, {1, 0, 1, 1, 0, 1, 0}},  {7, {1, 0, 1, 0, 0, 1, 0}},
      {8, {1, 0, 1, 0, 0, 0, 0}},  {9, {1, 0, 0, 1, 0, 1, 1}},
      {10, {1, 0, 0, 1, 0, 1, 0}}, {11, {1, 0, 0, 1, 0, 0, 1}},
      {12, {1, 0, 0, 0, 1, 0, 0}}, {13, {1, 0, 0, 0, 0, 1, 1}},
      {14, {1, 0, 0, 0, 0, 1, 0}}, {15, {1, 0, 0, 0, 0, 0, 1}},
      {16, {1, 0, 0, 0, 0, 0, 0}}, {17, {0, 1, 1, 0, 0, 1, 1}},
      {18, {0, 1, 0, 0, 0, 0, 0}}, {19, {0, 0, 1, 0, 0, 1, 0}},
      {21, {0, 0, 1, 0, 0, 0, 0}}, {22, {0, 0, 0, 1, 0, 1, 0}},
      {23, {0, 0, 0, 1, 0, 0, 1}}, {24, {0, 0, 0, 1, 0, 0, 0}},
      {26, {0, 0, 0, 0, 1, 0, 0}}, {27, {0, 0, 0, 0, 0, 1, 0}},
      {28, {0, 0, 0, 0, 0, 0, 1}}, {29, {0, 0, 0, 0, 0, 0, 0}},
  };
  static const std::vector<AppendixRow> e8 = {
      {1, {1, 1, 1, 1, 1, 1, 1, 1}},  {2, {1, 1, 1, 0, 1, 1, 1, 1}},
      {3, {1, 1, 1, 0, 1, 0, 1, 1}},  {4, {1, 0, 0, 1, 0, 1, 1, 1}},
      {5, {1, 0, 0, 1, 0, 1, 0, 1}},  {6, {1, 0, 0, 1, 0, 0, 1, 1}},
      {7, {1, 0, 0, 1, 0, 0, 1, 0}},  {8, {1, 0, 0, 0, 1, 0, 0, 1}},
      {9, {1, 0, 0, 0, 0, 1, 1, 1}},  {10, {1, 0, 0, 0, 0, 1, 0, 1}},
      {11, {1, 0, 0, 0, 0, 1, 0, 0}}, {12, {1, 0, 0, 0, 0, 0, 1, 1}},
      {13, {1, 0, 0, 0, 0, 0, 1, 0}}, {14, {1, 0, 0, 0, 0, 0, 0, 1}},
      {15, {1, 0, 0, 0, 0, 0, 0, 0}}, {16, {0, 1, 0, 0, 0, 0, 0, 1}},
      {17, {0, 1, 0, 0, 0, 0, 0, 0}}, {18, {0, 0, 1, 0, 0, 0, 1, 0}},
      {19, {0, 0, 0, 1, 0, 0, 1, 1}}, {20, {0, 0, 0, 1, 0, 0, 1, 0}},
      {21, {0, 0, 0, 1, 0, 0, 0, 1}}, {22, {0, 0, 0, 0, 1, 0, 0, 1}},
      {23, {0, 0, 0, 0, 1, 0, 0, 0}}, {24, {0, 0, 0, 0, 0, 1, 0, 0}},
      {25, {0, 0, 0, 0, 0, 0, 1, 1}}, {26, {0, 0, 0, 0, 0, 0, 1, 0}},
      {27, {0, 0, 0, 0, 0, 0, 0, 1}}, {28, {0, 0, 0, 0, 0, 0, 0, 0}},
  };
  static const std::vector<AppendixRow> none;
  switch (f) {
    case Family::G2: return g2;
    case Family::F4: return f4;
    case Family::E6: return e6;
    case Family::E7: return e7;
    case Family::E8: return e8;
    default: return none;
  }
}

const std::vector<std::vector<int>>& e7_exceptions() {
  static const std::vector<std::vector<int>> rows = {
      {1, 1, 0, 0, 0, 0, 1},
      {0, 0, 1, 0, 0, 0, 1},
      {0, 0, 0, 0, 1, 0, 1},
  };
  return rows;
}

const std::vector<NonSl2Row>& non_sl2_rows() {
  static const std::vector<NonSl2Row> rows = {
      {'a', Family::E7, {1, 1, 0, 0, 1, 0, 1}, 118, "D_6"},
      {'b', Family::E7, {1, 1, 0, 0, 0, 0, 1}, 106, "D_5(a_1)"},
      {'c', Family::E7, {0, 1, 1, 0, 0, 1, 1}, 118, "D_6"},
      {'d', Family::E7, {0, 0, 1, 0, 0, 0, 1}, 104, "A_4+A_1"},
      {'e', Family::E7, {0, 0, 0, 0, 1, 0, 1}, 104, "A_4+A_1"},
      {'f', Family::E8, {0, 0, 1, 0, 0, 0, 1, 0}, 216, "D_6"},
  };
  return rows;
}

}  // namespace richardson
