#include <doctest.h>

#include <algorithm>

#include "../support/oracles.hpp"
#include "richardson/classifier.hpp"
#include "richardson/matrix_oracle.hpp"
#include "richardson/partition_engine.hpp"

using namespace richardson;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

BlockVector bv(Family f, int rank, std::vector<int> d, std::optional<int> c = std::nullopt) {
  return BlockVector(LieKind(f, rank), std::move(d), c);
}

}  // namespace

TEST_SUITE("classifier") {
  TEST_CASE("nice examples") {
    CHECK(nice_check(bv(Family::A, 3, {1, 2, 1})));
    CHECK_FALSE(nice_check(bv(Family::A, 4, {2, 1, 2})));
    CHECK_FALSE(nice_check(bv(Family::C, 3, {1, 1}, 2)));
    CHECK(nice_check(bv(Family::C, 4, {1, 3})));
    CHECK(nice_check(bv(Family::D, 4, {3}, 2)));  // d_r = central + 1
    CHECK_FALSE(nice_check(bv(Family::D, 5, {1, 1, 3})));
  }

  TEST_CASE("birational from blocks examples") {
    CHECK(birational_via_blocks(bv(Family::C, 3, {2}, 2)));
    CHECK(birational_via_blocks(bv(Family::D, 5, {1, 4})));
    CHECK_FALSE(birational_via_blocks(bv(Family::D, 7, {3, 4})));
    CHECK_FALSE(birational_via_blocks(bv(Family::C, 2, {1}, 2)));
    CHECK(birational_via_blocks(bv(Family::B, 3, {2}, 3)));
    CHECK_FALSE(birational_via_blocks(bv(Family::D, 4, {3}, 2)));
  }

  TEST_CASE("birational from the partition examples") {
    CHECK(birational_via_partition(LieKind(Family::B, 3), bv(Family::B, 3, {2}, 3),
                                   P({3, 3, 1})));
    CHECK_FALSE(birational_via_partition(LieKind(Family::C, 2), bv(Family::C, 2, {1}, 2),
                                         P({2, 2})));
    CHECK(birational_via_partition(LieKind(Family::D, 5), bv(Family::D, 5, {1, 4}),
                                   P({3, 3, 2, 2})));
    try {
      birational_via_partition(LieKind(Family::D, 5), bv(Family::D, 5, {1, 4}), P({3, 3}));
      FAIL("expected size mismatch");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kSizeMismatch);
    }
  }

  TEST_CASE("sl2 examples") {
    CHECK(sl2_check(bv(Family::A, 3, {1, 2, 1})));
    CHECK_FALSE(sl2_check(bv(Family::A, 5, {1, 2, 3})));
    CHECK(nice_check(bv(Family::A, 5, {1, 2, 3})));
    CHECK_FALSE(sl2_check(bv(Family::D, 5, {1, 4})));
    CHECK(sl2_check(bv(Family::D, 4, {2, 2})));
    CHECK(sl2_check(bv(Family::C, 3, {2}, 2)));
  }

  TEST_CASE("normal closure examples") {
    CHECK(normal_closure_check(bv(Family::A, 4, {2, 1, 2})) == NormalClosure::Normal);
    CHECK(normal_closure_check(bv(Family::C, 3, {2}, 2)) == NormalClosure::Normal);
    CHECK(normal_closure_check(bv(Family::C, 5, {2, 2}, 2)) == NormalClosure::Normal);
    CHECK(normal_closure_check(bv(Family::C, 8, {2, 4}, 4)) == NormalClosure::NotNormal);
    CHECK(normal_closure_check(bv(Family::C, 4, {2, 2})) == NormalClosure::Normal);
    CHECK(normal_closure_check(bv(Family::B, 3, {2}, 3)) == NormalClosure::Normal);
    CHECK(normal_closure_check(bv(Family::D, 4, {2, 2})) == NormalClosure::Normal);
    CHECK(normal_closure_check(bv(Family::D, 6, {2, 4})) == NormalClosure::Normal);
    CHECK(normal_closure_check(bv(Family::D, 8, {2, 6})) == NormalClosure::NotNormal);
    CHECK(normal_closure_check(bv(Family::D, 7, {3, 4})) == NormalClosure::OutOfScope);
    CHECK(normal_closure_check(bv(Family::C, 2, {1}, 2)) == NormalClosure::OutOfScope);
  }

  TEST_CASE("normal closure: plateau boundaries of the two-step case") {
    // s = 1: one short block, then a plateau two higher
    CHECK(normal_closure_check(bv(Family::D, 10, {2, 4, 4})) == NormalClosure::Normal);
    // s = r - 1: plateau, then one block two higher
    CHECK(normal_closure_check(bv(Family::D, 8, {2, 2, 4})) == NormalClosure::Normal);
    // two steps up is not of this shape
    CHECK(normal_closure_check(bv(Family::D, 12, {2, 4, 6})) == NormalClosure::NotNormal);
    // odd entries never fall under this case
    CHECK(normal_closure_check(bv(Family::D, 8, {3, 5})) == NormalClosure::OutOfScope);
  }

  TEST_CASE("normal closure: one odd entry") {
    CHECK(normal_closure_check(bv(Family::D, 5, {1, 4})) == NormalClosure::Normal);
    CHECK(normal_closure_check(bv(Family::D, 9, {1, 4, 4})) == NormalClosure::Normal);
    CHECK(normal_closure_check(bv(Family::D, 11, {1, 4, 6})) == NormalClosure::NotNormal);
    CHECK(normal_closure_check(bv(Family::D, 11, {2, 3, 6})) == NormalClosure::Normal);
    CHECK(normal_closure_check(bv(Family::D, 15, {2, 5, 8})) == NormalClosure::NotNormal);
  }

  TEST_CASE("covering degree examples") {
    CHECK(covering_degree(bv(Family::C, 3, {2}, 2)).degree == 1);
    CHECK(covering_degree(bv(Family::D, 4, {3}, 2)).degree == 2);
    CHECK(covering_degree(bv(Family::A, 4, {2, 1, 2})).degree == 1);
    const CoveringDegree sp4 = covering_degree(bv(Family::C, 2, {1}, 2));
    CHECK_FALSE(sp4.degree.has_value());
    CHECK_FALSE(sp4.diagnostic.empty());
    CHECK(covering_degree(bv(Family::C, 3, {1}, 4)).degree == 2);
    CHECK_FALSE(covering_degree(bv(Family::C, 3, {1, 1}, 2)).degree.has_value());
    CHECK_FALSE(covering_degree(bv(Family::D, 7, {3, 4})).degree.has_value());
  }

  TEST_CASE("classify examples") {
    const auto a = classify(bv(Family::A, 3, {1, 2, 1}));
    CHECK(a.nice);
    CHECK(a.birational);
    CHECK(a.sl2_given);
    CHECK(a.normal_closure == NormalClosure::Normal);
    CHECK(a.partition == P({3, 1}));

    const auto c = classify(bv(Family::C, 3, {2}, 2));
    CHECK(c.nice);
    CHECK(c.birational);
    CHECK(c.sl2_given);
    CHECK(c.normal_closure == NormalClosure::Normal);
    CHECK(c.partition == P({3, 3}));
    CHECK(c.partition_source == "closed-form");
    CHECK(c.covering_degree == 1);

    const auto d = classify(bv(Family::D, 7, {3, 4}));
    CHECK(d.nice);
    CHECK_FALSE(d.birational);
    CHECK_FALSE(d.sl2_given);
    CHECK(d.normal_closure == NormalClosure::OutOfScope);
    CHECK(d.partition == P({4, 4, 3, 3}));
    CHECK(d.birational_partition_route == false);
  }

  TEST_CASE("classify by coloring matches classify by blocks") {
    const Coloring col(LieKind(Family::C, 3), {0, 1, 0});
    const auto r = classify(col);
    REQUIRE(r.coloring.has_value());
    CHECK(r.blocks == bv(Family::C, 3, {2}, 2));
    CHECK(r.partition == P({3, 3}));
  }

  TEST_CASE("non-nice parabolics without the oracle report no partition") {
    const auto r = classify(bv(Family::C, 3, {1, 1}, 2));
    CHECK_FALSE(r.nice);
    CHECK_FALSE(r.partition.has_value());
    CHECK_FALSE(r.birational);
    CHECK_FALSE(r.diagnostics.empty());
  }

  TEST_CASE("type A is always birational") {
    for (int n = 1; n <= 7; ++n)
      for (const auto& b : all_block_vectors(LieKind(Family::A, n))) {
        const auto r = classify(b);
        REQUIRE(r.birational);
        REQUIRE(r.normal_closure == NormalClosure::Normal);
        REQUIRE(r.covering_degree == 1);
      }
  }

  TEST_CASE("blocks route agrees with the partition route, B/C/D with N <= 14") {
    int nice = 0, birational = 0;
    for (const auto& kind : oracle::classical_kinds(14, false))
      for (const auto& b : all_block_vectors(kind)) {
        if (!nice_check(b)) continue;
        ++nice;
        const Partition lam = richardson_partition(b);
        const bool blocks = birational_via_blocks(b);
        INFO(kind.name(), " ", b.to_string(), " lambda=", lam.to_string());
        REQUIRE(blocks == birational_via_partition(kind, b, lam));
        birational += blocks;
      }
    CHECK(birational == 314);
    CHECK(nice == 413);
  }

  TEST_CASE("sl2 implies birational and scope matches birationality, N <= 14") {
    for (const auto& kind : oracle::classical_kinds(14))
      for (const auto& b : all_block_vectors(kind)) {
        INFO(kind.name(), " ", b.to_string());
        const bool bir = birational_via_blocks(b);
        if (sl2_check(b)) REQUIRE(bir);
        if (bir) REQUIRE(nice_check(b));
        const NormalClosure nc = normal_closure_check(b);
        if (kind.family() == Family::A)
          REQUIRE(nc == NormalClosure::Normal);
        else
          REQUIRE((nc == NormalClosure::OutOfScope) == !bir);
      }
  }

  TEST_CASE("checks do not depend on the order of the blocks") {
    for (const auto& kind : oracle::classical_kinds(14, false))
      for (const auto& b : all_block_vectors(kind)) {
        std::vector<int> d = b.d();
        std::sort(d.begin(), d.end());
        const BlockVector base(kind, d, b.central());
        const bool nice = nice_check(base), bir = birational_via_blocks(base),
                   sl2 = sl2_check(base);
        const NormalClosure nc = normal_closure_check(base);
        while (std::next_permutation(d.begin(), d.end())) {
          const BlockVector p(kind, d, b.central());
          INFO(kind.name(), " ", p.to_string());
          REQUIRE(nice_check(p) == nice);
          REQUIRE(birational_via_blocks(p) == bir);
          REQUIRE(sl2_check(p) == sl2);
          REQUIRE(normal_closure_check(p) == nc);
        }
      }
  }

  TEST_CASE("orbit dimension agrees with the partition formula, N <= 14") {
    for (const auto& kind : oracle::classical_kinds(14))
      for (const auto& b : all_block_vectors(kind)) {
        if (!nice_check(b)) continue;
        const auto r = classify(b);
        REQUIRE(r.orbit_dim.has_value());
        REQUIRE(r.partition.has_value());
        INFO(kind.name(), " ", b.to_string());
        REQUIRE(*r.orbit_dim == oracle::orbit_dim_from_partition(kind.family(),
                                                                 r.partition->parts()));
        REQUIRE(*r.orbit_dim == oracle::dim_g(kind.family(), kind.rank()) -
                                    oracle::levi_dim_formula(kind.family(), b.d(),
                                                             b.central()));
      }
  }

  TEST_CASE("non-nice partitions from the oracle match induction, N <= 9") {
    ClassifyOptions opts;
    opts.use_oracle = true;
    int seen = 0;
    for (const auto& kind : oracle::classical_kinds(9))
      for (const auto& b : all_block_vectors(kind)) {
        if (nice_check(b)) continue;
        ++seen;
        const auto r = classify(b, opts);
        INFO(kind.name(), " ", b.to_string());
        REQUIRE(r.partition_source == "oracle");
        REQUIRE(r.oracle_certified == true);
        REQUIRE(r.partition->parts() ==
                oracle::induced_partition(kind.family(), b.d(), b.central()));
        if (kind.family() != Family::A)
          REQUIRE(r.birational ==
                  birational_via_partition(kind, b, *r.partition));
      }
    CHECK(seen > 20);
  }

  TEST_CASE("cross-check mode agrees with the closed form") {
    ClassifyOptions opts;
    opts.cross_check = true;
    const auto r = classify(bv(Family::D, 5, {1, 4}), opts);
    CHECK(r.oracle_certified == true);
    CHECK(r.partition == P({3, 3, 2, 2}));
    for (const auto& msg : r.diagnostics) CHECK(msg.find("disagree") == std::string::npos);
  }
}
