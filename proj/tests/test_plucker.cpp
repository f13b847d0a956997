/* This is test_plucker.cpp */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <vector>

#include "flagvar/oracle.hpp"
#include "flagvar/plucker.hpp"
#include "flagvar/rational.hpp"

using namespace flagvar;

namespace {

Rat coord(const PluckerPoint& x, const Subset& s) {
  auto it = x.coordinates.find(s);
  return it == x.coordinates.end() ? Rat(0) : it->second;
}

bool gale_leq(const Subset& a, const Subset& b) {
  for (size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

}  // namespace

TEST_CASE("subset weights and cell permutations") {
  CHECK(subset_weight(6, 3, {1, 2, 3}) == make_rat(3, 2));
  CHECK(subset_weight(6, 3, {4, 5, 6}) == make_rat(-3, 2));
  CHECK(subset_weight(6, 3, {1, 4, 5}) == make_rat(-1, 2));
  CHECK(subset_weight(4, 2, {2, 4}) == Rat(0));
  CHECK(subset_weight(4, 2, {1, 2}) == Rat(1));

  CHECK(cell_permutation(6, {2, 4, 5}) == std::vector<int>{2, 4, 5, 1, 3, 6});
  CHECK(opposite_permutation(6, 3) == std::vector<int>{4, 5, 6, 1, 2, 3});
  CHECK(is_cell_permutation({2, 4, 5, 1, 3, 6}, 3));
  CHECK_FALSE(is_cell_permutation({4, 2, 5, 1, 3, 6}, 3));
  CHECK_FALSE(is_cell_permutation({2, 4, 5, 3, 1, 6}, 3));
}

TEST_CASE("fixed points have one-point weight intervals") {
  const PluckerPoint top{6, 3, {{{1, 2, 3}, Rat(1)}}};
  WeightInterval iv = pi_interval(top);
  CHECK(iv.lo == make_rat(3, 2));
  CHECK(iv.hi == make_rat(3, 2));
  CHECK(semistable(top, make_rat(3, 2)));
  CHECK_FALSE(stable(top, make_rat(3, 2)));
  CHECK_FALSE(semistable(top, Rat(1)));

  const PluckerPoint bottom{6, 3, {{{4, 5, 6}, Rat(1)}}};
  iv = pi_interval(bottom);
  CHECK(iv.lo == make_rat(-3, 2));
  CHECK(iv.hi == make_rat(-3, 2));
}

TEST_CASE("samples are certified points of their cell") {
  const Subset t = {2, 4, 5};
  const PluckerPoint x = sample_cell(6, 3, cell_permutation(6, t), 5);
  CHECK(coord(x, t) == Rat(1));
  for (const auto& [s, v] : x.coordinates) {
    CHECK(v != Rat(0));
    CHECK(gale_leq(s, t));
  }
  WeightInterval iv = pi_interval(x);
  CHECK(iv.lo == subset_weight(6, 3, t));
  CHECK(iv.hi <= make_rat(3, 2));
}

TEST_CASE("a generic sample of the open cell fills the full interval") {
  const PluckerPoint x = sample_cell(6, 3, cell_permutation(6, {4, 5, 6}), 2);
  CHECK(x.coordinates.size() == 20);
  WeightInterval iv = pi_interval(x);
  WeightInterval want = generic_interval(6, 3, cell_permutation(6, {4, 5, 6}));
  CHECK(iv.lo == want.lo);
  CHECK(iv.hi == want.hi);
  CHECK(iv.lo == make_rat(-3, 2));
  CHECK(iv.hi == make_rat(3, 2));
}

TEST_CASE("samples satisfy the Plucker quadric on Gr(2,4)") {
  std::vector<Subset> cells = {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
  for (const Subset& t : cells) {
    for (std::uint64_t seed : {0, 1, 2}) {
      const PluckerPoint x = sample_cell(4, 2, cell_permutation(4, t), seed);
      const Rat quadric = Rat(coord(x, {1, 2}) * coord(x, {3, 4})) -
                          Rat(coord(x, {1, 3}) * coord(x, {2, 4})) +
                          Rat(coord(x, {1, 4}) * coord(x, {2, 3}));
      CHECK(quadric == Rat(0));
    }
  }
}

TEST_CASE("translation by the opposite permutation negates the interval") {
  const PluckerPoint x = sample_cell(6, 3, cell_permutation(6, {1, 3, 5}), 9);
  const std::vector<int> z = opposite_permutation(6, 3);
  const PluckerPoint y = translate(x, z);
  WeightInterval a = pi_interval(x);
  WeightInterval b = pi_interval(y);
  CHECK(b.lo == Rat(-a.hi));
  CHECK(b.hi == Rat(-a.lo));
  CHECK(y.coordinates.size() == x.coordinates.size());
  CHECK(translate(y, z).coordinates == x.coordinates);
}

TEST_CASE("sampling is deterministic in the seed") {
  const std::vector<int> perm = cell_permutation(6, {2, 3, 6});
  CHECK(sample_cell(6, 3, perm, 77).coordinates == sample_cell(6, 3, perm, 77).coordinates);

  OracleReport a = compare(6, 3, 1, Rat(0), 3, 42);
  OracleReport b = compare(6, 3, 1, Rat(0), 3, 42);
  CHECK(a.resampled == b.resampled);
  CHECK(a.mismatches.size() == b.mismatches.size());
}

TEST_CASE("sampled semistability matches the symbolic loci") {
  OracleReport r = compare(6, 3, 1, Rat(0), 5, 11);
  CHECK(r.covered);
  CHECK(r.cells_checked == 20);
  CHECK(r.mismatches.empty());

  r = compare(6, 3, 2, Rat(1), 5, 11);  // twist 1/2, a wall
  CHECK(r.covered);
  CHECK(r.mismatches.empty());

  for (int q = -2; q <= 2; ++q) {  // crosses both walls and both escape ends
    r = compare(4, 2, 1, Rat(q), 5, 7);
    CHECK(r.covered);
    CHECK(r.cells_checked == 6);
    CHECK(r.mismatches.empty());
  }
  r = compare(4, 2, 1, make_rat(1, 2), 5, 7);
  CHECK(r.mismatches.empty());
}

TEST_CASE("nodes off the admissible list compare the single piece") {
  OracleReport r = compare(3, 1, 1, make_rat(1, 3), 5, 3);
  CHECK_FALSE(r.covered);
  CHECK(r.cells_checked == 3);
  CHECK(r.mismatches.empty());

  r = compare(5, 2, 1, make_rat(1, 5), 4, 99);
  CHECK_FALSE(r.covered);
  CHECK(r.cells_checked == 10);
  CHECK(r.mismatches.empty());
}

TEST_CASE("wall points are semistable but not stable on both sides") {
  // Gr(2,4) at twist 0: the middle wall.  Any sample of the cell {2,4}
  // has weight-interval floor exactly 0, so it is semistable and not
  // stable there; its opposite translate shows the same from below.
  const PluckerPoint x = sample_cell(4, 2, cell_permutation(4, {2, 4}), 13);
  CHECK(pi_interval(x).lo == Rat(0));
  CHECK(semistable(x, Rat(0)));
  CHECK_FALSE(stable(x, Rat(0)));

  const PluckerPoint y = translate(x, opposite_permutation(4, 2));
  CHECK(pi_interval(y).hi == Rat(0));
  CHECK(semistable(y, Rat(0)));
  CHECK_FALSE(stable(y, Rat(0)));

  // Off the wall the same point is stable on one side, unstable on the other.
  const PluckerPoint g = sample_cell(4, 2, cell_permutation(4, {2, 4}), 13);
  CHECK(stable(g, make_rat(1, 2)));
  CHECK_FALSE(semistable(g, make_rat(-1, 2)));
}

TEST_CASE("sampling rejects bad arguments") {
  CHECK_THROWS_AS(sample_cell(6, 3, {1, 2, 3}, 0), std::invalid_argument);
  CHECK_THROWS_AS(sample_cell(6, 3, {2, 1, 3, 4, 5, 6}, 0), std::invalid_argument);
  CHECK_THROWS_AS(compare(4, 0, 1, Rat(0), 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(compare(4, 2, 0, Rat(0), 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(compare(4, 2, 1, Rat(0), 0, 0), std::invalid_argument);
}
