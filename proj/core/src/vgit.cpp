/*
  This is vgit.cpp.
*/

#include "flagvar/vgit.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "flagvar/errors.hpp"

namespace flagvar {

namespace {

/* The single (node, coefficient) of a maximal-parabolic linearization. */
std::pair<int, long long> axis_node(const Linearization& lin) {
  if (lin.lambda_coeffs.size() != 1)
    throw std::invalid_argument("axis analysis needs a maximal parabolic (one lambda coefficient)");
  auto [i, n] = *lin.lambda_coeffs.begin();
  if (n <= 0) throw std::invalid_argument("lambda coefficient must be positive");
  return {i, n};
}

/* Wall positions of lambda = n varpi_i: n times each distinct
   fixed-point weight, strictly decreasing. */
QVec axis_walls(const Ladder& ladder, long long n) {
  QVec walls;
  for (const Rat& v : ladder.wall_values) walls.push_back(rat_ll(n) * v);
  return walls;
}

struct AxisSpot {
  AxisLocation loc = AxisLocation::in_chamber;
  int index = -1;  // wall or chamber index; -1 beyond the range
};

AxisSpot locate(const QVec& walls, const Rat& t) {
  if (t > walls.front() || t < walls.back()) return {AxisLocation::beyond_range, -1};
  const int v = static_cast<int>(walls.size());
  for (int r = 0; r < v; ++r)
    if (t == walls[r]) return {AxisLocation::on_wall, r};
  for (int r = 0; r + 1 < v; ++r)
    if (walls[r + 1] < t && t < walls[r]) return {AxisLocation::in_chamber, r};
  throw InternalContradiction("twist escaped the axis trichotomy");
}

/* Strata whose translated closures form the unstable locus.  Dominant
   side collects weights strictly above t; the antidominant side is the
   mirror, so moving t down trades dominant growth for antidominant
   shrinkage one stratum at a time. */
UnstablePair closed_form_pair(const AxisSpot& spot, const Rat& t, const QVec& walls) {
  const int v = static_cast<int>(walls.size());
  switch (spot.loc) {
    case AxisLocation::beyond_range:
      return t > walls.front() ? UnstablePair{-1, v - 1} : UnstablePair{v - 1, -1};
    case AxisLocation::on_wall:
      return {spot.index - 1, v - 2 - spot.index};
    case AxisLocation::in_chamber:
      return {spot.index, v - 2 - spot.index};
  }
  throw InternalContradiction("unhandled axis location");
}

int stratum_length(const Ladder& ladder, int idx) {
  return idx < 0 ? -1 : ladder.value_maxima[idx].front().len;
}

int pair_dimension(const Ladder& ladder, const UnstablePair& pair) {
  const int dim = std::max(stratum_length(ladder, pair.dominant),
                           stratum_length(ladder, pair.antidominant));
  if (dim < 0) throw InternalContradiction("unstable locus cannot be empty on the axis");
  return dim;
}

IntRange canonical(IntRange r) { return r.lo > r.hi ? IntRange{1, 0} : r; }

IntRange low_vanishing(int codim) { return canonical({1, codim - 2}); }

IntRange high_vanishing(int dim_x, int codim) {
  return canonical({dim_x - codim + 2, dim_x - 1});
}

/* The two cell-search pieces, keyed by which translate they carry. */
struct SplitPieces {
  const UnstablePiece* dominant = nullptr;
  const UnstablePiece* antidominant = nullptr;
};

SplitPieces split_pieces(const Ladder& ladder, const UnstableLocus& locus) {
  if (locus.pieces.size() != 2)
    throw InternalContradiction("axis decomposition must have exactly two chambers");
  SplitPieces out;
  for (const UnstablePiece& piece : locus.pieces) {
    if (piece.w_hat.is_identity())
      out.dominant = &piece;
    else
      out.antidominant = &piece;
  }
  if (out.dominant == nullptr || out.antidominant == nullptr ||
      !(out.antidominant->w_hat == ladder.quotient.longest_rep()))
    throw InternalContradiction("unexpected chamber index elements on the axis");
  return out;
}

/* Mandatory agreement of the stratum closed form with the cell search;
   both sides are bruhat_maxima output, so plain vector equality. */
void check_piece(const Ladder& ladder, int idx, const std::vector<WeylElement>& cells,
                 const char* side) {
  static const std::vector<WeylElement> empty;
  const std::vector<WeylElement>& want = idx < 0 ? empty : ladder.value_maxima[idx];
  if (!(cells == want))
    throw InternalContradiction(std::string("closed form and cell search disagree on the ") +
                                side + " piece");
}

/* Stratum index of a cell-search antichain: strata are distinct lower
   ideals, so their maximal antichains are distinct. */
int identify_stratum(const Ladder& ladder, const std::vector<WeylElement>& cells) {
  if (cells.empty()) return -1;
  for (int r = 0; r < static_cast<int>(ladder.value_maxima.size()); ++r)
    if (cells == ladder.value_maxima[r]) return r;
  throw InternalContradiction("wall-point unstable piece is not a value stratum");
}

Rat twist_of(const Ladder& ladder, const Linearization& lin) {
  auto [i, n] = axis_node(lin);
  if (i != ladder.node) throw std::invalid_argument("linearization node differs from the ladder");
  return lin.q.sr[static_cast<size_t>(i) - 1];
}

}  // namespace

Linearization axis_linearization(const RootDatum& d, int i, long long n, const Rat& t) {
  if (n <= 0) throw std::invalid_argument("lambda coefficient must be positive");
  return {{{i, n}}, character_from_restriction(d, {i}, {t})};
}

Rat q_max(const RootDatum& d, const Linearization& lin) {
  const int i = axis_node(lin).first;
  if (!is_admissible_max_parabolic(d, i))
    throw NotAdmissible("node is not in the admissible classification");
  return ample_weight(d, lin).sr[static_cast<size_t>(i) - 1];
}

ChamberReport chamber_decomposition(const RootDatum& d, int i, long long n) {
  return chamber_decomposition(build_ladder(d, i), n);
}

ChamberReport chamber_decomposition(const Ladder& ladder, long long n) {
  if (n <= 0) throw std::invalid_argument("lambda coefficient must be positive");
  const RootDatum& d = *ladder.quotient.datum;
  ChamberReport report;
  report.walls = axis_walls(ladder, n);
  report.max_twist = report.walls.front();
  report.dim_x = ladder.quotient.dim();
  const int v = static_cast<int>(report.walls.size());

  for (int r = 0; r + 1 < v; ++r) {
    ChamberRecord c;
    c.k = r;
    c.upper = report.walls[r];
    c.lower = report.walls[r + 1];
    c.pair = {r, v - 2 - r};
    c.dim_unstable = pair_dimension(ladder, c.pair);
    c.codim = report.dim_x - c.dim_unstable;
    c.vanishing_low = low_vanishing(c.codim);
    c.vanishing_high = high_vanishing(report.dim_x, c.codim);
    report.chambers.push_back(c);
  }

  /* Wall loci are read off the cell search, not the chamber pattern. */
  for (int r = 0; r < v; ++r) {
    const Linearization lin = axis_linearization(d, ladder.node, n, report.walls[r]);
    const UnstableLocus locus = unstable_set(d, {ladder.node}, lin);
    const SplitPieces pieces = split_pieces(ladder, locus);
    WallRecord w;
    w.r = r;
    w.value = report.walls[r];
    w.pair = {identify_stratum(ladder, pieces.dominant->max_cells),
              identify_stratum(ladder, pieces.antidominant->max_cells)};
    w.dim_unstable = pair_dimension(ladder, w.pair);
    w.codim = report.dim_x - w.dim_unstable;
    report.wall_reports.push_back(w);

    if (r - 1 >= 0) report.inverse_system.push_back({r - 1, r});
    if (r <= v - 2) report.inverse_system.push_back({r, r});
  }
  return report;
}

LocatedUnstable unstable_at(const RootDatum& d, int i, const Linearization& lin) {
  return unstable_at(build_ladder(d, i), lin);
}

LocatedUnstable unstable_at(const Ladder& ladder, const Linearization& lin) {
  const RootDatum& d = *ladder.quotient.datum;
  auto [i, n] = axis_node(lin);
  const Rat t = twist_of(ladder, lin);
  const QVec walls = axis_walls(ladder, n);

  LocatedUnstable out;
  const AxisSpot spot = locate(walls, t);
  out.location = spot.loc;
  out.index = spot.index;
  out.pair = closed_form_pair(spot, t, walls);
  out.locus = unstable_set(d, {i}, lin);

  const SplitPieces pieces = split_pieces(ladder, out.locus);
  check_piece(ladder, out.pair.dominant, pieces.dominant->max_cells, "dominant");
  check_piece(ladder, out.pair.antidominant, pieces.antidominant->max_cells, "antidominant");

  out.dim_unstable = pair_dimension(ladder, out.pair);
  out.codim = ladder.quotient.dim() - out.dim_unstable;
  return out;
}

bool is_geometric(const RootDatum& d, int i, const Linearization& lin) {
  return is_geometric(build_ladder(d, i), lin);
}

bool is_geometric(const Ladder& ladder, const Linearization& lin) {
  const long long n = axis_node(lin).second;
  const Rat t = twist_of(ladder, lin);
  return locate(axis_walls(ladder, n), t).loc == AxisLocation::in_chamber;
}

VanishingReport vanishing_report(const RootDatum& d, int i, const Linearization& lin,
                                 bool gorenstein) {
  return vanishing_report(build_ladder(d, i), lin, gorenstein);
}

VanishingReport vanishing_report(const Ladder& ladder, const Linearization& lin,
                                 bool gorenstein) {
  const long long n = axis_node(lin).second;
  const Rat t = twist_of(ladder, lin);
  const QVec walls = axis_walls(ladder, n);
  const AxisSpot spot = locate(walls, t);
  if (spot.loc != AxisLocation::in_chamber)
    throw NotGeometric("vanishing ranges need a geometric quotient (twist off every wall)");

  const int v = static_cast<int>(walls.size());
  const UnstablePair pair{spot.index, v - 2 - spot.index};
  VanishingReport report;
  report.codim = ladder.quotient.dim() - pair_dimension(ladder, pair);
  report.low = low_vanishing(report.codim);
  if (gorenstein) report.high = high_vanishing(ladder.quotient.dim(), report.codim);
  return report;
}

}  // namespace flagvar
