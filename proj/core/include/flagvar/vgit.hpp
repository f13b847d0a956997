/*
  This is vgit.hpp: variation of GIT quotients along the twisting axis.

  For an admissible maximal parabolic the twisting characters of the
  rank-one subtorus form a line, and the unstable locus is constant on
  the complement of finitely many rational walls.  This header computes
  the whole picture exactly: the wall positions, the chambers between
  them, the unstable locus (a pair of translated unions of Schubert
  varieties) for any twist, codimension and geometricity, the forced
  cohomology-vanishing ranges on the quotient, and the arrows of the
  inverse system relating neighbouring quotients.

  Two independent routes compute every unstable locus: a closed form
  read off the value filtration of the ladder, and the Hilbert-Mumford
  cell search of unstable_set.  They are compared on every query; a
  disagreement throws InternalContradiction rather than returning
  either answer.
*/

#ifndef FLAGVAR_VGIT_HPP
#define FLAGVAR_VGIT_HPP

#include <optional>
#include <vector>

#include "flagvar/git_unstable.hpp"
#include "flagvar/root_datum.hpp"
#include "flagvar/weyl.hpp"

namespace flagvar {

/* Convenience builder: lambda = n varpi_i twisted by the character
   with pairing(q, varpi-check_i) = t. */
Linearization axis_linearization(const RootDatum& d, int i, long long n, const Rat& t);

/* pairing(lambda, varpi-check_i): the twist range with semistable
   points is exactly [-q_max, q_max].  Requires a maximal parabolic
   (exactly one lambda coefficient) at an admissible node. */
Rat q_max(const RootDatum& d, const Linearization& lin);

/* Indices into Ladder.value_maxima for the two pieces of an unstable
   locus; -1 encodes an empty piece.  The dominant piece is the union
   of closure(X_w) over the antichain, the antidominant piece is the
   same translated by the longest representative. */
struct UnstablePair {
  int dominant = -1;
  int antidominant = -1;

  bool operator==(const UnstablePair& o) const {
    return dominant == o.dominant && antidominant == o.antidominant;
  }
};

/* Closed integer interval, empty when lo > hi. */
struct IntRange {
  int lo = 1;
  int hi = 0;

  bool empty() const { return lo > hi; }
  bool operator==(const IntRange& o) const { return lo == o.lo && hi == o.hi; }
};

/* One chamber (t_{k+1}, t_k) of the axis.  The quotient over a chamber
   is geometric; vanishing_high additionally requires the input flag
   variety to be Gorenstein, which is the caller's knowledge. */
struct ChamberRecord {
  int k = 0;            // 0 = chamber just below +q_max
  Rat upper;            // open interval (lower, upper)
  Rat lower;
  UnstablePair pair;    // (k, V-2-k) in stratum indices
  int dim_unstable = -1;
  int codim = 0;
  bool geometric = true;
  IntRange vanishing_low;   // H^j = 0 for j in [1, codim-2]
  IntRange vanishing_high;  // [dim_x-codim+2, dim_x-1], Gorenstein only
};

/* One wall t_r.  The unstable pair is derived from the Hilbert-Mumford
   computation at the wall, not asserted from the chamber pattern. */
struct WallRecord {
  int r = 0;
  Rat value;
  UnstablePair pair;
  int dim_unstable = -1;
  int codim = 0;
  bool geometric = false;
};

/* Quotient restriction morphism Y(C(chamber)) -> Y({wall}) induced by
   the inclusion of semistable sets; metadata only. */
struct InverseArrow {
  int chamber = 0;
  int wall = 0;
};

/* The full wall-and-chamber structure of one ample class.  Walls carry
   every distinct fixed-point weight of lambda, strictly decreasing and
   symmetric about zero; there are walls.size()-1 chambers, which is
   exactly k_max of the ladder whenever no letter ever moves the weight
   by more than one step (all worked minuscule-flavored cases). */
struct ChamberReport {
  Rat max_twist;         // = q_max(lambda)
  int dim_x = 0;         // length of the longest representative
  std::vector<Rat> walls;
  std::vector<ChamberRecord> chambers;
  std::vector<WallRecord> wall_reports;
  std::vector<InverseArrow> inverse_system;
};

/* Builds the report for lambda = n varpi_i.  NotAdmissible off the
   classification.  The ladder overload avoids recomputing it. */
ChamberReport chamber_decomposition(const RootDatum& d, int i, long long n);
ChamberReport chamber_decomposition(const Ladder& ladder, long long n);

/* Where a twist lands on the axis. */
enum class AxisLocation { beyond_range, on_wall, in_chamber };

/* Unstable locus of one linearization, located on the axis.  The
   closed-form pair and the cell search are both run and compared;
   locus holds the cell-search result (pieces indexed by w-hat).
   Beyond the range the antidominant (resp. dominant) index is the full
   stratum V-1 and the locus is all of X. */
struct LocatedUnstable {
  AxisLocation location = AxisLocation::in_chamber;
  int index = -1;  // wall or chamber index; -1 beyond the range
  UnstablePair pair;
  UnstableLocus locus;
  int dim_unstable = -1;
  int codim = 0;
};

LocatedUnstable unstable_at(const RootDatum& d, int i, const Linearization& lin);
LocatedUnstable unstable_at(const Ladder& ladder, const Linearization& lin);

/* True iff the twist avoids every wall and |t| < q_max; equivalently
   no fixed-point weight of any cell meets the twist, so semistable
   points are stable and the quotient is geometric. */
bool is_geometric(const RootDatum& d, int i, const Linearization& lin);
bool is_geometric(const Ladder& ladder, const Linearization& lin);

/* Forced vanishing of H^j(Y, M) on the geometric quotient Y, for every
   descended ample M: low always holds, high needs X Gorenstein.  Both
   ranges are empty when codim(X^us) < 2.  NotGeometric when the twist
   sits on a wall or outside the range. */
struct VanishingReport {
  int codim = 0;
  IntRange low;
  std::optional<IntRange> high;  // engaged only when gorenstein was set
};

VanishingReport vanishing_report(const RootDatum& d, int i, const Linearization& lin,
                                 bool gorenstein);
VanishingReport vanishing_report(const Ladder& ladder, const Linearization& lin,
                                 bool gorenstein);

}  // namespace flagvar

#endif
