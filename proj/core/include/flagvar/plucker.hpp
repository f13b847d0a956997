/*
  This is plucker.hpp: an exact sampling oracle on Grassmannians.

  Gr(i,n) sits in P(wedge^i k^n) by Plucker coordinates.  The rank-one
  subtorus attached to node i weights the coordinate e_S by the number
  of early indices in S, so a point is semistable for a twist exactly
  when the twist lies in the interval spanned by the weights of its
  support.  Everything here is elementary linear algebra over exact
  rationals on subsets and permutations; deliberately, nothing from the
  Weyl machinery is used, so agreement with the symbolic unstable loci
  is a genuine cross-check, not a tautology.

  Cells are indexed by permutations in one-line notation (images of
  1..n), increasing on {1..i} and on {i+1..n}; the cell is the orbit of
  the coordinate plane spanned by the first i images under the upper
  unipotent group.
*/

#ifndef FLAGVAR_PLUCKER_HPP
#define FLAGVAR_PLUCKER_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "flagvar/rational.hpp"

namespace flagvar {

/* Ascending 1-based index set, |S| = i. */
using Subset = std::vector<int>;

struct PluckerPoint {
  int n = 0;
  int i = 0;
  std::map<Subset, Rat> coordinates;  // only nonzero minors
};

/* Deterministic stream mixer; used to derive independent sampling
   seeds from (seed, cell, attempt) coordinates. */
std::uint64_t splitmix64(std::uint64_t x);

/* True when perm is a bijection of {1..n} increasing on the first i
   and on the last n-i positions: the minimal representatives. */
bool is_cell_permutation(const std::vector<int>& perm, int i);

/* The minimal representative sending {1..i} to the given subset. */
std::vector<int> cell_permutation(int n, const Subset& s);

/* The representative exchanging {1..i} and {n-i+1..n} blockwise: the
   longest one, whose translate turns cells into opposite cells. */
std::vector<int> opposite_permutation(int n, int i);

/* Subtorus weight of the coordinate e_S: |S meet {1..i}| - i^2/n.
   Normalized so the plane {1..i} weighs the pairing of the i-th
   fundamental weight with its coweight. */
Rat subset_weight(int n, int i, const Subset& s);

/* A random point of the cell: random integer upper unipotent matrix
   (strict entries uniform in [-9,9]) applied to the permuted plane,
   all i x i minors computed exactly.  Deterministic in seed.  The
   cell's own coordinate is checked to be 1 and Gale-maximal in the
   support (InternalContradiction otherwise). */
PluckerPoint sample_cell(int n, int i, const std::vector<int>& perm, std::uint64_t seed);

/* The point moved by a permutation of the ambient coordinates; minors
   pick up the sign of the induced reordering. */
PluckerPoint translate(const PluckerPoint& point, const std::vector<int>& perm);

/* Closed interval of support weights; support is never empty. */
struct WeightInterval {
  Rat lo;
  Rat hi;
};

WeightInterval pi_interval(const PluckerPoint& point);

/* The interval of a generic point of the cell: every subset dominated
   by the cell's own appears in the support, so the interval runs from
   the cell weight up to the top weight. */
WeightInterval generic_interval(int n, int i, const std::vector<int>& perm);

/* Semistable iff the twist lies in the interval; stable iff strictly. */
bool semistable(const PluckerPoint& point, const Rat& q_value);
bool stable(const PluckerPoint& point, const Rat& q_value);

}  // namespace flagvar

#endif
