/*
  This is git_unstable.hpp: torus instability on a flag variety.

  The center of the Levi of a parabolic P (given by its node set Delta_P)
  is a subtorus T-hat of the maximal torus.  For an ample line bundle
  L = L_lambda twisted by a fractional character q of T-hat, the unstable
  locus of the T-hat action on G/P is a union of translated Schubert
  varieties.  This header computes that union exactly:

    - t_hat_restriction: coordinates of a weight on the subtorus,
    - compute_w_hat: which Weyl chambers meet the subtorus (the index
      set of the decomposition),
    - unstable_set: the pieces {w-hat, Bruhat-maximal cells},
    - level / build_ladder: for a maximal parabolic, the filtrations of
      W^P by letter count and by fixed-point weight with their chains
      of maxima, which the wall-and-chamber analysis downstream
      consumes.

  Everything is exact rational arithmetic; no floats anywhere.
*/

#ifndef FLAGVAR_GIT_UNSTABLE_HPP
#define FLAGVAR_GIT_UNSTABLE_HPP

#include <map>
#include <vector>

#include "flagvar/root_datum.hpp"
#include "flagvar/weyl.hpp"

namespace flagvar {

/* An ample class lambda = sum n_j varpi_j over the parabolic's nodes,
   twisted by a rational character q of the subtorus.  q is stored as a
   weight whose fundamental-weight coordinates vanish off Delta_P; only
   its restriction to the subtorus ever matters. */
struct Linearization {
  std::map<int, long long> lambda_coeffs;  // node -> n_j, every n_j > 0
  Weight q;
};

/* Nodes of the parabolic, sorted: the keys of lambda_coeffs. */
std::vector<int> parabolic_nodes(const Linearization& lin);

/* lambda as a weight. */
Weight ample_weight(const RootDatum& d, const Linearization& lin);

/* The weight supported on the Delta_P fundamental weights whose
   restriction coordinates (pairings with varpi-check_i, i in Delta_P)
   are the given values.  Inverse of t_hat_restriction on that span. */
Weight character_from_restriction(const RootDatum& d, const std::vector<int>& delta_p,
                                  const QVec& values);

/* Coordinates of mu restricted to the subtorus: pairing(mu, varpi-check_i)
   for i in delta_p (ascending). */
QVec t_hat_restriction(const RootDatum& d, const std::vector<int>& delta_p, const Weight& mu);

/* xi must lie in the subtorus span (pairing(alpha_j, xi) = 0 off Delta_P,
   else NotInSubtorus).  Regular means no root that restricts nontrivially
   pairs to zero with xi. */
bool is_regular(const RootDatum& d, const std::vector<int>& delta_p, const Coweight& xi);

/* The minimal representatives w-hat whose chamber meets the subtorus:
   there is a dominant regular xi in the subtorus span with w-hat^{-1} xi
   again in the span.  Decided by exact cone feasibility; |Delta_P| <= 3
   (UnsupportedRank beyond). */
std::vector<WeylElement> compute_w_hat(const RootDatum& d, const std::vector<int>& delta_p);

/* True when the decomposition indexed by compute_w_hat covers every
   regular chamber of the subtorus (counted via the restricted root
   arrangement). */
bool w_hat_covers(const RootDatum& d, const std::vector<int>& delta_p);

/* W^P sends -varpi-check_i to varpi-check_i for some element; when it
   does, that element is the longest representative. */
bool is_admissible_max_parabolic(const RootDatum& d, int i);

struct AdmissibleEntry {
  Family family;
  int rank;
  int node;
  bool admissible;
};
std::vector<AdmissibleEntry> admissible_table(int max_rank);

/* One piece of the unstable locus: the cells w in max_cells generate
   w_hat^{-1} . closure(X_w); max_cells is a Bruhat antichain. */
struct UnstablePiece {
  WeylElement w_hat;
  std::vector<WeylElement> max_cells;
};

struct UnstableLocus {
  std::vector<UnstablePiece> pieces;

  /* Largest cell length over all pieces, -1 when every piece is empty. */
  int dimension() const;
};

/* The unstable locus of (lambda, q) on G/P.  Requires the chamber
   covering property (NotAdmissible otherwise).  Strict inequalities
   throughout, exactly as the Hilbert-Mumford criterion demands, so a
   q sitting on a wall automatically loses both walls' cells. */
UnstableLocus unstable_set(const RootDatum& d, const std::vector<int>& delta_p,
                           const Linearization& lin);

/* T-hat weight of the torus-fixed point indexed by w, for the bundle of
   the i-th fundamental weight: pairing(w varpi_i, varpi-check_i). */
Rat fixed_point_weight(const RootDatum& d, int i, const WeylElement& w);

/* The least k such that some reduced word of w uses the letter i at
   most k times.  Computed as min{k : w <= m_k} against the Demazure
   chain m_k = rep of (z * s_i)^{*k}, z the longest Levi element; the
   two notions agree because any word with k occurrences of i is a
   subword of (word(z), i)^k and conversely m_k carries such a word.
   quotient must be the maximal-parabolic quotient at node i and w one
   of its representatives. */
int level(const ParabolicQuotient& quotient, int i, const WeylElement& w);

/* Two nested filtrations of W^P for a maximal parabolic at node i.

   Letter-count chain: maxima[k] = m_k, the unique Bruhat maximum of
   {level <= k} for k = 0..k_max, with the Bruhat-minimal antichain of
   each level fiber and a recursive spelling words[k] = word(u_k) ++
   [i] ++ words[k-1], u_k in the Levi subgroup; hence words[k] is
   exactly the maximal suffix of words[k_max] containing k occurrences
   of i.

   Value filtration: wall_values lists every distinct fixed-point
   weight pairing(w varpi_i, varpi-check_i) in strictly decreasing
   order, and value_maxima[r] is the Bruhat-maximal antichain of the
   stratum {w : weight >= wall_values[r]}.  The strata are the unstable
   loci as the twisting character sweeps the axis, so downstream
   wall-and-chamber code reads this filtration, not the letter-count
   one.

   The two coincide (all antichains singletons, V = k_max + 1) for the
   minuscule-flavored nodes, covering every worked flagship case.  In
   general an i-letter can move the weight by more than one step, so
   the value filtration is strictly finer (first at nodes 2 of B3, C3),
   and a stratum can peak at several incomparable elements, making the
   unstable locus a union of Schubert varieties (first at node 2 of D4,
   where the three maxima form a triality orbit).  Each m_k is still a
   stratum maximum at its own weight; that and the antichain structure
   are verified during construction. */
struct Ladder {
  int node = 0;
  int k_max = 0;
  ParabolicQuotient quotient;
  std::vector<WeylElement> maxima;                     // k = 0..k_max
  std::vector<std::vector<WeylElement>> minima;        // fiber k at index k-1
  std::vector<std::vector<int>> words;                 // ladder word of maxima[k]
  QVec wall_values;                                    // r = 0..V-1, strictly decreasing
  std::vector<std::vector<WeylElement>> value_maxima;  // r = 0..V-1
};

/* Requires is_admissible_max_parabolic(d, i) (NotAdmissible otherwise).
   The letter-count maxima are cross-computed (Demazure powers of
   z * s_i, reassembly of the ladder words, position in the value
   filtration) and any disagreement throws InternalContradiction. */
Ladder build_ladder(const RootDatum& d, int i);

}  // namespace flagvar

#endif
