/*
  This is oracle.hpp: sampled semistability versus the symbolic loci.

  For a Grassmannian the unstable-locus machinery predicts, for every
  chamber element w-hat and every cell, whether a generic point of the
  translated cell is unstable at a given twist.  The Plucker oracle
  decides the same question by sampling exact points and reading their
  weight support, with no Weyl combinatorics involved.  compare() runs
  both on every (chamber element, cell) pair and reports disagreements;
  an empty mismatch list is the equivalence certificate.
*/

#ifndef FLAGVAR_ORACLE_HPP
#define FLAGVAR_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "flagvar/plucker.hpp"
#include "flagvar/rational.hpp"

namespace flagvar {

struct OracleMismatch {
  int piece = 0;    // which chamber element
  Subset cell;      // fixed-point subset of the sampled cell
  int sample = 0;   // which draw
  bool predicted_unstable = false;  // the symbolic side; the oracle saw the opposite
};

struct OracleReport {
  int n = 0;
  int i = 0;
  long long lambda_n = 1;
  Rat q_value;
  bool covered = true;      // chamber elements cover the whole axis
  int cells_checked = 0;    // number of cells (each sampled per chamber element)
  int samples_per_cell = 0;
  int resampled = 0;        // non-generic draws replaced
  std::vector<OracleMismatch> mismatches;
};

/* Samples every cell of Gr(i,n) under every chamber translate and
   compares observed semistability at the twist with the symbolic
   prediction.  Deterministic in seed.  Cells are predicted unstable by
   Bruhat membership in the computed maximal-cell antichains; sampled
   points are retried up to five times when a minor degenerates.  For
   inadmissible nodes the axis has only the dominant chamber element;
   covered is false then and only the existing piece is compared. */
OracleReport compare(int n, int i, long long lambda_n, const Rat& q_value, int samples,
                     std::uint64_t seed);

}  // namespace flagvar

#endif
