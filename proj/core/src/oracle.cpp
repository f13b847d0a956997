/*
  This is oracle.cpp.
*/

#include "flagvar/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "flagvar/errors.hpp"
#include "flagvar/git_unstable.hpp"
#include "flagvar/root_datum.hpp"
#include "flagvar/weyl.hpp"

namespace flagvar {

namespace {

/* One-line notation of a type A element acting on coordinate lines:
   fold the reduced word over the identity, one adjacent swap each. */
std::vector<int> permutation_of(const RootDatum& d, const WeylElement& w) {
  std::vector<int> perm(static_cast<size_t>(d.rank) + 1);
  std::iota(perm.begin(), perm.end(), 1);
  for (int letter : reduced_word(d, w))
    std::swap(perm[static_cast<size_t>(letter) - 1], perm[static_cast<size_t>(letter)]);
  return perm;
}

std::uint64_t mix(std::uint64_t seed, std::uint64_t piece, std::uint64_t cell, std::uint64_t draw,
                  std::uint64_t attempt) {
  std::uint64_t x = seed;
  x = splitmix64(x ^ piece);
  x = splitmix64(x ^ cell);
  x = splitmix64(x ^ draw);
  x = splitmix64(x ^ attempt);
  return x;
}

bool interval_eq(const WeightInterval& a, const WeightInterval& b) {
  return a.lo == b.lo && a.hi == b.hi;
}

}  // namespace

OracleReport compare(int n, int i, long long lambda_n, const Rat& q_value, int samples,
                     std::uint64_t seed) {
  if (n < 2 || i < 1 || i >= n) throw std::invalid_argument("Gr(i,n) needs 0 < i < n, n >= 2");
  if (lambda_n <= 0) throw std::invalid_argument("lambda coefficient must be positive");
  if (samples <= 0) throw std::invalid_argument("need at least one sample per cell");

  const RootDatum d = build_root_datum(Family::A, n - 1);
  std::vector<int> levi;
  for (int j = 1; j < n; ++j)
    if (j != i) levi.push_back(j);
  const ParabolicQuotient quotient = parabolic_quotient(d, levi);
  const Linearization lin{{{i, lambda_n}}, character_from_restriction(d, {i}, {q_value})};

  OracleReport report;
  report.n = n;
  report.i = i;
  report.lambda_n = lambda_n;
  report.q_value = q_value;
  report.covered = w_hat_covers(d, {i});
  report.cells_checked = static_cast<int>(quotient.reps.size());
  report.samples_per_cell = samples;

  /* The decomposition under test: the production route when the axis
     is covered, otherwise the same member computation on whatever
     chamber elements exist. */
  std::vector<UnstablePiece> pieces;
  if (report.covered) {
    pieces = unstable_set(d, {i}, lin).pieces;
  } else {
    const Weight lambda = ample_weight(d, lin);
    for (const WeylElement& w_hat : compute_w_hat(d, {i})) {
      const Rat shift = apply(d, w_hat, lin.q).sr[static_cast<size_t>(i) - 1];
      std::vector<WeylElement> members;
      for (const WeylElement& w : quotient.reps)
        if (apply(d, w, lambda).sr[static_cast<size_t>(i) - 1] > shift) members.push_back(w);
      pieces.push_back({w_hat, bruhat_maxima(d, members, quotient.bruhat())});
    }
  }

  /* The twist on the weight interval of L_{varpi_i}. */
  const Rat twist = Rat(q_value) / rat_ll(lambda_n);

  /* Top weight of the embedding: beyond +-top every point is unstable
     in the direction a piece membership test cannot see. */
  Subset base(static_cast<size_t>(i));
  std::iota(base.begin(), base.end(), 1);
  const Rat top = subset_weight(n, i, base);

  for (size_t p = 0; p < pieces.size(); ++p) {
    const std::vector<int> sigma = permutation_of(d, pieces[p].w_hat);
    const bool dominant_side = pieces[p].w_hat.is_identity();
    for (size_t c = 0; c < quotient.reps.size(); ++c) {
      const WeylElement& w = quotient.reps[c];
      const std::vector<int> perm = permutation_of(d, w);
      Subset cell(perm.begin(), perm.begin() + i);
      std::sort(cell.begin(), cell.end());

      bool predicted = dominant_side ? twist > top : twist < -top;
      for (const WeylElement& u : pieces[p].max_cells)
        predicted = predicted || quotient.leq(w, u);

      const WeightInterval generic = generic_interval(n, i, perm);
      for (int s = 0; s < samples; ++s) {
        PluckerPoint point = sample_cell(n, i, perm, mix(seed, p, c, s, 0));
        for (int attempt = 1; attempt <= 5 && !interval_eq(pi_interval(point), generic);
             ++attempt) {
          ++report.resampled;
          point = sample_cell(n, i, perm, mix(seed, p, c, s, static_cast<std::uint64_t>(attempt)));
        }
        const bool observed = !semistable(translate(point, sigma), twist);
        if (observed != predicted)
          report.mismatches.push_back({static_cast<int>(p), cell, s, predicted});
      }
    }
  }
  return report;
}

}  // namespace flagvar
