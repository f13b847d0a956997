/*
  This is weyl.hpp: Weyl group elements, Bruhat order, Demazure products,
  parabolic quotients.

  An element is canonically its integer action matrix on the weight
  lattice in fundamental-weight (pairing) coordinates; the inverse matrix
  rides along so descents on either side are column reads.  Equality and
  hashing go through the matrix.  Lengths are inversion counts and are
  computed on construction.

  Elements do not own their root datum; every operation takes the datum
  and checks the (family, rank) stamp.  The datum must outlive quotients
  built over it.
*/

#ifndef FLAGVAR_WEYL_HPP
#define FLAGVAR_WEYL_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "flagvar/root_datum.hpp"

namespace flagvar {

struct WeylElement {
  Family family;
  int rank = 0;
  IMat m;     // action on pairing coordinates
  IMat minv;  // action of the inverse element
  int len = 0;

  bool operator==(const WeylElement& o) const { return m == o.m; }
  bool is_identity() const { return m.is_identity(); }
};

struct WeylElementHash {
  size_t operator()(const WeylElement& w) const { return IMatHash{}(w.m); }
};

WeylElement identity_element(const RootDatum& d);
WeylElement simple_reflection(const RootDatum& d, int j);
WeylElement multiply(const RootDatum& d, const WeylElement& a, const WeylElement& b);
WeylElement inverse_element(const WeylElement& w);
WeylElement element_from_word(const RootDatum& d, const std::vector<int>& word);

Weight apply(const RootDatum& d, const WeylElement& w, const Weight& mu);
Coweight apply_co(const RootDatum& d, const WeylElement& w, const Coweight& xi);

/* Sign of w(alpha_j): -1 iff j is a right descent (l(w s_j) < l(w)). */
int simple_image_sign(const RootDatum& d, const WeylElement& w, int j);
bool is_right_descent(const RootDatum& d, const WeylElement& w, int j);
bool is_left_descent(const RootDatum& d, const WeylElement& w, int j);

/* Canonical reduced word: repeatedly strip the smallest right descent,
   so the word is produced from its last letter backwards.  Read with the
   left factor first: word [3,4,2] is s_3 s_4 s_2. */
std::vector<int> reduced_word(const RootDatum& d, const WeylElement& w);

/* Same, stripping the smallest left descent instead; first letter first. */
std::vector<int> reduced_word_left(const RootDatum& d, const WeylElement& w);

/* w mapping xi to the dominant chamber of the subsystem spanned by
   allowed_nodes (all nodes if empty), by repeated reflection at the
   smallest negative pairing.  Returns (w, w applied to xi). */
std::pair<WeylElement, Coweight> straighten_dominant(const RootDatum& d, const Coweight& xi,
                                                     const std::vector<int>& allowed_nodes = {});

/* Longest element of W, via straightening of the antidominant regular
   chamber. */
WeylElement longest_element(const RootDatum& d);

/* Memoized Bruhat order by descent recursion: with s a left descent of w,
   u <= w iff (su <= sw when s is a left descent of u, else u <= sw).
   Thread-safe; share one cache per datum for best reuse. */
class BruhatCache {
 public:
  explicit BruhatCache(const RootDatum& d) : datum_(&d) {}
  bool leq(const WeylElement& u, const WeylElement& w);

 private:
  struct BlobHash {
    size_t operator()(const std::vector<long long>& v) const {
      uint64_t h = 1469598103934665603ull;
      for (long long x : v) {
        h ^= static_cast<uint64_t>(x);
        h *= 1099511628211ull;
      }
      return static_cast<size_t>(h);
    }
  };

  const RootDatum* datum_;
  std::unordered_map<std::vector<long long>, bool, BlobHash> memo_;
  std::mutex mu_;
  bool leq_rec(const WeylElement& u, const WeylElement& w);
};

/* Bruhat-maximal / minimal elements of a finite set (an antichain),
   ordered by (length desc resp. asc, then matrix) for determinism. */
std::vector<WeylElement> bruhat_maxima(const RootDatum& d, const std::vector<WeylElement>& set,
                                       BruhatCache& cache);
std::vector<WeylElement> bruhat_minima(const RootDatum& d, const std::vector<WeylElement>& set,
                                       BruhatCache& cache);

/* 0-Hecke (Demazure) product: fold u's reduced word over w, keeping each
   s_j only when it increases length.  Associative. */
WeylElement demazure_star(const RootDatum& d, const WeylElement& u, const WeylElement& w);

/* Minimal length representatives of the cosets w W_P, where W_P is
   generated by the reflections at levi_nodes.  A representative w is
   characterized by w(alpha_j) > 0 for every levi j. */
struct ParabolicQuotient {
  const RootDatum* datum = nullptr;
  std::vector<int> levi;             // sorted, 1-based
  std::vector<WeylElement> reps;     // sorted by (length, matrix)
  int longest_index = -1;
  WeylElement levi_longest;          // longest element of W_P
  int levi_positive_roots = 0;

  const WeylElement& longest_rep() const { return reps[longest_index]; }
  int dim() const { return reps[longest_index].len; }

  /* Index of a representative, -1 if the element is not one. */
  int index_of(const WeylElement& w) const;

  /* Minimal representative of the coset w W_P. */
  WeylElement min_coset_rep(WeylElement w) const;

  bool leq(const WeylElement& u, const WeylElement& w) const { return bruhat_->leq(u, w); }
  BruhatCache& bruhat() const { return *bruhat_; }

  std::unordered_map<IMat, int, IMatHash> index;
  mutable std::shared_ptr<BruhatCache> bruhat_;
};

ParabolicQuotient parabolic_quotient(const RootDatum& d, std::vector<int> levi_nodes);

/* Unique maximal element of {z : v <= z <= upper, z v^{-1} in W_Q}, W_Q
   generated by the nodes in q_nodes.  Requires v minimal in W_Q v; the
   set is enumerated by length-increasing left multiplications from v,
   which reaches all of it because lengths add over W_Q v. */
WeylElement deodhar_max(const RootDatum& d, const WeylElement& upper, const WeylElement& v,
                        const std::vector<int>& q_nodes);

/* Closure of the identity under left multiplication by the given
   generators (all of W if empty).  Exponential; intended for small ranks
   in tests and for Levi factors. */
std::vector<WeylElement> enumerate_subgroup(const RootDatum& d, const std::vector<int>& nodes);

}  // namespace flagvar

#endif
