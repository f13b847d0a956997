/*
  This is git_unstable.cpp.
*/

#include "flagvar/git_unstable.hpp"

#include <algorithm>
#include <stdexcept>

#include "flagvar/errors.hpp"
#include "flagvar/feasibility.hpp"

namespace flagvar {

namespace {

void check_elem(const RootDatum& d, const WeylElement& w) {
  if (w.family != d.family || w.rank != d.rank)
    throw DatumMismatch("Weyl element belongs to a different root datum");
}

void check_node(const RootDatum& d, int i) {
  if (i < 1 || i > d.rank) throw std::invalid_argument("node index out of range");
}

/* Sorted, deduplicated, validated copy of a node set. */
std::vector<int> checked_nodes(const RootDatum& d, std::vector<int> nodes) {
  if (nodes.empty()) throw std::invalid_argument("parabolic needs at least one node");
  std::sort(nodes.begin(), nodes.end());
  if (std::adjacent_find(nodes.begin(), nodes.end()) != nodes.end())
    throw std::invalid_argument("repeated parabolic node");
  check_node(d, nodes.front());
  check_node(d, nodes.back());
  return nodes;
}

std::vector<int> levi_complement(const RootDatum& d, const std::vector<int>& delta_p) {
  std::vector<int> levi;
  for (int j = 1; j <= d.rank; ++j)
    if (!std::binary_search(delta_p.begin(), delta_p.end(), j)) levi.push_back(j);
  return levi;
}

/* Membership of w-hat in the chamber index set, given the quotient. */
bool w_hat_member(const RootDatum& d, const std::vector<int>& delta_p,
                  const WeylElement& w_hat) {
  int m = static_cast<int>(delta_p.size());
  std::vector<LinearConstraint> cons;
  for (int a = 0; a < m; ++a) {
    LinearConstraint c;
    c.coeffs.assign(m, Rat(0));
    c.coeffs[a] = 1;
    c.rel = Rel::gt;
    cons.push_back(std::move(c));
  }
  for (int j : levi_complement(d, delta_p)) {
    Weight image = apply(d, w_hat, simple_root(d, j));
    LinearConstraint c;
    c.rel = Rel::eq;
    for (int i : delta_p) c.coeffs.push_back(image.sr[i - 1]);
    cons.push_back(std::move(c));
  }
  return feasible(std::move(cons), m);
}

std::vector<WeylElement> w_hat_from_quotient(const RootDatum& d, const std::vector<int>& delta_p,
                                             const ParabolicQuotient& quotient) {
  if (delta_p.size() > 3)
    throw UnsupportedRank("chamber index set supported for at most 3 parabolic nodes");
  std::vector<WeylElement> out;
  for (const WeylElement& w : quotient.reps)
    if (w_hat_member(d, delta_p, w)) out.push_back(w);
  return out;
}

/* Walls of the restricted root arrangement on the subtorus. */
int restricted_chamber_count(const RootDatum& d, const std::vector<int>& delta_p) {
  std::vector<QVec> normals;
  for (const IVec& beta : d.positive_roots) {
    QVec r;
    bool nonzero = false;
    for (int i : delta_p) {
      r.push_back(rat_ll(beta[i - 1]));
      nonzero = nonzero || beta[i - 1] != 0;
    }
    if (nonzero) normals.push_back(std::move(r));
  }
  return regular_chamber_count(normals, static_cast<int>(delta_p.size()));
}

void check_linearization(const RootDatum& d, const std::vector<int>& delta_p,
                         const Linearization& lin) {
  if (parabolic_nodes(lin) != delta_p)
    throw std::invalid_argument("linearization nodes disagree with the parabolic");
  for (const auto& [node, n] : lin.lambda_coeffs) {
    check_node(d, node);
    if (n <= 0) throw std::invalid_argument("ample class needs positive coefficients");
  }
  if (static_cast<int>(lin.q.sr.size()) != d.rank)
    throw std::invalid_argument("q has the wrong rank");
  QVec fw = convert(d, lin.q.sr, Basis::simple_root, Basis::fundamental_weight);
  for (int j : levi_complement(d, delta_p))
    if (fw[j - 1] != 0) throw std::invalid_argument("q has support off the parabolic nodes");
}

}  // namespace

std::vector<int> parabolic_nodes(const Linearization& lin) {
  std::vector<int> nodes;
  for (const auto& [node, n] : lin.lambda_coeffs) nodes.push_back(node);
  return nodes;  // map keys are already sorted
}

Weight ample_weight(const RootDatum& d, const Linearization& lin) {
  QVec fw(d.rank, Rat(0));
  for (const auto& [node, n] : lin.lambda_coeffs) {
    check_node(d, node);
    if (n <= 0) throw std::invalid_argument("ample class needs positive coefficients");
    fw[node - 1] = rat_ll(n);
  }
  return weight_from(d, fw, Basis::fundamental_weight);
}

Weight character_from_restriction(const RootDatum& d, const std::vector<int>& delta_p,
                                  const QVec& values) {
  std::vector<int> nodes = checked_nodes(d, delta_p);
  int m = static_cast<int>(nodes.size());
  if (static_cast<int>(values.size()) != m)
    throw std::invalid_argument("one restriction value per parabolic node");
  /* Solve for fundamental-weight coefficients c with prescribed pairings:
     the Gram block of the inverse Cartan on Delta_P is invertible. */
  QMat gram(m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) gram.at(a, b) = d.inverse_cartan.at(nodes[a] - 1, nodes[b] - 1);
  QVec c = inverse(gram) * values;
  QVec fw(d.rank, Rat(0));
  for (int b = 0; b < m; ++b) fw[nodes[b] - 1] = c[b];
  return weight_from(d, fw, Basis::fundamental_weight);
}

QVec t_hat_restriction(const RootDatum& d, const std::vector<int>& delta_p, const Weight& mu) {
  std::vector<int> nodes = checked_nodes(d, delta_p);
  if (static_cast<int>(mu.sr.size()) != d.rank)
    throw std::invalid_argument("weight has the wrong rank");
  QVec out;
  for (int i : nodes) out.push_back(mu.sr[i - 1]);
  return out;
}

bool is_regular(const RootDatum& d, const std::vector<int>& delta_p, const Coweight& xi) {
  std::vector<int> nodes = checked_nodes(d, delta_p);
  if (static_cast<int>(xi.sc.size()) != d.rank)
    throw std::invalid_argument("coweight has the wrong rank");
  for (int j : levi_complement(d, nodes))
    if (pairing_simple_root(d, j, xi) != 0)
      throw NotInSubtorus("coweight does not lie in the subtorus span");
  for (const IVec& beta : d.positive_roots) {
    bool restricts = false;
    for (int i : nodes) restricts = restricts || beta[i - 1] != 0;
    if (!restricts) continue;
    Rat p(0);
    for (int i : nodes) p += rat_ll(beta[i - 1]) * pairing_simple_root(d, i, xi);
    if (p == 0) return false;
  }
  return true;
}

std::vector<WeylElement> compute_w_hat(const RootDatum& d, const std::vector<int>& delta_p) {
  std::vector<int> nodes = checked_nodes(d, delta_p);
  ParabolicQuotient quotient = parabolic_quotient(d, levi_complement(d, nodes));
  return w_hat_from_quotient(d, nodes, quotient);
}

bool w_hat_covers(const RootDatum& d, const std::vector<int>& delta_p) {
  std::vector<int> nodes = checked_nodes(d, delta_p);
  int chambers = restricted_chamber_count(d, nodes);
  return static_cast<int>(compute_w_hat(d, nodes).size()) == chambers;
}

bool is_admissible_max_parabolic(const RootDatum& d, int i) {
  check_node(d, i);
  Coweight xi = fundamental_coweight(d, i);
  Coweight neg{xi.sc};
  for (Rat& x : neg.sc) x = -x;
  return straighten_dominant(d, neg).second.sc == xi.sc;
}

std::vector<AdmissibleEntry> admissible_table(int max_rank) {
  if (max_rank < 1 || max_rank > 8) throw UnsupportedRank("table covers ranks 1 through 8");
  std::vector<AdmissibleEntry> out;
  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G}) {
    for (int r = 1; r <= max_rank; ++r) {
      bool valid = (f == Family::A && r >= 1) || ((f == Family::B || f == Family::C) && r >= 2) ||
                   (f == Family::D && r >= 4) || (f == Family::E && r >= 6 && r <= 8) ||
                   (f == Family::F && r == 4) || (f == Family::G && r == 2);
      if (!valid) continue;
      RootDatum d = build_root_datum(f, r);
      for (int i = 1; i <= r; ++i)
        out.push_back({f, r, i, is_admissible_max_parabolic(d, i)});
    }
  }
  return out;
}

int UnstableLocus::dimension() const {
  int dim = -1;
  for (const UnstablePiece& p : pieces)
    for (const WeylElement& w : p.max_cells) dim = std::max(dim, w.len);
  return dim;
}

UnstableLocus unstable_set(const RootDatum& d, const std::vector<int>& delta_p,
                           const Linearization& lin) {
  std::vector<int> nodes = checked_nodes(d, delta_p);
  check_linearization(d, nodes, lin);
  ParabolicQuotient quotient = parabolic_quotient(d, levi_complement(d, nodes));
  std::vector<WeylElement> what = w_hat_from_quotient(d, nodes, quotient);
  if (static_cast<int>(what.size()) != restricted_chamber_count(d, nodes))
    throw NotAdmissible("chamber index set does not cover the subtorus arrangement");

  Weight lambda = ample_weight(d, lin);
  UnstableLocus locus;
  for (const WeylElement& w_hat : what) {
    Weight shift = apply(d, w_hat, lin.q);
    std::vector<WeylElement> members;
    for (const WeylElement& w : quotient.reps) {
      Weight moved = apply(d, w, lambda);
      bool unstable = false;
      for (int i : nodes) unstable = unstable || moved.sr[i - 1] - shift.sr[i - 1] > 0;
      if (unstable) members.push_back(w);
    }
    locus.pieces.push_back({w_hat, bruhat_maxima(d, members, quotient.bruhat())});
  }
  return locus;
}

Rat fixed_point_weight(const RootDatum& d, int i, const WeylElement& w) {
  check_node(d, i);
  check_elem(d, w);
  return apply(d, w, fundamental_weight(d, i)).sr[i - 1];
}

namespace {

/* Strictly decreasing list of fixed-point weights over the quotient. */
QVec weight_levels(const RootDatum& d, int i, const ParabolicQuotient& quotient) {
  QVec vals;
  for (const WeylElement& w : quotient.reps) vals.push_back(fixed_point_weight(d, i, w));
  std::sort(vals.begin(), vals.end(), [](const Rat& a, const Rat& b) { return a > b; });
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  return vals;
}

void check_max_parabolic(const RootDatum& d, int i, const ParabolicQuotient& quotient) {
  check_node(d, i);
  if (quotient.datum == nullptr || !quotient.datum->same_type(d))
    throw DatumMismatch("quotient belongs to a different root datum");
  std::vector<int> expected;
  for (int j = 1; j <= d.rank; ++j)
    if (j != i) expected.push_back(j);
  if (quotient.levi != expected)
    throw std::invalid_argument("quotient is not the maximal parabolic at this node");
}

/* The chain of minimal representatives of the Demazure powers
   (z * s_i)^{*k}, z the longest Levi element, from the identity up to
   the longest representative.  m_k is the unique Bruhat maximum of
   {w : level(w) <= k}: a word with k occurrences of i is a subword of
   (word(z), i)^k, and m_k itself carries such a word, so the chain
   cannot stall before the top (a stalled power absorbs every simple
   reflection and is already the longest element of W). */
std::vector<WeylElement> demazure_chain(const RootDatum& d, const ParabolicQuotient& quotient,
                                        int i) {
  std::vector<WeylElement> chain = {identity_element(d)};
  const WeylElement step = demazure_star(d, quotient.levi_longest, simple_reflection(d, i));
  const WeylElement longest = quotient.longest_rep();
  WeylElement power = identity_element(d);
  while (!(chain.back() == longest)) {
    power = demazure_star(d, power, step);
    WeylElement rep = quotient.min_coset_rep(power);
    if (rep.len <= chain.back().len)
      throw InternalContradiction("Demazure chain stalls below the longest representative");
    chain.push_back(rep);
  }
  return chain;
}

}  // namespace

int level(const ParabolicQuotient& quotient, int i, const WeylElement& w) {
  const RootDatum& d = *quotient.datum;
  check_max_parabolic(d, i, quotient);
  if (quotient.index_of(w) < 0)
    throw std::invalid_argument("level is defined on minimal representatives");
  std::vector<WeylElement> chain = demazure_chain(d, quotient, i);
  for (size_t k = 0; k < chain.size(); ++k)
    if (quotient.leq(w, chain[k])) return static_cast<int>(k);
  throw InternalContradiction("representative not below the longest representative");
}

Ladder build_ladder(const RootDatum& d, int i) {
  check_node(d, i);
  if (!is_admissible_max_parabolic(d, i))
    throw NotAdmissible("node does not admit the symmetric wall structure");

  Ladder ladder;
  ladder.node = i;
  std::vector<int> levi;
  for (int j = 1; j <= d.rank; ++j)
    if (j != i) levi.push_back(j);
  ladder.quotient = parabolic_quotient(d, levi);
  const ParabolicQuotient& quotient = ladder.quotient;

  /* Letter-count chain via Demazure powers. */
  ladder.maxima = demazure_chain(d, quotient, i);
  ladder.k_max = static_cast<int>(ladder.maxima.size()) - 1;
  for (int k = 1; k <= ladder.k_max; ++k)
    if (!quotient.leq(ladder.maxima[k - 1], ladder.maxima[k]))
      throw InternalContradiction("Demazure chain is not a Bruhat chain");

  /* Value filtration: every distinct fixed-point weight, and the
     Bruhat-maximal antichain of each stratum {w : weight >= value}. */
  ladder.wall_values = weight_levels(d, i, quotient);
  for (const Rat& value : ladder.wall_values) {
    std::vector<WeylElement> stratum;
    for (const WeylElement& w : quotient.reps)
      if (fixed_point_weight(d, i, w) >= value) stratum.push_back(w);
    std::vector<WeylElement> maxima = bruhat_maxima(d, stratum, quotient.bruhat());
    if (maxima.empty()) throw InternalContradiction("weight stratum lost its maxima");
    if (!ladder.value_maxima.empty()) {
      for (const WeylElement& prev : ladder.value_maxima.back()) {
        bool dominated = false;
        for (const WeylElement& next : maxima)
          if (quotient.leq(prev, next)) dominated = true;
        if (!dominated) throw InternalContradiction("value strata are not nested");
      }
    }
    ladder.value_maxima.push_back(std::move(maxima));
  }
  if (ladder.value_maxima.front().size() != 1 || !ladder.value_maxima.front()[0].is_identity())
    throw InternalContradiction("value filtration does not start at the identity");
  if (ladder.value_maxima.back().size() != 1 ||
      !(ladder.value_maxima.back()[0] == quotient.longest_rep()))
    throw InternalContradiction("value filtration does not end at the longest representative");

  /* The filtrations agree where they overlap: each m_k is a stratum
     maximum at its own weight.  When every wall value is hit by some
     m_k and every stratum peaks once, the two coincide outright. */
  const size_t walls = ladder.wall_values.size();
  for (int k = 0; k <= ladder.k_max; ++k) {
    Rat value = fixed_point_weight(d, i, ladder.maxima[k]);
    size_t r = 0;
    while (r < walls && ladder.wall_values[r] != value) ++r;
    if (r == walls) throw InternalContradiction("letter-count wall missing from the value walls");
    bool present = false;
    for (const WeylElement& w : ladder.value_maxima[r])
      if (w == ladder.maxima[k]) present = true;
    if (!present) throw InternalContradiction("letter-count maximum is not a stratum maximum");
  }
  if (walls == static_cast<size_t>(ladder.k_max) + 1)
    for (int k = 0; k <= ladder.k_max; ++k)
      if (ladder.value_maxima[k].size() != 1 ||
          !(ladder.value_maxima[k][0] == ladder.maxima[k]))
        throw InternalContradiction("letter-count and value filtrations disagree");

  /* Bruhat-minimal antichain of each level fiber {w : level(w) = k}.
     Levels are read against the chain, not recomputed per element. */
  for (int k = 1; k <= ladder.k_max; ++k) {
    std::vector<WeylElement> fiber;
    for (const WeylElement& w : quotient.reps) {
      if (quotient.leq(w, ladder.maxima[k]) && !quotient.leq(w, ladder.maxima[k - 1]))
        fiber.push_back(w);
    }
    std::vector<WeylElement> minima = bruhat_minima(d, fiber, quotient.bruhat());
    if (minima.empty()) throw InternalContradiction("level fiber lost its minima");
    ladder.minima.push_back(std::move(minima));
  }

  /* The recursive ladder word.  Each m_k factors as u_k s_i m_{k-1}
     with u_k in the Levi subgroup and lengths adding up, so words[k]
     is the maximal suffix of words[k_max] with k occurrences of the
     letter i, and words[k] witnesses level(m_k) <= k. */
  ladder.words.emplace_back();
  for (int k = 1; k <= ladder.k_max; ++k) {
    WeylElement u = multiply(d, multiply(d, ladder.maxima[k], inverse_element(ladder.maxima[k - 1])),
                             simple_reflection(d, i));
    std::vector<int> prefix = reduced_word_left(d, u);
    for (int letter : prefix)
      if (letter == i) throw InternalContradiction("ladder block leaves the Levi subgroup");
    if (u.len + 1 + ladder.maxima[k - 1].len != ladder.maxima[k].len)
      throw InternalContradiction("ladder block lengths fail to add up");
    std::vector<int> word = prefix;
    word.push_back(i);
    word.insert(word.end(), ladder.words[k - 1].begin(), ladder.words[k - 1].end());
    if (!(element_from_word(d, word) == ladder.maxima[k]))
      throw InternalContradiction("ladder word does not spell the filtration maximum");
    ladder.words.push_back(std::move(word));
  }

  /* Both wall lists are symmetric about zero: w -> rep(w_{0,P} w) is a
     weight-negating bijection of W^P, and it carries the chain of
     maxima to itself reversed. */
  for (size_t r = 0; r < walls; ++r)
    if (ladder.wall_values[r] != -ladder.wall_values[walls - 1 - r])
      throw InternalContradiction("wall values are not symmetric about zero");
  for (int k = 0; k <= ladder.k_max; ++k) {
    if (fixed_point_weight(d, i, ladder.maxima[k]) !=
        -fixed_point_weight(d, i, ladder.maxima[ladder.k_max - k]))
      throw InternalContradiction("letter-count walls are not symmetric about zero");
  }

  return ladder;
}

}  // namespace flagvar
