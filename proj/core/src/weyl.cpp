/*
  This is weyl.cpp.
*/

#include "flagvar/weyl.hpp"

#include <algorithm>

namespace flagvar {

namespace {

void check_stamp(const RootDatum& d, const WeylElement& w) {
  if (w.family != d.family || w.rank != d.rank)
    throw DatumMismatch("Weyl element built over " + std::string(1, static_cast<char>(w.family)) +
                        std::to_string(w.rank) + " used with " + d.name());
}

void check_node(const RootDatum& d, int j) {
  if (j < 1 || j > d.rank)
    throw std::invalid_argument("node index " + std::to_string(j) + " out of range for " + d.name());
}

WeylElement make_elem(const RootDatum& d, IMat m, IMat minv, int len) {
  WeylElement w;
  w.family = d.family;
  w.rank = d.rank;
  w.m = std::move(m);
  w.minv = std::move(minv);
  w.len = len;
  return w;
}

/* Pairing coordinates of alpha_j: column j of the Cartan matrix. */
IVec alpha_fw(const RootDatum& d, int j) {
  IVec v(d.rank);
  for (int k = 0; k < d.rank; ++k) v[k] = d.cartan.at(k, j - 1);
  return v;
}

int inversion_count(const RootDatum& d, const IMat& m) {
  int cnt = 0;
  for (const IVec& beta : d.positive_roots_fw)
    if (d.root_sign_fw(m * beta) < 0) ++cnt;
  return cnt;
}

/* Left multiplication by s_j with the length shift already known. */
WeylElement left_mult(const RootDatum& d, int j, const WeylElement& w, int len) {
  return make_elem(d, d.refl_fw[j - 1] * w.m, w.minv * d.refl_fw[j - 1], len);
}

/* Right multiplication by s_j with the length shift already known. */
WeylElement right_mult(const RootDatum& d, const WeylElement& w, int j, int len) {
  return make_elem(d, w.m * d.refl_fw[j - 1], d.refl_fw[j - 1] * w.minv, len);
}

bool valid_levi(const RootDatum& d, std::vector<int>& nodes) {
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  for (int j : nodes)
    if (j < 1 || j > d.rank) return false;
  return true;
}

}  // namespace

WeylElement identity_element(const RootDatum& d) {
  return make_elem(d, IMat::identity(d.rank), IMat::identity(d.rank), 0);
}

WeylElement simple_reflection(const RootDatum& d, int j) {
  check_node(d, j);
  return make_elem(d, d.refl_fw[j - 1], d.refl_fw[j - 1], 1);
}

WeylElement multiply(const RootDatum& d, const WeylElement& a, const WeylElement& b) {
  check_stamp(d, a);
  check_stamp(d, b);
  IMat m = a.m * b.m;
  int len = inversion_count(d, m);
  return make_elem(d, std::move(m), b.minv * a.minv, len);
}

WeylElement inverse_element(const WeylElement& w) {
  WeylElement v = w;
  std::swap(v.m, v.minv);
  return v;  // l(w^-1) = l(w)
}

WeylElement element_from_word(const RootDatum& d, const std::vector<int>& word) {
  WeylElement w = identity_element(d);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    check_node(d, *it);
    w = left_mult(d, *it, w, 0);
  }
  w.len = inversion_count(d, w.m);
  return w;
}

Weight apply(const RootDatum& d, const WeylElement& w, const Weight& mu) {
  check_stamp(d, w);
  // sr -> fw, integer matrix action, fw -> sr
  QVec fw = convert(d, mu.sr, Basis::simple_root, Basis::fundamental_weight);
  QVec img(d.rank, Rat(0));
  for (int a = 0; a < d.rank; ++a)
    for (int b = 0; b < d.rank; ++b) img[a] += rat_ll(w.m.at(a, b)) * fw[b];
  return weight_from(d, img, Basis::fundamental_weight);
}

Coweight apply_co(const RootDatum& d, const WeylElement& w, const Coweight& xi) {
  check_stamp(d, w);
  // simple-coroot coordinates transform by the transpose of the inverse action
  QVec out(d.rank, Rat(0));
  for (int a = 0; a < d.rank; ++a)
    for (int b = 0; b < d.rank; ++b) out[a] += rat_ll(w.minv.at(b, a)) * xi.sc[b];
  Coweight r;
  r.sc = std::move(out);
  return r;
}

int simple_image_sign(const RootDatum& d, const WeylElement& w, int j) {
  check_stamp(d, w);
  check_node(d, j);
  return d.root_sign_fw(w.m * alpha_fw(d, j));
}

bool is_right_descent(const RootDatum& d, const WeylElement& w, int j) {
  return simple_image_sign(d, w, j) < 0;
}

bool is_left_descent(const RootDatum& d, const WeylElement& w, int j) {
  check_stamp(d, w);
  check_node(d, j);
  return d.root_sign_fw(w.minv * alpha_fw(d, j)) < 0;
}

std::vector<int> reduced_word(const RootDatum& d, const WeylElement& w) {
  check_stamp(d, w);
  WeylElement cur = w;
  std::vector<int> letters;  // collected last letter first
  while (!cur.is_identity()) {
    int j = 0;
    for (int k = 1; k <= d.rank; ++k)
      if (is_right_descent(d, cur, k)) {
        j = k;
        break;
      }
    if (j == 0) throw InternalContradiction("non-identity element with no right descent");
    cur = right_mult(d, cur, j, cur.len - 1);
    letters.push_back(j);
  }
  std::reverse(letters.begin(), letters.end());
  return letters;
}

std::vector<int> reduced_word_left(const RootDatum& d, const WeylElement& w) {
  check_stamp(d, w);
  WeylElement cur = w;
  std::vector<int> letters;
  while (!cur.is_identity()) {
    int j = 0;
    for (int k = 1; k <= d.rank; ++k)
      if (is_left_descent(d, cur, k)) {
        j = k;
        break;
      }
    if (j == 0) throw InternalContradiction("non-identity element with no left descent");
    cur = left_mult(d, j, cur, cur.len - 1);
    letters.push_back(j);
  }
  return letters;
}

std::pair<WeylElement, Coweight> straighten_dominant(const RootDatum& d, const Coweight& xi,
                                                     const std::vector<int>& allowed_nodes) {
  std::vector<int> nodes = allowed_nodes;
  if (nodes.empty())
    for (int j = 1; j <= d.rank; ++j) nodes.push_back(j);
  if (!valid_levi(d, nodes)) throw std::invalid_argument("straighten_dominant: bad node set");

  WeylElement w = identity_element(d);
  Coweight cur = xi;
  int guard = static_cast<int>(d.positive_roots.size()) + 1;
  for (;;) {
    int j = 0;
    for (int k : nodes) {
      Rat p = pairing_simple_root(d, k, cur);
      if (sgn(p) < 0) {
        j = k;
        break;
      }
    }
    if (j == 0) break;
    if (--guard < 0) throw InternalContradiction("straightening failed to terminate");
    cur = apply_co(d, simple_reflection(d, j), cur);
    w = left_mult(d, j, w, 0);
  }
  w.len = inversion_count(d, w.m);
  return {w, cur};
}

WeylElement longest_element(const RootDatum& d) {
  Coweight xi;
  xi.sc.assign(d.rank, Rat(0));
  for (int i = 1; i <= d.rank; ++i) {
    Coweight f = fundamental_coweight(d, i);
    for (int k = 0; k < d.rank; ++k) {
      Rat s = xi.sc[k] - f.sc[k];
      xi.sc[k] = s;
    }
  }
  // xi = -rhocheck is antidominant regular, so its straightener is w_0
  WeylElement w0 = straighten_dominant(d, xi).first;
  if (w0.len != static_cast<int>(d.positive_roots.size()))
    throw InternalContradiction("longest element has wrong length");
  return w0;
}

bool BruhatCache::leq(const WeylElement& u, const WeylElement& w) {
  check_stamp(*datum_, u);
  check_stamp(*datum_, w);
  std::lock_guard<std::mutex> lock(mu_);
  return leq_rec(u, w);
}

bool BruhatCache::leq_rec(const WeylElement& u, const WeylElement& w) {
  if (u.len > w.len) return false;
  if (u.m == w.m) return true;
  if (u.len == 0) return true;
  if (w.len == 0) return false;

  std::vector<long long> key;
  key.reserve(u.m.a.size() * 2);
  key.insert(key.end(), u.m.a.begin(), u.m.a.end());
  key.insert(key.end(), w.m.a.begin(), w.m.a.end());
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;

  const RootDatum& d = *datum_;
  int s = 0;
  for (int k = 1; k <= d.rank; ++k)
    if (is_left_descent(d, w, k)) {
      s = k;
      break;
    }
  if (s == 0) throw InternalContradiction("non-identity element with no left descent");

  WeylElement sw = left_mult(d, s, w, w.len - 1);
  bool ans;
  if (is_left_descent(d, u, s)) {
    WeylElement su = left_mult(d, s, u, u.len - 1);
    ans = leq_rec(su, sw);
  } else {
    ans = leq_rec(u, sw);
  }
  memo_.emplace(std::move(key), ans);
  return ans;
}

namespace {

std::vector<WeylElement> bruhat_extrema(std::vector<WeylElement> set, BruhatCache& cache,
                                        bool want_max) {
  auto cmp = [want_max](const WeylElement& a, const WeylElement& b) {
    if (a.len != b.len) return want_max ? a.len > b.len : a.len < b.len;
    return a.m.a < b.m.a;
  };
  std::sort(set.begin(), set.end(), cmp);
  set.erase(std::unique(set.begin(), set.end()), set.end());
  std::vector<WeylElement> out;
  for (const WeylElement& w : set) {
    bool dominated = false;
    for (const WeylElement& m : out)
      if (want_max ? cache.leq(w, m) : cache.leq(m, w)) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(w);
  }
  return out;
}

}  // namespace

std::vector<WeylElement> bruhat_maxima(const RootDatum&, const std::vector<WeylElement>& set,
                                       BruhatCache& cache) {
  return bruhat_extrema(set, cache, true);
}

std::vector<WeylElement> bruhat_minima(const RootDatum&, const std::vector<WeylElement>& set,
                                       BruhatCache& cache) {
  return bruhat_extrema(set, cache, false);
}

WeylElement demazure_star(const RootDatum& d, const WeylElement& u, const WeylElement& w) {
  check_stamp(d, u);
  check_stamp(d, w);
  std::vector<int> word = reduced_word(d, u);
  WeylElement cur = w;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    if (!is_left_descent(d, cur, *it)) cur = left_mult(d, *it, cur, cur.len + 1);
  return cur;
}

int ParabolicQuotient::index_of(const WeylElement& w) const {
  auto it = index.find(w.m);
  return it == index.end() ? -1 : it->second;
}

WeylElement ParabolicQuotient::min_coset_rep(WeylElement w) const {
  const RootDatum& d = *datum;
  check_stamp(d, w);
  for (;;) {
    int j = 0;
    for (int k : levi)
      if (is_right_descent(d, w, k)) {
        j = k;
        break;
      }
    if (j == 0) return w;
    w = right_mult(d, w, j, w.len - 1);
  }
}

ParabolicQuotient parabolic_quotient(const RootDatum& d, std::vector<int> levi_nodes) {
  if (!valid_levi(d, levi_nodes)) throw std::invalid_argument("parabolic_quotient: bad node set");

  ParabolicQuotient q;
  q.datum = &d;
  q.levi = levi_nodes;
  q.bruhat_ = std::make_shared<BruhatCache>(d);

  std::vector<char> in_levi(d.rank + 1, 0);
  for (int j : q.levi) in_levi[j] = 1;

  // positive roots supported inside the levi sub-diagram
  for (const IVec& beta : d.positive_roots) {
    bool inside = true;
    for (int k = 0; k < d.rank; ++k)
      if (beta[k] != 0 && !in_levi[k + 1]) {
        inside = false;
        break;
      }
    if (inside) ++q.levi_positive_roots;
  }

  if (q.levi.empty()) {
    q.levi_longest = identity_element(d);
  } else {
    Coweight xi;
    xi.sc.assign(d.rank, Rat(0));
    for (int j : q.levi) {
      Coweight f = fundamental_coweight(d, j);
      for (int k = 0; k < d.rank; ++k) {
        Rat s = xi.sc[k] - f.sc[k];
        xi.sc[k] = s;
      }
    }
    q.levi_longest = straighten_dominant(d, xi, q.levi).first;
  }
  if (q.levi_longest.len != q.levi_positive_roots)
    throw InternalContradiction("levi longest element has wrong length");

  /* Breadth-first walk over minimal representatives: s_j w stays minimal
     and longer exactly when w^-1(alpha_j) is positive with support
     outside the levi set. */
  std::unordered_map<IMat, int, IMatHash> seen;
  std::vector<WeylElement> reps;
  reps.push_back(identity_element(d));
  seen.emplace(reps[0].m, 0);
  for (size_t head = 0; head < reps.size(); ++head) {
    WeylElement w = reps[head];  // copy: reps may reallocate below
    for (int j = 1; j <= d.rank; ++j) {
      IVec beta_fw = w.minv * alpha_fw(d, j);
      IVec scaled = d.cartan_adj * beta_fw;  // det * simple-root coordinates
      bool positive = true, outside = false;
      for (int k = 0; k < d.rank; ++k) {
        if (scaled[k] < 0) positive = false;
        if (scaled[k] != 0 && !in_levi[k + 1]) outside = true;
      }
      if (!positive || !outside) continue;
      WeylElement next = left_mult(d, j, w, w.len + 1);
      if (seen.emplace(next.m, 1).second) reps.push_back(std::move(next));
    }
  }

  std::sort(reps.begin(), reps.end(), [](const WeylElement& a, const WeylElement& b) {
    if (a.len != b.len) return a.len < b.len;
    return a.m.a < b.m.a;
  });
  q.reps = std::move(reps);
  q.index.clear();
  for (int i = 0; i < static_cast<int>(q.reps.size()); ++i) q.index.emplace(q.reps[i].m, i);

  int top = q.reps.back().len;
  int expected = static_cast<int>(d.positive_roots.size()) - q.levi_positive_roots;
  if (top != expected) throw InternalContradiction("quotient top length mismatch");
  if (q.reps.size() >= 2 && q.reps[q.reps.size() - 2].len == top)
    throw InternalContradiction("quotient has no unique longest representative");
  q.longest_index = static_cast<int>(q.reps.size()) - 1;
  return q;
}

WeylElement deodhar_max(const RootDatum& d, const WeylElement& upper, const WeylElement& v,
                        const std::vector<int>& q_nodes) {
  check_stamp(d, upper);
  check_stamp(d, v);
  std::vector<int> nodes = q_nodes;
  if (!valid_levi(d, nodes)) throw std::invalid_argument("deodhar_max: bad node set");
  for (int j : nodes)
    if (is_left_descent(d, v, j))
      throw std::invalid_argument("deodhar_max: v is not minimal in its coset");

  BruhatCache cache(d);
  if (!cache.leq(v, upper)) throw InternalContradiction("deodhar interval is empty");

  /* Every member factors as u v with lengths adding, so its word has the
     word of v as a suffix and each prefix step stays in the set; the
     length-increasing walk below therefore reaches all of it. */
  std::unordered_map<IMat, int, IMatHash> seen;
  std::vector<WeylElement> members{v};
  seen.emplace(v.m, 0);
  for (size_t head = 0; head < members.size(); ++head) {
    WeylElement z = members[head];
    for (int j : nodes) {
      if (is_left_descent(d, z, j)) continue;
      WeylElement next = left_mult(d, j, z, z.len + 1);
      if (seen.count(next.m)) continue;
      if (!cache.leq(next, upper)) continue;
      seen.emplace(next.m, 1);
      members.push_back(std::move(next));
    }
  }

  std::vector<WeylElement> maxima = bruhat_maxima(d, members, cache);
  if (maxima.size() != 1) throw InternalContradiction("deodhar maximum is not unique");
  return maxima[0];
}

std::vector<WeylElement> enumerate_subgroup(const RootDatum& d, const std::vector<int>& nodes) {
  std::vector<int> gens = nodes;
  if (gens.empty())
    for (int j = 1; j <= d.rank; ++j) gens.push_back(j);
  if (!valid_levi(d, gens)) throw std::invalid_argument("enumerate_subgroup: bad node set");

  std::unordered_map<IMat, int, IMatHash> seen;
  std::vector<WeylElement> out{identity_element(d)};
  seen.emplace(out[0].m, 0);
  for (size_t head = 0; head < out.size(); ++head) {
    WeylElement w = out[head];
    for (int j : gens) {
      int delta = is_left_descent(d, w, j) ? -1 : 1;
      WeylElement next = left_mult(d, j, w, w.len + delta);
      if (seen.emplace(next.m, 1).second) out.push_back(std::move(next));
    }
  }
  std::sort(out.begin(), out.end(), [](const WeylElement& a, const WeylElement& b) {
    if (a.len != b.len) return a.len < b.len;
    return a.m.a < b.m.a;
  });
  return out;
}

}  // namespace flagvar
