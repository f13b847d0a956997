/*
  This is plucker.cpp.
*/

#include "flagvar/plucker.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "flagvar/errors.hpp"

namespace flagvar {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

namespace {

void check_ambient(int n, int i) {
  if (n < 2 || i < 1 || i >= n) throw std::invalid_argument("Gr(i,n) needs 0 < i < n, n >= 2");
}

/* Exact determinant by fraction-free forward elimination. */
Rat det(std::vector<std::vector<Rat>> m) {
  const size_t k = m.size();
  Rat result(1);
  for (size_t col = 0; col < k; ++col) {
    size_t pivot = col;
    while (pivot < k && m[pivot][col] == 0) ++pivot;
    if (pivot == k) return Rat(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      result = -result;
    }
    result *= m[col][col];
    for (size_t row = col + 1; row < k; ++row) {
      if (m[row][col] == 0) continue;
      Rat f = m[row][col] / m[col][col];
      for (size_t c = col; c < k; ++c) m[row][c] -= f * m[col][c];
    }
  }
  return result;
}

/* Componentwise comparison of ascending subsets: the closure order of
   the cells the sampler must respect. */
bool gale_leq(const Subset& a, const Subset& b) {
  for (size_t j = 0; j < a.size(); ++j)
    if (a[j] > b[j]) return false;
  return true;
}

}  // namespace

bool is_cell_permutation(const std::vector<int>& perm, int i) {
  const int n = static_cast<int>(perm.size());
  if (n < 2 || i < 1 || i >= n) return false;
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  for (int v : perm) {
    if (v < 1 || v > n || seen[v]) return false;
    seen[v] = true;
  }
  for (int j = 1; j < n; ++j)
    if (j != i && perm[j] < perm[j - 1]) return false;
  return true;
}

std::vector<int> cell_permutation(int n, const Subset& s) {
  check_ambient(n, static_cast<int>(s.size()));
  std::vector<bool> used(static_cast<size_t>(n) + 1, false);
  std::vector<int> perm(s.begin(), s.end());
  for (size_t j = 1; j < s.size(); ++j)
    if (s[j] <= s[j - 1]) throw std::invalid_argument("subset must be strictly ascending");
  if (s.front() < 1 || s.back() > n) throw std::invalid_argument("subset out of range");
  for (int v : s) used[v] = true;
  for (int v = 1; v <= n; ++v)
    if (!used[v]) perm.push_back(v);
  return perm;
}

std::vector<int> opposite_permutation(int n, int i) {
  check_ambient(n, i);
  std::vector<int> perm;
  for (int j = 1; j <= i; ++j) perm.push_back(n - i + j);
  for (int j = 1; j <= n - i; ++j) perm.push_back(j);
  return perm;
}

Rat subset_weight(int n, int i, const Subset& s) {
  check_ambient(n, i);
  int early = 0;
  for (int v : s) early += v <= i ? 1 : 0;
  return Rat(early) - make_rat(static_cast<long>(i) * i, n);
}

PluckerPoint sample_cell(int n, int i, const std::vector<int>& perm, std::uint64_t seed) {
  check_ambient(n, i);
  if (static_cast<int>(perm.size()) != n || !is_cell_permutation(perm, i))
    throw std::invalid_argument("cell index must be a minimal-representative permutation");

  /* Column k of the point matrix is the unipotent image of e_{t_k}:
     unit at row t_k, random integers above, zero below. */
  Subset cell(perm.begin(), perm.begin() + i);
  std::sort(cell.begin(), cell.end());
  std::mt19937_64 rng(splitmix64(seed));
  std::vector<std::vector<Rat>> m(static_cast<size_t>(n), std::vector<Rat>(static_cast<size_t>(i)));
  for (int k = 0; k < i; ++k) {
    m[static_cast<size_t>(cell[k]) - 1][k] = Rat(1);
    for (int r = 0; r < cell[k] - 1; ++r)
      m[r][k] = Rat(static_cast<long>(rng() % 19) - 9);
  }

  PluckerPoint point{n, i, {}};
  Subset rows(static_cast<size_t>(i));
  std::iota(rows.begin(), rows.end(), 1);
  while (true) {
    std::vector<std::vector<Rat>> sub;
    for (int r : rows) sub.push_back(m[static_cast<size_t>(r) - 1]);
    Rat minor = det(std::move(sub));
    if (minor != 0) point.coordinates.emplace(rows, minor);
    int j = i - 1;
    while (j >= 0 && rows[j] == n - (i - 1 - j)) --j;
    if (j < 0) break;
    ++rows[j];
    for (int k = j + 1; k < i; ++k) rows[k] = rows[k - 1] + 1;
  }

  /* Cell membership certificate: the cell's own coordinate is the unit
     minor and dominates the support in the closure order. */
  auto own = point.coordinates.find(cell);
  if (own == point.coordinates.end() || !(own->second == Rat(1)))
    throw InternalContradiction("cell coordinate of a sampled point is not 1");
  for (const auto& [s, c] : point.coordinates)
    if (!gale_leq(s, cell))
      throw InternalContradiction("sampled support escapes the cell closure");
  return point;
}

PluckerPoint translate(const PluckerPoint& point, const std::vector<int>& perm) {
  const int n = point.n;
  if (static_cast<int>(perm.size()) != n)
    throw std::invalid_argument("translation permutation has the wrong size");
  PluckerPoint out{point.n, point.i, {}};
  for (const auto& [s, c] : point.coordinates) {
    std::vector<int> image;
    for (int v : s) image.push_back(perm[static_cast<size_t>(v) - 1]);
    int inversions = 0;
    for (size_t a = 0; a < image.size(); ++a)
      for (size_t b = a + 1; b < image.size(); ++b)
        if (image[a] > image[b]) ++inversions;
    Subset sorted = image;
    std::sort(sorted.begin(), sorted.end());
    out.coordinates.emplace(std::move(sorted), inversions % 2 == 0 ? c : Rat(-c));
  }
  return out;
}

WeightInterval pi_interval(const PluckerPoint& point) {
  if (point.coordinates.empty())
    throw InternalContradiction("a projective point has nonempty support");
  bool first = true;
  WeightInterval iv;
  for (const auto& [s, c] : point.coordinates) {
    Rat w = subset_weight(point.n, point.i, s);
    if (first || w < iv.lo) iv.lo = w;
    if (first || w > iv.hi) iv.hi = w;
    first = false;
  }
  return iv;
}

WeightInterval generic_interval(int n, int i, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != n || !is_cell_permutation(perm, i))
    throw std::invalid_argument("cell index must be a minimal-representative permutation");
  Subset cell(perm.begin(), perm.begin() + i);
  std::sort(cell.begin(), cell.end());
  Subset top(static_cast<size_t>(i));
  std::iota(top.begin(), top.end(), 1);
  return {subset_weight(n, i, cell), subset_weight(n, i, top)};
}

bool semistable(const PluckerPoint& point, const Rat& q_value) {
  WeightInterval iv = pi_interval(point);
  return iv.lo <= q_value && q_value <= iv.hi;
}

bool stable(const PluckerPoint& point, const Rat& q_value) {
  WeightInterval iv = pi_interval(point);
  return iv.lo < q_value && q_value < iv.hi;
}

}  // namespace flagvar
