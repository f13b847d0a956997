/*
  This is feasibility.cpp.
*/

#include "flagvar/feasibility.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "flagvar/errors.hpp"

namespace flagvar {

namespace {

/* Scale so the first nonzero coefficient has absolute value 1; dedup key. */
void canonicalize_row(LinearConstraint& c) {
  for (const Rat& x : c.coeffs)
    if (x != 0) {
      Rat scale = abs(x);
      for (Rat& y : c.coeffs) y /= scale;
      return;
    }
}

bool all_zero(const QVec& v) {
  for (const Rat& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace

bool feasible(std::vector<LinearConstraint> cons, int nvars) {
  for (const LinearConstraint& c : cons)
    if (static_cast<int>(c.coeffs.size()) != nvars)
      throw std::invalid_argument("feasible: constraint arity mismatch");

  for (;;) {
    // constant rows are decided immediately
    std::vector<LinearConstraint> rows;
    for (LinearConstraint& c : cons) {
      if (all_zero(c.coeffs)) {
        if (c.rel == Rel::gt) return false;  // 0 > 0
        continue;
      }
      rows.push_back(std::move(c));
    }
    if (rows.empty()) return true;

    // substitute one equality away
    auto eq = std::find_if(rows.begin(), rows.end(),
                           [](const LinearConstraint& c) { return c.rel == Rel::eq; });
    if (eq != rows.end()) {
      LinearConstraint pivot = std::move(*eq);
      rows.erase(eq);
      int k = 0;
      while (pivot.coeffs[k] == 0) ++k;
      for (LinearConstraint& r : rows) {
        if (r.coeffs[k] == 0) continue;
        Rat f = r.coeffs[k] / pivot.coeffs[k];
        for (int l = 0; l < nvars; ++l) r.coeffs[l] -= f * pivot.coeffs[l];
      }
      cons = std::move(rows);
      continue;
    }

    // Fourier-Motzkin step on the first live variable
    int k = -1;
    for (int l = 0; l < nvars && k < 0; ++l)
      for (const LinearConstraint& r : rows)
        if (r.coeffs[l] != 0) {
          k = l;
          break;
        }

    std::vector<LinearConstraint> zero, pos, neg;
    for (LinearConstraint& r : rows) {
      int s = sgn(r.coeffs[k]);
      (s == 0 ? zero : s > 0 ? pos : neg).push_back(std::move(r));
    }
    // one-sided bounds on t_k are always satisfiable; only pairs survive
    std::vector<LinearConstraint> next = std::move(zero);
    for (const LinearConstraint& p : pos)
      for (const LinearConstraint& n : neg) {
        LinearConstraint c;
        c.coeffs.assign(nvars, Rat(0));
        Rat a = p.coeffs[k], b = n.coeffs[k];  // a > 0 > b
        for (int l = 0; l < nvars; ++l) c.coeffs[l] = -b * p.coeffs[l] + a * n.coeffs[l];
        c.rel = (p.rel == Rel::gt || n.rel == Rel::gt) ? Rel::gt : Rel::ge;
        next.push_back(std::move(c));
      }

    // exact duplicates explode quadratically without this
    for (LinearConstraint& c : next) canonicalize_row(c);
    std::sort(next.begin(), next.end(), [](const LinearConstraint& x, const LinearConstraint& y) {
      if (x.rel != y.rel) return x.rel < y.rel;
      return x.coeffs < y.coeffs;
    });
    next.erase(std::unique(next.begin(), next.end(),
                           [](const LinearConstraint& x, const LinearConstraint& y) {
                             return x.rel == y.rel && x.coeffs == y.coeffs;
                           }),
               next.end());
    cons = std::move(next);
  }
}

namespace {

using ZVec = std::vector<mpz_class>;

/* Primitive integer direction, sign-normalized; hyperplane dedup key. */
ZVec canonical_direction(const QVec& n) {
  mpz_class lcm = 1;
  for (const Rat& x : n) {
    mpz_class den = x.get_den();
    mpz_class g = gcd(lcm, den);
    lcm = lcm / g * den;
  }
  ZVec z;
  z.reserve(n.size());
  mpz_class g = 0;
  for (const Rat& x : n) {
    Rat scaled = x * Rat(lcm);
    z.push_back(scaled.get_num());
    g = gcd(g, z.back());
  }
  if (g == 0) throw std::invalid_argument("zero normal vector");
  int flip = 1;
  for (const mpz_class& x : z)
    if (x != 0) {
      flip = sgn(x);
      break;
    }
  for (mpz_class& x : z) x = x * flip / g;
  return z;
}

ZVec cross(const ZVec& a, const ZVec& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

}  // namespace

int regular_chamber_count(const std::vector<QVec>& normals, int dim) {
  if (dim < 1 || dim > 3) throw UnsupportedRank("chamber counting supported for dimension <= 3");
  std::set<ZVec> planes;
  for (const QVec& n : normals) {
    if (static_cast<int>(n.size()) != dim)
      throw std::invalid_argument("normal has wrong dimension");
    planes.insert(canonical_direction(n));
  }
  int m = static_cast<int>(planes.size());
  if (m == 0) return 1;
  if (dim == 1) return 2;
  if (dim == 2) return 2 * m;
  if (m == 1) return 2;

  /* Faces of the great-circle arrangement on the 2-sphere.  Any two
     distinct great circles meet in an antipodal point pair, so the graph
     is connected and Euler's formula applies: F = 2 - V + E.  A circle
     containing p point pairs is cut into 2p arcs. */
  std::vector<ZVec> ns(planes.begin(), planes.end());
  std::set<ZVec> vertex_dirs;  // antipodal pairs, one representative each
  for (size_t a = 0; a < ns.size(); ++a)
    for (size_t b = a + 1; b < ns.size(); ++b) {
      ZVec v = cross(ns[a], ns[b]);
      mpz_class g = gcd(gcd(v[0], v[1]), v[2]);
      if (g == 0) throw InternalContradiction("parallel normals survived dedup");
      int flip = 1;
      for (const mpz_class& x : v)
        if (x != 0) {
          flip = sgn(x);
          break;
        }
      for (mpz_class& x : v) x = x * flip / g;
      vertex_dirs.insert(v);
    }
  long long V = 2ll * static_cast<long long>(vertex_dirs.size());
  long long E = 0;
  for (const ZVec& n : ns) {
    long long on_circle = 0;
    for (const ZVec& v : vertex_dirs)
      if (n[0] * v[0] + n[1] * v[1] + n[2] * v[2] == 0) ++on_circle;
    E += 2 * on_circle;
  }
  return static_cast<int>(2 - V + E);
}

}  // namespace flagvar
