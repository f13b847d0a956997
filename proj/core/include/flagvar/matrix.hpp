/*
  This is matrix.hpp: dense square matrices of rank <= 8.

  Two flavors: IMat over long long for lattice actions (Weyl matrices,
  Cartan matrices, adjugates) and QMat over Rat for the occasional exact
  inverse.  Row-major, sized at runtime; nothing here is clever, the
  ranks are tiny.
*/

#ifndef FLAGVAR_MATRIX_HPP
#define FLAGVAR_MATRIX_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "flagvar/rational.hpp"

namespace flagvar {

using IVec = std::vector<long long>;

struct IMat {
  int n = 0;
  std::vector<long long> a;  // n*n, row-major

  IMat() = default;
  explicit IMat(int n_) : n(n_), a(static_cast<size_t>(n_) * n_, 0) {}

  long long& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  long long at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

  static IMat identity(int n);
  bool is_identity() const;

  IMat operator*(const IMat& o) const;
  IVec operator*(const IVec& v) const;
  IMat transposed() const;

  bool operator==(const IMat& o) const { return n == o.n && a == o.a; }
};

struct IMatHash {
  size_t operator()(const IMat& m) const {
    // FNV-1a over the entries; matrices are the canonical element form.
    uint64_t h = 1469598103934665603ull;
    for (long long v : m.a) {
      h ^= static_cast<uint64_t>(v);
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

struct QMat {
  int n = 0;
  std::vector<Rat> a;

  QMat() = default;
  explicit QMat(int n_) : n(n_), a(static_cast<size_t>(n_) * n_, Rat(0)) {}

  Rat& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  const Rat& at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

  QVec operator*(const QVec& v) const;
};

/* Exact inverse by Gauss-Jordan.  Throws InternalContradiction if singular
   (never happens for Cartan matrices of finite type). */
QMat inverse(const IMat& m);
QMat inverse(QMat m);

/* Determinant by fraction-free elimination (exact). */
long long det(const IMat& m);

QVec to_qvec(const IVec& v);

}  // namespace flagvar

#endif
