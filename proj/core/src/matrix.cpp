/*
  This is matrix.cpp.
*/

#include "flagvar/matrix.hpp"

#include "flagvar/errors.hpp"

namespace flagvar {

IMat IMat::identity(int n) {
  IMat m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool IMat::is_identity() const {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

IMat IMat::operator*(const IMat& o) const {
  IMat r(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      long long v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < n; ++j) r.at(i, j) += v * o.at(k, j);
    }
  return r;
}

IVec IMat::operator*(const IVec& v) const {
  IVec r(n, 0);
  for (int i = 0; i < n; ++i) {
    long long s = 0;
    for (int j = 0; j < n; ++j) s += at(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

IMat IMat::transposed() const {
  IMat r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.at(j, i) = at(i, j);
  return r;
}

QVec QMat::operator*(const QVec& v) const {
  QVec r(n, Rat(0));
  for (int i = 0; i < n; ++i) {
    Rat s(0);
    for (int j = 0; j < n; ++j) s += at(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

QMat inverse(const IMat& m) {
  int n = m.n;
  QMat a(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a.at(i, j) = rat_ll(m.at(i, j));
  return inverse(a);
}

QMat inverse(QMat a) {
  int n = a.n;
  QMat inv(n);
  for (int i = 0; i < n; ++i) inv.at(i, i) = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a.at(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw InternalContradiction("singular matrix in inverse()");
    if (piv != col)
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(piv, j), a.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    Rat p = a.at(col, col);
    for (int j = 0; j < n; ++j) {
      a.at(col, j) /= p;
      inv.at(col, j) /= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      Rat f = a.at(r, col);
      if (f == 0) continue;
      for (int j = 0; j < n; ++j) {
        a.at(r, j) -= f * a.at(col, j);
        inv.at(r, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

long long det(const IMat& m) {
  int n = m.n;
  QMat a(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a.at(i, j) = rat_ll(m.at(i, j));
  Rat d(1);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a.at(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != col) {
      d = -d;
      for (int j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(col, j));
    }
    d *= a.at(col, col);
    Rat p = a.at(col, col);
    for (int r = col + 1; r < n; ++r) {
      Rat f = a.at(r, col) / p;
      if (f == 0) continue;
      for (int j = col; j < n; ++j) a.at(r, j) -= f * a.at(col, j);
    }
  }
  if (d.get_den() != 1) throw InternalContradiction("non-integral determinant");
  if (!d.get_num().fits_slong_p()) throw InternalContradiction("determinant overflow");
  return d.get_num().get_si();
}

QVec to_qvec(const IVec& v) {
  QVec r;
  r.reserve(v.size());
  for (long long x : v) r.push_back(rat_ll(x));
  return r;
}

}  // namespace flagvar
