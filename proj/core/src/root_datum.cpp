/*
  This is root_datum.cpp.

  Cartan matrices follow Bourbaki plates: chains are numbered 1..n; the
  short/long asymmetries sit at the high end for B/C, between nodes 2 and
  3 for F4; D forks at n-2; E hangs node 2 off node 4.
*/

#include "flagvar/root_datum.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace flagvar {

Family family_from_char(char c) {
  switch (c) {
    case 'A': case 'B': case 'C': case 'D': case 'E': case 'F': case 'G':
      return static_cast<Family>(c);
    default:
      throw InvalidType(std::string("unknown family '") + c + "'");
  }
}

std::string RootDatum::name() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

int positive_root_count(Family family, int rank) {
  switch (family) {
    case Family::A: return rank * (rank + 1) / 2;
    case Family::B:
    case Family::C: return rank * rank;
    case Family::D: return rank * (rank - 1);
    case Family::E: return rank == 6 ? 36 : rank == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
  }
  throw InvalidType("unknown family");
}

namespace {

void validate_type(Family family, int rank) {
  auto bad = [&] {
    throw InvalidType("no simple type " + std::string(1, static_cast<char>(family)) +
                      std::to_string(rank) + " in the supported range");
  };
  if (rank < 1 || rank > 8) bad();
  switch (family) {
    case Family::A: break;
    case Family::B:
    case Family::C:
      if (rank < 2) bad();
      break;
    case Family::D:
      if (rank < 4) bad();
      break;
    case Family::E:
      if (rank < 6) bad();
      break;
    case Family::F:
      if (rank != 4) bad();
      break;
    case Family::G:
      if (rank != 2) bad();
      break;
  }
}

/* cartan.at(j,k) = <alpha_k, alphacheck_j>; the -2/-3 entries land in the
   row of the short root. */
IMat make_cartan(Family family, int n) {
  IMat c(n);
  for (int i = 0; i < n; ++i) c.at(i, i) = 2;
  auto edge = [&](int a, int b) {  // 1-based nodes, single bond
    c.at(a - 1, b - 1) = -1;
    c.at(b - 1, a - 1) = -1;
  };
  switch (family) {
    case Family::A:
      for (int i = 1; i < n; ++i) edge(i, i + 1);
      break;
    case Family::B:
      for (int i = 1; i < n; ++i) edge(i, i + 1);
      c.at(n - 1, n - 2) = -2;  // alpha_n short
      break;
    case Family::C:
      for (int i = 1; i < n; ++i) edge(i, i + 1);
      c.at(n - 2, n - 1) = -2;  // alpha_n long
      break;
    case Family::D:
      for (int i = 1; i <= n - 3; ++i) edge(i, i + 1);
      edge(n - 2, n - 1);
      edge(n - 2, n);
      break;
    case Family::E:
      edge(1, 3);
      edge(3, 4);
      edge(2, 4);
      for (int i = 4; i < n; ++i) edge(i, i + 1);
      break;
    case Family::F:
      edge(1, 2);
      edge(2, 3);
      edge(3, 4);
      c.at(2, 1) = -2;  // alpha_3 short
      break;
    case Family::G:
      c.at(0, 1) = -3;  // alpha_1 short
      c.at(1, 0) = -1;
      break;
  }
  return c;
}

}  // namespace

RootDatum build_root_datum(Family family, int rank) {
  validate_type(family, rank);
  RootDatum d;
  d.family = family;
  d.rank = rank;
  d.cartan = make_cartan(family, rank);
  d.inverse_cartan = inverse(d.cartan);
  d.cartan_det = det(d.cartan);
  if (d.cartan_det <= 0) throw InternalContradiction("cartan determinant not positive");
  d.cartan_adj = IMat(rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      Rat v = d.inverse_cartan.at(i, j) * rat_ll(d.cartan_det);
      if (v.get_den() != 1) throw InternalContradiction("non-integral cartan adjugate");
      d.cartan_adj.at(i, j) = v.get_num().get_si();
    }

  // s_j on simple-root coordinates: row j of the identity replaced by
  // delta_{jk} - cartan(j,k); on pairing coordinates: column j replaced by
  // delta_{kj} - cartan(k,j).
  d.refl_sr.resize(rank);
  d.refl_fw.resize(rank);
  for (int j = 0; j < rank; ++j) {
    IMat rs = IMat::identity(rank), rf = IMat::identity(rank);
    for (int k = 0; k < rank; ++k) {
      rs.at(j, k) = (j == k ? 1 : 0) - d.cartan.at(j, k);
      rf.at(k, j) = (k == j ? 1 : 0) - d.cartan.at(k, j);
    }
    d.refl_sr[j] = rs;
    d.refl_fw[j] = rf;
  }

  // Positive roots: closure of the simple roots under the reflections
  // s_j, discarding the sign flips s_j(alpha_j) = -alpha_j.  Every
  // positive root is reached without leaving the positive cone.
  std::set<IVec> seen;
  std::vector<IVec> queue;
  for (int j = 0; j < rank; ++j) {
    IVec e(rank, 0);
    e[j] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    IVec beta = queue.back();
    queue.pop_back();
    for (int j = 0; j < rank; ++j) {
      IVec img = d.refl_sr[j] * beta;
      bool pos = true;
      for (long long x : img)
        if (x < 0) pos = false;
      if (pos && seen.insert(img).second) queue.push_back(img);
    }
  }
  d.positive_roots.assign(seen.begin(), seen.end());
  std::sort(d.positive_roots.begin(), d.positive_roots.end(),
            [](const IVec& a, const IVec& b) {
              long long ha = 0, hb = 0;
              for (long long x : a) ha += x;
              for (long long x : b) hb += x;
              if (ha != hb) return ha < hb;
              return a < b;
            });
  if (static_cast<int>(d.positive_roots.size()) != positive_root_count(family, rank))
    throw InternalContradiction("positive root closure has wrong cardinality for " + d.name());
  for (const IVec& beta : d.positive_roots) d.positive_roots_fw.push_back(d.cartan * beta);
  return d;
}

int RootDatum::root_sign_fw(const IVec& fw) const {
  IVec scaled = cartan_adj * fw;  // cartan_det * simple-root coordinates
  bool pos = false, neg = false;
  for (long long x : scaled) {
    if (x > 0) pos = true;
    if (x < 0) neg = true;
  }
  if (pos == neg) throw InternalContradiction("indefinite root sign");
  return pos ? 1 : -1;
}

QVec convert(const RootDatum& d, const QVec& coords, Basis from, Basis to) {
  if (static_cast<int>(coords.size()) != d.rank)
    throw DatumMismatch("coordinate vector has wrong length for " + d.name());
  auto weight_side = [](Basis b) { return b == Basis::simple_root || b == Basis::fundamental_weight; };
  if (weight_side(from) != weight_side(to))
    throw std::invalid_argument("cannot convert between weight and coweight bases");
  if (from == to) return coords;
  int n = d.rank;
  QVec r(n, Rat(0));
  if (from == Basis::simple_root) {  // to pairing coordinates: C * c
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) r[j] += rat_ll(d.cartan.at(j, k)) * coords[k];
  } else if (from == Basis::fundamental_weight) {
    r = d.inverse_cartan * coords;
  } else if (from == Basis::simple_coroot) {  // fc = C^T d
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) r[j] += rat_ll(d.cartan.at(k, j)) * coords[k];
  } else {  // fundamental_coweight -> simple_coroot: d_j = sum_k Cinv(k,j) fc_k
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) r[j] += d.inverse_cartan.at(k, j) * coords[k];
  }
  return r;
}

Weight weight_from(const RootDatum& d, const QVec& coords, Basis basis) {
  return Weight{convert(d, coords, basis, Basis::simple_root)};
}

Coweight coweight_from(const RootDatum& d, const QVec& coords, Basis basis) {
  return Coweight{convert(d, coords, basis, Basis::simple_coroot)};
}

Weight fundamental_weight(const RootDatum& d, int i) {
  if (i < 1 || i > d.rank) throw InvalidType("node out of range");
  QVec c(d.rank, Rat(0));
  for (int j = 0; j < d.rank; ++j) c[j] = d.inverse_cartan.at(j, i - 1);
  return Weight{c};
}

Weight simple_root(const RootDatum& d, int j) {
  if (j < 1 || j > d.rank) throw InvalidType("node out of range");
  QVec c(d.rank, Rat(0));
  c[j - 1] = 1;
  return Weight{c};
}

Coweight fundamental_coweight(const RootDatum& d, int i) {
  if (i < 1 || i > d.rank) throw InvalidType("node out of range");
  QVec c(d.rank, Rat(0));
  for (int j = 0; j < d.rank; ++j) c[j] = d.inverse_cartan.at(i - 1, j);
  return Coweight{c};
}

Coweight simple_coroot(const RootDatum& d, int j) {
  if (j < 1 || j > d.rank) throw InvalidType("node out of range");
  QVec c(d.rank, Rat(0));
  c[j - 1] = 1;
  return Coweight{c};
}

Rat pairing(const RootDatum& d, const Weight& mu, const Coweight& xi) {
  if (static_cast<int>(mu.sr.size()) != d.rank || static_cast<int>(xi.sc.size()) != d.rank)
    throw DatumMismatch("weight/coweight rank mismatch for " + d.name());
  // <mu, xi> = (sc coords of xi)^T C (sr coords of mu)
  Rat s(0);
  for (int j = 0; j < d.rank; ++j) {
    if (xi.sc[j] == 0) continue;
    Rat row(0);
    for (int k = 0; k < d.rank; ++k) row += rat_ll(d.cartan.at(j, k)) * mu.sr[k];
    s += xi.sc[j] * row;
  }
  return s;
}

Rat pairing_simple_coroot(const RootDatum& d, const Weight& mu, int j) {
  Rat s(0);
  for (int k = 0; k < d.rank; ++k) s += rat_ll(d.cartan.at(j - 1, k)) * mu.sr[k];
  return s;
}

Rat pairing_simple_root(const RootDatum& d, int j, const Coweight& xi) {
  Rat s(0);
  for (int k = 0; k < d.rank; ++k) s += rat_ll(d.cartan.at(k, j - 1)) * xi.sc[k];
  return s;
}

bool is_dominant(const RootDatum& d, const Weight& mu) {
  for (int j = 1; j <= d.rank; ++j)
    if (pairing_simple_coroot(d, mu, j) < 0) return false;
  return true;
}

bool is_dominant(const RootDatum& d, const Coweight& xi) {
  for (int j = 1; j <= d.rank; ++j)
    if (pairing_simple_root(d, j, xi) < 0) return false;
  return true;
}

}  // namespace flagvar
