/*
  This is root_datum.hpp: simple root systems of rank <= 8 in Bourbaki
  numbering, with exact lattice arithmetic.

  Conventions, fixed once for the whole library:

  - cartan.at(j,k) = <alpha_k, alphacheck_j>, 0-based storage, 1-based
    node indices in every public signature.
  - A Weight is stored by its simple-root coordinates (rational); a
    Coweight by its simple-coroot coordinates.  Fundamental-weight and
    fundamental-coweight coordinates are conversions on the way in/out.
  - The fundamental-weight coordinates of a weight mu are the pairings
    <mu, alphacheck_k>; the fundamental-coweight coordinates of a coweight
    xi are the pairings <alpha_k, xi>.  Hence pairing(mu, picheck_i) is
    simply the i-th simple-root coordinate of mu.
*/

#ifndef FLAGVAR_ROOT_DATUM_HPP
#define FLAGVAR_ROOT_DATUM_HPP

#include <string>
#include <vector>

#include "flagvar/errors.hpp"
#include "flagvar/matrix.hpp"
#include "flagvar/rational.hpp"

namespace flagvar {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

Family family_from_char(char c);

enum class Basis { simple_root, fundamental_weight, simple_coroot, fundamental_coweight };

struct Weight {
  QVec sr;  // coordinates on the simple roots
};

struct Coweight {
  QVec sc;  // coordinates on the simple coroots
};

struct RootDatum {
  Family family;
  int rank = 0;

  IMat cartan;           // cartan.at(j,k) = <alpha_k, alphacheck_j>
  QMat inverse_cartan;
  long long cartan_det = 0;
  IMat cartan_adj;       // cartan_det * inverse_cartan, integral

  std::vector<IVec> positive_roots;     // simple-root coordinates
  std::vector<IVec> positive_roots_fw;  // the same roots, pairing coordinates

  std::vector<IMat> refl_fw;  // s_j acting on fundamental-weight coordinates
  std::vector<IMat> refl_sr;  // s_j acting on simple-root coordinates

  std::string name() const;  // e.g. "E7"

  /* Sign of a root given by its pairing coordinates: +1 positive, -1
     negative.  Throws InternalContradiction if the vector is not a root
     coordinate vector of definite sign. */
  int root_sign_fw(const IVec& fw) const;

  bool same_type(const RootDatum& o) const { return family == o.family && rank == o.rank; }
};

/* Validates the (family, rank) combination: A1..A8, B2..B8, C2..C8,
   D4..D8, E6..E8, F4, G2.  Throws InvalidType otherwise. */
RootDatum build_root_datum(Family family, int rank);

/* Coordinate conversion within weight bases or within coweight bases;
   mixing the two sides throws std::invalid_argument. */
QVec convert(const RootDatum& d, const QVec& coords, Basis from, Basis to);

Weight weight_from(const RootDatum& d, const QVec& coords, Basis basis);
Coweight coweight_from(const RootDatum& d, const QVec& coords, Basis basis);

Weight fundamental_weight(const RootDatum& d, int i);
Weight simple_root(const RootDatum& d, int j);
Coweight fundamental_coweight(const RootDatum& d, int i);
Coweight simple_coroot(const RootDatum& d, int j);

Rat pairing(const RootDatum& d, const Weight& mu, const Coweight& xi);

/* <mu, alphacheck_j> and <alpha_j, xi>: single pairing coordinates. */
Rat pairing_simple_coroot(const RootDatum& d, const Weight& mu, int j);
Rat pairing_simple_root(const RootDatum& d, int j, const Coweight& xi);

bool is_dominant(const RootDatum& d, const Weight& mu);
bool is_dominant(const RootDatum& d, const Coweight& xi);

/* Number of positive roots of the classical families; used as a build
   cross-check and by tests. */
int positive_root_count(Family family, int rank);

}  // namespace flagvar

#endif
