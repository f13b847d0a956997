/*
  This is feasibility.hpp: exact linear feasibility over the rationals and
  central hyperplane arrangement counting in low dimension.

  Systems are homogeneous: each constraint reads coeffs . t (=, >=, >) 0.
  Feasibility is decided by Fourier-Motzkin elimination; strictness
  travels with each row (a combined row is strict when either parent is),
  which keeps the projection exact for mixed strict systems over R.
*/

#ifndef FLAGVAR_FEASIBILITY_HPP
#define FLAGVAR_FEASIBILITY_HPP

#include <vector>

#include "flagvar/rational.hpp"

namespace flagvar {

enum class Rel { eq, ge, gt };

struct LinearConstraint {
  QVec coeffs;
  Rel rel = Rel::ge;
};

/* Does a real solution t exist?  Every constraint must have exactly
   nvars coefficients. */
bool feasible(std::vector<LinearConstraint> cons, int nvars);

/* Number of connected components of R^dim minus the hyperplanes
   {x : n . x = 0}.  Normals may repeat or be parallel; zero normals are
   rejected.  Supported for dim <= 3 (dim 3 counts faces of the great
   circle arrangement on the sphere via the Euler formula). */
int regular_chamber_count(const std::vector<QVec>& normals, int dim);

}  // namespace flagvar

#endif
