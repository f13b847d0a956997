/*
  This is errors.hpp: exception types thrown by the flagvar library.
*/

#ifndef FLAGVAR_ERRORS_HPP
#define FLAGVAR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace flagvar {

/* A family/rank combination that is not a valid simple type, or a node
   index outside 1..rank. */
struct InvalidType : std::runtime_error {
  explicit InvalidType(const std::string& what) : std::runtime_error(what) {}
};

/* Operands built over different root data. */
struct DatumMismatch : std::runtime_error {
  explicit DatumMismatch(const std::string& what) : std::runtime_error(what) {}
};

/* A coweight that was claimed to lie in the subtorus lattice but pairs
   nontrivially with a simple root outside the defining node set. */
struct NotInSubtorus : std::runtime_error {
  explicit NotInSubtorus(const std::string& what) : std::runtime_error(what) {}
};

/* Request outside the supported size envelope (e.g. more than three
   subtorus dimensions for cone feasibility). */
struct UnsupportedRank : std::runtime_error {
  explicit UnsupportedRank(const std::string& what) : std::runtime_error(what) {}
};

/* The pair (type, node) does not admit the symmetric wall structure, or a
   computation that requires full chamber coverage was asked for one that
   lacks it. */
struct NotAdmissible : std::runtime_error {
  explicit NotAdmissible(const std::string& what) : std::runtime_error(what) {}
};

/* A quotient-dependent statement (vanishing ranges) was requested at a
   non-generic parameter value. */
struct NotGeometric : std::runtime_error {
  explicit NotGeometric(const std::string& what) : std::runtime_error(what) {}
};

/* Two independent computations of the same quantity disagreed, or an
   asserted uniqueness failed.  Always a bug, never user input. */
struct InternalContradiction : std::logic_error {
  explicit InternalContradiction(const std::string& what) : std::logic_error(what) {}
};

}  // namespace flagvar

#endif
