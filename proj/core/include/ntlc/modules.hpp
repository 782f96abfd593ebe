// Finite-dimensional modules: the weight basis is tensored with the powers
// (q-c)^j for 0 <= j < m, so q acts as c plus a nilpotent shift and every
// generator matrix is obtained by substituting that block for q.
#pragma once

#include "ntlc/linalg.hpp"
#include "ntlc/weightrep.hpp"

#include <cstdint>
#include <vector>

namespace ntlc {

struct FiniteModule {
  int n = 0;
  Rational c = 0;
  int m = 0;
  bool trivial = false;            // the 1-dimensional all-zero action
  std::size_t dim = 0;             // 2^n * m (or 1 for the trivial module)
  std::vector<Weight> weights;     // sorted weight order used for indexing
  std::vector<QMatrix> gens;       // one square matrix per generator 0..n

  // basis index of weight w tensor (q-c)^j
  std::size_t index(const Weight& w, int j) const;
};

FiniteModule build_module(const CoxeterData& d, const Rational& c, int m);
FiniteModule trivial_module(const CoxeterData& d);

// Matrix of a general element in a module: products of generator matrices per
// word, summed with coefficients.
QMatrix module_matrix_of(const FiniteModule& mod, const TElement& a);

// Dimension of {X : X g = g X for every generator matrix g}.
std::size_t endomorphism_dim(const FiniteModule& mod);

// True iff every vector of a spanning test set (all basis vectors plus 20
// seeded random vectors) generates the whole module.
bool is_irreducible(const FiniteModule& mod, std::uint64_t seed = 20250823);

} // namespace ntlc
