// The particle-configuration representation: Laurent polynomials, the action
// of the generators on sign strings, proper ideals of E(n) stored as boundary
// rank vectors, the (c, weight) parameterization, the matrix embedding of the
// algebra, and the deterministic independence witnesses behind the
// faithfulness checks.
#pragma once

#include "ntlc/algebra.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace ntlc {

// Finitely supported exponent -> rational map; empty map is 0.
struct LaurentPoly {
  std::map<long long, Rational> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;
};

LaurentPoly lp_zero();
LaurentPoly lp_monomial(long long exp, const Rational& c = 1);
LaurentPoly lp_add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly lp_scale(const LaurentPoly& a, const Rational& c);
Rational lp_eval(const LaurentPoly& a, const Rational& q);
// (exponent, coefficient) when a is a single term, else nullopt.
std::optional<std::pair<long long, Rational>> lp_as_monomial(const LaurentPoly& a);

// Vector in the weight-string module: weight -> coefficient polynomial.
struct StateVector {
  int n = 0;
  std::map<Weight, LaurentPoly> entries;

  friend bool operator==(const StateVector&, const StateVector&) = default;
};

StateVector sv_zero(const CoxeterData& d);
StateVector sv_basis(const CoxeterData& d, const Weight& w);
StateVector sv_add(const StateVector& a, const StateVector& b);
StateVector sv_scale(const StateVector& a, const LaurentPoly& c);

// One generator on one basis string: index 0 turns a leading '+' into '-'
// with coefficient q; 0 < i < n rewrites "-+" at positions (i-1, i) to "+-"
// with coefficient 1; index n turns a trailing '-' into '+' with coefficient
// 1; every other case is zero.
std::optional<std::pair<Weight, LaurentPoly>> apply_generator(
    const CoxeterData& d, int i, const Weight& s);

// A word acting right to left on one basis string.  The coefficient is the
// monomial q^e with e the number of successfully applied 0 letters.
std::optional<std::pair<Weight, long long>> apply_word(const CoxeterData& d,
                                                       const Word& w,
                                                       const Weight& s);

StateVector apply_element(const CoxeterData& d, const TElement& a,
                          const StateVector& v);

// Sparse 2^n x 2^n matrix over Laurent polynomials, rows and columns indexed
// by weights.
struct WeightMatrix {
  int n = 0;
  std::map<std::pair<Weight, Weight>, LaurentPoly> entries;

  friend bool operator==(const WeightMatrix&, const WeightMatrix&) = default;
};

WeightMatrix wm_zero(const CoxeterData& d);
WeightMatrix wm_identity(const CoxeterData& d);
WeightMatrix wm_unit(const CoxeterData& d, const Weight& row, const Weight& col,
                     const LaurentPoly& value);
WeightMatrix wm_add(const WeightMatrix& a, const WeightMatrix& b);
WeightMatrix wm_mul(const WeightMatrix& a, const WeightMatrix& b);
WeightMatrix wm_scale(const WeightMatrix& a, const LaurentPoly& c);

// Matrix of apply_element in the weight basis; an algebra homomorphism whose
// entries lie in k[q].
WeightMatrix matrix_of(const CoxeterData& d, const TElement& a);

// Proper ideal of E(n), stored as the ranks of the top cell of each column.
// Valid boundaries satisfy |h[p] - h[p-1]| = 1 and h[p] = p (mod 2).
struct IdealBoundary {
  std::vector<long long> h;

  friend bool operator==(const IdealBoundary&, const IdealBoundary&) = default;
  friend auto operator<=>(const IdealBoundary&, const IdealBoundary&) = default;
};

void check_boundary(const CoxeterData& d, const IdealBoundary& j);

// (c, lambda): h[0] = 2c and lambda records the ascents of the boundary walk.
std::pair<long long, Weight> psi(const CoxeterData& d, const IdealBoundary& j);
IdealBoundary psi_inv(const CoxeterData& d, long long c, const Weight& lambda);

// Raising operator: succeeds iff every neighbor p of i has h[p] = h[i] + 1,
// in which case h[i] grows by 2.
std::optional<IdealBoundary> raise_ideal(const CoxeterData& d, int i,
                                         const IdealBoundary& j);

// Cells strictly between two nested boundaries: {(p, b) : h[p] < b <= h2[p],
// b = p (mod 2)}.
ERegion interval_region(const CoxeterData& d, const IdealBoundary& j,
                        const IdealBoundary& j2);

// Deterministic independence witness for a minuscule word: a boundary pair
// J -> J' realized by applying w right to left, together with the matrix
// coordinates (row, col) = (weight of J', weight of J) and the exponent
// c(J') - c(J) = number of 0 letters.  The interval region of the pair is
// verified to coincide with the embedded heap of w.
struct FaithWitness {
  IdealBoundary j, j2;
  Weight row, col;
  long long exp = 0;
};

FaithWitness witness_for_word(const CoxeterData& d, const Word& w);

} // namespace ntlc
