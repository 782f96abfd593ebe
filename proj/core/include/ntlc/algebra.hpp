// Elements of the nil algebra T(n) as exact rational combinations of the
// minuscule word basis: multiplication, the central element Q, factorization
// into C-form data, and the Q-adic valuation via verified exact division.
#pragma once

#include "ntlc/heap.hpp"
#include "ntlc/rational.hpp"

#include <map>
#include <optional>

namespace ntlc {

// Finitely supported map from canonical minuscule words to nonzero rationals.
// The empty map is 0; the empty-word key is the identity.
struct TElement {
  int n = 0;
  std::map<Word, Rational> terms;

  bool is_zero() const { return terms.empty(); }
  friend bool operator==(const TElement&, const TElement&) = default;
};

TElement t_zero(const CoxeterData& d);
TElement t_one(const CoxeterData& d);

// Basis element of the class of w; requires is_minuscule(w).
TElement t_word(const CoxeterData& d, const Word& w);

// Drops keys whose coefficient became zero; validates canonical-key invariant.
void t_add_term(const CoxeterData& d, TElement& a, const Word& canonical_word,
                const Rational& coeff);

TElement t_add(const TElement& a, const TElement& b);
TElement t_scale(const TElement& a, const Rational& c);

// Bilinear extension of word concatenation: a product of basis words is the
// basis element of the concatenation when that is minuscule and 0 otherwise.
TElement mul(const CoxeterData& d, const TElement& a, const TElement& b);

// Q: the sum of the 2^n Coxeter basis elements, one per weight.  Central.
TElement q_element(const CoxeterData& d);

struct CForm {
  Weight lambda; // upper weight
  Weight mu;     // lower weight
  long long r;   // number of letters equal to 0
  friend bool operator==(const CForm&, const CForm&) = default;
};

// C-form data of a minuscule word; nullopt when w lacks full support.
std::optional<CForm> factor_c_form(const CoxeterData& d, const Word& w);

// Unique factorization of a full-support minuscule word as (Coxeter layer of
// the upper weight) * (rest): removes the per-column maxima of the embedded
// heap and verifies that the product of the two parts reproduces w.  Returns
// nullopt if the verification fails (no full-support minuscule word does).
std::optional<std::pair<Weight, Word>> strip_top_layer(const CoxeterData& d,
                                                       const Word& w);

// Exact division: returns b with mul(Q, b) == a, or nullopt when a is not a
// Q-multiple.  Dividend terms are grouped by their stripped source word and
// each group must match the term set of Q times that source exactly.
std::optional<TElement> divide_by_q(const CoxeterData& d, const TElement& a);

// Largest j >= 0 with a = Q^j * b for some b; requires a != 0.
long long q_valuation(const CoxeterData& d, const TElement& a);

} // namespace ntlc
