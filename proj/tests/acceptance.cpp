// Acceptance runner: one pass/fail line per criterion, with the runtime
// budget enforced as part of the result.  Exits nonzero if any line fails.

#include "ntlc/enumerate.hpp"
#include "ntlc/modules.hpp"
#include "ntlc/serialize.hpp"
#include "ntlc/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

using namespace ntlc;

namespace {

using Clock = std::chrono::steady_clock;

struct Criterion {
  int id;
  std::string label;
  double budget_seconds;
  std::function<bool(std::string&)> body;
};

bool fail(std::string& why, const std::string& msg) {
  why = msg;
  return false;
}

// 1. Defining relations under exact multiplication, n = 2, 3, 4.
bool crit_relations(std::string& why) {
  for (int n : {2, 3, 4}) {
    CoxeterData d(n);
    auto U = [&](std::initializer_list<int> w) { return t_word(d, Word(w)); };
    for (int i = 0; i <= n; ++i) {
      if (!mul(d, U({i}), U({i})).is_zero())
        return fail(why, "square of generator " + std::to_string(i) + " nonzero");
      for (int j = i + 2; j <= n; ++j)
        if (mul(d, U({i}), U({j})) != mul(d, U({j}), U({i})))
          return fail(why, "distant generators fail to commute");
    }
    for (int i = 0; i < n; ++i) {
      int j = i + 1;
      TElement aba = mul(d, U({i}), mul(d, U({j}), U({i})));
      TElement bab = mul(d, U({j}), mul(d, U({i}), U({j})));
      // The triple with the bond's arrow target in the middle vanishes; at a
      // single interior bond both do.
      bool kill_aba = (i != 0);
      bool kill_bab = (j != n);
      if (aba.is_zero() != kill_aba || bab.is_zero() != kill_bab)
        return fail(why, "triple relation wrong at bond " + std::to_string(i));
    }
  }
  return true;
}

// 2. Interval recognizer agrees with the commutation-class subword oracle on
// every word of length <= 8, n = 2, 3.
bool crit_oracle(std::string& why) {
  for (int n : {2, 3}) {
    CoxeterData d(n);
    if (auto w = find_oracle_disagreement(d, 8, d))
      return fail(why, "disagreement at " + word_to_string(*w));
  }
  return true;
}

// 3. Matrices of all basis words of length <= 8 are independent, with a
// deterministic boundary-pair witness for each word, n = 2, 3.
bool crit_faithfulness(std::string& why) {
  for (int n : {2, 3}) {
    CoxeterData d(n);
    FaithfulnessOutcome out = check_faithfulness(d, 8);
    if (out.word_count == 0) return fail(why, "no words enumerated");
    if (!out.witnesses_unique) return fail(why, "witness collision");
    if (!out.evaluation_rank_full) return fail(why, "evaluation matrix rank deficient");
  }
  return true;
}

// 4. Q is q times the identity matrix (n = 2, 3, 4), commutes with every
// generator exactly, and at n = 2 the exact solve shows the only elements of
// degree <= n commuting with all generators are the scalars.
bool crit_centre(std::string& why) {
  for (int n : {2, 3, 4}) {
    CoxeterData d(n);
    TElement q = q_element(d);
    if (matrix_of(d, q) != wm_scale(wm_identity(d), lp_monomial(1)))
      return fail(why, "matrix of Q is not q times identity at n=" + std::to_string(n));
    for (int i = 0; i <= n; ++i) {
      TElement ui = t_word(d, {i});
      if (mul(d, q, ui) != mul(d, ui, q))
        return fail(why, "Q fails to commute with generator " + std::to_string(i));
    }
  }
  CoxeterData d2(2);
  if (!check_centre_degree_bound(d2))
    return fail(why, "low-degree centraliser larger than the scalars");
  return true;
}

// 5. The nine-letter rank-six example word has the stated lower and upper
// contours and factors with exactly one 0 letter.
bool crit_weights(std::string& why) {
  CoxeterData d(6);
  Word w = {6, 1, 3, 5, 0, 2, 4, 6, 3};
  auto [lo, hi] = weights_of(d, w);
  if (lo != "+--++-") return fail(why, "lower contour " + lo);
  if (hi != "+-+-++") return fail(why, "upper contour " + hi);
  auto f = factor_c_form(d, w);
  if (!f) return fail(why, "factorization missing");
  if (f->lambda != hi || f->mu != lo || f->r != 1)
    return fail(why, "factorization fields wrong");
  return true;
}

// 6. Orientation words multiply as delta_{lm} Q u_m (n = 2, 3); products of
// full-support basis words of length <= 8 at n = 2 follow the delta rule on
// contours with grades adding; each full-support word maps to q^r times a
// matrix unit.
bool crit_matrix_units(std::string& why) {
  for (int n : {2, 3}) {
    CoxeterData d(n);
    TElement q = q_element(d);
    std::vector<Weight> lams = all_weights(n);
    std::vector<TElement> us;
    for (const Weight& l : lams) us.push_back(t_word(d, coxeter_word(d, l)));
    for (std::size_t i = 0; i < us.size(); ++i)
      for (std::size_t j = 0; j < us.size(); ++j) {
        TElement p = mul(d, us[i], us[j]);
        TElement expect = i == j ? mul(d, q, us[j]) : t_zero(d);
        if (p != expect) return fail(why, "orientation product rule fails");
      }
  }

  CoxeterData d(2);
  EnumerationReport rep = enumerate_minuscule(d, 2 * (2 + 1) + 2, true);
  std::vector<Word> full;
  for (const auto& bucket : rep.words)
    for (const Word& w : bucket)
      if (has_full_support(d, w)) full.push_back(w);
  for (const Word& w : full) {
    auto f = factor_c_form(d, w);
    if (!f) return fail(why, "full-support word without factorization");
    WeightMatrix m = matrix_of(d, t_word(d, w));
    if (m != wm_unit(d, f->lambda, f->mu, lp_monomial(f->r)))
      return fail(why, "matrix is not a scaled unit at " + word_to_string(w));
  }
  for (const Word& a : full)
    for (const Word& b : full) {
      auto fa = factor_c_form(d, a);
      auto fb = factor_c_form(d, b);
      TElement p = mul(d, t_word(d, a), t_word(d, b));
      if (fa->mu != fb->lambda) {
        if (!p.is_zero()) return fail(why, "mismatched contours give nonzero product");
        continue;
      }
      auto w = construct_C(d, fa->lambda, fb->mu, fa->r + fb->r);
      if (!w) return fail(why, "composite parameters not realized");
      if (p != t_word(d, *w)) return fail(why, "grade addition fails");
    }
  return true;
}

// 7. Every matrix unit is reached: for each weight pair some grade r <= n + 2
// builds a word whose matrix is q^r times that unit, n = 2, 3.
bool crit_surjectivity(std::string& why) {
  for (int n : {2, 3}) {
    CoxeterData d(n);
    for (const Weight& lam : all_weights(n))
      for (const Weight& mu : all_weights(n)) {
        bool hit = false;
        for (long long r = 1; r <= n + 2 && !hit; ++r) {
          auto w = construct_C(d, lam, mu, r);
          if (!w) continue;
          if (matrix_of(d, t_word(d, *w)) != wm_unit(d, lam, mu, lp_monomial(r)))
            return fail(why, "constructed word has wrong matrix");
          hit = true;
        }
        if (!hit) return fail(why, "unit not reached for " + lam + "," + mu);
      }
  }
  return true;
}

// 8. Window sums of three consecutive length counts stabilize at 16 = 2^4 by
// some start at most 9, with counts enumerated up to length 12, n = 2.
bool crit_window(std::string& why) {
  CoxeterData d(2);
  std::vector<long long> counts;
  if (!check_window_rank(d, 12, 9, &counts))
    return fail(why, "window sums fail to stabilize at 16");
  if (counts.size() != 13) return fail(why, "count vector truncated");
  return true;
}

// 9. Modules: dimension 2^n m; at n = 2 the nilpotency order m decides
// irreducibility, matches the endomorphism dimension, and the characteristic
// polynomial of Q separates the central scalars.
bool crit_modules(std::string& why) {
  for (int n : {2, 3}) {
    CoxeterData d(n);
    for (int m : {1, 2})
      if (build_module(d, Rational(2), m).dim != (std::size_t(1) << n) * m)
        return fail(why, "module dimension wrong");
  }
  CoxeterData d(2);
  std::set<std::vector<Rational>> charpolys;
  for (long long c : {1, 2, 3, 5, 7}) {
    FiniteModule m1 = build_module(d, Rational(c), 1);
    if (!is_irreducible(m1)) return fail(why, "order-1 module not irreducible");
    FiniteModule m2 = build_module(d, Rational(c), 2);
    if (is_irreducible(m2)) return fail(why, "order-2 module wrongly irreducible");
    for (int m : {1, 2, 3})
      if (endomorphism_dim(build_module(d, Rational(c), m)) != std::size_t(m))
        return fail(why, "endomorphism dimension wrong");
    charpolys.insert(qm_charpoly(module_matrix_of(m2, q_element(d))));
  }
  if (charpolys.size() != 5) return fail(why, "characteristic polynomials collide");
  return true;
}

// 10. Direct and edge-chain convexity agree on every full-support region of at
// most 8 cells inside a fixed nine-cell window; the two-cell diagonal with a
// gap is rejected; every convex region in the window reads back from a word.
bool crit_convexity(std::string& why) {
  CoxeterData d(2);
  std::vector<Cell> window;
  for (int a = 0; a <= 2; ++a)
    for (long long b = a % 2; b <= a % 2 + 4; b += 2) window.push_back({a, b});
  if (window.size() != 9) return fail(why, "window misbuilt");

  for (unsigned mask = 1; mask < (1u << 9); ++mask) {
    std::vector<Cell> cells;
    for (int t = 0; t < 9; ++t)
      if (mask & (1u << t)) cells.push_back(window[t]);
    if (cells.size() > 8) continue;
    ERegion reg = make_region(d, std::vector<Cell>(cells));
    bool support[3] = {false, false, false};
    for (const Cell& c : reg.cells) support[c.a] = true;
    bool direct = convex_direct(reg);
    if (support[0] && support[1] && support[2]) {
      if (direct != convex_edge_chains(reg))
        return fail(why, "convexity criteria disagree");
    }
    if (direct) {
      ERegion norm = normalize_region(reg);
      Word w = region_to_word(norm);
      if (!is_minuscule(d, w)) return fail(why, "convex region reads back non-basis word");
      if (rank_and_embed(d, w) != norm)
        return fail(why, "convex region fails to round-trip");
    }
  }

  ERegion gap = make_region(d, {{0, 0}, {2, 2}});
  if (is_convex_region(gap)) return fail(why, "diagonal gap accepted");
  return true;
}

} // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "defining relations under exact multiplication (n=2,3,4)", 1.0, crit_relations},
      {2, "interval recognizer equals subword oracle, words of length <= 8 (n=2,3)", 120.0, crit_oracle},
      {3, "independent matrices with boundary-pair witnesses, length <= 8 (n=2,3)", 120.0, crit_faithfulness},
      {4, "Q acts as q, is central, and low degrees centralize only scalars", 60.0, crit_centre},
      {5, "contours and factorization of the nine-letter rank-six example", 1.0, crit_weights},
      {6, "orientation idempotents and graded matrix-unit products", 180.0, crit_matrix_units},
      {7, "every matrix unit reached with grade at most n+2 (n=2,3)", 60.0, crit_surjectivity},
      {8, "three-length window sums stabilize at 16 (n=2, lengths <= 12)", 120.0, crit_window},
      {9, "module dimensions, irreducibility dichotomy, endomorphisms, separation", 60.0, crit_modules},
      {10, "convexity criteria agree and convex regions round-trip", 60.0, crit_convexity},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    std::string why;
    bool ok = false;
    auto t0 = Clock::now();
    try {
      ok = c.body(why);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    bool in_budget = secs < c.budget_seconds;
    bool pass = ok && in_budget;
    if (!pass) ++failures;
    std::printf("%s  %2d  %-72s  %8.3f s (budget %.0f s)%s%s\n",
                pass ? "PASS" : "FAIL", c.id, c.label.c_str(), secs,
                c.budget_seconds, why.empty() ? "" : "  -- ", why.c_str());
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  else std::printf("all 10 criteria passed\n");
  return failures ? 1 : 0;
}
