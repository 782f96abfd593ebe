#include "ntlc/algebra.hpp"

#include <algorithm>

namespace ntlc {

TElement t_zero(const CoxeterData& d) { return TElement{d.rank(), {}}; }

TElement t_one(const CoxeterData& d) {
  TElement e{d.rank(), {}};
  e.terms[Word{}] = 1;
  return e;
}

TElement t_word(const CoxeterData& d, const Word& w) {
  if (!is_minuscule(d, w))
    throw domain_error("basis elements are indexed by minuscule words");
  TElement e{d.rank(), {}};
  e.terms[cf_normal_form(d, w)] = 1;
  return e;
}

void t_add_term(const CoxeterData& d, TElement& a, const Word& canonical_word,
                const Rational& coeff) {
  if (coeff == 0) return;
  auto it = a.terms.find(canonical_word);
  if (it == a.terms.end()) {
    a.terms.emplace(canonical_word, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) a.terms.erase(it);
  }
}

TElement t_add(const TElement& a, const TElement& b) {
  if (a.n != b.n) throw domain_error("rank mismatch in addition");
  TElement out = a;
  for (const auto& [w, c] : b.terms) {
    auto it = out.terms.find(w);
    if (it == out.terms.end()) {
      out.terms.emplace(w, c);
    } else {
      it->second += c;
      if (it->second == 0) out.terms.erase(it);
    }
  }
  return out;
}

TElement t_scale(const TElement& a, const Rational& c) {
  TElement out{a.n, {}};
  if (c == 0) return out;
  for (const auto& [w, k] : a.terms) out.terms.emplace(w, k * c);
  return out;
}

TElement mul(const CoxeterData& d, const TElement& a, const TElement& b) {
  if (a.n != b.n || a.n != d.rank())
    throw domain_error("rank mismatch in multiplication");
  TElement out{d.rank(), {}};
  for (const auto& [wa, ca] : a.terms) {
    for (const auto& [wb, cb] : b.terms) {
      Word prod = wa;
      prod.insert(prod.end(), wb.begin(), wb.end());
      if (!is_minuscule(d, prod)) continue;
      t_add_term(d, out, cf_normal_form(d, prod), ca * cb);
    }
  }
  return out;
}

TElement q_element(const CoxeterData& d) {
  TElement q{d.rank(), {}};
  for (const Weight& lam : all_weights(d.rank())) {
    Word w = cf_normal_form(d, coxeter_word(d, lam));
    auto [it, fresh] = q.terms.emplace(w, 1);
    if (!fresh) throw internal_error("coxeter words must be pairwise distinct");
    (void)it;
  }
  if (q.terms.size() != (std::size_t(1) << d.rank()))
    throw internal_error("Q must have exactly 2^n terms");
  return q;
}

std::optional<CForm> factor_c_form(const CoxeterData& d, const Word& w) {
  if (!is_minuscule(d, w))
    throw domain_error("C-form data is defined for minuscule words");
  if (!has_full_support(d, w)) return std::nullopt;
  auto [lower, upper] = weights_of(d, w);
  long long r = std::count(w.begin(), w.end(), 0);
  return CForm{upper, lower, r};
}

std::optional<std::pair<Weight, Word>> strip_top_layer(const CoxeterData& d,
                                                       const Word& w) {
  if (!is_minuscule(d, w) || !has_full_support(d, w)) return std::nullopt;
  ERegion reg = rank_and_embed(d, w);

  std::vector<long long> hi(d.rank() + 1, 0);
  std::vector<char> seen(d.rank() + 1, 0);
  for (const Cell& c : reg.cells) {
    if (!seen[c.a]) {
      seen[c.a] = 1;
      hi[c.a] = c.b;
    } else {
      hi[c.a] = std::max(hi[c.a], c.b);
    }
  }
  Weight lambda;
  for (int i = 1; i <= d.rank(); ++i) {
    long long delta = hi[i] - hi[i - 1];
    if (delta != 1 && delta != -1) return std::nullopt;
    lambda += (delta == 1) ? '+' : '-';
  }

  std::vector<Cell> rest;
  for (const Cell& c : reg.cells)
    if (c.b != hi[c.a]) rest.push_back(c);
  Word tail = region_to_word(ERegion{d.rank(), rest});
  if (!is_minuscule(d, tail)) return std::nullopt;
  Word rebuilt = coxeter_word(d, lambda);
  rebuilt.insert(rebuilt.end(), tail.begin(), tail.end());
  if (!is_minuscule(d, rebuilt)) return std::nullopt;
  if (cf_normal_form(d, rebuilt) != cf_normal_form(d, w)) return std::nullopt;
  return std::make_pair(lambda, cf_normal_form(d, tail));
}

std::optional<TElement> divide_by_q(const CoxeterData& d, const TElement& a) {
  if (a.n != d.rank()) throw domain_error("rank mismatch in division");
  if (a.is_zero()) return t_zero(d);
  TElement q = q_element(d);

  // Sources: stripped term -> (coefficient, words of a that strip to it).
  std::map<Word, std::pair<Rational, std::vector<Word>>> groups;
  for (const auto& [w, c] : a.terms) {
    auto stripped = strip_top_layer(d, w);
    if (!stripped) return std::nullopt;
    auto& g = groups[stripped->second];
    if (g.second.empty()) {
      g.first = c;
    } else if (g.first != c) {
      return std::nullopt;
    }
    g.second.push_back(w);
  }

  TElement out{d.rank(), {}};
  for (auto& [v, g] : groups) {
    TElement qv = mul(d, q, t_word(d, v));
    if (qv.terms.size() != g.second.size()) return std::nullopt;
    std::sort(g.second.begin(), g.second.end());
    auto it = qv.terms.begin();
    for (const Word& w : g.second) {
      if (it == qv.terms.end() || it->first != w || it->second != 1)
        return std::nullopt;
      ++it;
    }
    out.terms.emplace(v, g.first);
  }
  if (mul(d, q, out) != a)
    throw internal_error("division by Q produced an unverified quotient");
  return out;
}

long long q_valuation(const CoxeterData& d, const TElement& a) {
  if (a.is_zero())
    throw domain_error("the Q-adic valuation of 0 is undefined");
  long long val = 0;
  TElement cur = a;
  // Each division removes one Coxeter layer from every term, so the minimum
  // term length bounds the number of rounds.
  long long guard =
      static_cast<long long>(cur.terms.begin()->first.size()) /
          (d.rank() + 1) +
      1;
  while (auto b = divide_by_q(d, cur)) {
    cur = *b;
    ++val;
    if (val > guard)
      throw internal_error("Q-adic valuation exceeded its length bound");
  }
  return val;
}

} // namespace ntlc
