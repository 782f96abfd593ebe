#include "ntlc/weightrep.hpp"

#include <algorithm>

namespace ntlc {

LaurentPoly lp_zero() { return {}; }

LaurentPoly lp_monomial(long long exp, const Rational& c) {
  LaurentPoly p;
  if (c != 0) p.coeffs[exp] = c;
  return p;
}

LaurentPoly lp_add(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out = a;
  for (const auto& [e, c] : b.coeffs) {
    auto it = out.coeffs.find(e);
    if (it == out.coeffs.end()) {
      out.coeffs.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) out.coeffs.erase(it);
    }
  }
  return out;
}

LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.coeffs) {
    for (const auto& [eb, cb] : b.coeffs) {
      auto& slot = out.coeffs[ea + eb];
      slot += ca * cb;
    }
  }
  std::erase_if(out.coeffs, [](const auto& kv) { return kv.second == 0; });
  return out;
}

LaurentPoly lp_scale(const LaurentPoly& a, const Rational& c) {
  LaurentPoly out;
  if (c == 0) return out;
  for (const auto& [e, k] : a.coeffs) out.coeffs.emplace(e, k * c);
  return out;
}

Rational lp_eval(const LaurentPoly& a, const Rational& q) {
  Rational acc = 0;
  for (const auto& [e, c] : a.coeffs) {
    Rational p = 1;
    for (long long k = 0; k < std::llabs(e); ++k) p *= q;
    if (e < 0) p = Rational(1) / p;
    acc += c * p;
  }
  return acc;
}

std::optional<std::pair<long long, Rational>> lp_as_monomial(
    const LaurentPoly& a) {
  if (a.coeffs.size() != 1) return std::nullopt;
  const auto& [e, c] = *a.coeffs.begin();
  return std::make_pair(e, c);
}

StateVector sv_zero(const CoxeterData& d) { return StateVector{d.rank(), {}}; }

StateVector sv_basis(const CoxeterData& d, const Weight& w) {
  check_weight(d, w);
  StateVector v{d.rank(), {}};
  v.entries[w] = lp_monomial(0);
  return v;
}

StateVector sv_add(const StateVector& a, const StateVector& b) {
  if (a.n != b.n) throw domain_error("rank mismatch in vector addition");
  StateVector out = a;
  for (const auto& [w, p] : b.entries) {
    auto it = out.entries.find(w);
    if (it == out.entries.end()) {
      out.entries.emplace(w, p);
    } else {
      it->second = lp_add(it->second, p);
      if (it->second.is_zero()) out.entries.erase(it);
    }
  }
  return out;
}

StateVector sv_scale(const StateVector& a, const LaurentPoly& c) {
  StateVector out{a.n, {}};
  for (const auto& [w, p] : a.entries) {
    LaurentPoly q = lp_mul(p, c);
    if (!q.is_zero()) out.entries.emplace(w, q);
  }
  return out;
}

std::optional<std::pair<Weight, LaurentPoly>> apply_generator(
    const CoxeterData& d, int i, const Weight& s) {
  d.check_letter(i);
  check_weight(d, s);
  const int n = d.rank();
  Weight t = s;
  if (i == 0) {
    if (s[0] != '+') return std::nullopt;
    t[0] = '-';
    return std::make_pair(t, lp_monomial(1));
  }
  if (i == n) {
    if (s[n - 1] != '-') return std::nullopt;
    t[n - 1] = '+';
    return std::make_pair(t, lp_monomial(0));
  }
  if (s[i - 1] == '-' && s[i] == '+') {
    t[i - 1] = '+';
    t[i] = '-';
    return std::make_pair(t, lp_monomial(0));
  }
  return std::nullopt;
}

std::optional<std::pair<Weight, long long>> apply_word(const CoxeterData& d,
                                                       const Word& w,
                                                       const Weight& s) {
  Weight cur = s;
  long long exp = 0;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    auto step = apply_generator(d, *it, cur);
    if (!step) return std::nullopt;
    cur = step->first;
    if (*it == 0) exp += 1;
  }
  return std::make_pair(cur, exp);
}

StateVector apply_element(const CoxeterData& d, const TElement& a,
                          const StateVector& v) {
  if (a.n != v.n) throw domain_error("rank mismatch in module action");
  StateVector out{d.rank(), {}};
  for (const auto& [w, c] : a.terms) {
    for (const auto& [s, p] : v.entries) {
      auto img = apply_word(d, w, s);
      if (!img) continue;
      LaurentPoly contrib = lp_mul(p, lp_monomial(img->second, c));
      auto it = out.entries.find(img->first);
      if (it == out.entries.end()) {
        out.entries.emplace(img->first, contrib);
      } else {
        it->second = lp_add(it->second, contrib);
        if (it->second.is_zero()) out.entries.erase(it);
      }
    }
  }
  return out;
}

WeightMatrix wm_zero(const CoxeterData& d) { return WeightMatrix{d.rank(), {}}; }

WeightMatrix wm_identity(const CoxeterData& d) {
  WeightMatrix m{d.rank(), {}};
  for (const Weight& w : all_weights(d.rank()))
    m.entries[{w, w}] = lp_monomial(0);
  return m;
}

WeightMatrix wm_unit(const CoxeterData& d, const Weight& row, const Weight& col,
                     const LaurentPoly& value) {
  check_weight(d, row);
  check_weight(d, col);
  WeightMatrix m{d.rank(), {}};
  if (!value.is_zero()) m.entries[{row, col}] = value;
  return m;
}

WeightMatrix wm_add(const WeightMatrix& a, const WeightMatrix& b) {
  if (a.n != b.n) throw domain_error("rank mismatch in matrix addition");
  WeightMatrix out = a;
  for (const auto& [rc, p] : b.entries) {
    auto it = out.entries.find(rc);
    if (it == out.entries.end()) {
      out.entries.emplace(rc, p);
    } else {
      it->second = lp_add(it->second, p);
      if (it->second.is_zero()) out.entries.erase(it);
    }
  }
  return out;
}

WeightMatrix wm_mul(const WeightMatrix& a, const WeightMatrix& b) {
  if (a.n != b.n) throw domain_error("rank mismatch in matrix product");
  WeightMatrix out{a.n, {}};
  for (const auto& [rcA, pA] : a.entries) {
    for (const auto& [rcB, pB] : b.entries) {
      if (rcA.second != rcB.first) continue;
      LaurentPoly prod = lp_mul(pA, pB);
      auto key = std::make_pair(rcA.first, rcB.second);
      auto it = out.entries.find(key);
      if (it == out.entries.end()) {
        out.entries.emplace(key, prod);
      } else {
        it->second = lp_add(it->second, prod);
        if (it->second.is_zero()) out.entries.erase(it);
      }
    }
  }
  return out;
}

WeightMatrix wm_scale(const WeightMatrix& a, const LaurentPoly& c) {
  WeightMatrix out{a.n, {}};
  for (const auto& [rc, p] : a.entries) {
    LaurentPoly q = lp_mul(p, c);
    if (!q.is_zero()) out.entries.emplace(rc, q);
  }
  return out;
}

WeightMatrix matrix_of(const CoxeterData& d, const TElement& a) {
  if (a.n != d.rank()) throw domain_error("rank mismatch in matrix_of");
  WeightMatrix m{d.rank(), {}};
  for (const auto& [w, c] : a.terms) {
    for (const Weight& col : all_weights(d.rank())) {
      auto img = apply_word(d, w, col);
      if (!img) continue;
      auto key = std::make_pair(img->first, col);
      auto it = m.entries.find(key);
      LaurentPoly contrib = lp_monomial(img->second, c);
      if (it == m.entries.end()) {
        m.entries.emplace(key, contrib);
      } else {
        it->second = lp_add(it->second, contrib);
        if (it->second.is_zero()) m.entries.erase(it);
      }
    }
  }
  return m;
}

void check_boundary(const CoxeterData& d, const IdealBoundary& j) {
  if (static_cast<int>(j.h.size()) != d.rank() + 1)
    throw domain_error("boundary must have one rank per column 0..n");
  for (int p = 0; p <= d.rank(); ++p) {
    if (((j.h[p] - p) % 2 + 2) % 2 != 0)
      throw domain_error("boundary rank parity violated at column " +
                         std::to_string(p));
    if (p > 0 && std::llabs(j.h[p] - j.h[p - 1]) != 1)
      throw domain_error("boundary ranks of adjacent columns must differ by 1");
  }
}

std::pair<long long, Weight> psi(const CoxeterData& d, const IdealBoundary& j) {
  check_boundary(d, j);
  Weight lambda;
  for (int i = 1; i <= d.rank(); ++i)
    lambda += (j.h[i] == j.h[i - 1] + 1) ? '+' : '-';
  return {j.h[0] / 2, lambda};
}

IdealBoundary psi_inv(const CoxeterData& d, long long c, const Weight& lambda) {
  check_weight(d, lambda);
  IdealBoundary j;
  j.h.resize(d.rank() + 1);
  j.h[0] = 2 * c;
  for (int i = 1; i <= d.rank(); ++i)
    j.h[i] = j.h[i - 1] + (lambda[i - 1] == '+' ? 1 : -1);
  return j;
}

std::optional<IdealBoundary> raise_ideal(const CoxeterData& d, int i,
                                         const IdealBoundary& j) {
  d.check_letter(i);
  check_boundary(d, j);
  for (int p : {i - 1, i + 1}) {
    if (p < 0 || p > d.rank()) continue;
    if (j.h[p] != j.h[i] + 1) return std::nullopt;
  }
  IdealBoundary out = j;
  out.h[i] += 2;
  return out;
}

ERegion interval_region(const CoxeterData& d, const IdealBoundary& j,
                        const IdealBoundary& j2) {
  check_boundary(d, j);
  check_boundary(d, j2);
  std::vector<Cell> cells;
  for (int p = 0; p <= d.rank(); ++p) {
    if (j2.h[p] < j.h[p])
      throw domain_error("interval region requires nested boundaries");
    for (long long b = j.h[p] + 2; b <= j2.h[p]; b += 2)
      cells.push_back(Cell{p, b});
  }
  return make_region(d, std::move(cells));
}

FaithWitness witness_for_word(const CoxeterData& d, const Word& w) {
  if (!is_minuscule(d, w))
    throw domain_error("independence witnesses exist for minuscule words");
  const int n = d.rank();
  Word wfull = complete_full_support(d, w);
  ERegion reg = rank_and_embed(d, wfull);

  std::vector<long long> lo(n + 1, 0);
  std::vector<char> seen(n + 1, 0);
  for (const Cell& c : reg.cells) {
    if (!seen[c.a]) {
      seen[c.a] = 1;
      lo[c.a] = c.b;
    } else {
      lo[c.a] = std::min(lo[c.a], c.b);
    }
  }

  std::vector<char> insupp(n + 1, 0);
  for (int x : w) insupp[x] = 1;
  IdealBoundary j;
  j.h.resize(n + 1);
  // Supported columns start two below their first heap cell; the appended
  // singletons off the support are treated as already filled.
  for (int p = 0; p <= n; ++p) j.h[p] = insupp[p] ? lo[p] - 2 : lo[p];
  check_boundary(d, j);

  IdealBoundary cur = j;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    auto next = raise_ideal(d, *it, cur);
    if (!next)
      throw internal_error("witness boundary must admit the whole word");
    cur = *next;
  }

  FaithWitness fw;
  fw.j = j;
  fw.j2 = cur;
  auto [c1, col] = psi(d, j);
  auto [c2, row] = psi(d, cur);
  fw.col = col;
  fw.row = row;
  fw.exp = c2 - c1;
  if (fw.exp != std::count(w.begin(), w.end(), 0))
    throw internal_error("witness exponent must count the 0 letters");

  // The boundary pair must carve out exactly the heap of w, and the string
  // model must agree with the boundary model on the witness coordinates.
  ERegion carved = normalize_region(interval_region(d, j, cur));
  if (!w.empty() && carved != rank_and_embed(d, w))
    throw internal_error("witness interval must reproduce the heap of the word");
  auto img = apply_word(d, w, col);
  if (!img || img->first != row || img->second != fw.exp)
    throw internal_error("string and boundary models disagree on the witness");
  return fw;
}

} // namespace ntlc
