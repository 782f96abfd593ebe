#include "ntlc/verify.hpp"

#include "ntlc/weightrep.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>

namespace ntlc {

namespace {

using json = nlohmann::json;

// Invokes fn on every word over letters 0..n of each length 0..max_len.
void for_each_word(int n, int max_len, const std::function<void(const Word&)>& fn) {
  for (int len = 0; len <= max_len; ++len) {
    Word w(static_cast<std::size_t>(len), 0);
    fn(w);
    while (true) {
      int k = len - 1;
      while (k >= 0 && w[static_cast<std::size_t>(k)] == n) {
        w[static_cast<std::size_t>(k)] = 0;
        --k;
      }
      if (k < 0) break;
      ++w[static_cast<std::size_t>(k)];
      fn(w);
    }
  }
}

std::vector<Word> basis_words_up_to(const CoxeterData& d, int max_len) {
  EnumerationReport rep = enumerate_minuscule(d, max_len, /*keep_words=*/true);
  std::vector<Word> out;
  for (const auto& level : rep.words)
    out.insert(out.end(), level.begin(), level.end());
  return out;
}

json word_json(const Word& w) { return json(w); }

// One commutation-equivalent reordering of w, built by repeatedly moving a
// random swappable adjacent pair; used to probe orbit invariance.
Word random_orbit_member(const CoxeterData& d, Word w, std::mt19937_64& rng) {
  if (w.size() < 2) return w;
  for (int step = 0; step < 4 * static_cast<int>(w.size()); ++step) {
    std::uniform_int_distribution<std::size_t> pick(0, w.size() - 2);
    std::size_t i = pick(rng);
    if (d.commute(w[i], w[i + 1])) std::swap(w[i], w[i + 1]);
  }
  return w;
}

// Rank of an integer matrix over F_p, p = 2147483629 (products fit in u64).
int rank_mod_p(std::vector<std::vector<std::uint64_t>> m) {
  constexpr std::uint64_t p = 2147483629ULL;
  auto powmod = [](std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    b %= p;
    while (e > 0) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  int rank = 0;
  std::size_t rows = m.size();
  std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::size_t lead = 0;
  for (std::size_t col = 0; col < cols && lead < rows; ++col) {
    std::size_t piv = lead;
    while (piv < rows && m[piv][col] % p == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[lead]);
    std::uint64_t inv = powmod(m[lead][col] % p, p - 2);
    for (std::size_t j = col; j < cols; ++j) m[lead][j] = m[lead][j] % p * inv % p;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead) continue;
      std::uint64_t f = m[r][col] % p;
      if (f == 0) continue;
      for (std::size_t j = col; j < cols; ++j)
        m[r][j] = (m[r][j] % p + (p - f) * (m[lead][j] % p)) % p;
    }
    ++lead;
    ++rank;
  }
  return rank;
}

struct Scope {
  int oracle_len;
  int cf_len;
  int orbit_len;
  int embed_len;
  int basis_len;     // basis-word pool for product/sandwich style checks
  int faith_len;
  int window_len;
  int random_trials;
  std::vector<Rational> module_cs;
  std::vector<int> module_ms;
};

Scope scope_for(VerifyLevel level) {
  switch (level) {
    case VerifyLevel::quick:
      return {4, 4, 4, 6, 4, 4, 8, 30, {Rational(1), Rational(2)}, {1, 2}};
    case VerifyLevel::standard:
      return {6, 6, 5, 8, 5, 6, 10, 100, {Rational(1), Rational(2), Rational(5)}, {1, 2, 3}};
    case VerifyLevel::full:
    default:
      return {8,
              8,
              6,
              10,
              6,
              8,
              12,
              200,
              {Rational(1), Rational(2), Rational(3), Rational(5), Rational(7)},
              {1, 2, 3}};
  }
}

} // namespace

VerifyLevel level_from_string(const std::string& s) {
  if (s == "quick") return VerifyLevel::quick;
  if (s == "standard") return VerifyLevel::standard;
  if (s == "full") return VerifyLevel::full;
  throw domain_error("unknown verification level: " + s);
}

std::string level_to_string(VerifyLevel level) {
  switch (level) {
    case VerifyLevel::quick: return "quick";
    case VerifyLevel::standard: return "standard";
    case VerifyLevel::full: return "full";
  }
  return "standard";
}

bool VerifyReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

std::optional<Word> find_oracle_disagreement(const CoxeterData& d, int max_len,
                                             const CoxeterData& oracle_d) {
  std::optional<Word> bad;
  for_each_word(d.rank(), max_len, [&](const Word& w) {
    if (bad) return;
    bool fast = is_minuscule(d, w);
    bool slow = !forbidden_oracle(oracle_d, w, max_len);
    if (fast != slow) bad = w;
  });
  return bad;
}

FaithfulnessOutcome check_faithfulness(const CoxeterData& d, int max_len) {
  FaithfulnessOutcome out;
  std::vector<Word> words = basis_words_up_to(d, max_len);
  out.word_count = words.size();

  // Certificate 1: the deterministic witness triple of each word must not be
  // produced as a matrix entry position/exponent by any other basis word.
  std::map<std::tuple<Weight, Weight, long long>, std::set<Word>> hits;
  std::vector<FaithWitness> witnesses;
  witnesses.reserve(words.size());
  for (const Word& w : words) witnesses.push_back(witness_for_word(d, w));
  std::vector<Weight> weights = all_weights(d.rank());
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (const Weight& mu : weights) {
      auto res = apply_word(d, words[i], mu);
      if (res) hits[{res->first, mu, res->second}].insert(words[i]);
    }
  }
  out.witnesses_unique = true;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const FaithWitness& fw = witnesses[i];
    auto it = hits.find({fw.row, fw.col, fw.exp});
    if (it == hits.end() || it->second.size() != 1 ||
        *it->second.begin() != words[i]) {
      out.witnesses_unique = false;
      break;
    }
  }

  // Certificate 2: stack the matrices evaluated at several integer points and
  // confirm full row rank modulo a large prime.
  std::map<Weight, std::size_t> col_of;
  for (std::size_t k = 0; k < weights.size(); ++k) col_of[weights[k]] = k;
  const std::vector<long long> points = {2, 3, 5, 7};
  std::size_t width = weights.size() * weights.size() * points.size();
  std::vector<std::vector<std::uint64_t>> rows;
  rows.reserve(words.size());
  constexpr std::uint64_t p = 2147483629ULL;
  for (const Word& w : words) {
    std::vector<std::uint64_t> row(width, 0);
    for (const Weight& mu : weights) {
      auto res = apply_word(d, w, mu);
      if (!res) continue;
      std::size_t cell =
          (col_of[res->first] * weights.size() + col_of[mu]) * points.size();
      for (std::size_t t = 0; t < points.size(); ++t) {
        std::uint64_t v = 1;
        for (long long e = 0; e < res->second; ++e)
          v = v * static_cast<std::uint64_t>(points[t]) % p;
        row[cell + t] = v;
      }
    }
    rows.push_back(std::move(row));
  }
  out.evaluation_rank_full =
      rank_mod_p(rows) == static_cast<int>(words.size());
  return out;
}

bool check_window_rank(const CoxeterData& d, int max_len, int max_start,
                       std::vector<long long>* counts_out) {
  EnumerationReport rep = enumerate_minuscule(d, max_len);
  if (counts_out) *counts_out = rep.counts;
  long long target = 1;
  for (int i = 0; i < 2 * d.rank(); ++i) target *= 2;
  int window = d.rank() + 1;
  int start = -1;
  for (int s = 0; s + window <= max_len + 1; ++s) {
    bool ok = true;
    for (int t = s; t + window <= max_len + 1; ++t) {
      long long sum = 0;
      for (int j = 0; j < window; ++j) sum += rep.counts[static_cast<std::size_t>(t + j)];
      if (sum != target) {
        ok = false;
        break;
      }
    }
    if (ok) {
      start = s;
      break;
    }
  }
  return start >= 0 && start <= max_start;
}

bool check_centre_degree_bound(const CoxeterData& d) {
  std::vector<Word> words = basis_words_up_to(d, d.rank());
  std::sort(words.begin(), words.end());
  std::map<Word, std::size_t> index;
  for (std::size_t i = 0; i < words.size(); ++i) index[words[i]] = i;

  // Rows: one per (generator, product word) pair; columns: the span basis.
  std::map<std::pair<int, Word>, std::size_t> row_of;
  std::vector<std::vector<Rational>> rows;
  auto row_for = [&](int g, const Word& w) -> std::vector<Rational>& {
    auto it = row_of.find({g, w});
    if (it == row_of.end()) {
      it = row_of.emplace(std::make_pair(g, w), rows.size()).first;
      rows.emplace_back(words.size(), Rational(0));
    }
    return rows[it->second];
  };
  for (std::size_t i = 0; i < words.size(); ++i) {
    TElement b = t_word(d, words[i]);
    for (int g = 0; g <= d.rank(); ++g) {
      TElement comm = t_add(mul(d, b, t_word(d, Word{g})),
                            t_scale(mul(d, t_word(d, Word{g}), b), Rational(-1)));
      for (const auto& [w, coeff] : comm.terms) row_for(g, w)[i] = coeff;
    }
  }
  QMatrix sys = QMatrix::zero(rows.size(), words.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < words.size(); ++c) sys.at(r, c) = rows[r][c];
  std::size_t nullity = words.size() - static_cast<std::size_t>(qm_rank(sys));
  // The identity word always commutes; the solution space must be exactly it.
  return nullity == 1;
}

VerifyReport verify_suite(int n, VerifyLevel level, std::uint64_t seed, Fault fault) {
  if (n < 2 || n > 4)
    throw domain_error("the verification suite runs for n in {2, 3, 4}");
  CoxeterData d(n);
  CoxeterData oracle_d(n);
  if (fault == Fault::arrow_flip) oracle_d.invert_arrows();

  Scope sc = scope_for(level);
  std::mt19937_64 rng(seed);

  VerifyReport report;
  report.n = n;
  report.level = level;
  report.seed = seed;
  report.fault = fault;

  auto run = [&](const std::string& name, const std::string& ref,
                 const std::function<std::optional<json>()>& fn) {
    CheckResult res;
    res.name = name;
    res.ref = ref;
    auto t0 = std::chrono::steady_clock::now();
    try {
      std::optional<json> witness = fn();
      res.pass = !witness.has_value();
      if (witness) res.witness = *witness;
    } catch (const std::exception& e) {
      res.pass = false;
      res.witness = json{{"exception", e.what()}};
    }
    res.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    report.checks.push_back(std::move(res));
  };

  std::vector<Word> basis = basis_words_up_to(d, sc.basis_len);

  // --- Diagram and canonical form ---------------------------------------

  run("bond_table", "bond exponents: 4 at both ends with arrows pointing out, 3 inside, 2 for non-neighbours", [&]() -> std::optional<json> {
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) {
        int expect;
        if (i == j) expect = 1;
        else if (std::abs(i - j) > 1) expect = 2;
        else if (std::min(i, j) == 0 || std::min(i, j) == n - 1) expect = 4;
        else expect = 3;
        if (d.bond(i, j) != expect)
          return json{{"i", i}, {"j", j}, {"bond", d.bond(i, j)}, {"expected", expect}};
        bool arrow = d.bond(i, j) == 4 && (j == 0 || j == n);
        if (d.arrow_toward(i, j) != arrow)
          return json{{"i", i}, {"j", j}, {"arrow", d.arrow_toward(i, j)}};
      }
    return std::nullopt;
  });

  run("cf_idempotent", "cf(cf(w)) == cf(w) and cf preserves length and letter multiset", [&]() -> std::optional<json> {
    std::optional<json> bad;
    for_each_word(n, sc.cf_len, [&](const Word& w) {
      if (bad) return;
      Word c = cf_normal_form(d, w);
      if (cf_normal_form(d, c) != c) {
        bad = json{{"word", word_json(w)}, {"cf", word_json(c)}};
        return;
      }
      Word a = w, b = c;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (a != b) bad = json{{"word", word_json(w)}, {"cf", word_json(c)}};
    });
    return bad;
  });

  run("cf_orbit_constant", "commutation-equivalent words share one canonical form", [&]() -> std::optional<json> {
    std::optional<json> bad;
    for_each_word(n, sc.orbit_len, [&](const Word& w) {
      if (bad) return;
      Word c = cf_normal_form(d, w);
      for (int t = 0; t < 3; ++t) {
        Word v = random_orbit_member(d, w, rng);
        if (cf_normal_form(d, v) != c) {
          bad = json{{"word", word_json(w)}, {"other", word_json(v)}};
          return;
        }
      }
    });
    return bad;
  });

  run("oracle_agreement", "interval test for the minuscule property matches the brute-force pattern search", [&]() -> std::optional<json> {
    auto bad = find_oracle_disagreement(d, sc.oracle_len, oracle_d);
    if (bad) return json{{"word", word_json(*bad)}};
    return std::nullopt;
  });

  // --- Heaps and embeddings ---------------------------------------------

  std::vector<Word> embed_pool = basis_words_up_to(d, sc.embed_len);

  run("embedding_readback", "reading the embedded region back by descending rank recovers the word", [&]() -> std::optional<json> {
    for (const Word& w : embed_pool) {
      ERegion reg = rank_and_embed(d, w);
      if (reg.cells.size() != w.size()) return json{{"word", word_json(w)}};
      Word back = region_to_word(reg);
      if (cf_normal_form(d, back) != cf_normal_form(d, w))
        return json{{"word", word_json(w)}, {"readback", word_json(back)}};
    }
    return std::nullopt;
  });

  run("embedding_convex", "embedded regions of connected-support words are convex", [&]() -> std::optional<json> {
    for (const Word& w : embed_pool) {
      auto comps = support_components(word_support(w));
      if (comps.size() != 1) continue;
      ERegion reg = rank_and_embed(d, w);
      if (!convex_direct(reg)) return json{{"word", word_json(w)}};
    }
    return std::nullopt;
  });

  run("embedding_orbit_stable", "commutation-equivalent words embed to the same region", [&]() -> std::optional<json> {
    for (const Word& w : embed_pool) {
      if (w.size() < 2) continue;
      Word v = random_orbit_member(d, w, rng);
      if (!(rank_and_embed(d, v) == rank_and_embed(d, w)))
        return json{{"word", word_json(w)}, {"other", word_json(v)}};
    }
    return std::nullopt;
  });

  run("heap_alternating", "within each edge chain consecutive elements carry different labels", [&]() -> std::optional<json> {
    for (const Word& w : embed_pool) {
      // Positions with labels in {s, s+1} are totally ordered left to right.
      for (int s = 0; s < n; ++s) {
        std::vector<int> chain; // positions, left-to-right = top-down
        for (std::size_t i = 0; i < w.size(); ++i)
          if (w[i] == s || w[i] == s + 1) chain.push_back(static_cast<int>(i));
        for (std::size_t k = 0; k + 1 < chain.size(); ++k)
          if (w[static_cast<std::size_t>(chain[k])] ==
              w[static_cast<std::size_t>(chain[k + 1])])
            return json{{"word", word_json(w)}, {"edge", s}};
      }
    }
    return std::nullopt;
  });

  run("heap_cover_labels", "covering pairs in a minuscule heap carry adjacent labels", [&]() -> std::optional<json> {
    for (const Word& w : embed_pool) {
      Heap h = heap_from_word(d, w);
      for (auto [upper, lower] : h.covers())
        if (std::abs(h.labels[static_cast<std::size_t>(upper)] -
                     h.labels[static_cast<std::size_t>(lower)]) != 1)
          return json{{"word", word_json(w)}, {"upper", upper}, {"lower", lower}};
    }
    return std::nullopt;
  });

  run("split_factorization", "any prefix/suffix split of a basis word embeds as a filter over an ideal", [&]() -> std::optional<json> {
    for (const Word& w : embed_pool) {
      if (w.empty()) continue;
      ERegion reg = rank_and_embed(d, w);
      Word order = region_to_word(reg);
      if (cf_normal_form(d, order) != cf_normal_form(d, w))
        return json{{"word", word_json(w)}};
      for (std::size_t k = 1; k < w.size(); ++k) {
        Word u(w.begin(), w.begin() + static_cast<long>(k));
        Word v(w.begin() + static_cast<long>(k), w.end());
        if (!is_minuscule(d, u) || !is_minuscule(d, v))
          return json{{"word", word_json(w)}, {"split", k}};
      }
    }
    return std::nullopt;
  });

  run("coxeter_family", "the 2^n dressed orientations give distinct canonical words fixing their weight pair", [&]() -> std::optional<json> {
    std::set<Word> seen;
    for (const Weight& lam : all_weights(n)) {
      Word w = coxeter_word(d, lam);
      if (w.size() != static_cast<std::size_t>(n + 1))
        return json{{"weight", lam}, {"word", word_json(w)}};
      auto [lo, hi] = weights_of(d, w);
      if (lo != lam || hi != lam) return json{{"weight", lam}};
      seen.insert(cf_normal_form(d, w));
    }
    if (seen.size() != all_weights(n).size())
      return json{{"distinct", seen.size()}};
    return std::nullopt;
  });

  // --- Algebra ----------------------------------------------------------

  run("defining_relations", "squares vanish, distant letters commute, short braids vanish", [&]() -> std::optional<json> {
    for (int i = 0; i <= n; ++i) {
      TElement ui = t_word(d, Word{i});
      if (!mul(d, ui, ui).is_zero()) return json{{"i", i}};
      for (int j = 0; j <= n; ++j) {
        if (i == j) continue;
        TElement uj = t_word(d, Word{j});
        if (d.bond(i, j) == 2) {
          if (!(mul(d, ui, uj) == mul(d, uj, ui))) return json{{"i", i}, {"j", j}};
        } else {
          bool want_zero = d.forbidden_triple(i, j);
          TElement triple = mul(d, mul(d, ui, uj), ui);
          if (want_zero != triple.is_zero())
            return json{{"i", i}, {"j", j}, {"triple_zero", triple.is_zero()}};
        }
      }
    }
    return std::nullopt;
  });

  run("associativity", "(ab)c == a(bc) on random basis elements", [&]() -> std::optional<json> {
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    for (int t = 0; t < sc.random_trials; ++t) {
      TElement a = t_word(d, basis[pick(rng)]);
      TElement b = t_word(d, basis[pick(rng)]);
      TElement c = t_word(d, basis[pick(rng)]);
      if (!(mul(d, mul(d, a, b), c) == mul(d, a, mul(d, b, c))))
        return json{{"trial", t}};
    }
    return std::nullopt;
  });

  run("q_shape", "the central element has 2^n terms, all of length n+1 with unit coefficient", [&]() -> std::optional<json> {
    TElement q = q_element(d);
    if (q.terms.size() != all_weights(n).size())
      return json{{"terms", q.terms.size()}};
    for (const auto& [w, c] : q.terms)
      if (w.size() != static_cast<std::size_t>(n + 1) || c != Rational(1))
        return json{{"word", word_json(w)}};
    return std::nullopt;
  });

  run("q_central", "the central element commutes with every generator and sampled basis elements", [&]() -> std::optional<json> {
    TElement q = q_element(d);
    for (int i = 0; i <= n; ++i) {
      TElement ui = t_word(d, Word{i});
      if (!(mul(d, q, ui) == mul(d, ui, q))) return json{{"i", i}};
    }
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    for (int t = 0; t < sc.random_trials; ++t) {
      TElement b = t_word(d, basis[pick(rng)]);
      if (!(mul(d, q, b) == mul(d, b, q)))
        return json{{"word", word_json(basis[pick(rng)])}};
    }
    return std::nullopt;
  });

  run("sandwich_unique", "when a dressed-orientation word multiplies a basis word nontrivially on the left, exactly one matches it from the right", [&]() -> std::optional<json> {
    for (const Word& w : basis) {
      TElement uw = t_word(d, w);
      for (const Weight& lam : all_weights(n)) {
        TElement left = mul(d, t_word(d, coxeter_word(d, lam)), uw);
        if (left.is_zero()) continue;
        int matches = 0;
        for (const Weight& mu : all_weights(n))
          if (left == mul(d, uw, t_word(d, coxeter_word(d, mu)))) ++matches;
        if (matches != 1)
          return json{{"word", word_json(w)}, {"lambda", lam}, {"matches", matches}};
      }
    }
    return std::nullopt;
  });

  run("cform_product", "full-support products compose: lower weight of the left factor must meet the upper weight of the right", [&]() -> std::optional<json> {
    std::vector<Word> full;
    for (const Word& w : basis)
      if (has_full_support(d, w)) full.push_back(w);
    for (const Word& a : full) {
      auto fa = factor_c_form(d, a);
      if (!fa) return json{{"word", word_json(a)}};
      for (const Word& b : full) {
        auto fb = factor_c_form(d, b);
        TElement prod = mul(d, t_word(d, a), t_word(d, b));
        bool expect = fa->mu == fb->lambda;
        if (expect != !prod.is_zero())
          return json{{"a", word_json(a)}, {"b", word_json(b)}};
        if (!prod.is_zero()) {
          auto fp = factor_c_form(d, prod.terms.begin()->first);
          if (!fp || fp->lambda != fa->lambda || fp->mu != fb->mu ||
              fp->r != fa->r + fb->r)
            return json{{"a", word_json(a)}, {"b", word_json(b)}};
        }
      }
    }
    return std::nullopt;
  });

  run("construct_c_roundtrip", "building the canonical full-support word from its weight pair and grade inverts factoring", [&]() -> std::optional<json> {
    for (const Word& w : basis) {
      if (!has_full_support(d, w)) continue;
      auto f = factor_c_form(d, w);
      if (!f) return json{{"word", word_json(w)}};
      auto back = construct_C(d, f->lambda, f->mu, f->r);
      if (!back || *back != cf_normal_form(d, w))
        return json{{"word", word_json(w)}, {"lambda", f->lambda}, {"mu", f->mu}, {"r", f->r}};
    }
    return std::nullopt;
  });

  // --- Weight representation --------------------------------------------

  run("matrix_hom", "the matrix of a product is the product of the matrices", [&]() -> std::optional<json> {
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    for (int t = 0; t < sc.random_trials; ++t) {
      const Word& a = basis[pick(rng)];
      const Word& b = basis[pick(rng)];
      WeightMatrix lhs = matrix_of(d, mul(d, t_word(d, a), t_word(d, b)));
      WeightMatrix rhs =
          wm_mul(matrix_of(d, t_word(d, a)), matrix_of(d, t_word(d, b)));
      if (!(lhs == rhs)) return json{{"a", word_json(a)}, {"b", word_json(b)}};
    }
    return std::nullopt;
  });

  run("matrix_monomial", "basis-word matrices have at most one entry per column, a monomial with unit coefficient and exponent = number of 0 letters applied", [&]() -> std::optional<json> {
    for (const Word& w : basis) {
      WeightMatrix m = matrix_of(d, t_word(d, w));
      std::map<Weight, int> per_col;
      for (const auto& [pos, poly] : m.entries) {
        auto mono = lp_as_monomial(poly);
        if (!mono || mono->second != Rational(1) || mono->first < 0)
          return json{{"word", word_json(w)}};
        ++per_col[pos.second];
        auto res = apply_word(d, w, pos.second);
        if (!res || res->first != pos.first || res->second != mono->first)
          return json{{"word", word_json(w)}, {"col", pos.second}};
      }
      for (const auto& [c, k] : per_col)
        if (k > 1) return json{{"word", word_json(w)}, {"col", c}};
    }
    return std::nullopt;
  });

  run("orientation_idempotents", "dressed-orientation matrices are q times the diagonal matrix units and sum to q times the identity", [&]() -> std::optional<json> {
    WeightMatrix sum = wm_zero(d);
    for (const Weight& lam : all_weights(n)) {
      WeightMatrix m = matrix_of(d, t_word(d, coxeter_word(d, lam)));
      WeightMatrix unit = wm_unit(d, lam, lam, lp_monomial(1));
      if (!(m == unit)) return json{{"lambda", lam}};
      sum = wm_add(sum, m);
    }
    WeightMatrix qid = wm_scale(wm_identity(d), lp_monomial(1));
    if (!(sum == qid)) return json{{"sum", "not q times identity"}};
    return std::nullopt;
  });

  run("q_matrix_scalar", "the central element acts as the scalar q", [&]() -> std::optional<json> {
    WeightMatrix m = matrix_of(d, q_element(d));
    WeightMatrix qid = wm_scale(wm_identity(d), lp_monomial(1));
    if (!(m == qid)) return json{{"q", "matrix mismatch"}};
    return std::nullopt;
  });

  run("boundary_psi_bijection", "boundary profiles correspond bijectively to (offset, orientation) pairs", [&]() -> std::optional<json> {
    std::uniform_int_distribution<long long> off(-5, 5);
    std::uniform_int_distribution<int> bit(0, 1);
    for (int t = 0; t < sc.random_trials; ++t) {
      long long c = off(rng);
      Weight lam;
      for (int i = 0; i < n; ++i) lam.push_back(bit(rng) ? '+' : '-');
      IdealBoundary j = psi_inv(d, c, lam);
      check_boundary(d, j);
      auto [c2, lam2] = psi(d, j);
      if (c2 != c || lam2 != lam) return json{{"c", c}, {"lambda", lam}};
    }
    return std::nullopt;
  });

  run("boundary_theta_compat", "raising a boundary at i succeeds exactly when the string rewrite at i applies, with matching outputs", [&]() -> std::optional<json> {
    for (long long c = -1; c <= 2; ++c) {
      for (const Weight& lam : all_weights(n)) {
        IdealBoundary j = psi_inv(d, c, lam);
        for (int i = 0; i <= n; ++i) {
          auto raised = raise_ideal(d, i, j);
          auto str = apply_generator(d, i, lam);
          if (raised.has_value() != str.has_value())
            return json{{"c", c}, {"lambda", lam}, {"i", i}};
          if (raised) {
            auto [c2, lam2] = psi(d, *raised);
            auto mono = lp_as_monomial(str->second);
            if (lam2 != str->first || !mono || c2 - c != mono->first)
              return json{{"c", c}, {"lambda", lam}, {"i", i}};
          }
        }
      }
    }
    return std::nullopt;
  });

  run("boundary_tau_cycle", "exactly one dressed-orientation word raises a given boundary fully, landing on its uniform shift", [&]() -> std::optional<json> {
    for (const Weight& lam : all_weights(n)) {
      IdealBoundary j = psi_inv(d, 0, lam);
      int applied = 0;
      for (const Weight& mu : all_weights(n)) {
        Word w = coxeter_word(d, mu);
        IdealBoundary cur = j;
        bool ok = true;
        for (auto it = w.rbegin(); it != w.rend() && ok; ++it) {
          auto nxt = raise_ideal(d, *it, cur);
          if (!nxt) ok = false;
          else cur = *nxt;
        }
        if (!ok) continue;
        ++applied;
        IdealBoundary shifted = j;
        for (auto& h : shifted.h) h += 2;
        if (!(cur == shifted)) return json{{"lambda", lam}, {"mu", mu}};
      }
      if (applied != 1) return json{{"lambda", lam}, {"applied", applied}};
    }
    return std::nullopt;
  });

  run("faithfulness", "distinct basis words have independent matrices (witness triples and modular evaluation rank)", [&]() -> std::optional<json> {
    FaithfulnessOutcome out = check_faithfulness(d, sc.faith_len);
    if (!out.witnesses_unique || !out.evaluation_rank_full)
      return json{{"words", out.word_count},
                  {"witnesses_unique", out.witnesses_unique},
                  {"evaluation_rank_full", out.evaluation_rank_full}};
    return std::nullopt;
  });

  // --- Valuation and grading --------------------------------------------

  run("valuation_facts", "valuations: 0 for short words and orientation words, r-1 on the diagonal tower, additive under the central element", [&]() -> std::optional<json> {
    if (q_valuation(d, t_one(d)) != 0) return json{{"case", "identity"}};
    TElement q = q_element(d);
    if (q_valuation(d, q) != 1) return json{{"case", "q"}};
    if (q_valuation(d, mul(d, q, q)) != 2) return json{{"case", "q^2"}};
    for (const Weight& lam : all_weights(n)) {
      for (int r = 1; r <= 3; ++r) {
        auto w = construct_C(d, lam, lam, r);
        if (!w || q_valuation(d, t_word(d, *w)) != r - 1)
          return json{{"lambda", lam}, {"r", r}};
      }
    }
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    for (int t = 0; t < std::min(sc.random_trials, 60); ++t) {
      const Word& w = basis[pick(rng)];
      int v = q_valuation(d, t_word(d, w));
      if (q_valuation(d, mul(d, q, t_word(d, w))) != v + 1)
        return json{{"word", word_json(w)}, {"val", v}};
    }
    return std::nullopt;
  });

  run("division_exact", "division by the central element, when it succeeds, is verified by re-multiplication", [&]() -> std::optional<json> {
    TElement q = q_element(d);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    for (int t = 0; t < sc.random_trials; ++t) {
      TElement b = t_word(d, basis[pick(rng)]);
      TElement prod = mul(d, q, b);
      auto quo = divide_by_q(d, prod);
      if (!quo || !(mul(d, q, *quo) == prod))
        return json{{"word", word_json(basis[pick(rng)])}};
    }
    return std::nullopt;
  });

  if (n == 2) {
    run("window_rank", "length-window counts of basis words eventually sum to 4^n", [&]() -> std::optional<json> {
      std::vector<long long> counts;
      if (!check_window_rank(d, sc.window_len, 3 * (n + 1), &counts))
        return json{{"counts", counts}};
      return std::nullopt;
    });

    run("valuation_stable_counts", "the number of valuation-zero basis words of length <= L is constant once L exceeds 2(n+1)", [&]() -> std::optional<json> {
      std::vector<Word> words = basis_words_up_to(d, 10);
      std::map<int, long long> by_len;
      for (const Word& w : words)
        if (q_valuation(d, t_word(d, w)) == 0)
          ++by_len[static_cast<int>(w.size())];
      std::vector<long long> cum;
      long long total = 0;
      for (int L = 0; L <= 10; ++L) {
        total += by_len.count(L) ? by_len[L] : 0;
        cum.push_back(total);
      }
      for (int L = 2 * (n + 1); L < 10; ++L)
        if (cum[static_cast<std::size_t>(L)] != cum[static_cast<std::size_t>(L) + 1])
          return json{{"counts", cum}};
      return std::nullopt;
    });

    run("window_converse", "every convex subset of a fixed window with at most 8 cells reads back as a basis word", [&]() -> std::optional<json> {
      std::vector<Cell> window;
      for (int a = 0; a <= 2; ++a)
        for (long long b = a % 2; b <= 5; b += 2) window.push_back(Cell{a, b});
      for (std::uint32_t mask = 0; mask < (1u << window.size()); ++mask) {
        std::vector<Cell> cells;
        for (std::size_t i = 0; i < window.size(); ++i)
          if (mask & (1u << i)) cells.push_back(window[i]);
        if (cells.size() > 8) continue;
        ERegion reg = make_region(d, cells);
        if (!convex_direct(reg)) continue;
        Word w = region_to_word(reg);
        if (!is_minuscule(d, w)) return json{{"mask", mask}};
      }
      return std::nullopt;
    });

    run("gluing", "stacked regions: matching weights admit a shift gluing the regions into the embedded product", [&]() -> std::optional<json> {
      std::vector<Word> full;
      for (const Word& w : basis)
        if (has_full_support(d, w)) full.push_back(w);
      for (const Word& w1 : full) {
        ERegion r1 = rank_and_embed(d, w1);
        auto [lo1, hi1] = weights_of(d, w1);
        for (const Word& w2 : full) {
          ERegion r2 = rank_and_embed(d, w2);
          auto [lo2, hi2] = weights_of(d, w2);
          if (hi1 != lo2) continue;
          // Per-column top of r1 and bottom of r2 to compute the shift.
          std::map<int, long long> top1, bot2;
          for (const Cell& c : r1.cells) {
            auto it = top1.find(c.a);
            if (it == top1.end() || it->second < c.b) top1[c.a] = c.b;
          }
          for (const Cell& c : r2.cells) {
            auto it = bot2.find(c.a);
            if (it == bot2.end() || it->second > c.b) bot2[c.a] = c.b;
          }
          long long k = top1[0] + 2 - bot2[0];
          // Matching weights force the same per-column gap, so one shift glues
          // every column simultaneously.
          std::vector<Cell> cells = r1.cells;
          for (const Cell& c : r2.cells) cells.push_back(Cell{c.a, c.b + k});
          ERegion glued = make_region(d, cells);
          if (!convex_direct(glued))
            return json{{"w1", word_json(w1)}, {"w2", word_json(w2)}};
          Word prod = w2;
          prod.insert(prod.end(), w1.begin(), w1.end());
          if (!is_minuscule(d, prod))
            return json{{"w1", word_json(w1)}, {"w2", word_json(w2)}, {"case", "product vanished"}};
          if (!(normalize_region(glued) == rank_and_embed(d, prod)))
            return json{{"w1", word_json(w1)}, {"w2", word_json(w2)}, {"case", "region mismatch"}};
        }
      }
      return std::nullopt;
    });

    run("centre_degree_bound", "low-degree central elements are scalar", [&]() -> std::optional<json> {
      if (!check_centre_degree_bound(d)) return json{{"n", n}};
      return std::nullopt;
    });
  }

  if (n == 2 || n == 3) {
    run("matrix_unit_surjectivity", "every weight pair is realised by a canonical full-support word with small grade", [&]() -> std::optional<json> {
      for (const Weight& lam : all_weights(n)) {
        for (const Weight& mu : all_weights(n)) {
          bool found = false;
          for (int r = 1; r <= n + 2 && !found; ++r) {
            auto w = construct_C(d, lam, mu, r);
            if (!w) continue;
            found = true;
            WeightMatrix m = matrix_of(d, t_word(d, *w));
            WeightMatrix unit = wm_unit(d, lam, mu, lp_monomial(r));
            if (!(m == unit))
              return json{{"lambda", lam}, {"mu", mu}, {"r", r}};
          }
          if (!found) return json{{"lambda", lam}, {"mu", mu}};
        }
      }
      return std::nullopt;
    });
  }

  // --- Finite modules ----------------------------------------------------

  if (n == 2 || n == 3) {
    run("module_relations", "finite module actions satisfy the defining relations and the central element acts as c plus nilpotent", [&]() -> std::optional<json> {
      for (const Rational& c : sc.module_cs) {
        for (int m : sc.module_ms) {
          FiniteModule mod = build_module(d, c, m);
          std::size_t dim = mod.dim;
          if (dim != all_weights(n).size() * static_cast<std::size_t>(m))
            return json{{"c", rational_to_string(c)}, {"m", m}, {"dim", dim}};
          for (int i = 0; i <= n; ++i) {
            QMatrix gi = mod.gens[static_cast<std::size_t>(i)];
            if (!qm_mul(gi, gi).is_zero())
              return json{{"c", rational_to_string(c)}, {"m", m}, {"i", i}};
            for (int jj = 0; jj <= n; ++jj) {
              if (i == jj) continue;
              QMatrix gj = mod.gens[static_cast<std::size_t>(jj)];
              if (d.bond(i, jj) == 2) {
                if (!(qm_mul(gi, gj) == qm_mul(gj, gi)))
                  return json{{"c", rational_to_string(c)}, {"m", m}, {"i", i}, {"j", jj}};
              } else if (d.forbidden_triple(i, jj)) {
                if (!qm_mul(qm_mul(gi, gj), gi).is_zero())
                  return json{{"c", rational_to_string(c)}, {"m", m}, {"i", i}, {"j", jj}};
              }
            }
          }
          QMatrix qm = module_matrix_of(mod, q_element(d));
          QMatrix nil = qm_sub(qm, qm_scale(QMatrix::identity(dim), c));
          QMatrix pw = nil;
          for (int k = 1; k < m; ++k) pw = qm_mul(pw, nil);
          if (!pw.is_zero())
            return json{{"c", rational_to_string(c)}, {"m", m}, {"case", "nilpotency"}};
        }
      }
      return std::nullopt;
    });

    if (n == 2) {
      run("module_irreducible", "the m = 1 modules are irreducible and have scalar endomorphisms; m >= 2 modules do not", [&]() -> std::optional<json> {
        for (const Rational& c : sc.module_cs) {
          FiniteModule m1 = build_module(d, c, 1);
          if (!is_irreducible(m1, seed))
            return json{{"c", rational_to_string(c)}, {"m", 1}};
          if (endomorphism_dim(m1) != 1)
            return json{{"c", rational_to_string(c)}, {"m", 1}, {"case", "endo"}};
          FiniteModule m2 = build_module(d, c, 2);
          if (is_irreducible(m2, seed))
            return json{{"c", rational_to_string(c)}, {"m", 2}};
        }
        return std::nullopt;
      });

      run("module_distinct", "different central parameters give different characteristic polynomials of the central action", [&]() -> std::optional<json> {
        std::vector<std::vector<Rational>> polys;
        for (const Rational& c : sc.module_cs) {
          FiniteModule mod = build_module(d, c, 1);
          polys.push_back(qm_charpoly(module_matrix_of(mod, q_element(d))));
        }
        for (std::size_t i = 0; i < polys.size(); ++i)
          for (std::size_t j = i + 1; j < polys.size(); ++j)
            if (polys[i] == polys[j])
              return json{{"i", rational_to_string(sc.module_cs[i])},
                          {"j", rational_to_string(sc.module_cs[j])}};
        return std::nullopt;
      });

      run("module_trivial", "the one-dimensional module kills every generator", [&]() -> std::optional<json> {
        FiniteModule tr = trivial_module(d);
        if (tr.dim != 1) return json{{"dim", tr.dim}};
        for (int i = 0; i <= n; ++i)
          if (!tr.gens[static_cast<std::size_t>(i)].is_zero())
            return json{{"i", i}};
        TElement q = q_element(d);
        if (!module_matrix_of(tr, q).is_zero()) return json{{"case", "q"}};
        return std::nullopt;
      });
    }
  }

  return report;
}

} // namespace ntlc
