#include "ntlc/heap.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <set>

namespace ntlc {

Heap heap_from_word(const CoxeterData& d, const Word& w) {
  check_word(d, w);
  Heap h;
  h.n = d.rank();
  h.labels = w;
  const std::size_t L = w.size();
  h.above.assign(L, std::vector<uint8_t>(L, 0));
  // Precedence between equal or adjacent labels, closed transitively.  Only
  // pairs i < j can be related, so a single right-to-left sweep suffices.
  for (std::size_t i = L; i-- > 0;) {
    for (std::size_t j = i + 1; j < L; ++j) {
      if (std::abs(w[i] - w[j]) <= 1) {
        h.above[i][j] = 1;
        for (std::size_t k = j + 1; k < L; ++k)
          if (h.above[j][k]) h.above[i][k] = 1;
      }
    }
  }
  return h;
}

std::vector<std::pair<std::size_t, std::size_t>> Heap::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> cv;
  const std::size_t L = size();
  for (std::size_t i = 0; i < L; ++i) {
    for (std::size_t j = i + 1; j < L; ++j) {
      if (!above[i][j]) continue;
      bool direct = true;
      for (std::size_t k = i + 1; k < j && direct; ++k)
        if (above[i][k] && above[k][j]) direct = false;
      if (direct) cv.emplace_back(i, j);
    }
  }
  return cv;
}

std::vector<std::vector<std::size_t>> Heap::vertex_chains() const {
  std::vector<std::vector<std::size_t>> chains(n + 1);
  for (std::size_t i = 0; i < size(); ++i) chains[labels[i]].push_back(i);
  return chains;
}

Word heap_to_word(const Heap& h) { return h.labels; }

bool is_minuscule(const CoxeterData& d, const Word& w) {
  check_word(d, w);
  Heap h = heap_from_word(d, w);
  const int n = d.rank();
  auto chains = h.vertex_chains();
  for (int p = 0; p <= n; ++p) {
    const auto& ch = chains[p];
    for (std::size_t k = 0; k + 1 < ch.size(); ++k) {
      // ch[k] is the upper, ch[k+1] the lower of a consecutive pair.
      std::vector<int> between;
      for (std::size_t z = ch[k] + 1; z < ch[k + 1]; ++z)
        if (h.above[ch[k]][z] && h.above[z][ch[k + 1]])
          between.push_back(h.labels[z]);
      std::sort(between.begin(), between.end());
      if (p == 0) {
        if (between != std::vector<int>{1}) return false;
      } else if (p == n) {
        if (between != std::vector<int>{n - 1}) return false;
      } else {
        if (between != std::vector<int>{p - 1, p + 1}) return false;
      }
    }
  }
  return true;
}

namespace {

bool word_has_forbidden(const CoxeterData& d, const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] == w[i + 1]) return true;
  for (std::size_t i = 0; i + 2 < w.size(); ++i)
    if (w[i] == w[i + 2] && d.forbidden_triple(w[i], w[i + 1])) return true;
  return false;
}

} // namespace

bool forbidden_oracle(const CoxeterData& d, const Word& w, std::size_t max_len,
                      std::size_t max_orbit) {
  check_word(d, w);
  if (w.size() > max_len)
    throw domain_error("word too long for commutation-orbit search");
  std::set<Word> seen;
  std::deque<Word> queue;
  seen.insert(w);
  queue.push_back(w);
  while (!queue.empty()) {
    Word cur = std::move(queue.front());
    queue.pop_front();
    if (word_has_forbidden(d, cur)) return true;
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      if (!d.commute(cur[i], cur[i + 1])) continue;
      std::swap(cur[i], cur[i + 1]);
      if (seen.insert(cur).second) {
        if (seen.size() > max_orbit)
          throw domain_error("commutation orbit larger than the guard");
        queue.push_back(cur);
      }
      std::swap(cur[i], cur[i + 1]);
    }
  }
  return false;
}

bool cell_leq(const Cell& x, const Cell& y) {
  return x.b <= y.b && std::abs(y.a - x.a) <= y.b - x.b;
}

bool cell_lt(const Cell& x, const Cell& y) { return x != y && cell_leq(x, y); }

bool ERegion::contains(const Cell& c) const {
  return std::binary_search(cells.begin(), cells.end(), c);
}

ERegion make_region(const CoxeterData& d, std::vector<Cell> cells) {
  for (const Cell& c : cells) {
    d.check_letter(c.a);
    if (((c.a - c.b) % 2 + 2) % 2 != 0)
      throw domain_error("cell (" + std::to_string(c.a) + "," +
                         std::to_string(c.b) + ") violates the parity rule");
  }
  std::sort(cells.begin(), cells.end());
  if (std::adjacent_find(cells.begin(), cells.end()) != cells.end())
    throw domain_error("duplicate cell in region");
  return ERegion{d.rank(), std::move(cells)};
}

std::vector<std::vector<int>> support_components(const std::vector<int>& support) {
  std::vector<std::vector<int>> comps;
  for (int p : support) {
    if (!comps.empty() && comps.back().back() == p - 1)
      comps.back().push_back(p);
    else
      comps.push_back({p});
  }
  return comps;
}

ERegion normalize_region(const ERegion& r) {
  std::vector<int> support;
  for (const Cell& c : r.cells)
    if (support.empty() || support.back() != c.a) support.push_back(c.a);
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());

  std::vector<Cell> out;
  out.reserve(r.cells.size());
  for (const auto& comp : support_components(support)) {
    long long minb = 0;
    int minlabel = -1;
    for (const Cell& c : r.cells) {
      if (std::find(comp.begin(), comp.end(), c.a) == comp.end()) continue;
      if (minlabel < 0 || c.b < minb || (c.b == minb && c.a < minlabel)) {
        minb = c.b;
        minlabel = c.a;
      }
    }
    long long shift = (minlabel % 2) - minb;
    if (shift % 2 != 0)
      throw internal_error("normalization shift must be a tau power");
    for (const Cell& c : r.cells)
      if (std::find(comp.begin(), comp.end(), c.a) != comp.end())
        out.push_back(Cell{c.a, c.b + shift});
  }
  std::sort(out.begin(), out.end());
  return ERegion{r.n, std::move(out)};
}

ERegion rank_and_embed(const CoxeterData& d, const Word& w) {
  if (!is_minuscule(d, w))
    throw domain_error("rank embedding requires a minuscule word");
  Heap h = heap_from_word(d, w);
  const std::size_t L = h.size();

  // Rank by propagation over the covering graph; each support component is a
  // single connected component of the heap.
  auto cov = h.covers();
  std::vector<std::vector<std::pair<std::size_t, int>>> adj(L);
  for (auto [u, l] : cov) {
    adj[u].push_back({l, -1});
    adj[l].push_back({u, +1});
  }
  std::vector<long long> rankv(L, 0);
  std::vector<int> state(L, 0); // 0 unseen, 1 ranked
  for (std::size_t s = 0; s < L; ++s) {
    if (state[s]) continue;
    state[s] = 1;
    rankv[s] = 0;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (auto [v, dlt] : adj[u]) {
        long long rv = rankv[u] + dlt;
        if (!state[v]) {
          state[v] = 1;
          rankv[v] = rv;
          queue.push_back(v);
        } else if (rankv[v] != rv) {
          throw internal_error("heap of a minuscule word must be ranked");
        }
      }
    }
  }

  std::vector<Cell> cells(L);
  for (std::size_t i = 0; i < L; ++i) cells[i] = Cell{h.labels[i], rankv[i]};
  // Raw component ranks have arbitrary bases and possibly wrong parity; the
  // normalization fixes both at once.
  std::vector<Cell> adjusted;
  adjusted.reserve(L);
  for (const auto& comp : support_components(word_support(w))) {
    long long minb = 0;
    int minlabel = -1;
    for (const Cell& c : cells) {
      if (std::find(comp.begin(), comp.end(), c.a) == comp.end()) continue;
      if (minlabel < 0 || c.b < minb || (c.b == minb && c.a < minlabel)) {
        minb = c.b;
        minlabel = c.a;
      }
    }
    long long shift = (minlabel % 2) - minb;
    for (const Cell& c : cells) {
      if (std::find(comp.begin(), comp.end(), c.a) == comp.end()) continue;
      Cell cc{c.a, c.b + shift};
      if (((cc.a - cc.b) % 2 + 2) % 2 != 0)
        throw internal_error("embedding produced a parity-violating cell");
      adjusted.push_back(cc);
    }
  }
  std::sort(adjusted.begin(), adjusted.end());
  if (std::adjacent_find(adjusted.begin(), adjusted.end()) != adjusted.end())
    throw internal_error("embedding must be injective on heap elements");
  return ERegion{d.rank(), std::move(adjusted)};
}

bool convex_direct(const ERegion& r) {
  for (const Cell& alpha : r.cells) {
    for (const Cell& gamma : r.cells) {
      if (!cell_lt(alpha, gamma)) continue;
      for (long long b = alpha.b + 1; b < gamma.b; ++b) {
        for (int a = 0; a <= r.n; ++a) {
          if (((a - b) % 2 + 2) % 2 != 0) continue;
          Cell beta{a, b};
          if (cell_lt(alpha, beta) && cell_lt(beta, gamma) && !r.contains(beta))
            return false;
        }
      }
    }
  }
  return true;
}

bool convex_edge_chains(const ERegion& r) {
  std::vector<char> present(r.n + 1, 0);
  for (const Cell& c : r.cells) present[c.a] = 1;
  for (int a = 0; a <= r.n; ++a)
    if (!present[a])
      throw domain_error("edge-chain convexity requires full support");
  for (int s = 0; s < r.n; ++s) {
    long long lo = 0, hi = 0;
    bool any = false;
    for (const Cell& c : r.cells) {
      if (c.a != s && c.a != s + 1) continue;
      if (!any) {
        lo = hi = c.b;
        any = true;
      } else {
        lo = std::min(lo, c.b);
        hi = std::max(hi, c.b);
      }
    }
    // The edge preimage of E(n) is a chain alternating between the two
    // columns; convex subsets are exactly contiguous rank intervals.
    for (long long b = lo; b <= hi; ++b) {
      int col = (((s - b) % 2 + 2) % 2 == 0) ? s : s + 1;
      if (!r.contains(Cell{col, b})) return false;
    }
  }
  return true;
}

bool is_convex_region(const ERegion& r) {
  bool direct = convex_direct(r);
  bool full = true;
  std::vector<char> present(r.n + 1, 0);
  for (const Cell& c : r.cells) present[c.a] = 1;
  for (int a = 0; a <= r.n; ++a) full = full && present[a];
  if (full) {
    bool chains = convex_edge_chains(r);
    if (chains != direct)
      throw internal_error(
          "direct and edge-chain convexity disagree on a full-support region");
  }
  return direct;
}

void check_weight(const CoxeterData& d, const Weight& w) {
  if (static_cast<int>(w.size()) != d.rank())
    throw domain_error("weight must have length " + std::to_string(d.rank()));
  for (char c : w)
    if (c != '+' && c != '-')
      throw domain_error("weight characters must be '+' or '-'");
}

std::vector<Weight> all_weights(int n) {
  std::vector<Weight> out;
  out.reserve(std::size_t(1) << n);
  for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
    Weight w(n, '-');
    for (int i = 0; i < n; ++i)
      if (mask & (std::size_t(1) << i)) w[i] = '+';
    out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Column extrema of a full-support region, indexed by label.
struct Profile {
  std::vector<long long> lo, hi;
};

Profile column_profile(const ERegion& r) {
  Profile p;
  p.lo.assign(r.n + 1, 0);
  p.hi.assign(r.n + 1, 0);
  std::vector<char> seen(r.n + 1, 0);
  for (const Cell& c : r.cells) {
    if (!seen[c.a]) {
      seen[c.a] = 1;
      p.lo[c.a] = p.hi[c.a] = c.b;
    } else {
      p.lo[c.a] = std::min(p.lo[c.a], c.b);
      p.hi[c.a] = std::max(p.hi[c.a], c.b);
    }
  }
  for (int a = 0; a <= r.n; ++a)
    if (!seen[a]) throw domain_error("contour requires full support");
  return p;
}

Weight contour_of(const std::vector<long long>& rho) {
  Weight w;
  for (std::size_t i = 1; i < rho.size(); ++i) {
    long long delta = rho[i] - rho[i - 1];
    if (delta != 1 && delta != -1)
      throw internal_error("contour walk must step by exactly one");
    w += (delta == 1) ? '+' : '-';
  }
  return w;
}

} // namespace

std::pair<Weight, Weight> weights_of(const CoxeterData& d, const Word& w) {
  if (!has_full_support(d, w))
    throw domain_error("weights are defined for full-support words only");
  ERegion r = rank_and_embed(d, w);
  Profile p = column_profile(r);
  return {contour_of(p.lo), contour_of(p.hi)};
}

Word coxeter_word(const CoxeterData& d, const Weight& lambda) {
  check_weight(d, lambda);
  const int n = d.rank();
  std::vector<long long> rho(n + 1, 0);
  for (int i = 1; i <= n; ++i)
    rho[i] = rho[i - 1] + (lambda[i - 1] == '+' ? 1 : -1);
  std::vector<int> labels(n + 1);
  for (int i = 0; i <= n; ++i) labels[i] = i;
  std::sort(labels.begin(), labels.end(), [&](int x, int y) {
    if (rho[x] != rho[y]) return rho[x] > rho[y];
    return x < y;
  });
  Word w(labels.begin(), labels.end());
  auto [lo, hi] = weights_of(d, w);
  if (lo != lambda || hi != lambda)
    throw internal_error("coxeter word must have its own contour as weights");
  return w;
}

Word complete_full_support(const CoxeterData& d, const Word& w) {
  if (!is_minuscule(d, w))
    throw domain_error("support completion requires a minuscule word");
  std::vector<char> present(d.rank() + 1, 0);
  for (int x : w) present[x] = 1;
  Word out = w;
  for (int p = 0; p <= d.rank(); ++p)
    if (!present[p]) out.push_back(p);
  if (!is_minuscule(d, out))
    throw internal_error("appending the missing generators must stay minuscule");
  return out;
}

ERegion tau_shift(const ERegion& r, long long k) {
  ERegion out = r;
  for (Cell& c : out.cells) c.b += 2 * k;
  std::sort(out.cells.begin(), out.cells.end());
  return out;
}

Word region_to_word(const ERegion& r) {
  std::vector<Cell> cells = r.cells;
  std::sort(cells.begin(), cells.end(), [](const Cell& x, const Cell& y) {
    if (x.b != y.b) return x.b > y.b;
    return x.a < y.a;
  });
  Word w;
  w.reserve(cells.size());
  for (const Cell& c : cells) w.push_back(c.a);
  return w;
}

std::optional<Word> construct_C(const CoxeterData& d, const Weight& lambda,
                                const Weight& mu, long long r) {
  check_weight(d, lambda);
  check_weight(d, mu);
  if (r < 1) throw domain_error("the zero-chain length r must be at least 1");
  const int n = d.rank();
  std::vector<long long> lo(n + 1, 0), hi(n + 1, 0);
  hi[0] = 2 * (r - 1);
  for (int i = 1; i <= n; ++i) {
    lo[i] = lo[i - 1] + (mu[i - 1] == '+' ? 1 : -1);
    hi[i] = hi[i - 1] + (lambda[i - 1] == '+' ? 1 : -1);
  }
  std::vector<Cell> cells;
  for (int a = 0; a <= n; ++a) {
    if (hi[a] < lo[a]) return std::nullopt;
    for (long long b = lo[a]; b <= hi[a]; b += 2) cells.push_back(Cell{a, b});
  }
  ERegion reg = normalize_region(make_region(d, std::move(cells)));
  Word w = region_to_word(reg);
  if (!is_minuscule(d, w)) return std::nullopt;
  if (rank_and_embed(d, w) != reg) return std::nullopt;
  return cf_normal_form(d, w);
}

} // namespace ntlc
