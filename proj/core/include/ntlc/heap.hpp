// Heaps of words, the minuscule recognizer, the commutation-orbit oracle, the
// rank embedding into the infinite heap E(n), convexity tests, contours and
// Coxeter words, and construction of the C-form basis words.
//
// E(n) is never materialized: its cells are the pairs (a,b) with 0 <= a <= n
// and a - b even, ordered by (a,b) <= (c,d) iff b <= d and |c-a| <= |d-b|.
#pragma once

#include "ntlc/diagram.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace ntlc {

// Labeled poset of a word: one element per letter, element i above element j
// iff i < j in word position and the relation is forced transitively by equal
// or adjacent labels.  Vertex chains (equal labels) and edge chains (labels
// {s,s+1}) are totally ordered by construction.
struct Heap {
  int n = 0;
  std::vector<int> labels;              // position 0 is the leftmost letter
  std::vector<std::vector<uint8_t>> above;  // above[i][j]: i strictly above j

  std::size_t size() const { return labels.size(); }
  bool is_above(std::size_t i, std::size_t j) const { return above[i][j] != 0; }
  bool comparable(std::size_t i, std::size_t j) const {
    return i == j || is_above(i, j) || is_above(j, i);
  }
  // Covering pairs (upper, lower).
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;
  // chains[p] lists the positions labeled p from top (leftmost) to bottom.
  std::vector<std::vector<std::size_t>> vertex_chains() const;
};

Heap heap_from_word(const CoxeterData& d, const Word& w);

// Word recovered by reading a heap along a fixed linear extension, maximal
// elements first (descending layers of the canonical form).
Word heap_to_word(const Heap& h);

// True iff w is a reduced expression of a minuscule element: between any two
// consecutive equal-label elements x < y with label p, the open interval
// (x,y) is exactly {label 1} for p = 0, {labels p-1 and p+1} for 0 < p < n,
// and {label n-1} for p = n.
bool is_minuscule(const CoxeterData& d, const Word& w);

// True iff some word in the commutation class of w contains s_i s_i, or
// s_i s_j s_i with i,j joined by a single edge or by a double edge with the
// arrow toward j.  Exponential search; guarded by a length cap.
bool forbidden_oracle(const CoxeterData& d, const Word& w,
                      std::size_t max_len = 12,
                      std::size_t max_orbit = 2000000);

struct Cell {
  int a = 0;       // node label, 0 <= a <= n
  long long b = 0; // rank; a - b must be even
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

// cell order of E(n)
bool cell_leq(const Cell& x, const Cell& y);
bool cell_lt(const Cell& x, const Cell& y);

// Finite set of cells of E(n); kept sorted and duplicate-free.
struct ERegion {
  int n = 0;
  std::vector<Cell> cells;

  bool contains(const Cell& c) const;
  friend bool operator==(const ERegion&, const ERegion&) = default;
};

ERegion make_region(const CoxeterData& d, std::vector<Cell> cells);

// Connected components of the support of a label set under |p - q| = 1
// adjacency; each component is ascending, components ordered by minimum.
std::vector<std::vector<int>> support_components(const std::vector<int>& support);

// Shifts every support component by an even amount so that its minimum rank
// equals the parity of the label attaining it.  Identity on already
// normalized regions; all equality-up-to-tau comparisons go through this.
ERegion normalize_region(const ERegion& r);

// Image of the heap of w under the rank embedding: one cell (label, rank) per
// element, ranks normalized per support component as in normalize_region.
// Requires is_minuscule(w); the heap is then ranked and alternating.
ERegion rank_and_embed(const CoxeterData& d, const Word& w);

// Betweenness test straight from the definition: no cell of E(n) strictly
// between two members is missing.
bool convex_direct(const ERegion& r);

// Interval test on edge chains: for every edge {s,s+1} the cells with labels
// in {s,s+1} occupy a contiguous rank range.  Only meaningful (and only
// equivalent to convex_direct) when every label 0..n occurs.
bool convex_edge_chains(const ERegion& r);

// convex_direct, with the edge-chain criterion computed as a cross-check on
// full-support regions; disagreement raises internal_error.
bool is_convex_region(const ERegion& r);

// Sign string of length n.  Position i (1-based in the mathematics, 0-based
// in the string) is '+' iff the rank walk ascends from node i-1 to node i.
using Weight = std::string;

void check_weight(const CoxeterData& d, const Weight& w);
std::vector<Weight> all_weights(int n);

// (lower, upper): contours of the per-label minima and maxima of the heap of
// w.  Requires is_minuscule(w) and full support.
std::pair<Weight, Weight> weights_of(const CoxeterData& d, const Word& w);

// The word with each generator exactly once whose contour is lambda: ranks
// walk from 0 according to the signs, letters listed by descending rank with
// ascending label tie-break.
Word coxeter_word(const CoxeterData& d, const Weight& lambda);

// The unique minuscule full-support word with upper weight lambda, lower
// weight mu, and exactly r letters equal to 0, when it exists: both contours
// are laid out as boundary walks, every vertex chain is filled as a rank
// interval, and the result is verified to embed back onto the region.
// Returns nullopt when no such element exists (r too small for the pair).
std::optional<Word> construct_C(const CoxeterData& d, const Weight& lambda,
                                const Weight& mu, long long r);

// w followed by its missing generators in ascending order; minuscule with
// full support whenever w is minuscule.
Word complete_full_support(const CoxeterData& d, const Word& w);

ERegion tau_shift(const ERegion& r, long long k);

// Letters of r read by descending rank with ascending label tie-break; a
// linear extension of the region read maximal elements first.
Word region_to_word(const ERegion& r);

} // namespace ntlc
