// Coxeter data for the doubly laced affine diagram on nodes 0..n and word
// primitives, including the layered canonical form for commutation classes.
//
// Convention used throughout the library: a word lists the elements of its
// heap from top to bottom, so the leftmost letter is a maximal element and the
// rightmost letter acts first under the left module action.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ntlc {

// Precondition violations and invalid inputs.
struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Violations of internal cross-checks that should be impossible; reaching one
// means a structural property the library relies on has failed.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

using Word = std::vector<int>;

// Bonds: m(i,i) = 1; m(i,j) = 2 iff |i-j| > 1; m(i,j) = 3 on interior edges
// (|i-j| = 1 with 1 <= i,j <= n-1); m(i,j) = 4 on the end edges {0,1} and
// {n-1,n}.  The double-edge arrows point at the endpoints 0 and n.
class CoxeterData {
public:
  explicit CoxeterData(int n);

  int rank() const { return n_; }
  int bond(int i, int j) const;

  // True iff {i,j} is a double edge whose arrow points at j.
  bool arrow_toward(int i, int j) const;

  bool adjacent(int i, int j) const { return bond(i, j) >= 3; }
  bool commute(int i, int j) const { return bond(i, j) == 2; }

  // True iff the subword s_i s_j s_i is forbidden: i,j joined by a single
  // edge (either order), or by a double edge with the arrow toward j.
  bool forbidden_triple(int i, int j) const;

  // Deliberately wrongs both arrows; used by the verification harness to
  // prove that the oracle-agreement check can fail.
  void invert_arrows() { inverted_ = !inverted_; }
  bool arrows_inverted() const { return inverted_; }

  void check_letter(int i) const;

private:
  int n_;
  bool inverted_ = false;
};

CoxeterData build_diagram(int n);

void check_word(const CoxeterData& d, const Word& w);

// Canonical representative of the commutation class of w.  Repeatedly strips
// the minimal letters (those with no equal or adjacent label to their right),
// sorts each stripped block ascending, and emits blocks right to left, so the
// first stripped block ends up rightmost.  Two words are commutation
// equivalent iff their canonical forms are equal.
Word cf_normal_form(const CoxeterData& d, const Word& w);

// Distinct letters of w in ascending order.
std::vector<int> word_support(const Word& w);

bool has_full_support(const CoxeterData& d, const Word& w);

// "2,1,0" for [2,1,0]; "" for the empty word.
std::string word_to_string(const Word& w);

// Inverse of word_to_string; validates letters against d.
Word word_from_string(const CoxeterData& d, const std::string& s);

} // namespace ntlc
