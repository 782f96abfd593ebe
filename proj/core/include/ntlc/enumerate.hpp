// Breadth-first enumeration of minuscule elements by canonical form.  The
// frontier grows by prepending one letter: suffixes of minuscule words are
// minuscule (they are heap ideals and open intervals survive restriction), so
// left extension of canonical representatives is complete.
#pragma once

#include "ntlc/heap.hpp"

#include <vector>

namespace ntlc {

struct EnumerationReport {
  int n = 0;
  int max_len = 0;
  std::vector<long long> counts;         // counts[d] = distinct classes of length d
  std::vector<std::vector<Word>> words;  // filled when keep_words was set
};

EnumerationReport enumerate_minuscule(const CoxeterData& d, int max_len,
                                      bool keep_words = false,
                                      long long budget_words = 5000000);

} // namespace ntlc
