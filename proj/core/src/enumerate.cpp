#include "ntlc/enumerate.hpp"

#include <set>

namespace ntlc {

EnumerationReport enumerate_minuscule(const CoxeterData& d, int max_len,
                                      bool keep_words, long long budget_words) {
  if (max_len < 0) throw domain_error("maximum length must be nonnegative");
  if (max_len > 64) throw domain_error("enumeration budget exceeded");
  EnumerationReport rep;
  rep.n = d.rank();
  rep.max_len = max_len;
  rep.counts.assign(max_len + 1, 0);
  if (keep_words) rep.words.assign(max_len + 1, {});

  long long total = 0;
  std::vector<Word> frontier{Word{}};
  rep.counts[0] = 1;
  if (keep_words) rep.words[0] = frontier;
  for (int len = 1; len <= max_len; ++len) {
    std::set<Word> next;
    for (const Word& w : frontier) {
      for (int a = 0; a <= d.rank(); ++a) {
        Word cand;
        cand.reserve(w.size() + 1);
        cand.push_back(a);
        cand.insert(cand.end(), w.begin(), w.end());
        if (!is_minuscule(d, cand)) continue;
        next.insert(cf_normal_form(d, cand));
      }
    }
    frontier.assign(next.begin(), next.end());
    rep.counts[len] = static_cast<long long>(frontier.size());
    total += rep.counts[len];
    if (total > budget_words) throw domain_error("enumeration budget exceeded");
    if (keep_words) rep.words[len] = frontier;
  }
  return rep;
}

} // namespace ntlc
