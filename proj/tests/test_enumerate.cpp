#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ntlc/enumerate.hpp"

#include <algorithm>
#include <set>

using namespace ntlc;

TEST_CASE("length counts for the rank two algebra") {
  CoxeterData d(2);
  EnumerationReport rep = enumerate_minuscule(d, 12);
  REQUIRE(rep.counts.size() == 13);
  std::vector<long long> expect = {1, 3, 5, 6, 5, 5, 6, 5, 5, 6, 5, 5, 6};
  CHECK(rep.counts == expect);
  // Window sums over nine consecutive lengths are eventually constant.
  for (int start = 2; start + 2 <= 12; ++start) {
    long long s = 0;
    for (int t = start; t < start + 3; ++t) s += rep.counts[t];
    CHECK(s == 16);
  }
}

TEST_CASE("small length counts across ranks") {
  for (int n : {2, 3, 4}) {
    CoxeterData d(n);
    EnumerationReport rep = enumerate_minuscule(d, 2);
    CHECK(rep.counts[0] == 1);
    CHECK(rep.counts[1] == n + 1);
  }
  CoxeterData d3(3);
  EnumerationReport r3 = enumerate_minuscule(d3, 6);
  CHECK(r3.counts[0] == 1);
  CHECK(r3.counts[1] == 4);
  CHECK(std::all_of(r3.counts.begin(), r3.counts.end(),
                    [](long long c) { return c > 0; }));
}

TEST_CASE("listed words are canonical, minuscule, and deduplicated") {
  CoxeterData d(2);
  EnumerationReport rep = enumerate_minuscule(d, 6, true);
  REQUIRE(rep.words.size() == 7);
  std::set<Word> seen;
  for (std::size_t len = 0; len < rep.words.size(); ++len) {
    CHECK((long long)rep.words[len].size() == rep.counts[len]);
    for (const Word& w : rep.words[len]) {
      CHECK(w.size() == len);
      CHECK(is_minuscule(d, w));
      CHECK(cf_normal_form(d, w) == w);
      CHECK(seen.insert(w).second);
    }
  }
  std::vector<Word> len2 = rep.words[2];
  std::sort(len2.begin(), len2.end());
  CHECK(len2 == std::vector<Word>{{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 1}});
  std::vector<Word> len3 = rep.words[3];
  std::sort(len3.begin(), len3.end());
  CHECK(len3 == std::vector<Word>{
                    {0, 1, 0}, {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {2, 1, 0}, {2, 1, 2}});
}

TEST_CASE("budget limit reports failure") {
  CoxeterData d(2);
  CHECK_THROWS_AS(enumerate_minuscule(d, 12, false, 3), domain_error);
}

TEST_CASE("argument validation") {
  CoxeterData d(2);
  CHECK_THROWS_AS(enumerate_minuscule(d, -1), domain_error);
  EnumerationReport rep = enumerate_minuscule(d, 0);
  CHECK(rep.counts == std::vector<long long>{1});
}
