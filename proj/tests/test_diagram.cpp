#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ntlc/diagram.hpp"

using namespace ntlc;

TEST_CASE("bond exponents across ranks") {
  for (int n = 2; n <= 6; ++n) {
    CoxeterData d(n);
    CHECK(d.rank() == n);
    for (int i = 0; i <= n; ++i) CHECK(d.bond(i, i) == 1);
    CHECK(d.bond(0, 1) == 4);
    CHECK(d.bond(1, 0) == 4);
    CHECK(d.bond(n - 1, n) == 4);
    CHECK(d.bond(0, 2) == 2);
    for (int i = 1; i + 2 <= n; ++i) CHECK(d.bond(i, i + 1) == (n == 2 ? 4 : 3));
    // Arrows on the two double edges point outward, at 0 and at n.
    CHECK(d.arrow_toward(1, 0));
    CHECK_FALSE(d.arrow_toward(0, 1));
    CHECK(d.arrow_toward(n - 1, n));
    CHECK_FALSE(d.arrow_toward(n, n - 1));
  }
}

TEST_CASE("forbidden alternating triples") {
  CoxeterData d2(2);
  // s_1 s_0 s_1 and s_1 s_2 s_1 die; s_0 s_1 s_0 and s_2 s_1 s_2 survive.
  CHECK(d2.forbidden_triple(1, 0));
  CHECK_FALSE(d2.forbidden_triple(0, 1));
  CHECK(d2.forbidden_triple(1, 2));
  CHECK_FALSE(d2.forbidden_triple(2, 1));

  CoxeterData d3(3);
  // The interior single edge forbids both orders.
  CHECK(d3.forbidden_triple(1, 2));
  CHECK(d3.forbidden_triple(2, 1));
  CHECK(d3.forbidden_triple(1, 0));
  CHECK_FALSE(d3.forbidden_triple(0, 1));
  CHECK(d3.forbidden_triple(2, 3));
  CHECK_FALSE(d3.forbidden_triple(3, 2));
}

TEST_CASE("arrow inversion flips the double-edge rules") {
  CoxeterData d(2);
  d.invert_arrows();
  CHECK(d.arrows_inverted());
  CHECK(d.arrow_toward(0, 1));
  CHECK_FALSE(d.arrow_toward(1, 0));
  CHECK(d.forbidden_triple(0, 1));
  CHECK_FALSE(d.forbidden_triple(1, 0));
  d.invert_arrows();
  CHECK_FALSE(d.arrows_inverted());
  CHECK(d.forbidden_triple(1, 0));
}

TEST_CASE("canonical form fixed values") {
  CoxeterData d(2);
  CHECK(cf_normal_form(d, {}) == Word{});
  CHECK(cf_normal_form(d, {2, 0}) == Word{0, 2});
  CHECK(cf_normal_form(d, {0, 2}) == Word{0, 2});
  CHECK(cf_normal_form(d, {0, 1, 0}) == Word{0, 1, 0});
  CHECK(cf_normal_form(d, {2, 0, 1, 0}) == Word{0, 2, 1, 0});
  CHECK(cf_normal_form(d, {0, 1, 2, 0}) == Word{0, 1, 0, 2});
  CHECK(cf_normal_form(d, {0, 1, 0, 2}) == Word{0, 1, 0, 2});
}

TEST_CASE("canonical form is idempotent and preserves content") {
  CoxeterData d(2);
  Word w(6, 0);
  for (int mask = 0; mask < 729; ++mask) {
    int m = mask;
    for (int i = 0; i < 6; ++i) {
      w[static_cast<std::size_t>(i)] = m % 3;
      m /= 3;
    }
    Word c = cf_normal_form(d, w);
    CHECK(cf_normal_form(d, c) == c);
    Word a = w, b = c;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
  }
}

TEST_CASE("word parsing and printing") {
  CoxeterData d(3);
  CHECK(word_to_string({2, 1, 0}) == "2,1,0");
  CHECK(word_from_string(d, "2,1,0") == Word{2, 1, 0});
  CHECK(word_from_string(d, "") == Word{});
  CHECK(word_to_string({}) == "");
  CHECK_THROWS_AS(word_from_string(d, "4"), domain_error);
  CHECK_THROWS_AS(word_from_string(d, "x"), domain_error);
  CHECK_THROWS_AS(check_word(d, {0, 9}), domain_error);
  CHECK_THROWS_AS(CoxeterData(1), domain_error);
}

TEST_CASE("support helpers") {
  CoxeterData d(3);
  CHECK(word_support({2, 0, 2, 1}) == std::vector<int>{0, 1, 2});
  CHECK_FALSE(has_full_support(d, {0, 1, 2}));
  CHECK(has_full_support(d, {0, 1, 2, 3}));
}
