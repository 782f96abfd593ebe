#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ntlc/algebra.hpp"

using namespace ntlc;

namespace {
TElement uw(const CoxeterData& d, const Word& w) { return t_word(d, w); }
} // namespace

TEST_CASE("products of basis words") {
  CoxeterData d(2);
  CHECK(mul(d, uw(d, {1}), mul(d, uw(d, {0}), uw(d, {1}))).is_zero());
  CHECK(mul(d, uw(d, {0}), mul(d, uw(d, {1}), uw(d, {0}))) == uw(d, {0, 1, 0}));
  CHECK(mul(d, uw(d, {0}), uw(d, {0})).is_zero());
  CHECK(mul(d, uw(d, {0}), uw(d, {2})) == uw(d, {0, 2}));
  CHECK(mul(d, uw(d, {2}), uw(d, {0})) == uw(d, {0, 2}));
  CHECK(mul(d, uw(d, {2, 1, 0}), uw(d, {2, 1, 0})) == uw(d, {2, 1, 0, 2, 1, 0}));
  CHECK(mul(d, t_one(d), uw(d, {0, 1})) == uw(d, {0, 1}));
  CHECK(mul(d, uw(d, {0, 1}), t_one(d)) == uw(d, {0, 1}));
  CHECK(mul(d, t_zero(d), uw(d, {0, 1})).is_zero());
}

TEST_CASE("bilinearity with rational coefficients") {
  CoxeterData d(2);
  TElement a = t_add(t_scale(uw(d, {0}), Rational(1, 2)), uw(d, {1}));
  TElement b = t_add(uw(d, {1}), t_scale(uw(d, {0}), Rational(-3)));
  TElement p = mul(d, a, b);
  // (u0/2 + u1)(u1 - 3 u0) = u0u1/2 - (3/2) u0u0... = u0u1/2 + u1u1...
  TElement expect = t_add(t_scale(uw(d, {0, 1}), Rational(1, 2)),
                          t_scale(uw(d, {1, 0}), Rational(-3)));
  CHECK(p == expect);
}

TEST_CASE("basis element construction rejects bad words") {
  CoxeterData d(2);
  CHECK_THROWS_AS(uw(d, {0, 0}), domain_error);
  CHECK_THROWS_AS(uw(d, {1, 0, 1}), domain_error);
  CHECK(uw(d, {2, 0}) == uw(d, {0, 2})); // canonicalized key
}

TEST_CASE("central element shape and fixed products") {
  CoxeterData d(2);
  TElement q = q_element(d);
  REQUIRE(q.terms.size() == 4);
  for (const auto& [w, c] : q.terms) {
    CHECK(w.size() == 3);
    CHECK(c == Rational(1));
  }
  CHECK(q.terms.count({2, 1, 0}) == 1);
  CHECK(q.terms.count({0, 1, 2}) == 1);

  // Q u_0 has the two survivors; Q u_{0,2} collapses to a single word.
  TElement q0 = mul(d, q, uw(d, {0}));
  TElement expect0 = t_add(uw(d, {0, 2, 1, 0}), uw(d, {0, 1, 0, 2}));
  CHECK(q0 == expect0);
  CHECK(mul(d, q, uw(d, {0, 2})) == uw(d, {0, 2, 1, 0, 2}));
  CHECK(mul(d, uw(d, {0}), q) == q0); // centrality on a sample

  CoxeterData d3(3);
  CHECK(q_element(d3).terms.size() == 8);
}

TEST_CASE("c-form factoring") {
  CoxeterData d(2);
  auto f = factor_c_form(d, {1, 0, 2, 1});
  REQUIRE(f.has_value());
  CHECK(f->lambda == "+-");
  CHECK(f->mu == "-+");
  CHECK(f->r == 1);
  auto g = factor_c_form(d, {2, 1, 0});
  REQUIRE(g.has_value());
  CHECK(*g == CForm{"++", "++", 1});
  auto h = factor_c_form(d, {0, 2, 1, 0});
  REQUIRE(h.has_value());
  CHECK(*h == CForm{"-+", "++", 2});
  CHECK_FALSE(factor_c_form(d, {0, 1}).has_value());
  CHECK_THROWS_AS(factor_c_form(d, {0, 0}), domain_error);
}

TEST_CASE("top layer removal") {
  CoxeterData d(2);
  auto s = strip_top_layer(d, {0, 2, 1, 0});
  REQUIRE(s.has_value());
  CHECK(s->first == "-+");
  CHECK(s->second == Word{0});
  auto t = strip_top_layer(d, {2, 1, 0, 2, 1, 0});
  REQUIRE(t.has_value());
  CHECK(t->first == "++");
  CHECK(t->second == Word{2, 1, 0});
  auto u = strip_top_layer(d, {1, 0, 2, 1});
  REQUIRE(u.has_value());
  CHECK(u->first == "+-");
  CHECK(u->second == Word{1});
}

TEST_CASE("division by the central element") {
  CoxeterData d(2);
  TElement q = q_element(d);

  auto one = divide_by_q(d, q);
  REQUIRE(one.has_value());
  CHECK(*one == t_one(d));

  TElement prod = mul(d, q, uw(d, {0, 1}));
  auto back = divide_by_q(d, prod);
  REQUIRE(back.has_value());
  CHECK(*back == uw(d, {0, 1}));

  // u_{1,0,2,1} = Q u_1 even though it is not an orientation multiple.
  auto v = divide_by_q(d, uw(d, {1, 0, 2, 1}));
  REQUIRE(v.has_value());
  CHECK(*v == uw(d, {1}));

  CHECK_FALSE(divide_by_q(d, uw(d, {0, 2, 1, 0})).has_value());
  CHECK_FALSE(divide_by_q(d, t_one(d)).has_value());
  CHECK_FALSE(divide_by_q(d, uw(d, {0})).has_value());

  // Mixed multiples divide term by term.
  TElement mix = mul(d, q, t_add(t_scale(uw(d, {0}), Rational(2, 3)), t_one(d)));
  auto m = divide_by_q(d, mix);
  REQUIRE(m.has_value());
  CHECK(*m == t_add(t_scale(uw(d, {0}), Rational(2, 3)), t_one(d)));
}

TEST_CASE("valuation fixed values") {
  CoxeterData d(2);
  TElement q = q_element(d);
  CHECK(q_valuation(d, t_one(d)) == 0);
  CHECK(q_valuation(d, q) == 1);
  CHECK(q_valuation(d, mul(d, q, q)) == 2);
  CHECK(q_valuation(d, uw(d, {1, 0, 2, 1})) == 1);
  CHECK(q_valuation(d, uw(d, {0, 2, 1, 0})) == 0);
  CHECK(q_valuation(d, uw(d, {2, 1, 0, 2, 1, 0})) == 1);
  CHECK(q_valuation(d, uw(d, {0, 1, 0})) == 0);
  CHECK_THROWS_AS(q_valuation(d, t_zero(d)), domain_error);
}

TEST_CASE("diagonal tower valuations") {
  CoxeterData d(2);
  for (const Weight& lam : all_weights(2)) {
    for (long long r = 1; r <= 3; ++r) {
      auto w = construct_C(d, lam, lam, r);
      REQUIRE(w.has_value());
      CHECK(q_valuation(d, t_word(d, *w)) == r - 1);
    }
  }
}
