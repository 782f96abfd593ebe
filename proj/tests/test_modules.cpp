#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ntlc/modules.hpp"

#include <set>

using namespace ntlc;

namespace {
bool is_nilpotent(QMatrix x, std::size_t dim) {
  for (std::size_t k = 0; k < dim; ++k) {
    if (x.is_zero()) return true;
    x = qm_mul(x, x);
  }
  return x.is_zero();
}
} // namespace

TEST_CASE("module construction and dimensions") {
  CoxeterData d(2);
  for (int m = 1; m <= 3; ++m) {
    FiniteModule mod = build_module(d, Rational(2), m);
    CHECK(mod.dim == std::size_t(4 * m));
    CHECK(mod.gens.size() == 3);
    for (const QMatrix& g : mod.gens) {
      CHECK(g.rows == mod.dim);
      CHECK(g.cols == mod.dim);
    }
  }
  CoxeterData d3(3);
  CHECK(build_module(d3, Rational(1), 2).dim == 16);

  CHECK_THROWS_AS(build_module(d, Rational(0), 1), domain_error);
  CHECK_THROWS_AS(build_module(d, Rational(1), 0), domain_error);
  CHECK_THROWS_AS(build_module(d, Rational(1), -2), domain_error);
}

TEST_CASE("generator matrices satisfy the defining relations") {
  for (int n : {2, 3}) {
    CoxeterData d(n);
    FiniteModule mod = build_module(d, Rational(3, 2), 2);
    auto U = [&](const Word& w) { return module_matrix_of(mod, t_word(d, w)); };
    for (int i = 0; i <= n; ++i)
      CHECK(qm_mul(mod.gens[i], mod.gens[i]).is_zero());
    for (int i = 0; i + 1 <= n; ++i) {
      QMatrix a = mod.gens[i], b = mod.gens[i + 1];
      QMatrix aba = qm_mul(a, qm_mul(b, a));
      QMatrix bab = qm_mul(b, qm_mul(a, b));
      if (i == 0) {
        CHECK(bab.is_zero()); // double bond with arrow toward 0 kills u1 u0 u1
        CHECK_FALSE(aba.is_zero());
      } else if (i + 1 == n) {
        CHECK(aba.is_zero()); // arrow toward n kills u_{n-1} u_n u_{n-1}
        CHECK_FALSE(bab.is_zero());
      } else {
        CHECK(aba.is_zero());
        CHECK(bab.is_zero());
      }
    }
    for (int i = 0; i <= n; ++i)
      for (int j = i + 2; j <= n; ++j)
        CHECK(qm_mul(mod.gens[i], mod.gens[j]) == qm_mul(mod.gens[j], mod.gens[i]));
    // Module matrices respect products of algebra elements.
    CHECK(U({0, 1, 0}) == qm_mul(mod.gens[0], qm_mul(mod.gens[1], mod.gens[0])));
  }
}

TEST_CASE("central element acts as scalar plus nilpotent") {
  CoxeterData d(2);
  for (int m : {1, 2, 3}) {
    Rational c(5, 3);
    FiniteModule mod = build_module(d, c, m);
    QMatrix qmat = module_matrix_of(mod, q_element(d));
    QMatrix nil = qm_sub(qmat, qm_scale(QMatrix::identity(mod.dim), c));
    CHECK(is_nilpotent(nil, mod.dim));
    if (m == 1) CHECK(nil.is_zero());
    else CHECK_FALSE(nil.is_zero());
  }
}

TEST_CASE("irreducibility dichotomy in the nilpotency degree") {
  CoxeterData d(2);
  for (Rational c : {Rational(1), Rational(2), Rational(1, 2)}) {
    FiniteModule simple = build_module(d, c, 1);
    CHECK(is_irreducible(simple));
    CHECK(endomorphism_dim(simple) == 1);

    FiniteModule doubled = build_module(d, c, 2);
    CHECK_FALSE(is_irreducible(doubled));
  }
  for (int m : {1, 2, 3})
    CHECK(endomorphism_dim(build_module(d, Rational(2), m)) == std::size_t(m));
}

TEST_CASE("central character separates modules") {
  CoxeterData d(2);
  std::set<std::vector<Rational>> seen;
  for (Rational c : {Rational(1), Rational(2), Rational(3), Rational(5), Rational(7)}) {
    FiniteModule mod = build_module(d, c, 2);
    seen.insert(qm_charpoly(module_matrix_of(mod, q_element(d))));
  }
  CHECK(seen.size() == 5);
}

TEST_CASE("the trivial module kills every generator") {
  CoxeterData d(2);
  FiniteModule t = trivial_module(d);
  CHECK(t.trivial);
  CHECK(t.dim == 1);
  for (const QMatrix& g : t.gens) CHECK(g.is_zero());
  CHECK(module_matrix_of(t, q_element(d)).is_zero());
  CHECK(module_matrix_of(t, t_one(d)) == QMatrix::identity(1));
  CHECK(endomorphism_dim(t) == 1);
  CHECK(is_irreducible(t));
}
