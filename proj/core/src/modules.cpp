#include "ntlc/modules.hpp"

#include <algorithm>
#include <random>

namespace ntlc {

std::size_t FiniteModule::index(const Weight& w, int j) const {
  auto it = std::lower_bound(weights.begin(), weights.end(), w);
  if (it == weights.end() || *it != w)
    throw domain_error("unknown weight in module index");
  return static_cast<std::size_t>(it - weights.begin()) * m + j;
}

FiniteModule build_module(const CoxeterData& d, const Rational& c, int m) {
  if (c == 0) throw domain_error("module parameter c must be nonzero");
  if (m < 1) throw domain_error("module parameter m must be positive");
  FiniteModule mod;
  mod.n = d.rank();
  mod.c = c;
  mod.m = m;
  mod.weights = all_weights(d.rank());
  mod.dim = mod.weights.size() * static_cast<std::size_t>(m);
  mod.gens.reserve(d.rank() + 1);
  for (int i = 0; i <= d.rank(); ++i) {
    QMatrix g = QMatrix::zero(mod.dim, mod.dim);
    for (const Weight& w : mod.weights) {
      auto img = apply_generator(d, i, w);
      if (!img) continue;
      auto mono = lp_as_monomial(img->second);
      if (!mono || mono->second != 1 || (mono->first != 0 && mono->first != 1))
        throw internal_error("generator action must be q^0 or q^1");
      for (int j = 0; j < m; ++j) {
        std::size_t colIx = mod.index(w, j);
        if (mono->first == 0) {
          g.at(mod.index(img->first, j), colIx) += 1;
        } else {
          // q * (q-c)^j = c (q-c)^j + (q-c)^{j+1}, truncated at (q-c)^m.
          g.at(mod.index(img->first, j), colIx) += c;
          if (j + 1 < m) g.at(mod.index(img->first, j + 1), colIx) += 1;
        }
      }
    }
    mod.gens.push_back(std::move(g));
  }
  return mod;
}

FiniteModule trivial_module(const CoxeterData& d) {
  FiniteModule mod;
  mod.n = d.rank();
  mod.c = 0;
  mod.m = 1;
  mod.trivial = true;
  mod.dim = 1;
  for (int i = 0; i <= d.rank(); ++i) mod.gens.push_back(QMatrix::zero(1, 1));
  return mod;
}

QMatrix module_matrix_of(const FiniteModule& mod, const TElement& a) {
  if (a.n != mod.n) throw domain_error("rank mismatch in module matrix");
  QMatrix acc = QMatrix::zero(mod.dim, mod.dim);
  for (const auto& [w, coeff] : a.terms) {
    QMatrix prod = QMatrix::identity(mod.dim);
    // Leftmost letter is the outermost factor.
    for (int x : w) prod = qm_mul(prod, mod.gens[x]);
    acc = qm_add(acc, qm_scale(prod, coeff));
  }
  return acc;
}

std::size_t endomorphism_dim(const FiniteModule& mod) {
  const std::size_t dNum = mod.dim;
  const std::size_t unknowns = dNum * dNum;
  // Rows of the constraint system X g - g X = 0, all generators stacked.
  QMatrix sys = QMatrix::zero(mod.gens.size() * unknowns, unknowns);
  std::size_t row = 0;
  for (const QMatrix& g : mod.gens) {
    for (std::size_t p = 0; p < dNum; ++p) {
      for (std::size_t q = 0; q < dNum; ++q) {
        // coefficient of X[p][k] is g[k][q]; of X[k][q] is -g[p][k]
        for (std::size_t k = 0; k < dNum; ++k) {
          sys.at(row, p * dNum + k) += g.at(k, q);
          sys.at(row, k * dNum + q) -= g.at(p, k);
        }
        ++row;
      }
    }
  }
  std::size_t rank = qm_rref(sys);
  return unknowns - rank;
}

namespace {

std::vector<Rational> matrix_apply(const QMatrix& g,
                                   const std::vector<Rational>& v) {
  std::vector<Rational> out(g.rows, Rational(0));
  for (std::size_t i = 0; i < g.rows; ++i)
    for (std::size_t j = 0; j < g.cols; ++j)
      if (g.at(i, j) != 0 && v[j] != 0) out[i] += g.at(i, j) * v[j];
  return out;
}

bool generates_everything(const FiniteModule& mod,
                          const std::vector<Rational>& seed) {
  RowSpace space(mod.dim);
  std::vector<std::vector<Rational>> queue;
  if (space.insert(seed)) queue.push_back(seed);
  while (!queue.empty()) {
    std::vector<Rational> v = std::move(queue.back());
    queue.pop_back();
    for (const QMatrix& g : mod.gens) {
      std::vector<Rational> img = matrix_apply(g, v);
      if (space.insert(img)) {
        if (space.dim() == mod.dim) return true;
        queue.push_back(std::move(img));
      }
    }
  }
  return space.dim() == mod.dim;
}

} // namespace

bool is_irreducible(const FiniteModule& mod, std::uint64_t seed) {
  std::vector<std::vector<Rational>> tests;
  for (std::size_t i = 0; i < mod.dim; ++i) {
    std::vector<Rational> e(mod.dim, Rational(0));
    e[i] = 1;
    tests.push_back(std::move(e));
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-9, 9);
  for (int t = 0; t < 20; ++t) {
    std::vector<Rational> v(mod.dim);
    bool nonzero = false;
    for (auto& x : v) {
      x = dist(rng);
      nonzero = nonzero || x != 0;
    }
    if (!nonzero) v[0] = 1;
    tests.push_back(std::move(v));
  }
  for (const auto& v : tests)
    if (!generates_everything(mod, v)) return false;
  return true;
}

} // namespace ntlc
