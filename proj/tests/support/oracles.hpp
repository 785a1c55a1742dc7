#pragma once

// Random inputs and brute-force oracles shared by the unit and acceptance tests.
// Nothing here calls the algorithm under test for the quantity it checks.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "hiero/groebner.hpp"
#include "hiero/monomial_ideal.hpp"
#include "hiero/stanley_reisner.hpp"

namespace hiero::testing {

inline Ring names_ring(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  return Ring::from_names(names);
}

/// <= max_vars variables, exponents <= max_exp, <= max_gens generators.
inline MonomialIdeal random_monomial_ideal(std::mt19937& rng, int max_vars = 6, int max_exp = 4, int max_gens = 6) {
  const int n = std::uniform_int_distribution<int>(1, max_vars)(rng);
  const int k = std::uniform_int_distribution<int>(1, max_gens)(rng);
  std::uniform_int_distribution<int> e(0, max_exp);
  std::vector<Monomial> gens;
  for (int i = 0; i < k; ++i) {
    std::vector<int> exps(static_cast<std::size_t>(n));
    for (int& x : exps) x = e(rng);
    if (std::all_of(exps.begin(), exps.end(), [](int x) { return x == 0; })) exps[0] = 1;
    gens.emplace_back(std::move(exps));
  }
  return MonomialIdeal(names_ring(static_cast<std::size_t>(n)), std::move(gens));
}

inline MonomialIdeal random_squarefree_ideal(std::mt19937& rng, int nvars, int max_gens) {
  const int k = std::uniform_int_distribution<int>(1, max_gens)(rng);
  std::uniform_int_distribution<int> bit(0, 2);
  std::vector<Monomial> gens;
  for (int i = 0; i < k; ++i) {
    std::vector<int> exps(static_cast<std::size_t>(nvars));
    for (int& x : exps) x = bit(rng) == 0 ? 1 : 0;
    if (std::all_of(exps.begin(), exps.end(), [](int x) { return x == 0; }))
      exps[static_cast<std::size_t>(std::uniform_int_distribution<int>(0, nvars - 1)(rng))] = 1;
    gens.emplace_back(std::move(exps));
  }
  return MonomialIdeal(names_ring(static_cast<std::size_t>(nvars)), std::move(gens));
}

/// Weights with entries in 0..3, each vector nonzero.
inline Grading random_grading(std::mt19937& rng, std::size_t nvars, std::size_t max_dim = 3) {
  const std::size_t d = std::uniform_int_distribution<std::size_t>(1, max_dim)(rng);
  std::uniform_int_distribution<int> w(0, 3);
  std::vector<std::vector<int>> weights(nvars, std::vector<int>(d));
  for (auto& v : weights) {
    for (int& x : v) x = w(rng);
    if (std::all_of(v.begin(), v.end(), [](int x) { return x == 0; })) v[0] = 1;
  }
  return Grading(d, std::move(weights));
}

/// A random homogeneous polynomial of the given degree with small integer coefficients.
inline Polynomial random_form(std::mt19937& rng, std::size_t nvars, int degree, int nterms) {
  std::uniform_int_distribution<int> var(0, static_cast<int>(nvars) - 1);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::vector<Term> terms;
  for (int t = 0; t < nterms; ++t) {
    std::vector<int> e(nvars, 0);
    for (int k = 0; k < degree; ++k) ++e[static_cast<std::size_t>(var(rng))];
    int c = coef(rng);
    if (c == 0) c = 1;
    terms.push_back({Rational(c), Monomial(std::move(e))});
  }
  return Polynomial(nvars, std::move(terms));
}

/// 1..max_gens forms of degree min_deg..max_deg in nvars variables; never the zero ideal.
inline Ideal random_homogeneous_ideal(std::mt19937& rng, std::size_t nvars, int max_gens, int min_deg = 1,
                                      int max_deg = 3) {
  Ideal I{names_ring(nvars), {}};
  const int k = std::uniform_int_distribution<int>(1, max_gens)(rng);
  std::uniform_int_distribution<int> deg(min_deg, max_deg), nt(1, 4);
  while (static_cast<int>(I.gens.size()) < k) {
    Polynomial f = random_form(rng, nvars, deg(rng), nt(rng));
    if (!f.is_zero()) I.gens.push_back(std::move(f));
  }
  return I;
}

/// Minimal primes by testing every vertex subset (small rings only).
inline std::vector<std::vector<int>> brute_force_minimal_primes(const MonomialIdeal& J) {
  const std::size_t n = J.nvars();
  std::vector<std::uint32_t> edges;
  for (const Monomial& m : J.gens()) {
    std::uint32_t e = 0;
    for (int v : m.support()) e |= 1u << v;
    edges.push_back(e);
  }
  std::vector<std::uint32_t> covers;
  for (std::uint32_t s = 0; s < (1u << n); ++s)
    if (std::all_of(edges.begin(), edges.end(), [&](std::uint32_t e) { return (e & s) != 0; })) covers.push_back(s);
  std::vector<std::vector<int>> out;
  for (std::uint32_t s : covers) {
    const bool minimal = std::none_of(covers.begin(), covers.end(), [&](std::uint32_t t) { return t != s && (t & s) == t; });
    if (!minimal) continue;
    std::vector<int> vs;
    for (std::size_t i = 0; i < n; ++i)
      if (s >> i & 1u) vs.push_back(static_cast<int>(i));
    out.push_back(std::move(vs));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

/// All monomials of total degree d in n variables.
inline std::vector<Monomial> monomials_of_degree(std::size_t n, int d) {
  std::vector<Monomial> out;
  std::vector<int> e(n, 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == n) {
      e[i] = left;
      out.emplace_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  if (n == 0) {
    if (d == 0) out.emplace_back(std::vector<int>{});
    return out;
  }
  rec(rec, 0, d);
  return out;
}

/// HF_{R/I}(d) for d = 0..max_degree under the standard grading, by linear
/// algebra: dim I_d is the rank of {m * f : f a generator, deg(m f) = d}.
inline std::vector<std::uint64_t> hilbert_function_linear_algebra(const Ideal& I, int max_degree) {
  const std::size_t n = I.ring.size();
  std::vector<std::uint64_t> hf;
  for (int d = 0; d <= max_degree; ++d) {
    const auto basis = monomials_of_degree(n, d);
    std::map<Monomial, std::size_t> column;
    for (std::size_t i = 0; i < basis.size(); ++i) column.emplace(basis[i], i);
    std::vector<std::vector<Rational>> rows;
    for (const Polynomial& f : I.gens) {
      if (f.is_zero()) continue;
      const int fd = f.total_degree();
      if (fd > d) continue;
      for (const Monomial& m : monomials_of_degree(n, d - fd)) {
        std::vector<Rational> row(basis.size());
        for (const Term& t : f.terms()) row[column.at(mono_mul(m, t.mono))] += t.coeff;
        rows.push_back(std::move(row));
      }
    }
    std::size_t rank = 0;
    for (std::size_t c = 0; c < basis.size() && rank < rows.size(); ++c) {
      std::size_t piv = rank;
      while (piv < rows.size() && rows[piv][c] == 0) ++piv;
      if (piv == rows.size()) continue;
      std::swap(rows[piv], rows[rank]);
      for (std::size_t r = rank + 1; r < rows.size(); ++r) {
        if (rows[r][c] == 0) continue;
        const Rational f = rows[r][c] / rows[rank][c];
        for (std::size_t k = c; k < basis.size(); ++k) rows[r][k] -= f * rows[rank][k];
      }
      ++rank;
    }
    hf.push_back(basis.size() - rank);
  }
  return hf;
}

}  // namespace hiero::testing
