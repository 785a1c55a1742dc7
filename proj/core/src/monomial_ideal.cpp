#include "hiero/monomial_ideal.hpp"

#include <algorithm>

namespace hiero {

namespace {

bool generator_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a > b;
}

bool is_antichain(std::span<const Monomial> gens) {
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (i != j && mono_divides(gens[i], gens[j])) return false;
  return true;
}

/// Next unused copy index among variables sharing `base_name`.
int next_copy_index(const Ring& ring, const std::string& base_name) {
  int k = 1;
  for (const Variable& v : ring.variables())
    if (v.base_name == base_name) k = std::max(k, v.copy_index);
  return k + 1;
}

}  // namespace

std::vector<Monomial> minimal_generators(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), generator_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  // Sorted by degree, so a divisor of gens[i] can only appear before it.
  for (Monomial& m : gens) {
    const bool redundant = std::any_of(out.begin(), out.end(),
                                       [&](const Monomial& g) { return mono_divides(g, m); });
    if (!redundant) out.push_back(std::move(m));
  }
  return out;
}

MonomialIdeal::MonomialIdeal(Ring ring, std::vector<Monomial> gens) : ring_(std::move(ring)) {
  for (const Monomial& m : gens) {
    if (m.nvars() != ring_.size())
      throw Error(ErrorCode::InvalidArgument, "generator from a different ring");
    if (m.is_one()) throw Error(ErrorCode::ContainsUnit, "monomial ideal contains 1");
  }
  gens_ = minimal_generators(std::move(gens));
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(),
                     [&](const Monomial& g) { return mono_divides(g, m); });
}

MonomialIdeal minimalize(const Ring& ring, std::vector<Monomial> gens) {
  return MonomialIdeal(ring, std::move(gens));
}

bool is_squarefree(const MonomialIdeal& ideal) {
  return std::all_of(ideal.gens().begin(), ideal.gens().end(),
                     [](const Monomial& m) { return m.is_squarefree(); });
}

Polarization polarize(const Ring& ring, std::span<const Monomial> gens, const Grading& grading) {
  if (grading.size() != ring.size())
    throw Error(ErrorCode::InvalidArgument, "grading does not match the ring");
  if (!is_antichain(gens))
    throw Error(ErrorCode::NotMinimal, "polarization needs a minimal generating set");

  const std::size_t n = ring.size();
  std::vector<int> max_exp(n, 0);
  for (const Monomial& g : gens)
    for (std::size_t i = 0; i < n; ++i) max_exp[i] = std::max(max_exp[i], g[i]);

  Ring big = ring;
  std::vector<std::vector<int>> weights = grading.weights();
  std::vector<int> base_of(n);
  for (std::size_t i = 0; i < n; ++i) base_of[i] = static_cast<int>(i);
  // copies[i][k] = id of the (k+1)-th copy of x_i, copies[i][0] = i.
  std::vector<std::vector<int>> copies(n);
  for (std::size_t i = 0; i < n; ++i) {
    copies[i].push_back(static_cast<int>(i));
    const Variable& v = ring.var(static_cast<int>(i));
    for (int k = 2; k <= max_exp[i]; ++k) {
      const int id = static_cast<int>(big.size());
      big = big.with_variable(v.base_name, next_copy_index(big, v.base_name), v.grid);
      weights.push_back(grading.weight(static_cast<int>(i)));
      base_of.push_back(static_cast<int>(i));
      copies[i].push_back(id);
    }
  }

  std::vector<Monomial> out;
  out.reserve(gens.size());
  for (const Monomial& g : gens) {
    std::vector<int> e(big.size(), 0);
    for (std::size_t i = 0; i < n; ++i)
      for (int k = 0; k < g[i]; ++k) e[static_cast<std::size_t>(copies[i][static_cast<std::size_t>(k)])] = 1;
    out.emplace_back(std::move(e));
  }
  Grading g2(grading.dim(), std::move(weights));
  return Polarization{MonomialIdeal(std::move(big), std::move(out)), std::move(g2), std::move(base_of)};
}

Polarization polarize(const MonomialIdeal& ideal, const Grading& grading) {
  return polarize(ideal.ring(), ideal.gens(), grading);
}

MonomialIdeal partial_polarize(const MonomialIdeal& ideal, int var) {
  const auto i = static_cast<std::size_t>(var);
  if (i >= ideal.nvars()) throw Error(ErrorCode::InvalidArgument, "variable out of range");
  int m = 0;
  for (const Monomial& g : ideal.gens()) m = std::max(m, g[i]);
  if (m < 2)
    throw Error(ErrorCode::NothingToPolarize,
                "variable '" + ideal.ring().var(var).name() + "' has maximal exponent < 2");

  const Variable& v = ideal.ring().var(var);
  Ring big = ideal.ring().with_variable(v.base_name, next_copy_index(ideal.ring(), v.base_name), v.grid);
  std::vector<Monomial> out;
  for (const Monomial& g : ideal.gens()) {
    std::vector<int> e(g.exponents().begin(), g.exponents().end());
    e.push_back(0);
    if (g[i] >= 2) {
      e[i] -= 1;
      e.back() = 1;
    }
    out.emplace_back(std::move(e));
  }
  return MonomialIdeal(std::move(big), std::move(out));
}

std::string to_string(const MonomialIdeal& ideal) {
  std::string s = "<";
  for (std::size_t i = 0; i < ideal.gens().size(); ++i) {
    if (i) s += ", ";
    s += to_string(ideal.gens()[i], ideal.ring());
  }
  return s + ">";
}

}  // namespace hiero
