#pragma once

// Buchberger's algorithm over Q, normal forms and initial ideals.

#include <cstdint>
#include <span>
#include <vector>

#include "hiero/monomial_ideal.hpp"
#include "hiero/polyring.hpp"

namespace hiero {

/// An ideal presented by generators. Zero generators are allowed in the list
/// and ignored by every algorithm.
struct Ideal {
  Ring ring;
  std::vector<Polynomial> gens;

  bool is_zero() const;
  bool is_homogeneous(const Grading& g) const;
};

/// Reduced, monic Groebner basis sorted by leading monomial, descending.
struct GroebnerBasis {
  TermOrder order;
  std::vector<Polynomial> elements;

  std::vector<Monomial> leading_monomials() const;
  bool is_unit() const;
};

struct BuchbergerStats {
  std::size_t pairs_created = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
};

/// Full reduction of f by `divisors`, trying divisors in list order.
/// Returns r with no term divisible by any leading monomial.
Polynomial normal_form(const TermOrder& ord, const Polynomial& f, std::span<const Polynomial> divisors);

/// Reduced Groebner basis of `ideal` under `ord`. Uses the normal selection
/// strategy with Buchberger's coprime and chain criteria (Gebauer-Moeller).
GroebnerBasis buchberger(const TermOrder& ord, const Ideal& ideal, BuchbergerStats* stats = nullptr);

/// Minimal generators of init_ord(ideal). Throws ContainsUnit for the unit ideal.
MonomialIdeal initial_ideal(const TermOrder& ord, const Ideal& ideal);
MonomialIdeal initial_ideal(const GroebnerBasis& gb, const Ring& ring);

/// S-polynomial of f and g under ord (nonzero inputs).
Polynomial s_polynomial(const TermOrder& ord, const Polynomial& f, const Polynomial& g);

/// HF(0..max_degree) of R/J under the standard grading by direct counting of
/// standard monomials.
std::vector<std::uint64_t> hilbert_function_oracle(const MonomialIdeal& ideal, int max_degree);

}  // namespace hiero
