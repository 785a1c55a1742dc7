#pragma once

// Minimal primes of squarefree monomial ideals and the Stanley-Reisner
// correspondence between such ideals and simplicial complexes.

#include <span>
#include <vector>

#include "hiero/monomial_ideal.hpp"

namespace hiero {

/// The prime <x_i : i in vars>; vars sorted ascending.
struct PrimeComponent {
  std::vector<int> vars;

  std::size_t size() const noexcept { return vars.size(); }
  friend auto operator<=>(const PrimeComponent&, const PrimeComponent&) = default;
};

/// A simplicial complex on vertices 0..nvertices-1 given by its facets.
/// The void complex (no facets) is not representable; {} as the only facet
/// is the irrelevant complex.
struct SimplicialComplex {
  std::size_t nvertices = 0;
  /// Sorted vertex lists, pairwise incomparable, sorted lexicographically.
  std::vector<std::vector<int>> facets;

  /// Largest facet size (m in the face-count sense, i.e. dimension + 1).
  std::size_t max_facet_size() const noexcept;
  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;
};

/// Inclusion-minimal vertex sets meeting every edge. Vertices lie in
/// 0..nvertices-1. An empty edge admits no transversal; no edges gives {}.
/// Sorted by (size, vertex list).
std::vector<std::vector<int>> minimal_transversals(std::size_t nvertices,
                                                   const std::vector<std::vector<int>>& edges);

/// Minimal primes of a squarefree monomial ideal, sorted by (size, ids).
/// The zero ideal has none. Throws NotSquarefree.
std::vector<PrimeComponent> minimal_primes(const MonomialIdeal& ideal);

/// Facets of the Stanley-Reisner complex: complements of the minimal primes.
SimplicialComplex sr_facets(const MonomialIdeal& ideal);

/// Squarefree ideal generated by the minimal non-faces of `complex`.
MonomialIdeal ideal_from_facets(const Ring& ring, const SimplicialComplex& complex);

bool is_face(const SimplicialComplex& complex, std::span<const int> sigma);

/// <x_i : i in p> as a monomial ideal of `ring`.
MonomialIdeal prime_ideal(const Ring& ring, const PrimeComponent& p);

/// Intersection of two monomial ideals in the same ring.
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);

}  // namespace hiero
