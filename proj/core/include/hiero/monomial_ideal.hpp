#pragma once

#include <span>
#include <vector>

#include "hiero/polyring.hpp"

namespace hiero {

/// A monomial ideal given by its unique minimal generating set.
/// Generators are sorted by degree, then descending lex on exponents.
/// The zero ideal has no generators; an ideal containing 1 is rejected.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  /// Minimalizes `gens`. Throws ContainsUnit if 1 is among them.
  MonomialIdeal(Ring ring, std::vector<Monomial> gens);

  const Ring& ring() const noexcept { return ring_; }
  std::size_t nvars() const noexcept { return ring_.size(); }
  const std::vector<Monomial>& gens() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  bool is_zero() const noexcept { return gens_.empty(); }

  bool contains(const Monomial& m) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  Ring ring_;
  std::vector<Monomial> gens_;
};

/// Divisibility-minimal subset of `gens`, deduplicated and sorted.
std::vector<Monomial> minimal_generators(std::vector<Monomial> gens);

MonomialIdeal minimalize(const Ring& ring, std::vector<Monomial> gens);

bool is_squarefree(const MonomialIdeal& ideal);

/// Result of polarizing a monomial ideal. The original variables keep their
/// ids; copies are appended after them.
struct Polarization {
  MonomialIdeal ideal;
  Grading grading;
  /// For every variable of the enlarged ring, the id of the variable it copies
  /// (identity on the original variables).
  std::vector<int> base_of;
};

Polarization polarize(const MonomialIdeal& ideal, const Grading& grading);

/// Polarizes a raw generator list; throws NotMinimal unless the list is an
/// antichain under divisibility.
Polarization polarize(const Ring& ring, std::span<const Monomial> gens, const Grading& grading);

/// Replaces x_var by a single fresh copy in every generator where x_var has
/// exponent >= 2. Throws NothingToPolarize when no such generator exists.
MonomialIdeal partial_polarize(const MonomialIdeal& ideal, int var);

std::string to_string(const MonomialIdeal& ideal);

}  // namespace hiero
