#pragma once

// Initial ideal -> polarization -> minimal primes -> hieroglyphs -> tablet.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hiero/groebner.hpp"
#include "hiero/kpoly.hpp"
#include "hiero/monomial_ideal.hpp"
#include "hiero/stanley_reisner.hpp"

namespace hiero {

enum class Glyph { Plus, CircledPlus };

/// One minimal prime of the polarized initial ideal, drawn on the grid.
struct Hieroglyph {
  /// Variable ids of the polarized ring, ascending.
  std::vector<int> marks;
  /// Grid cells of the marks with copies collapsed onto their base cell;
  /// sorted, without repeats. Marks lacking grid metadata are omitted.
  std::vector<GridCell> support;
  /// Per mark: Plus for an original variable, CircledPlus for a copy.
  std::vector<Glyph> glyphs;

  std::size_t size() const noexcept { return marks.size(); }
  friend bool operator==(const Hieroglyph&, const Hieroglyph&) = default;
};

struct Tablet {
  /// Ring of the polarized initial ideal (original variables first).
  Ring ring;
  TermOrder order;
  /// Grading transported to `ring`.
  Grading grading;
  MonomialIdeal initial;
  MonomialIdeal polarized;
  std::vector<int> base_of;

  /// Components of minimum size.
  std::vector<Hieroglyph> hieroglyphs;
  std::vector<Hieroglyph> all_components;
  bool equidimensional = true;

  /// Degree from the K-polynomial under the standard grading.
  std::int64_t degree = 0;
  /// Multidegree from the K-polynomial under `grading`.
  LaurentPoly multidegree;

  std::size_t size() const noexcept { return hieroglyphs.size(); }
};

/// Full pipeline. Throws NotHomogeneous when a generator is not homogeneous
/// for g and ContainsUnit for the unit ideal.
Tablet build_tablet(const Ideal& ideal, const TermOrder& ord, const Grading& g);

/// Pipeline from an already computed initial ideal (steps after Groebner).
Tablet tablet_from_initial(const MonomialIdeal& initial, const TermOrder& ord, const Grading& g);

Hieroglyph make_hieroglyph(const Ring& ring, const PrimeComponent& p);

/// Sum over the tablet of prod_{marks} <w_i, t> using the tablet's grading,
/// i.e. prod t^{w_i} when every weight is a unit vector. Throws
/// UnequalTotalDegrees unless every weight has the same sum.
LaurentPoly tablet_multidegree(const Tablet& t);

enum class RenderMode { Ascii, Unicode };

/// Text grid, one character per cell, panes separated by one space column.
/// Throws MissingGridMetadata if a mark has no grid cell.
std::string render_hieroglyph(const Hieroglyph& h, const Ring& ring, RenderMode mode);

/// Hieroglyphs side by side, two blank columns apart.
std::string render_tablet(const std::vector<Hieroglyph>& hs, const Ring& ring, RenderMode mode);

std::string tablet_to_json(const Tablet& t);
/// Inverse of tablet_to_json for the fields the JSON carries.
Tablet tablet_from_json(std::string_view text);

}  // namespace hiero
