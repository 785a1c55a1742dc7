#pragma once

// Reduced pipe dreams and bumpless pipe dreams of a permutation.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hiero/permutation.hpp"

namespace hiero {

using Cell = std::pair<int, int>;  // (row, col), 1-based

/// Cross tiles of a reduced pipe dream; every other staircase cell is an
/// elbow. The pipe entering row i from the left leaves through the top of
/// column w(i).
struct PipeDream {
  std::vector<Cell> crosses;  // sorted

  friend auto operator<=>(const PipeDream&, const PipeDream&) = default;
};

inline constexpr int kMaxEnumerationSize = 7;

/// All reduced pipe dreams of w, sorted. Throws TooLarge for n > 7.
std::vector<PipeDream> pipe_dreams(const Permutation& w);

/// Permutation traced by a cross set in the n-staircase, or nothing when some
/// pair of pipes crosses twice.
std::optional<Permutation> trace_pipe_dream(int n, const std::vector<Cell>& crosses);

enum class Tile : char {
  Blank = 'O',
  Cross = '+',
  Horizontal = '-',
  Vertical = '|',
  RElbow = 'r',  // joins the south and east edges
  JElbow = 'j',  // joins the north and west edges
};

/// n x n tiling. Pipe j enters at the bottom of column j; the pipe leaving
/// the right edge of row i is pipe w(i).
struct BumplessPipeDream {
  int n = 0;
  std::vector<Tile> tiles;  // row-major

  Tile at(int row, int col) const { return tiles[static_cast<std::size_t>((row - 1) * n + (col - 1))]; }
  Tile& at(int row, int col) { return tiles[static_cast<std::size_t>((row - 1) * n + (col - 1))]; }
  /// Positions of blank tiles, sorted.
  std::vector<Cell> blank_support() const;
  /// One line per row using the tile characters.
  std::string to_string() const;

  friend auto operator<=>(const BumplessPipeDream&, const BumplessPipeDream&) = default;
};

BumplessPipeDream rothe_bpd(const Permutation& w);

/// True when the tiling is a reduced bumpless pipe dream of w.
bool is_reduced_bpd(const BumplessPipeDream& d, const Permutation& w);

/// All reduced BPDs of w (closure of the Rothe BPD under droops), sorted.
/// Throws TooLarge for n > 7.
std::vector<BumplessPipeDream> bpds(const Permutation& w);

}  // namespace hiero
