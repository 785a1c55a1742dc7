#pragma once

// Builders for the determinantal, Schubert, commuting and multiplicity
// example families, with their named term orders.

#include <string>
#include <vector>

#include "hiero/groebner.hpp"
#include "hiero/permutation.hpp"

namespace hiero {

/// A ready-to-run input: ideal, order and grading.
struct Problem {
  Ideal ideal;
  TermOrder order;
  Grading grading;
};

/// Variable name for entry (i, j) of a matrix named `stem`: "x12", or
/// "x10_2" once an index exceeds 9.
std::string matrix_var_name(const std::string& stem, int i, int j);

/// Generic m x n matrix of variables x_ij, ids in row-major order, pane 0.
Ring generic_matrix_ring(int m, int n, const std::string& stem = "x");

/// All k x k minors of the generic m x n matrix (symmetric: of the generic
/// symmetric n x n matrix on the upper triangular variables). Identical
/// minors up to sign are listed once. Throws BadDimensions.
Ideal generic_minor_ideal(int m, int n, int k, bool symmetric);

/// r[i-1][j-1] = #{a <= i : w(a) <= j}.
std::vector<std::vector<int>> rank_matrix(const Permutation& w);

/// Fulton's generators: the (r_ij + 1)-minors of the northwest i x j
/// submatrix, skipping conditions with r_ij + 1 > min(i, j).
Ideal schubert_ideal(const Permutation& w);

/// Entries of AB - BA over a_ij (pane 0) and b_ij (pane 1).
Ideal commuting_ideal(int n);
/// Commuting ideal under grevlex a11 > ... > ann > b11 > ... > bnn.
Problem commuting_problem(int n);

/// Tangent cone ideal for the multiplicity example, with its SE-NW lex order.
Problem kl_fixture();

// Named orders on matrix rings. Variables without grid metadata are not
// allowed.

/// Lex, cells read in English reading order, pane by pane.
TermOrder lex_diagonal_order(const Ring& ring);
/// Lex, rows top to bottom, each row read right to left.
TermOrder antidiagonal_order(const Ring& ring);
/// Lex, rows in the order rows(1), rows(2), ..., each read left to right.
TermOrder row_reading_order(const Ring& ring, const Permutation& rows);

/// Schubert problem for w under lex-diagonal order.
Problem schubert_problem(const Permutation& w);

struct FixtureInfo {
  std::string name;
  std::string description;
};

/// Built-in examples, in a fixed order.
std::vector<FixtureInfo> fixture_list();
/// Throws InvalidArgument for an unknown name.
Problem fixture(const std::string& name);

}  // namespace hiero
