#pragma once

// Exact multivariate polynomial arithmetic over Q: variables with optional
// grid metadata, positive multigradings, monomials and term orders.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hiero/error.hpp"

namespace hiero {

using Rational = mpq_class;
using Integer = mpz_class;

/// A cell of a (possibly multi-pane) coordinate grid, 1-based row/col.
struct GridCell {
  int pane = 0;
  int row = 0;
  int col = 0;

  friend auto operator<=>(const GridCell&, const GridCell&) = default;
};

struct Variable {
  int id = 0;
  std::string base_name;
  /// 1 for an original variable, k >= 2 for the k-th polarization copy.
  int copy_index = 1;
  std::optional<GridCell> grid;

  /// Display name: the bare base name for copy 1, "base~k" otherwise.
  std::string name() const;

  friend bool operator==(const Variable&, const Variable&) = default;
};

/// An ordered set of variables. Ids are contiguous from 0 and
/// (base_name, copy_index) pairs are unique.
class Ring {
 public:
  Ring() = default;
  explicit Ring(std::vector<Variable> vars);

  static Ring from_names(const std::vector<std::string>& names);

  std::size_t size() const noexcept { return vars_.size(); }
  const Variable& var(int id) const { return vars_.at(static_cast<std::size_t>(id)); }
  const std::vector<Variable>& variables() const noexcept { return vars_; }

  std::optional<int> find(std::string_view name) const;
  /// Throws UndeclaredVariable when the name is unknown.
  int index_of(std::string_view name) const;

  /// Copy of this ring with one more variable appended.
  Ring with_variable(std::string base_name, int copy_index,
                     std::optional<GridCell> grid) const;

  friend bool operator==(const Ring& a, const Ring& b) { return a.vars_ == b.vars_; }

 private:
  std::vector<Variable> vars_;
  std::map<std::string, int, std::less<>> index_;
};

class Monomial {
 public:
  Monomial() = default;
  /// The monomial 1 in a ring with `nvars` variables.
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<int> exps);

  static Monomial variable(std::size_t nvars, int id, int power = 1);

  std::size_t nvars() const noexcept { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  std::span<const int> exponents() const noexcept { return exps_; }
  int degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }
  bool is_squarefree() const noexcept;
  /// Variable ids with a positive exponent, ascending.
  std::vector<int> support() const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  /// Plain lexicographic comparison of exponent vectors (container ordering only).
  friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.exps_ <=> b.exps_; }

 private:
  std::vector<int> exps_;
  int degree_ = 0;
};

Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_lcm(const Monomial& a, const Monomial& b);
Monomial mono_gcd(const Monomial& a, const Monomial& b);
/// True iff a divides b.
bool mono_divides(const Monomial& a, const Monomial& b);
/// b / a; requires mono_divides(a, b).
Monomial mono_quotient(const Monomial& b, const Monomial& a);

inline Monomial operator*(const Monomial& a, const Monomial& b) { return mono_mul(a, b); }

/// A positive multigrading: each variable gets a nonzero weight vector with
/// nonnegative entries.
class Grading {
 public:
  Grading() = default;
  /// Throws NonPositiveGrading on a zero or negative weight vector.
  Grading(std::size_t dim, std::vector<std::vector<int>> weights);

  static Grading standard(std::size_t nvars);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return weights_.size(); }
  const std::vector<int>& weight(int var) const { return weights_.at(static_cast<std::size_t>(var)); }
  const std::vector<std::vector<int>>& weights() const noexcept { return weights_; }

  std::vector<int> degree_of(const Monomial& m) const;
  bool is_standard() const noexcept;
  /// Every weight vector has the same component sum.
  bool equal_total_degrees() const noexcept;

  friend bool operator==(const Grading&, const Grading&) = default;

 private:
  std::size_t dim_ = 1;
  std::vector<std::vector<int>> weights_;
};

enum class Cmp { Less = -1, Equal = 0, Greater = 1 };
enum class OrderKind { Lex, GRevLex };

/// Lex or graded reverse lex with an explicit variable reading order;
/// reading_order[0] is the greatest variable.
class TermOrder {
 public:
  TermOrder() = default;
  TermOrder(OrderKind kind, std::vector<int> reading_order);

  static TermOrder lex(std::size_t nvars);
  static TermOrder grevlex(std::size_t nvars);

  OrderKind kind() const noexcept { return kind_; }
  const std::vector<int>& reading_order() const noexcept { return reading_; }
  std::size_t size() const noexcept { return reading_.size(); }

  Cmp compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) == Cmp::Less; }

  friend bool operator==(const TermOrder&, const TermOrder&) = default;

 private:
  OrderKind kind_ = OrderKind::Lex;
  std::vector<int> reading_;
};

inline Cmp order_compare(const TermOrder& ord, const Monomial& a, const Monomial& b) {
  return ord.compare(a, b);
}

struct Term {
  Rational coeff;
  Monomial mono;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial with nonzero rational coefficients. Terms are kept
/// sorted descending in the reference order (lex, variable 0 greatest) with
/// no repeated monomials.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}
  Polynomial(std::size_t nvars, std::vector<Term> terms);

  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, int id);
  static Polynomial from_monomial(const Monomial& m, const Rational& c = 1);

  std::size_t nvars() const noexcept { return nvars_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }

  bool is_homogeneous(const Grading& g) const;
  int total_degree() const;

  Polynomial operator-() const;
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator-(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Re-establishes the canonical form; a no-op on any constructed value.
  void normalize();

 private:
  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

/// The greatest term of f under ord. Throws ZeroPolynomial.
Term leading_term(const TermOrder& ord, const Polynomial& f);

enum class ArithOp { Add, Sub, Mul };
Polynomial poly_arith(ArithOp op, const Polynomial& f, const Polynomial& g);

std::string to_string(const Monomial& m, const Ring& ring);
std::string to_string(const Polynomial& f, const Ring& ring);
std::string to_string(const TermOrder& ord, const Ring& ring);

}  // namespace hiero
