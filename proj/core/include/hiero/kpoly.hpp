#pragma once

// K-polynomials, multidegrees and degrees of R/J for monomial ideals J under a
// positive multigrading.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hiero/monomial_ideal.hpp"

namespace hiero {

/// Integer Laurent polynomial in t_1..t_d. Coefficient arithmetic throws
/// Overflow instead of wrapping.
class LaurentPoly {
 public:
  using Exponent = std::vector<int>;

  explicit LaurentPoly(std::size_t dim = 1) : dim_(dim) {}

  static LaurentPoly one(std::size_t dim);
  /// c * t^a.
  static LaurentPoly monomial(Exponent a, std::int64_t c = 1);

  std::size_t dim() const noexcept { return dim_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  const std::map<Exponent, std::int64_t>& terms() const noexcept { return terms_; }
  std::int64_t coefficient(const Exponent& a) const;

  void add_term(const Exponent& a, std::int64_t c);
  /// Multiplication by t^a.
  LaurentPoly shifted(const Exponent& a) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  std::size_t dim_;
  std::map<Exponent, std::int64_t> terms_;
};

/// "1 - t^2", "6*t1^2*t2"; variables are t when dim is 1, else t1..td.
std::string to_string(const LaurentPoly& p);

/// Sum over subsets S of the generators of (-1)^|S| t^deg(lcm S).
/// Throws TooManyGenerators above kTaylorMaxGenerators.
inline constexpr std::size_t kTaylorMaxGenerators = 20;
LaurentPoly kpoly_taylor(const MonomialIdeal& ideal, const Grading& g);

/// K(<G, m>) = K(<G>) - t^deg(m) K(<G> : m), with variable-disjoint blocks
/// split multiplicatively and memoization inside one call.
LaurentPoly kpoly_split(const MonomialIdeal& ideal, const Grading& g);

/// Face sum over the Stanley-Reisner complex. Throws NotSquarefree.
LaurentPoly kpoly_faces(const MonomialIdeal& ideal, const Grading& g);

/// Lowest total degree part of K(1 - t).
LaurentPoly multidegree(const LaurentPoly& k);

/// Coefficient of the lowest degree term of K(1 - t). Throws
/// NotStandardGrading unless g is the standard grading.
std::int64_t degree(const LaurentPoly& k, const Grading& g);

/// Coefficients 0..max_degree of K(t) / (1 - t)^nvars.
std::vector<std::int64_t> hilbert_series_expand(const LaurentPoly& k, std::size_t nvars, int max_degree);

/// Compares the expansion of K/(1-t)^N with direct standard monomial counts.
bool hilbert_series_check(const MonomialIdeal& ideal, const LaurentPoly& k, int max_degree);

}  // namespace hiero
