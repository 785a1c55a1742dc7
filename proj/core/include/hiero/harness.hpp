#pragma once

// Finite checks of the Schubert statements: tablets under antidiagonal order
// against pipe dreams, and lex-diagonal tablets against bumpless pipe dreams.

#include <string>
#include <vector>

#include "hiero/permutation.hpp"

namespace hiero {

enum class Conjecture { KM, BPD, Equidim };

std::string to_string(Conjecture c);
/// "km", "bpd", "equidim"; throws InvalidArgument otherwise.
Conjecture parse_conjecture(const std::string& name);

struct CheckResult {
  Conjecture conjecture = Conjecture::KM;
  Permutation w;
  bool pass = false;
  std::string details;
};

/// Antidiagonal tablet vs reduced pipe dreams: equal counts and equal
/// multisets of supports. Throws TooLarge for n > 5.
CheckResult check_km(const Permutation& w);

/// Lex-diagonal tablet: equidimensional, and hieroglyph supports equal BPD
/// blank supports as multisets. Throws TooLarge for n > 5.
CheckResult check_bpd_conjecture(const Permutation& w);

/// Lex-diagonal polarized initial ideal is equidimensional.
CheckResult check_equidim(const Permutation& w);

CheckResult run_check(Conjecture c, const Permutation& w);

struct SweepReport {
  Conjecture conjecture = Conjecture::KM;
  int upto = 0;
  std::vector<CheckResult> results;

  bool all_pass() const;
  /// {conjecture, upto, all_pass, results: [{conjecture, n, permutation, pass, details}]}
  std::string to_json() const;
};

/// Every w in S_1..S_upto, in order. Work is spread over `threads` workers
/// (0 picks the hardware concurrency); the report order does not depend on it.
SweepReport sweep(Conjecture c, int upto, unsigned threads = 0);

}  // namespace hiero
