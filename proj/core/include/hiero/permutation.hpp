#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace hiero {

/// A permutation of {1..n} in one-line notation.
class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidArgument unless one_line is a permutation of 1..n.
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int n);
  /// "2143" (single digits) or "2,1,4,3".
  static Permutation parse(std::string_view text);
  /// All of S_n in lexicographic order.
  static std::vector<Permutation> all(int n);

  int size() const noexcept { return static_cast<int>(w_.size()); }
  /// w(i) for 1 <= i <= n.
  int operator()(int i) const { return w_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<int>& one_line() const noexcept { return w_; }

  Permutation inverse() const;
  /// Number of inversions.
  int length() const;

  std::string to_string() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> w_;
};

}  // namespace hiero
