#include "hiero/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "hiero/error.hpp"

namespace hiero {

Permutation::Permutation(std::vector<int> one_line) : w_(std::move(one_line)) {
  std::vector<bool> seen(w_.size() + 1, false);
  for (int v : w_) {
    if (v < 1 || v > static_cast<int>(w_.size()) || seen[static_cast<std::size_t>(v)])
      throw Error(ErrorCode::InvalidArgument, "not a permutation: " + to_string());
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> w;
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (c < '1' || c > '9') throw Error(ErrorCode::InvalidArgument, "bad permutation '" + std::string(text) + "'");
      w.push_back(c - '0');
    }
  } else {
    std::size_t start = 0;
    while (start <= text.size()) {
      const std::size_t end = std::min(text.find(',', start), text.size());
      const std::string_view part = text.substr(start, end - start);
      int v = 0;
      auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
      if (ec != std::errc() || ptr != part.data() + part.size() || part.empty())
        throw Error(ErrorCode::InvalidArgument, "bad permutation '" + std::string(text) + "'");
      w.push_back(v);
      start = end + 1;
    }
  }
  if (w.empty()) throw Error(ErrorCode::InvalidArgument, "empty permutation");
  return Permutation(std::move(w));
}

std::vector<Permutation> Permutation::all(int n) {
  std::vector<Permutation> out;
  std::vector<int> w = identity(n).one_line();
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(w_.size());
  for (std::size_t i = 0; i < w_.size(); ++i) inv[static_cast<std::size_t>(w_[i] - 1)] = static_cast<int>(i + 1);
  return Permutation(std::move(inv));
}

int Permutation::length() const {
  int inv = 0;
  for (std::size_t i = 0; i < w_.size(); ++i)
    for (std::size_t j = i + 1; j < w_.size(); ++j)
      if (w_[i] > w_[j]) ++inv;
  return inv;
}

std::string Permutation::to_string() const {
  const bool digits = w_.size() <= 9;
  std::string s;
  for (std::size_t i = 0; i < w_.size(); ++i) {
    if (!digits && i) s += ',';
    s += std::to_string(w_[i]);
  }
  return s;
}

}  // namespace hiero
