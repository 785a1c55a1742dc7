#include "hiero/pipe_dreams.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "hiero/error.hpp"

namespace hiero {

namespace {

void require_small(const Permutation& w) {
  if (w.size() > kMaxEnumerationSize)
    throw Error(ErrorCode::TooLarge, "enumeration limited to n <= " + std::to_string(kMaxEnumerationSize));
}

using PipePair = std::pair<int, int>;

bool record_crossing(std::set<PipePair>& seen, int a, int b) {
  return seen.emplace(std::min(a, b), std::max(a, b)).second;
}

}  // namespace

std::optional<Permutation> trace_pipe_dream(int n, const std::vector<Cell>& crosses) {
  std::set<Cell> cross(crosses.begin(), crosses.end());
  // Which pipe passes each cross horizontally / vertically.
  std::map<Cell, int> east, north;
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    int r = i, c = 1;
    bool moving_east = true;
    while (r >= 1) {
      if (cross.count({r, c})) {
        (moving_east ? east : north)[{r, c}] = i;
        if (moving_east)
          ++c;
        else
          --r;
      } else if (moving_east) {
        moving_east = false;
        --r;
      } else {
        moving_east = true;
        ++c;
      }
      if (c > n) return std::nullopt;
    }
    w[static_cast<std::size_t>(i - 1)] = c;
  }
  std::set<PipePair> seen;
  for (const auto& [cell, p] : east) {
    auto it = north.find(cell);
    if (it == north.end() || !record_crossing(seen, p, it->second)) return std::nullopt;
  }
  try {
    return Permutation(std::move(w));
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::vector<PipeDream> pipe_dreams(const Permutation& w) {
  require_small(w);
  const int n = w.size();
  const int len = w.length();
  std::vector<Cell> stair;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; i + j <= n; ++j) stair.emplace_back(i, j);
  std::vector<PipeDream> out;
  std::vector<Cell> chosen;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (static_cast<int>(chosen.size()) == len) {
      auto traced = trace_pipe_dream(n, chosen);
      if (traced && *traced == w) out.push_back(PipeDream{chosen});
      return;
    }
    const std::size_t need = static_cast<std::size_t>(len) - chosen.size();
    for (std::size_t k = start; k + need <= stair.size(); ++k) {
      chosen.push_back(stair[k]);
      self(self, k + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Cell> BumplessPipeDream::blank_support() const {
  std::vector<Cell> out;
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c)
      if (at(r, c) == Tile::Blank) out.emplace_back(r, c);
  return out;
}

std::string BumplessPipeDream::to_string() const {
  std::string s;
  for (int r = 1; r <= n; ++r) {
    for (int c = 1; c <= n; ++c) s += static_cast<char>(at(r, c));
    s += '\n';
  }
  return s;
}

BumplessPipeDream rothe_bpd(const Permutation& w) {
  const int n = w.size();
  BumplessPipeDream d{n, std::vector<Tile>(static_cast<std::size_t>(n * n), Tile::Blank)};
  for (int i = 1; i <= n; ++i) {
    const int j = w(i);
    d.at(i, j) = Tile::RElbow;
    for (int r = i + 1; r <= n; ++r) d.at(r, j) = d.at(r, j) == Tile::Horizontal ? Tile::Cross : Tile::Vertical;
    for (int c = j + 1; c <= n; ++c) d.at(i, c) = d.at(i, c) == Tile::Vertical ? Tile::Cross : Tile::Horizontal;
  }
  return d;
}

bool is_reduced_bpd(const BumplessPipeDream& d, const Permutation& w) {
  const int n = d.n;
  if (w.size() != n || d.tiles.size() != static_cast<std::size_t>(n * n)) return false;
  std::vector<int> visits(d.tiles.size(), 0);
  std::map<Cell, int> east, north;
  for (int j = 1; j <= n; ++j) {
    int r = n, c = j;
    bool moving_east = false;
    for (;;) {
      if (r < 1) return false;
      if (c > n) {
        if (w(r) != j) return false;
        break;
      }
      ++visits[static_cast<std::size_t>((r - 1) * n + (c - 1))];
      const Tile t = d.at(r, c);
      if (moving_east) {
        if (t == Tile::Horizontal) {
          ++c;
        } else if (t == Tile::Cross) {
          east[{r, c}] = j;
          ++c;
        } else if (t == Tile::JElbow) {
          moving_east = false;
          --r;
        } else {
          return false;
        }
      } else {
        if (t == Tile::Vertical) {
          --r;
        } else if (t == Tile::Cross) {
          north[{r, c}] = j;
          --r;
        } else if (t == Tile::RElbow) {
          moving_east = true;
          ++c;
        } else {
          return false;
        }
      }
    }
  }
  // Every non-blank tile is used, crosses by exactly two pipes.
  for (std::size_t k = 0; k < d.tiles.size(); ++k) {
    const int expected = d.tiles[k] == Tile::Blank ? 0 : d.tiles[k] == Tile::Cross ? 2 : 1;
    if (visits[k] != expected) return false;
  }
  std::set<PipePair> seen;
  for (const auto& [cell, p] : east) {
    auto it = north.find(cell);
    if (it == north.end() || !record_crossing(seen, p, it->second)) return false;
  }
  return static_cast<int>(d.blank_support().size()) == w.length();
}

std::vector<BumplessPipeDream> bpds(const Permutation& w) {
  require_small(w);
  const int n = w.size();
  std::set<BumplessPipeDream> seen{rothe_bpd(w)};
  std::deque<BumplessPipeDream> queue{rothe_bpd(w)};
  auto is_elbow = [](Tile t) { return t == Tile::RElbow || t == Tile::JElbow; };
  while (!queue.empty()) {
    const BumplessPipeDream d = std::move(queue.front());
    queue.pop_front();
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b) {
        if (d.at(a, b) != Tile::RElbow) continue;
        for (int c = a + 1; c <= n; ++c)
          for (int e = b + 1; e <= n; ++e) {
            if (d.at(c, e) != Tile::Blank) continue;
            bool clear = true;
            for (int r = a; r <= c && clear; ++r)
              for (int s = b; s <= e && clear; ++s)
                if ((r != a || s != b) && is_elbow(d.at(r, s))) clear = false;
            if (!clear) continue;

            // Droop the pipe through (a, b) down to the corner (c, e).
            BumplessPipeDream x = d;
            x.at(a, b) = Tile::Blank;
            x.at(c, e) = Tile::JElbow;
            x.at(c, b) = Tile::RElbow;
            x.at(a, e) = Tile::RElbow;
            for (int s = b + 1; s < e; ++s) {
              Tile& top = x.at(a, s);
              top = top == Tile::Horizontal ? Tile::Blank : top == Tile::Cross ? Tile::Vertical : top;
              Tile& bottom = x.at(c, s);
              bottom = bottom == Tile::Blank ? Tile::Horizontal : bottom == Tile::Vertical ? Tile::Cross : bottom;
            }
            for (int r = a + 1; r < c; ++r) {
              Tile& left = x.at(r, b);
              left = left == Tile::Vertical ? Tile::Blank : left == Tile::Cross ? Tile::Horizontal : left;
              Tile& right = x.at(r, e);
              right = right == Tile::Blank ? Tile::Vertical : right == Tile::Horizontal ? Tile::Cross : right;
            }
            if (!is_reduced_bpd(x, w) || !seen.insert(x).second) continue;
            queue.push_back(std::move(x));
          }
      }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace hiero
