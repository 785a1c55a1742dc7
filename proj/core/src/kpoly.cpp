#include "hiero/kpoly.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <limits>
#include <numeric>

#include "hiero/groebner.hpp"

namespace hiero {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "K-polynomial coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "K-polynomial coefficient overflow");
  return r;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  __int128 r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::int64_t>::max()) throw Error(ErrorCode::Overflow, "binomial overflow");
  }
  return static_cast<std::int64_t>(r);
}

void require_grading(const MonomialIdeal& ideal, const Grading& g) {
  if (g.size() != ideal.nvars()) throw Error(ErrorCode::InvalidArgument, "grading does not match the ring");
}

LaurentPoly t_power(const Grading& g, const Monomial& m) { return LaurentPoly::monomial(g.degree_of(m)); }

// 1 - t^deg(m)
LaurentPoly one_minus(const Grading& g, const Monomial& m) {
  return LaurentPoly::one(g.dim()) - t_power(g, m);
}

class SplitRecursion {
 public:
  explicit SplitRecursion(const Grading& g) : g_(g) {}

  LaurentPoly k(const std::vector<Monomial>& gens) {
    if (gens.empty()) return LaurentPoly::one(g_.dim());
    if (gens.size() == 1) return one_minus(g_, gens.front());
    if (auto it = memo_.find(gens); it != memo_.end()) return it->second;

    LaurentPoly result(g_.dim());
    auto blocks = disjoint_blocks(gens);
    if (blocks.size() > 1) {
      result = LaurentPoly::one(g_.dim());
      for (auto& b : blocks) result = result * k(minimal_generators(std::move(b)));
    } else {
      // Peel off the generator of largest degree.
      const Monomial& m = gens.back();
      std::vector<Monomial> rest(gens.begin(), gens.end() - 1);
      std::vector<Monomial> colon;
      colon.reserve(rest.size());
      for (const Monomial& x : rest) colon.push_back(mono_quotient(x, mono_gcd(x, m)));
      result = k(rest) - k(minimal_generators(std::move(colon))) * t_power(g_, m);
    }
    memo_.emplace(gens, result);
    return result;
  }

 private:
  // Groups generators into classes connected by shared variables.
  static std::vector<std::vector<Monomial>> disjoint_blocks(const std::vector<Monomial>& gens) {
    const std::size_t s = gens.size();
    std::vector<std::size_t> parent(s);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    const std::size_t n = gens.front().nvars();
    std::vector<std::size_t> owner(n, s);
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t v = 0; v < n; ++v) {
        if (gens[i][v] == 0) continue;
        if (owner[v] == s)
          owner[v] = i;
        else
          parent[find(i)] = find(owner[v]);
      }
    std::vector<std::vector<Monomial>> blocks;
    std::vector<std::size_t> index(s, s);
    for (std::size_t i = 0; i < s; ++i) {
      const std::size_t r = find(i);
      if (index[r] == s) {
        index[r] = blocks.size();
        blocks.emplace_back();
      }
      blocks[index[r]].push_back(gens[i]);
    }
    return blocks;
  }

  const Grading& g_;
  std::map<std::vector<Monomial>, LaurentPoly> memo_;
};

class FaceSum {
 public:
  FaceSum(const MonomialIdeal& ideal, const Grading& g) : g_(g) {
    const std::size_t n = ideal.nvars();
    std::vector<int> freq(n, 0);
    for (const Monomial& m : ideal.gens())
      for (int v : m.support()) ++freq[static_cast<std::size_t>(v)];
    // Cone vertices (in no generator) contribute t^w + (1 - t^w) = 1.
    for (std::size_t v = 0; v < n; ++v)
      if (freq[v] > 0) vertices_.push_back(static_cast<int>(v));
    std::stable_sort(vertices_.begin(), vertices_.end(),
                     [&](int a, int b) { return freq[static_cast<std::size_t>(a)] > freq[static_cast<std::size_t>(b)]; });
    gens_of_.resize(n);
    for (std::size_t k = 0; k < ideal.size(); ++k) {
      const auto supp = ideal.gens()[k].support();
      remaining_.push_back(static_cast<int>(supp.size()));
      for (int v : supp) gens_of_[static_cast<std::size_t>(v)].push_back(k);
    }
    dead_.assign(ideal.size(), false);
    live_ = ideal.size();
  }

  LaurentPoly run() { return visit(0); }

 private:
  LaurentPoly visit(std::size_t pos) {
    if (live_ == 0 || pos == vertices_.size()) return LaurentPoly::one(g_.dim());
    const auto v = static_cast<std::size_t>(vertices_[pos]);
    const LaurentPoly tw = LaurentPoly::monomial(g_.weight(static_cast<int>(v)));
    const auto& gs = gens_of_[v];

    // v outside sigma: every live generator through v can no longer be completed.
    std::vector<std::size_t> killed;
    for (std::size_t k : gs)
      if (!dead_[k]) {
        dead_[k] = true;
        --live_;
        killed.push_back(k);
      }
    LaurentPoly out = (LaurentPoly::one(g_.dim()) - tw) * visit(pos + 1);
    for (std::size_t k : killed) dead_[k] = false;
    live_ += killed.size();

    // v inside sigma: allowed unless it completes a generator.
    bool face = true;
    for (std::size_t k : gs)
      if (!dead_[k] && remaining_[k] == 1) face = false;
    if (face) {
      for (std::size_t k : gs) --remaining_[k];
      out += tw * visit(pos + 1);
      for (std::size_t k : gs) ++remaining_[k];
    }
    return out;
  }

  const Grading& g_;
  std::vector<int> vertices_;
  std::vector<std::vector<std::size_t>> gens_of_;
  std::vector<int> remaining_;
  std::vector<bool> dead_;
  std::size_t live_ = 0;
};

}  // namespace

LaurentPoly LaurentPoly::one(std::size_t dim) { return monomial(Exponent(dim, 0), 1); }

LaurentPoly LaurentPoly::monomial(Exponent a, std::int64_t c) {
  LaurentPoly p(a.size());
  p.add_term(a, c);
  return p;
}

std::int64_t LaurentPoly::coefficient(const Exponent& a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? 0 : it->second;
}

void LaurentPoly::add_term(const Exponent& a, std::int64_t c) {
  if (a.size() != dim_) throw Error(ErrorCode::InvalidArgument, "Laurent exponent of wrong dimension");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(a, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::shifted(const Exponent& a) const {
  LaurentPoly out(dim_);
  for (const auto& [e, c] : terms_) {
    Exponent x = e;
    for (std::size_t i = 0; i < dim_; ++i) x[i] += a.at(i);
    out.terms_.emplace(std::move(x), c);
  }
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.dim_ != dim_) throw Error(ErrorCode::InvalidArgument, "Laurent polynomials of different dimension");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  if (o.dim_ != dim_) throw Error(ErrorCode::InvalidArgument, "Laurent polynomials of different dimension");
  for (const auto& [e, c] : o.terms_) add_term(e, checked_mul(c, -1));
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.dim_ != b.dim_) throw Error(ErrorCode::InvalidArgument, "Laurent polynomials of different dimension");
  LaurentPoly out(a.dim_);
  LaurentPoly::Exponent x(a.dim_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < a.dim_; ++i) x[i] = ea[i] + eb[i];
      out.add_term(x, checked_mul(ca, cb));
    }
  return out;
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  // Ascending total degree reads naturally ("1 - t^2").
  std::vector<std::pair<LaurentPoly::Exponent, std::int64_t>> terms(p.terms().begin(), p.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    const int da = std::accumulate(a.first.begin(), a.first.end(), 0);
    const int db = std::accumulate(b.first.begin(), b.first.end(), 0);
    return da < db;
  });
  bool first = true;
  for (const auto& [e, c] : terms) {
    std::int64_t mag = c < 0 ? -c : c;
    if (first)
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += p.dim() == 1 ? "t" : "t" + std::to_string(i + 1);
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty())
      s += std::to_string(mag);
    else if (mag == 1)
      s += mono;
    else
      s += std::to_string(mag) + "*" + mono;
  }
  return s;
}

LaurentPoly kpoly_taylor(const MonomialIdeal& ideal, const Grading& g) {
  require_grading(ideal, g);
  const auto& gens = ideal.gens();
  if (gens.size() > kTaylorMaxGenerators)
    throw Error(ErrorCode::TooManyGenerators,
                "Taylor sum limited to " + std::to_string(kTaylorMaxGenerators) + " generators");
  LaurentPoly out(g.dim());
  auto visit = [&](auto&& self, std::size_t next, const Monomial& l, bool odd) -> void {
    out.add_term(g.degree_of(l), odd ? -1 : 1);
    for (std::size_t k = next; k < gens.size(); ++k) self(self, k + 1, mono_lcm(l, gens[k]), !odd);
  };
  visit(visit, 0, Monomial(ideal.nvars()), false);
  return out;
}

LaurentPoly kpoly_split(const MonomialIdeal& ideal, const Grading& g) {
  require_grading(ideal, g);
  return SplitRecursion(g).k(ideal.gens());
}

LaurentPoly kpoly_faces(const MonomialIdeal& ideal, const Grading& g) {
  require_grading(ideal, g);
  if (!is_squarefree(ideal)) throw Error(ErrorCode::NotSquarefree, "face sum needs a squarefree ideal");
  return FaceSum(ideal, g).run();
}

LaurentPoly multidegree(const LaurentPoly& k) {
  // Builds K(1 - t) one homogeneous degree at a time and stops at the first
  // nonzero part, so the large binomials of the full expansion never appear.
  // Partial sums are exact; only the returned coefficients must fit int64.
  const std::size_t d = k.dim();
  int top = 0;
  for (const auto& [e, c] : k.terms()) {
    int s = 0;
    for (int x : e) {
      if (x < 0) throw Error(ErrorCode::InvalidArgument, "multidegree needs nonnegative exponents");
      s += x;
    }
    top = std::max(top, s);
  }
  for (int D = 0; D <= top; ++D) {
    std::map<LaurentPoly::Exponent, mpz_class> part;
    for (const auto& [e, c] : k.terms()) {
      LaurentPoly::Exponent x(d, 0);
      // distribute D among the coordinates with x_i <= e_i
      auto rec = [&](auto&& self, std::size_t i, int left, const mpz_class& coeff) -> void {
        if (i == d) {
          if (left == 0) part[x] += coeff;
          return;
        }
        for (int j = 0; j <= std::min(left, e[i]); ++j) {
          x[i] = j;
          mpz_class b;
          mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(e[i]), static_cast<unsigned long>(j));
          self(self, i + 1, left - j, j % 2 ? mpz_class(-coeff * b) : mpz_class(coeff * b));
        }
        x[i] = 0;
      };
      rec(rec, 0, D, mpz_class(static_cast<long>(c)));
    }
    LaurentPoly out(d);
    for (const auto& [x, c] : part) {
      if (c == 0) continue;
      if (!c.fits_slong_p()) throw Error(ErrorCode::Overflow, "multidegree coefficient overflow");
      out.add_term(x, c.get_si());
    }
    if (!out.is_zero()) return out;
  }
  return LaurentPoly(d);
}

std::int64_t degree(const LaurentPoly& k, const Grading& g) {
  if (!g.is_standard()) throw Error(ErrorCode::NotStandardGrading, "degree needs the standard grading");
  if (k.dim() != 1) throw Error(ErrorCode::NotStandardGrading, "degree needs a one-variable K-polynomial");
  const LaurentPoly md = multidegree(k);
  if (md.is_zero()) throw Error(ErrorCode::InvalidArgument, "K(1-t) vanishes identically");
  return md.terms().begin()->second;
}

std::vector<std::int64_t> hilbert_series_expand(const LaurentPoly& k, std::size_t nvars, int max_degree) {
  if (k.dim() != 1) throw Error(ErrorCode::NotStandardGrading, "series expansion needs a one-variable K-polynomial");
  const auto n = static_cast<std::int64_t>(nvars);
  std::vector<std::int64_t> out(static_cast<std::size_t>(std::max(max_degree, -1) + 1), 0);
  for (int deg = 0; deg <= max_degree; ++deg) {
    std::int64_t h = 0;
    for (const auto& [e, c] : k.terms()) {
      const int j = e[0];
      if (j < 0) throw Error(ErrorCode::InvalidArgument, "series expansion needs nonnegative exponents");
      if (j > deg) continue;
      // [t^m] (1-t)^-N = C(N-1+m, N-1); for N = 0 only m = 0 survives.
      const std::int64_t m = deg - j;
      const std::int64_t b = n == 0 ? (m == 0 ? 1 : 0) : binomial(n - 1 + m, n - 1);
      h = checked_add(h, checked_mul(c, b));
    }
    out[static_cast<std::size_t>(deg)] = h;
  }
  return out;
}

bool hilbert_series_check(const MonomialIdeal& ideal, const LaurentPoly& k, int max_degree) {
  const auto expanded = hilbert_series_expand(k, ideal.nvars(), max_degree);
  const auto counted = hilbert_function_oracle(ideal, max_degree);
  for (std::size_t i = 0; i < expanded.size(); ++i)
    if (expanded[i] < 0 || static_cast<std::uint64_t>(expanded[i]) != counted[i]) return false;
  return true;
}

}  // namespace hiero
