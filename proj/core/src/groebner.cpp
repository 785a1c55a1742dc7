#include "hiero/groebner.hpp"

#include <algorithm>
#include <cstdint>
#include <tuple>

namespace hiero {

namespace {

// Exponent vector stored in reading-order positions: position 0 holds the
// exponent of the greatest variable. sig has bit (p mod 64) set when
// position p is nonzero, for quick divisibility rejection.
struct Mono {
  std::vector<int> e;
  int deg = 0;
  std::uint64_t sig = 0;
};

Mono make_mono(std::vector<int> e) {
  Mono m;
  for (std::size_t p = 0; p < e.size(); ++p) {
    m.deg += e[p];
    if (e[p] != 0) m.sig |= std::uint64_t{1} << (p % 64);
  }
  m.e = std::move(e);
  return m;
}

bool divides(const Mono& a, const Mono& b) {
  if (a.deg > b.deg || (a.sig & ~b.sig) != 0) return false;
  for (std::size_t p = 0; p < a.e.size(); ++p)
    if (a.e[p] > b.e[p]) return false;
  return true;
}

bool coprime(const Mono& a, const Mono& b) {
  if ((a.sig & b.sig) == 0) return true;
  for (std::size_t p = 0; p < a.e.size(); ++p)
    if (a.e[p] != 0 && b.e[p] != 0) return false;
  return true;
}

Mono mul(const Mono& a, const Mono& b) {
  Mono m;
  m.e.resize(a.e.size());
  for (std::size_t p = 0; p < a.e.size(); ++p) m.e[p] = a.e[p] + b.e[p];
  m.deg = a.deg + b.deg;
  m.sig = a.sig | b.sig;
  return m;
}

Mono lcm(const Mono& a, const Mono& b) {
  std::vector<int> e(a.e.size());
  for (std::size_t p = 0; p < e.size(); ++p) e[p] = std::max(a.e[p], b.e[p]);
  return make_mono(std::move(e));
}

Mono quot(const Mono& b, const Mono& a) {
  std::vector<int> e(a.e.size());
  for (std::size_t p = 0; p < e.size(); ++p) e[p] = b.e[p] - a.e[p];
  return make_mono(std::move(e));
}

struct ZTerm {
  Integer c;
  Mono m;
};
using ZPoly = std::vector<ZTerm>;

void make_primitive(ZPoly& f) {
  if (f.empty()) return;
  Integer g = 0;
  for (const ZTerm& t : f) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
    if (g == 1) break;
  }
  if (f.front().c < 0) g = -g;
  if (g != 1)
    for (ZTerm& t : f) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
}

/// Integer-coefficient polynomial arithmetic under one fixed term order.
class Engine {
 public:
  explicit Engine(const TermOrder& ord) : kind_(ord.kind()), perm_(ord.reading_order()) {}

  int cmp(const Mono& a, const Mono& b) const {
    if (kind_ == OrderKind::Lex) {
      for (std::size_t p = 0; p < a.e.size(); ++p)
        if (a.e[p] != b.e[p]) return a.e[p] > b.e[p] ? 1 : -1;
      return 0;
    }
    if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
    for (std::size_t p = a.e.size(); p-- > 0;)
      if (a.e[p] != b.e[p]) return a.e[p] < b.e[p] ? 1 : -1;
    return 0;
  }

  Mono to_mono(const Monomial& m) const {
    std::vector<int> e(perm_.size());
    for (std::size_t p = 0; p < perm_.size(); ++p) e[p] = m[static_cast<std::size_t>(perm_[p])];
    return make_mono(std::move(e));
  }

  Monomial to_monomial(const Mono& m) const {
    std::vector<int> e(perm_.size());
    for (std::size_t p = 0; p < perm_.size(); ++p) e[static_cast<std::size_t>(perm_[p])] = m.e[p];
    return Monomial(std::move(e));
  }

  /// Clears denominators; *denominator receives the factor applied.
  ZPoly to_zpoly(const Polynomial& f, Integer* denominator = nullptr) const {
    Integer d = 1;
    for (const Term& t : f.terms()) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), t.coeff.get_den_mpz_t());
    ZPoly z;
    z.reserve(f.size());
    for (const Term& t : f.terms()) {
      Integer c = t.coeff.get_num() * (d / t.coeff.get_den());
      z.push_back(ZTerm{std::move(c), to_mono(t.mono)});
    }
    std::sort(z.begin(), z.end(), [this](const ZTerm& a, const ZTerm& b) { return cmp(a.m, b.m) > 0; });
    if (denominator) *denominator = d;
    return z;
  }

  Polynomial to_poly(const ZPoly& z, std::size_t nvars, const Rational& divisor) const {
    std::vector<Term> terms;
    terms.reserve(z.size());
    for (const ZTerm& t : z) terms.push_back(Term{Rational(t.c) / divisor, to_monomial(t.m)});
    return Polynomial(nvars, std::move(terms));
  }

  /// ca*qa*A[ia..] + cb*qb*B[ib..]; a null multiplier monomial means 1.
  ZPoly combine(const ZPoly& A, std::size_t ia, const Integer& ca, const Mono* qa,
                const ZPoly& B, std::size_t ib, const Integer& cb, const Mono* qb) const {
    ZPoly out;
    out.reserve(A.size() - ia + B.size() - ib);
    auto term_a = [&](std::size_t i) { return qa ? mul(*qa, A[i].m) : A[i].m; };
    auto term_b = [&](std::size_t j) { return qb ? mul(*qb, B[j].m) : B[j].m; };
    std::size_t i = ia, j = ib;
    Mono ma, mb;
    if (i < A.size()) ma = term_a(i);
    if (j < B.size()) mb = term_b(j);
    while (i < A.size() || j < B.size()) {
      const int c = i == A.size() ? -1 : j == B.size() ? 1 : cmp(ma, mb);
      if (c > 0) {
        out.push_back(ZTerm{ca * A[i].c, std::move(ma)});
        if (++i < A.size()) ma = term_a(i);
      } else if (c < 0) {
        out.push_back(ZTerm{cb * B[j].c, std::move(mb)});
        if (++j < B.size()) mb = term_b(j);
      } else {
        Integer v = ca * A[i].c + cb * B[j].c;
        if (v != 0) out.push_back(ZTerm{std::move(v), std::move(ma)});
        if (++i < A.size()) ma = term_a(i);
        if (++j < B.size()) mb = term_b(j);
      }
    }
    return out;
  }

  /// Fraction-free full reduction. On return scale*h - r lies in the ideal
  /// generated by `divisors`, and no term of r is divisible by a leading
  /// monomial. Divisors are tried in list order.
  ZPoly reduce(ZPoly h, const std::vector<const ZPoly*>& divisors, Integer* scale_out = nullptr) const {
    ZPoly r;
    Integer scale = 1;
    std::size_t pos = 0;
    Integer g, a, b;
    while (pos < h.size()) {
      const ZTerm& lt = h[pos];
      const ZPoly* div = nullptr;
      for (const ZPoly* d : divisors)
        if (divides(d->front().m, lt.m)) {
          div = d;
          break;
        }
      if (!div) {
        r.push_back(std::move(h[pos]));
        ++pos;
        continue;
      }
      const ZPoly& d = *div;
      mpz_gcd(g.get_mpz_t(), lt.c.get_mpz_t(), d.front().c.get_mpz_t());
      a = d.front().c / g;
      b = lt.c / g;
      if (a < 0) {
        a = -a;
        b = -b;
      }
      const Mono q = quot(lt.m, d.front().m);
      ZPoly next = combine(h, pos + 1, a, nullptr, d, 1, Integer(-b), &q);
      if (a != 1) {
        for (ZTerm& t : r) t.c *= a;
        scale *= a;
      }
      h = std::move(next);
      pos = 0;
    }
    if (scale_out) *scale_out = scale;
    return r;
  }

  ZPoly spoly(const ZPoly& f, const ZPoly& g, const Mono& l) const {
    const Mono mf = quot(l, f.front().m);
    const Mono mg = quot(l, g.front().m);
    Integer gg;
    mpz_gcd(gg.get_mpz_t(), f.front().c.get_mpz_t(), g.front().c.get_mpz_t());
    const Integer a = g.front().c / gg;
    const Integer b = f.front().c / gg;
    return combine(f, 1, a, &mf, g, 1, Integer(-b), &mg);
  }

 private:
  OrderKind kind_;
  std::vector<int> perm_;
};

struct Pair {
  int i;
  int j;
  Mono lcm;
};

class BuchbergerRun {
 public:
  explicit BuchbergerRun(const Engine& engine) : E_(engine) {}

  void add_input(ZPoly f) {
    if (f.empty()) return;
    ZPoly h = E_.reduce(std::move(f), active_divisors());
    insert(std::move(h));
  }

  void run(BuchbergerStats* stats) {
    while (!pairs_.empty()) {
      const std::size_t k = select();
      Pair p = std::move(pairs_[k]);
      pairs_[k] = std::move(pairs_.back());
      pairs_.pop_back();
      if (stats) ++stats->pairs_reduced;
      ZPoly s = E_.spoly(polys_[static_cast<std::size_t>(p.i)], polys_[static_cast<std::size_t>(p.j)], p.lcm);
      ZPoly h = E_.reduce(std::move(s), active_divisors());
      if (h.empty()) {
        if (stats) ++stats->zero_reductions;
        continue;
      }
      insert(std::move(h));
    }
    if (stats) stats->pairs_created = pairs_created_;
  }

  /// Interreduced active basis, sorted by leading monomial descending.
  std::vector<ZPoly> reduced_basis() const {
    std::vector<ZPoly> out;
    for (int k : active_) {
      std::vector<const ZPoly*> others;
      for (int l : active_)
        if (l != k) others.push_back(&polys_[static_cast<std::size_t>(l)]);
      ZPoly r = E_.reduce(polys_[static_cast<std::size_t>(k)], others);
      make_primitive(r);
      out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end(),
              [this](const ZPoly& a, const ZPoly& b) { return E_.cmp(a.front().m, b.front().m) > 0; });
    return out;
  }

 private:
  const Mono& lm(int k) const { return polys_[static_cast<std::size_t>(k)].front().m; }

  std::vector<const ZPoly*> active_divisors() const {
    std::vector<const ZPoly*> d;
    d.reserve(active_.size());
    for (int k : active_) d.push_back(&polys_[static_cast<std::size_t>(k)]);
    return d;
  }

  // Normal strategy: least lcm degree, then least lcm in the order.
  std::size_t select() const {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const Pair& a = pairs_[k];
      const Pair& b = pairs_[best];
      if (a.lcm.deg != b.lcm.deg) {
        if (a.lcm.deg < b.lcm.deg) best = k;
        continue;
      }
      const int c = E_.cmp(a.lcm, b.lcm);
      if (c < 0 || (c == 0 && std::tie(a.i, a.j) < std::tie(b.i, b.j))) best = k;
    }
    return best;
  }

  void insert(ZPoly h) {
    if (h.empty()) return;
    make_primitive(h);
    polys_.push_back(std::move(h));
    update(static_cast<int>(polys_.size()) - 1);
  }

  // Gebauer-Moeller installation of the new element h.
  void update(int h) {
    const Mono& lh = lm(h);
    struct Cand {
      int g;
      Mono lcm;
      bool coprime;
    };
    std::vector<Cand> C;
    C.reserve(active_.size());
    for (int g : active_) C.push_back(Cand{g, lcm(lh, lm(g)), coprime(lh, lm(g))});

    std::vector<Cand> D;
    for (std::size_t k = 0; k < C.size(); ++k) {
      bool keep = C[k].coprime;
      if (!keep) {
        keep = true;
        for (std::size_t l = k + 1; l < C.size() && keep; ++l)
          if (divides(C[l].lcm, C[k].lcm)) keep = false;
        for (std::size_t l = 0; l < D.size() && keep; ++l)
          if (divides(D[l].lcm, C[k].lcm)) keep = false;
      }
      if (keep) D.push_back(std::move(C[k]));
    }

    std::vector<Pair> kept;
    kept.reserve(pairs_.size() + D.size());
    for (Pair& p : pairs_) {
      if (!divides(lh, p.lcm) || p.lcm.e == lcm(lm(p.i), lh).e || p.lcm.e == lcm(lm(p.j), lh).e)
        kept.push_back(std::move(p));
    }
    for (Cand& c : D) {
      if (c.coprime) continue;
      kept.push_back(Pair{c.g, h, std::move(c.lcm)});
      ++pairs_created_;
    }
    pairs_ = std::move(kept);

    std::vector<int> next;
    next.reserve(active_.size() + 1);
    for (int g : active_)
      if (!divides(lh, lm(g))) next.push_back(g);
    next.push_back(h);
    active_ = std::move(next);
  }

  const Engine& E_;
  std::vector<ZPoly> polys_;
  std::vector<int> active_;
  std::vector<Pair> pairs_;
  std::size_t pairs_created_ = 0;
};

void require_order_matches(const TermOrder& ord, std::size_t nvars) {
  if (ord.size() != nvars) throw Error(ErrorCode::InvalidArgument, "term order does not match the ring");
}

}  // namespace

bool Ideal::is_zero() const {
  return std::all_of(gens.begin(), gens.end(), [](const Polynomial& f) { return f.is_zero(); });
}

bool Ideal::is_homogeneous(const Grading& g) const {
  return std::all_of(gens.begin(), gens.end(), [&](const Polynomial& f) { return f.is_homogeneous(g); });
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(elements.size());
  for (const Polynomial& f : elements) out.push_back(leading_term(order, f).mono);
  return out;
}

bool GroebnerBasis::is_unit() const {
  return std::any_of(elements.begin(), elements.end(), [](const Polynomial& f) {
    return f.size() == 1 && f.terms().front().mono.is_one();
  });
}

Polynomial normal_form(const TermOrder& ord, const Polynomial& f, std::span<const Polynomial> divisors) {
  require_order_matches(ord, f.nvars());
  const Engine E(ord);
  std::vector<ZPoly> zs;
  zs.reserve(divisors.size());
  for (const Polynomial& g : divisors) {
    if (g.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "zero divisor polynomial in normal_form");
    if (g.nvars() != f.nvars()) throw Error(ErrorCode::InvalidArgument, "polynomials from different rings");
    zs.push_back(E.to_zpoly(g));
  }
  std::vector<const ZPoly*> ptrs;
  for (const ZPoly& z : zs) ptrs.push_back(&z);
  Integer denom, scale;
  ZPoly r = E.reduce(E.to_zpoly(f, &denom), ptrs, &scale);
  return E.to_poly(r, f.nvars(), Rational(scale * denom));
}

GroebnerBasis buchberger(const TermOrder& ord, const Ideal& ideal, BuchbergerStats* stats) {
  const std::size_t n = ideal.ring.size();
  require_order_matches(ord, n);
  const Engine E(ord);
  BuchbergerRun run(E);
  for (const Polynomial& f : ideal.gens) {
    if (f.nvars() != n) throw Error(ErrorCode::InvalidArgument, "generator from a different ring");
    run.add_input(E.to_zpoly(f));
  }
  run.run(stats);
  GroebnerBasis gb{ord, {}};
  for (const ZPoly& z : run.reduced_basis()) gb.elements.push_back(E.to_poly(z, n, Rational(z.front().c)));
  return gb;
}

MonomialIdeal initial_ideal(const GroebnerBasis& gb, const Ring& ring) {
  if (gb.is_unit()) throw Error(ErrorCode::ContainsUnit, "the ideal is the whole ring");
  return MonomialIdeal(ring, gb.leading_monomials());
}

MonomialIdeal initial_ideal(const TermOrder& ord, const Ideal& ideal) {
  return initial_ideal(buchberger(ord, ideal), ideal.ring);
}

Polynomial s_polynomial(const TermOrder& ord, const Polynomial& f, const Polynomial& g) {
  const Term lf = leading_term(ord, f);
  const Term lg = leading_term(ord, g);
  const Monomial l = mono_lcm(lf.mono, lg.mono);
  const Polynomial mf = Polynomial::from_monomial(mono_quotient(l, lf.mono), Rational(1) / lf.coeff);
  const Polynomial mg = Polynomial::from_monomial(mono_quotient(l, lg.mono), Rational(1) / lg.coeff);
  return mf * f - mg * g;
}

std::vector<std::uint64_t> hilbert_function_oracle(const MonomialIdeal& ideal, int max_degree) {
  if (max_degree < 0) throw Error(ErrorCode::InvalidArgument, "negative degree bound");
  const std::size_t n = ideal.nvars();
  std::vector<std::uint64_t> hf(static_cast<std::size_t>(max_degree) + 1, 0);
  std::vector<int> e(n, 0);
  // Enumerate every monomial of degree <= max_degree once.
  auto visit = [&](auto&& self, std::size_t var, int remaining) -> void {
    if (var == n) {
      const Monomial m(e);
      if (!ideal.contains(m)) ++hf[static_cast<std::size_t>(m.degree())];
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      e[var] = k;
      self(self, var + 1, remaining - k);
    }
    e[var] = 0;
  };
  visit(visit, 0, max_degree);
  return hf;
}

}  // namespace hiero
