#include "hiero/zoo.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace hiero {

namespace {

// k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i <= n - (k - static_cast<int>(cur.size())); ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Determinant of the submatrix on `rows` x `cols`; var_at(r, c) gives the
// variable id of entry (r, c), 0-based.
template <class VarAt>
Polynomial minor(std::size_t nvars, const std::vector<int>& rows, const std::vector<int>& cols, VarAt var_at) {
  const std::size_t k = rows.size();
  std::vector<int> perm(k);
  for (std::size_t i = 0; i < k; ++i) perm[i] = static_cast<int>(i);
  std::vector<Term> terms;
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a + 1; b < k; ++b)
        if (perm[a] > perm[b]) ++inversions;
    std::vector<int> e(nvars, 0);
    for (std::size_t i = 0; i < k; ++i)
      ++e[static_cast<std::size_t>(var_at(rows[i], cols[static_cast<std::size_t>(perm[i])]))];
    terms.push_back(Term{Rational(inversions % 2 ? -1 : 1), Monomial(std::move(e))});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Polynomial(nvars, std::move(terms));
}

void push_unique(std::vector<Polynomial>& gens, Polynomial f) {
  if (f.is_zero()) return;
  const Polynomial neg = -f;
  for (const Polynomial& g : gens)
    if (g == f || g == neg) return;
  gens.push_back(std::move(f));
}

const GridCell& cell_of(const Ring& ring, int id) {
  const Variable& v = ring.var(id);
  if (!v.grid) throw Error(ErrorCode::MissingGridMetadata, "variable '" + v.name() + "' has no grid cell");
  return *v.grid;
}

template <class Key>
TermOrder lex_by(const Ring& ring, Key key) {
  std::vector<int> ids(ring.size());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i);
  std::vector<decltype(key(0))> keys;
  for (int id : ids) keys.push_back(key(id));
  std::stable_sort(ids.begin(), ids.end(), [&](int a, int b) {
    return keys[static_cast<std::size_t>(a)] < keys[static_cast<std::size_t>(b)];
  });
  return TermOrder(OrderKind::Lex, std::move(ids));
}

Problem on_grid(Ideal ideal, TermOrder order) {
  Grading g = Grading::standard(ideal.ring.size());
  return Problem{std::move(ideal), std::move(order), std::move(g)};
}

Problem ex26() {
  Ring ring({Variable{0, "x1", 1, GridCell{0, 1, 1}}, Variable{1, "x2", 1, GridCell{0, 1, 2}}});
  std::vector<Polynomial> gens{Polynomial::from_monomial(Monomial({3, 1})),
                               Polynomial::from_monomial(Monomial({0, 2}))};
  TermOrder ord = TermOrder::lex(2);
  return on_grid(Ideal{std::move(ring), std::move(gens)}, std::move(ord));
}

Problem ex36(const std::string& rows) {
  Ideal ideal = schubert_ideal(Permutation::parse("2143"));
  TermOrder ord = row_reading_order(ideal.ring, Permutation::parse(rows));
  return on_grid(std::move(ideal), std::move(ord));
}

}  // namespace

std::string matrix_var_name(const std::string& stem, int i, int j) {
  if (i <= 9 && j <= 9) return stem + std::to_string(i) + std::to_string(j);
  return stem + std::to_string(i) + "_" + std::to_string(j);
}

Ring generic_matrix_ring(int m, int n, const std::string& stem) {
  std::vector<Variable> vars;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j)
      vars.push_back(Variable{static_cast<int>(vars.size()), matrix_var_name(stem, i, j), 1, GridCell{0, i, j}});
  return Ring(std::move(vars));
}

Ideal generic_minor_ideal(int m, int n, int k, bool symmetric) {
  if (m < 1 || n < 1 || k < 1 || k > std::min(m, n))
    throw Error(ErrorCode::BadDimensions, "no " + std::to_string(k) + "x" + std::to_string(k) + " minors of a " +
                                              std::to_string(m) + "x" + std::to_string(n) + " matrix");
  if (symmetric && m != n) throw Error(ErrorCode::BadDimensions, "a symmetric matrix must be square");
  if (!symmetric) {
    Ring ring = generic_matrix_ring(m, n);
    std::vector<Polynomial> gens;
    for (const auto& rows : subsets(m, k))
      for (const auto& cols : subsets(n, k))
        push_unique(gens, minor(ring.size(), rows, cols, [n](int r, int c) { return r * n + c; }));
    return Ideal{std::move(ring), std::move(gens)};
  }
  std::vector<Variable> vars;
  std::map<std::pair<int, int>, int> id;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      id[{i - 1, j - 1}] = static_cast<int>(vars.size());
      vars.push_back(Variable{static_cast<int>(vars.size()), matrix_var_name("x", i, j), 1, GridCell{0, i, j}});
    }
  Ring ring(std::move(vars));
  auto at = [&](int r, int c) { return id.at({std::min(r, c), std::max(r, c)}); };
  std::vector<Polynomial> gens;
  for (const auto& rows : subsets(n, k))
    for (const auto& cols : subsets(n, k)) push_unique(gens, minor(ring.size(), rows, cols, at));
  return Ideal{std::move(ring), std::move(gens)};
}

std::vector<std::vector<int>> rank_matrix(const Permutation& w) {
  const int n = w.size();
  std::vector<std::vector<int>> r(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      int count = 0;
      for (int a = 1; a <= i; ++a)
        if (w(a) <= j) ++count;
      r[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = count;
    }
  return r;
}

Ideal schubert_ideal(const Permutation& w) {
  const int n = w.size();
  Ring ring = generic_matrix_ring(n, n);
  const auto r = rank_matrix(w);
  // The same minor arises from many (i, j); key on its row and column sets.
  std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
  std::vector<Polynomial> gens;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const int k = r[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] + 1;
      if (k > std::min(i, j)) continue;
      for (const auto& rows : subsets(i, k))
        for (const auto& cols : subsets(j, k)) {
          if (!seen.emplace(rows, cols).second) continue;
          gens.push_back(minor(ring.size(), rows, cols, [n](int a, int b) { return a * n + b; }));
        }
    }
  return Ideal{std::move(ring), std::move(gens)};
}

Problem commuting_problem(int n) {
  Ideal ideal = commuting_ideal(n);
  TermOrder ord = TermOrder::grevlex(ideal.ring.size());
  Grading g = Grading::standard(ideal.ring.size());
  return Problem{std::move(ideal), std::move(ord), std::move(g)};
}

Ideal commuting_ideal(int n) {
  if (n < 1) throw Error(ErrorCode::BadDimensions, "matrix size must be positive");
  std::vector<Variable> vars;
  for (int pane = 0; pane < 2; ++pane)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        vars.push_back(Variable{static_cast<int>(vars.size()), matrix_var_name(pane == 0 ? "a" : "b", i, j), 1,
                                GridCell{pane, i, j}});
  Ring ring(std::move(vars));
  const std::size_t nv = ring.size();
  auto a = [n](int i, int j) { return (i - 1) * n + (j - 1); };
  auto b = [n](int i, int j) { return n * n + (i - 1) * n + (j - 1); };
  auto product = [nv](int x, int y) {
    std::vector<int> e(nv, 0);
    ++e[static_cast<std::size_t>(x)];
    ++e[static_cast<std::size_t>(y)];
    return Monomial(std::move(e));
  };
  std::vector<Polynomial> gens;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      std::vector<Term> terms;
      for (int k = 1; k <= n; ++k) {
        terms.push_back(Term{Rational(1), product(a(i, k), b(k, j))});
        terms.push_back(Term{Rational(-1), product(b(i, k), a(k, j))});
      }
      Polynomial f(nv, std::move(terms));
      if (!f.is_zero()) gens.push_back(std::move(f));
    }
  return Ideal{std::move(ring), std::move(gens)};
}

Problem kl_fixture() {
  // x_ij with i + j <= 6, drawn upside down so x51 sits in the top row.
  std::vector<Variable> vars;
  for (int i = 1; i <= 5; ++i)
    for (int j = 1; i + j <= 6; ++j)
      vars.push_back(Variable{static_cast<int>(vars.size()), matrix_var_name("x", i, j), 1, GridCell{0, 6 - i, j}});
  Ring ring(std::move(vars));
  const std::size_t nv = ring.size();
  auto x = [&](int i, int j) { return ring.index_of(matrix_var_name("x", i, j)); };
  auto mono = [nv](std::initializer_list<int> ids) {
    std::vector<int> e(nv, 0);
    for (int id : ids) ++e[static_cast<std::size_t>(id)];
    return Monomial(std::move(e));
  };
  std::vector<Polynomial> gens;
  gens.push_back(Polynomial::from_monomial(mono({x(2, 1)})));
  gens.push_back(Polynomial::from_monomial(mono({x(1, 1)})));
  gens.emplace_back(nv, std::vector<Term>{{Rational(1), mono({x(1, 3), x(2, 2)})},
                                          {Rational(-1), mono({x(2, 3), x(1, 2)})}});
  gens.emplace_back(nv, std::vector<Term>{{Rational(1), mono({x(1, 4), x(3, 1)})},
                                          {Rational(1), mono({x(1, 3), x(4, 1)})},
                                          {Rational(1), mono({x(1, 2), x(5, 1)})}});
  // SE-NW: columns right to left, each read bottom to top.
  TermOrder ord = lex_by(ring, [&](int id) {
    const GridCell& c = cell_of(ring, id);
    return std::make_tuple(-c.col, -c.row);
  });
  return on_grid(Ideal{std::move(ring), std::move(gens)}, std::move(ord));
}

TermOrder lex_diagonal_order(const Ring& ring) {
  return lex_by(ring, [&](int id) {
    const GridCell& c = cell_of(ring, id);
    return std::make_tuple(c.pane, c.row, c.col, ring.var(id).copy_index);
  });
}

TermOrder antidiagonal_order(const Ring& ring) {
  return lex_by(ring, [&](int id) {
    const GridCell& c = cell_of(ring, id);
    return std::make_tuple(c.pane, c.row, -c.col, ring.var(id).copy_index);
  });
}

TermOrder row_reading_order(const Ring& ring, const Permutation& rows) {
  const Permutation pos = rows.inverse();
  return lex_by(ring, [&](int id) {
    const GridCell& c = cell_of(ring, id);
    if (c.row < 1 || c.row > rows.size())
      throw Error(ErrorCode::InvalidArgument, "row permutation does not cover row " + std::to_string(c.row));
    return std::make_tuple(c.pane, pos(c.row), c.col, ring.var(id).copy_index);
  });
}

Problem schubert_problem(const Permutation& w) {
  Ideal ideal = schubert_ideal(w);
  TermOrder ord = lex_diagonal_order(ideal.ring);
  return on_grid(std::move(ideal), std::move(ord));
}

std::vector<FixtureInfo> fixture_list() {
  return {
      {"ex1.2", "2x2 minors of a generic 3x3 matrix, lex in English reading order"},
      {"ex1.3", "2x2 minors of a generic symmetric 3x3 matrix, grevlex x11>x12>x13>x22>x23>x33"},
      {"ex2.6", "<x1^3*x2, x2^2>, lex"},
      {"ex3.3", "Schubert ideal of w=214365, lex-diagonal order"},
      {"ex3.6-1234", "Schubert ideal of w=2143, rows read 1,2,3,4"},
      {"ex3.6-1324", "Schubert ideal of w=2143, rows read 1,3,2,4"},
      {"ex3.6-3124", "Schubert ideal of w=2143, rows read 3,1,2,4"},
      {"ex3.6-3142", "Schubert ideal of w=2143, rows read 3,1,4,2"},
      {"ex3.6-3412", "Schubert ideal of w=2143, rows read 3,4,1,2"},
      {"ex3.6-3421", "Schubert ideal of w=2143, rows read 3,4,2,1"},
      {"ex3.6-4321", "Schubert ideal of w=2143, rows read 4,3,2,1"},
      {"commuting2", "commuting variety of 2x2 matrices, grevlex a11>...>a22>b11>...>b22"},
      {"commuting3", "commuting variety of 3x3 matrices, grevlex a11>...>a33>b11>...>b33"},
      {"kl", "tangent cone at the identity of the Schubert variety of 463512, SE-NW lex"},
  };
}

Problem fixture(const std::string& name) {
  const auto known = fixture_list();
  if (std::none_of(known.begin(), known.end(), [&](const FixtureInfo& f) { return f.name == name; }))
    throw Error(ErrorCode::InvalidArgument, "unknown fixture '" + name + "'");
  if (name == "ex1.2") {
    Ideal ideal = generic_minor_ideal(3, 3, 2, false);
    TermOrder ord = lex_diagonal_order(ideal.ring);
    return on_grid(std::move(ideal), std::move(ord));
  }
  if (name == "ex1.3") {
    Ideal ideal = generic_minor_ideal(3, 3, 2, true);
    TermOrder ord = TermOrder::grevlex(ideal.ring.size());
    return on_grid(std::move(ideal), std::move(ord));
  }
  if (name == "ex2.6") return ex26();
  if (name == "ex3.3") return schubert_problem(Permutation::parse("214365"));
  if (name.starts_with("ex3.6-")) return ex36(name.substr(6));
  if (name == "commuting2" || name == "commuting3") return commuting_problem(name.back() - '0');
  return kl_fixture();
}

}  // namespace hiero
