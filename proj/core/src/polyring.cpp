#include "hiero/polyring.hpp"

#include <algorithm>
#include <numeric>

namespace hiero {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::ContainsUnit: return "ContainsUnit";
    case ErrorCode::NotMinimal: return "NotMinimal";
    case ErrorCode::NothingToPolarize: return "NothingToPolarize";
    case ErrorCode::NotSquarefree: return "NotSquarefree";
    case ErrorCode::TooManyGenerators: return "TooManyGenerators";
    case ErrorCode::NotStandardGrading: return "NotStandardGrading";
    case ErrorCode::NonPositiveGrading: return "NonPositiveGrading";
    case ErrorCode::UnequalTotalDegrees: return "UnequalTotalDegrees";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::MissingGridMetadata: return "MissingGridMetadata";
    case ErrorCode::BadDimensions: return "BadDimensions";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UndeclaredVariable: return "UndeclaredVariable";
    case ErrorCode::DuplicateVariable: return "DuplicateVariable";
  }
  return "Unknown";
}

// ---------------------------------------------------------------- Ring

std::string Variable::name() const {
  if (copy_index == 1) return base_name;
  return base_name + "~" + std::to_string(copy_index);
}

Ring::Ring(std::vector<Variable> vars) : vars_(std::move(vars)) {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    const Variable& v = vars_[i];
    if (v.id != static_cast<int>(i))
      throw Error(ErrorCode::InvalidArgument, "variable ids must be contiguous from 0");
    if (v.copy_index < 1)
      throw Error(ErrorCode::InvalidArgument, "copy index must be positive");
    if (v.base_name.empty())
      throw Error(ErrorCode::InvalidArgument, "empty variable name");
    auto [it, inserted] = index_.emplace(v.name(), v.id);
    if (!inserted)
      throw Error(ErrorCode::DuplicateVariable, "duplicate variable '" + v.name() + "'");
  }
}

Ring Ring::from_names(const std::vector<std::string>& names) {
  std::vector<Variable> vars;
  vars.reserve(names.size());
  for (std::size_t i = 0; i < names.size(); ++i)
    vars.push_back(Variable{static_cast<int>(i), names[i], 1, std::nullopt});
  return Ring(std::move(vars));
}

std::optional<int> Ring::find(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int Ring::index_of(std::string_view name) const {
  if (auto id = find(name)) return *id;
  throw Error(ErrorCode::UndeclaredVariable, "undeclared variable '" + std::string(name) + "'");
}

Ring Ring::with_variable(std::string base_name, int copy_index,
                         std::optional<GridCell> grid) const {
  std::vector<Variable> vars = vars_;
  vars.push_back(Variable{static_cast<int>(vars.size()), std::move(base_name), copy_index, grid});
  return Ring(std::move(vars));
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
  for (int e : exps_) {
    if (e < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent");
    degree_ += e;
  }
}

Monomial Monomial::variable(std::size_t nvars, int id, int power) {
  std::vector<int> e(nvars, 0);
  e.at(static_cast<std::size_t>(id)) = power;
  return Monomial(std::move(e));
}

bool Monomial::is_squarefree() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e <= 1; });
}

std::vector<int> Monomial::support() const {
  std::vector<int> s;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > 0) s.push_back(static_cast<int>(i));
  return s;
}

namespace {

void require_same_ring(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars())
    throw Error(ErrorCode::InvalidArgument, "monomials from different rings");
}

template <class Op>
Monomial combine(const Monomial& a, const Monomial& b, Op op) {
  require_same_ring(a, b);
  std::vector<int> e(a.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = op(a[i], b[i]);
  return Monomial(std::move(e));
}

}  // namespace

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  return combine(a, b, [](int x, int y) { return x + y; });
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  return combine(a, b, [](int x, int y) { return std::max(x, y); });
}

Monomial mono_gcd(const Monomial& a, const Monomial& b) {
  return combine(a, b, [](int x, int y) { return std::min(x, y); });
}

bool mono_divides(const Monomial& a, const Monomial& b) {
  require_same_ring(a, b);
  if (a.degree() > b.degree()) return false;
  for (std::size_t i = 0; i < a.nvars(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial mono_quotient(const Monomial& b, const Monomial& a) {
  if (!mono_divides(a, b)) throw Error(ErrorCode::InvalidArgument, "inexact monomial division");
  return combine(b, a, [](int x, int y) { return x - y; });
}

// ---------------------------------------------------------------- Grading

Grading::Grading(std::size_t dim, std::vector<std::vector<int>> weights)
    : dim_(dim), weights_(std::move(weights)) {
  if (dim_ == 0) throw Error(ErrorCode::NonPositiveGrading, "grading dimension must be positive");
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    const auto& w = weights_[i];
    if (w.size() != dim_)
      throw Error(ErrorCode::NonPositiveGrading,
                  "weight of variable " + std::to_string(i) + " has wrong dimension");
    bool positive = false;
    for (int c : w) {
      if (c < 0)
        throw Error(ErrorCode::NonPositiveGrading,
                    "weight of variable " + std::to_string(i) + " has a negative entry");
      positive |= c > 0;
    }
    if (!positive)
      throw Error(ErrorCode::NonPositiveGrading,
                  "weight of variable " + std::to_string(i) + " is zero");
  }
}

Grading Grading::standard(std::size_t nvars) {
  return Grading(1, std::vector<std::vector<int>>(nvars, std::vector<int>{1}));
}

std::vector<int> Grading::degree_of(const Monomial& m) const {
  if (m.nvars() != weights_.size())
    throw Error(ErrorCode::InvalidArgument, "grading and monomial ring differ");
  std::vector<int> d(dim_, 0);
  for (std::size_t i = 0; i < m.nvars(); ++i)
    if (m[i] != 0)
      for (std::size_t k = 0; k < dim_; ++k) d[k] += m[i] * weights_[i][k];
  return d;
}

bool Grading::is_standard() const noexcept {
  return dim_ == 1 && std::all_of(weights_.begin(), weights_.end(),
                                  [](const auto& w) { return w[0] == 1; });
}

bool Grading::equal_total_degrees() const noexcept {
  if (weights_.empty()) return true;
  auto total = [](const std::vector<int>& w) { return std::accumulate(w.begin(), w.end(), 0); };
  const int t0 = total(weights_.front());
  return std::all_of(weights_.begin(), weights_.end(),
                     [&](const auto& w) { return total(w) == t0; });
}

// ---------------------------------------------------------------- TermOrder

TermOrder::TermOrder(OrderKind kind, std::vector<int> reading_order)
    : kind_(kind), reading_(std::move(reading_order)) {
  std::vector<char> seen(reading_.size(), 0);
  for (int v : reading_) {
    if (v < 0 || static_cast<std::size_t>(v) >= reading_.size() || seen[static_cast<std::size_t>(v)])
      throw Error(ErrorCode::InvalidArgument, "reading order is not a permutation of the variables");
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

TermOrder TermOrder::lex(std::size_t nvars) {
  std::vector<int> r(nvars);
  std::iota(r.begin(), r.end(), 0);
  return TermOrder(OrderKind::Lex, std::move(r));
}

TermOrder TermOrder::grevlex(std::size_t nvars) {
  std::vector<int> r(nvars);
  std::iota(r.begin(), r.end(), 0);
  return TermOrder(OrderKind::GRevLex, std::move(r));
}

Cmp TermOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.nvars() != reading_.size() || b.nvars() != reading_.size())
    throw Error(ErrorCode::InvalidArgument, "term order and monomial ring differ");
  if (kind_ == OrderKind::Lex) {
    for (int v : reading_) {
      const auto i = static_cast<std::size_t>(v);
      if (a[i] != b[i]) return a[i] > b[i] ? Cmp::Greater : Cmp::Less;
    }
    return Cmp::Equal;
  }
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? Cmp::Greater : Cmp::Less;
  for (auto it = reading_.rbegin(); it != reading_.rend(); ++it) {
    const auto i = static_cast<std::size_t>(*it);
    if (a[i] != b[i]) return a[i] < b[i] ? Cmp::Greater : Cmp::Less;
  }
  return Cmp::Equal;
}

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(std::size_t nvars, std::vector<Term> terms)
    : nvars_(nvars), terms_(std::move(terms)) {
  for (const Term& t : terms_)
    if (t.mono.nvars() != nvars_)
      throw Error(ErrorCode::InvalidArgument, "term from a different ring");
  normalize();
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  return Polynomial(nvars, {Term{c, Monomial(nvars)}});
}

Polynomial Polynomial::variable(std::size_t nvars, int id) {
  return Polynomial(nvars, {Term{Rational(1), Monomial::variable(nvars, id)}});
}

Polynomial Polynomial::from_monomial(const Monomial& m, const Rational& c) {
  return Polynomial(m.nvars(), {Term{c, m}});
}

void Polynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.mono > b.mono; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (Term& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  for (Term& t : out) t.coeff.canonicalize();
  terms_ = std::move(out);
}

bool Polynomial::is_homogeneous(const Grading& g) const {
  if (terms_.empty()) return true;
  const auto d0 = g.degree_of(terms_.front().mono);
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return g.degree_of(t.mono) == d0; });
}

int Polynomial::total_degree() const {
  int d = 0;
  for (const Term& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (Term& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (Term& t : terms_) t.coeff *= c;
  return *this;
}

namespace {

Polynomial add_scaled(const Polynomial& f, const Polynomial& g, int sign) {
  if (f.nvars() != g.nvars())
    throw Error(ErrorCode::InvalidArgument, "polynomials from different rings");
  const auto& a = f.terms();
  const auto& b = g.terms();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].mono > b[j].mono)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].mono > a[i].mono) {
      out.push_back(Term{sign > 0 ? b[j].coeff : Rational(-b[j].coeff), b[j].mono});
      ++j;
    } else {
      Rational c = sign > 0 ? Rational(a[i].coeff + b[j].coeff) : Rational(a[i].coeff - b[j].coeff);
      if (c != 0) out.push_back(Term{std::move(c), a[i].mono});
      ++i;
      ++j;
    }
  }
  return Polynomial(f.nvars(), std::move(out));
}

}  // namespace

Polynomial operator+(const Polynomial& f, const Polynomial& g) { return add_scaled(f, g, 1); }
Polynomial operator-(const Polynomial& f, const Polynomial& g) { return add_scaled(f, g, -1); }

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  if (f.nvars() != g.nvars())
    throw Error(ErrorCode::InvalidArgument, "polynomials from different rings");
  std::map<Monomial, Rational, std::greater<>> acc;
  for (const Term& s : f.terms())
    for (const Term& t : g.terms()) acc[mono_mul(s.mono, t.mono)] += s.coeff * t.coeff;
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) out.push_back(Term{c, m});
  return Polynomial(f.nvars(), std::move(out));
}

Term leading_term(const TermOrder& ord, const Polynomial& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "leading term of the zero polynomial");
  const Term* best = &f.terms().front();
  for (const Term& t : f.terms())
    if (ord.compare(t.mono, best->mono) == Cmp::Greater) best = &t;
  return *best;
}

Polynomial poly_arith(ArithOp op, const Polynomial& f, const Polynomial& g) {
  switch (op) {
    case ArithOp::Add: return f + g;
    case ArithOp::Sub: return f - g;
    case ArithOp::Mul: return f * g;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown arithmetic operation");
}

// ---------------------------------------------------------------- printing

std::string to_string(const Monomial& m, const Ring& ring) {
  if (m.is_one()) return "1";
  std::string s;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += ring.var(static_cast<int>(i)).name();
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s;
}

std::string to_string(const Polynomial& f, const Ring& ring) {
  if (f.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const Term& t : f.terms()) {
    Rational c = t.coeff;
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (c < 0) c = -c;
    if (t.mono.is_one()) {
      s += c.get_str();
    } else {
      if (c != 1) s += c.get_str() + "*";
      s += to_string(t.mono, ring);
    }
    first = false;
  }
  return s;
}

std::string to_string(const TermOrder& ord, const Ring& ring) {
  std::string s = ord.kind() == OrderKind::Lex ? "lex " : "grevlex ";
  for (std::size_t i = 0; i < ord.reading_order().size(); ++i) {
    if (i) s += ", ";
    s += ring.var(ord.reading_order()[i]).name();
  }
  return s;
}

}  // namespace hiero
