#include "hiero/ideal_file.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>

namespace hiero {

namespace {

enum class Tok { Ident, Int, Punct, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t k) {
    for (; k > 0; --k, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
    } else if (c == '#') {
      std::size_t k = 0;
      while (i + k < s.size() && s[i + k] != '\n') ++k;
      advance(k);
    } else if (ident_start(c)) {
      std::size_t k = 1;
      while (i + k < s.size() && ident_char(s[i + k])) ++k;
      out.push_back({Tok::Ident, std::string(s.substr(i, k)), line, col});
      advance(k);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t k = 1;
      while (i + k < s.size() && std::isdigit(static_cast<unsigned char>(s[i + k]))) ++k;
      if (i + k < s.size() && ident_start(s[i + k]))
        throw SyntaxError("malformed number", line, col + static_cast<int>(k));
      out.push_back({Tok::Int, std::string(s.substr(i, k)), line, col});
      advance(k);
    } else if (std::string_view(";,@:=[]+-*^/").find(c) != std::string_view::npos) {
      out.push_back({Tok::Punct, std::string(1, c), line, col});
      advance(1);
    } else {
      throw SyntaxError(std::string("unexpected character '") + c + "'", line, col);
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

  IdealFile parse() {
    IdealFile f;
    parse_ring(f);
    parse_order(f);
    if (peek_keyword("grading"))
      parse_grading(f);
    else
      f.grading = Grading::standard(f.ring.size());
    parse_gens(f);
    if (peek().kind != Tok::End) fail("unexpected text after the generator list");
    return f;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(const std::string& what) const { fail_at(peek(), what); }
  [[noreturn]] static void fail_at(const Token& t, const std::string& what) { throw SyntaxError(what, t.line, t.col); }

  static std::string describe(const Token& t) {
    if (t.kind == Tok::End) return "end of input";
    return "'" + t.text + "'";
  }

  bool peek_punct(char c) const { return peek().kind == Tok::Punct && peek().text[0] == c; }
  bool peek_keyword(std::string_view k) const { return peek().kind == Tok::Ident && peek().text == k; }

  void expect_punct(char c) {
    if (!peek_punct(c)) fail(std::string("expected '") + c + "', found " + describe(peek()));
    take();
  }

  void expect_keyword(std::string_view k) {
    if (!peek_keyword(k)) fail("expected '" + std::string(k) + "', found " + describe(peek()));
    take();
  }

  const Token& expect_ident() {
    if (peek().kind != Tok::Ident) fail("expected an identifier, found " + describe(peek()));
    return take();
  }

  int expect_int(int lo, int hi) {
    const bool negative = peek_punct('-');
    if (negative) take();
    if (peek().kind != Tok::Int) fail("expected an integer, found " + describe(peek()));
    const Token& t = take();
    long long v = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size()) fail_at(t, "integer out of range");
    if (negative) v = -v;
    if (v < lo || v > hi) fail_at(t, "integer " + std::to_string(v) + " out of range");
    return static_cast<int>(v);
  }

  int lookup(const IdealFile& f, const Token& t) const {
    if (auto id = f.ring.find(t.text)) return *id;
    throw Error(ErrorCode::UndeclaredVariable, std::to_string(t.line) + ":" + std::to_string(t.col) +
                                                   ": undeclared variable '" + t.text + "'");
  }

  void parse_ring(IdealFile& f) {
    expect_keyword("ring");
    std::vector<Variable> vars;
    std::map<std::string, int, std::less<>> seen;
    while (peek().kind == Tok::Ident) {
      const Token& name = take();
      if (seen.count(name.text))
        throw Error(ErrorCode::DuplicateVariable, std::to_string(name.line) + ":" + std::to_string(name.col) +
                                                      ": duplicate variable '" + name.text + "'");
      seen.emplace(name.text, 0);
      Variable v{static_cast<int>(vars.size()), name.text, 1, std::nullopt};
      if (peek_punct('@')) {
        take();
        GridCell c;
        c.pane = expect_int(0, 1 << 20);
        expect_punct(',');
        c.row = expect_int(1, 1 << 20);
        expect_punct(',');
        c.col = expect_int(1, 1 << 20);
        v.grid = c;
      }
      vars.push_back(std::move(v));
    }
    if (vars.empty()) fail("the ring needs at least one variable");
    expect_punct(';');
    f.ring = Ring(std::move(vars));
  }

  void parse_order(IdealFile& f) {
    expect_keyword("order");
    OrderKind kind;
    if (peek_keyword("lex"))
      kind = OrderKind::Lex;
    else if (peek_keyword("grevlex"))
      kind = OrderKind::GRevLex;
    else
      fail("expected 'lex' or 'grevlex', found " + describe(peek()));
    take();
    std::vector<int> reading;
    std::vector<bool> listed(f.ring.size(), false);
    for (;;) {
      const Token& t = expect_ident();
      const int id = lookup(f, t);
      if (listed[static_cast<std::size_t>(id)]) fail_at(t, "variable '" + t.text + "' listed twice in the order");
      listed[static_cast<std::size_t>(id)] = true;
      reading.push_back(id);
      if (!peek_punct(',')) break;
      take();
    }
    for (std::size_t i = 0; i < listed.size(); ++i)
      if (!listed[i]) fail("the order does not list variable '" + f.ring.var(static_cast<int>(i)).name() + "'");
    expect_punct(';');
    f.order = TermOrder(kind, std::move(reading));
  }

  void parse_grading(IdealFile& f) {
    take();
    const int d = expect_int(1, 64);
    expect_punct(':');
    std::vector<std::vector<int>> weights(f.ring.size());
    std::vector<bool> given(f.ring.size(), false);
    do {
      const Token& t = expect_ident();
      const int id = lookup(f, t);
      if (given[static_cast<std::size_t>(id)]) fail_at(t, "weight of '" + t.text + "' given twice");
      given[static_cast<std::size_t>(id)] = true;
      expect_punct('=');
      const Token& open = peek();
      expect_punct('[');
      std::vector<int> w{expect_int(-(1 << 20), 1 << 20)};
      while (peek_punct(',')) {
        take();
        w.push_back(expect_int(-(1 << 20), 1 << 20));
      }
      expect_punct(']');
      if (static_cast<int>(w.size()) != d)
        fail_at(open, "weight of '" + t.text + "' has " + std::to_string(w.size()) + " entries, expected " +
                          std::to_string(d));
      weights[static_cast<std::size_t>(id)] = std::move(w);
    } while (peek().kind == Tok::Ident);
    for (std::size_t i = 0; i < given.size(); ++i)
      if (!given[i]) fail("the grading does not give a weight for '" + f.ring.var(static_cast<int>(i)).name() + "'");
    expect_punct(';');
    f.grading = Grading(static_cast<std::size_t>(d), std::move(weights));
  }

  void parse_gens(IdealFile& f) {
    expect_keyword("gens");
    f.ideal.ring = f.ring;
    if (peek_punct(';')) {
      take();
      return;
    }
    for (;;) {
      f.ideal.gens.push_back(parse_poly(f));
      if (!peek_punct(',')) break;
      take();
    }
    expect_punct(';');
  }

  Polynomial parse_poly(const IdealFile& f) {
    std::vector<Term> terms;
    bool negative = false;
    if (peek_punct('+') || peek_punct('-')) negative = take().text == "-";
    for (;;) {
      Term t = parse_term(f);
      if (negative) t.coeff = -t.coeff;
      terms.push_back(std::move(t));
      if (!peek_punct('+') && !peek_punct('-')) break;
      negative = take().text == "-";
    }
    return Polynomial(f.ring.size(), std::move(terms));
  }

  Term parse_term(const IdealFile& f) {
    Rational coeff = 1;
    if (peek().kind == Tok::Int) {
      const Token& num = take();
      Integer den = 1;
      if (peek_punct('/')) {
        take();
        if (peek().kind != Tok::Int) fail("expected a denominator, found " + describe(peek()));
        const Token& d = take();
        den = Integer(d.text);
        if (den == 0) fail_at(d, "zero denominator");
      }
      coeff = Rational(Integer(num.text), den);
      coeff.canonicalize();
      if (!peek_punct('*')) fail("constant terms are not allowed; expected '*', found " + describe(peek()));
      take();
    }
    std::vector<int> e(f.ring.size(), 0);
    for (;;) {
      const Token& name = expect_ident();
      const int id = lookup(f, name);
      int power = 1;
      if (peek_punct('^')) {
        take();
        power = expect_int(0, 1 << 16);
      }
      e[static_cast<std::size_t>(id)] += power;
      if (!peek_punct('*')) break;
      take();
    }
    return Term{coeff, Monomial(std::move(e))};
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

void require_identifier(const std::string& name) {
  const bool ok = !name.empty() && ident_start(name[0]) && std::all_of(name.begin(), name.end(), ident_char);
  if (!ok) throw Error(ErrorCode::InvalidArgument, "'" + name + "' is not a valid identifier");
}

}  // namespace

IdealFile parse_ideal_file(std::string_view text) { return Parser(text).parse(); }

std::string print_ideal_file(const IdealFile& f) {
  std::string s = "ring";
  for (const Variable& v : f.ring.variables()) {
    require_identifier(v.name());
    s += " " + v.name();
    if (v.grid)
      s += "@" + std::to_string(v.grid->pane) + "," + std::to_string(v.grid->row) + "," + std::to_string(v.grid->col);
  }
  s += ";\norder " + to_string(f.order, f.ring) + ";\n";
  if (!f.grading.is_standard()) {
    s += "grading " + std::to_string(f.grading.dim()) + ":";
    for (const Variable& v : f.ring.variables()) {
      s += " " + v.name() + "=[";
      const auto& w = f.grading.weight(v.id);
      for (std::size_t k = 0; k < w.size(); ++k) s += (k ? "," : "") + std::to_string(w[k]);
      s += "]";
    }
    s += ";\n";
  }
  std::vector<const Polynomial*> gens;
  for (const Polynomial& g : f.ideal.gens)
    if (!g.is_zero()) gens.push_back(&g);
  if (gens.empty()) return s + "gens;\n";
  s += "gens";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (const Term& t : gens[i]->terms())
      if (t.mono.is_one()) throw Error(ErrorCode::InvalidArgument, "generators with constant terms cannot be written");
    s += (i ? ",\n  " : "\n  ") + to_string(*gens[i], f.ring);
  }
  return s + ";\n";
}

IdealFile to_ideal_file(const Problem& p) { return IdealFile{p.ideal.ring, p.order, p.grading, p.ideal}; }

}  // namespace hiero
