#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"

#include "hiero/harness.hpp"
#include "hiero/ideal_file.hpp"
#include "hiero/kpoly.hpp"
#include "hiero/pipe_dreams.hpp"
#include "hiero/stanley_reisner.hpp"
#include "hiero/tablet.hpp"
#include "hiero/zoo.hpp"

namespace hiero::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputOptions {
  std::string path;
  std::string builtin;
  std::string order;
};

void add_input(CLI::App* sub, InputOptions& o) {
  sub->add_option("input", o.path, "Ideal file, or - to read standard input");
  sub->add_option("--builtin", o.builtin, "Built-in example instead of a file (see `hiero fixtures`)");
  sub->add_option("--order", o.order, "Replace the file's order, e.g. \"lex x, y\"");
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\n");
  return s.substr(b, e - b + 1);
}

TermOrder parse_order_spec(const Ring& ring, const std::string& spec) {
  std::istringstream is(spec);
  std::string kind;
  is >> kind;
  if (kind != "lex" && kind != "grevlex") throw UsageError("order must start with 'lex' or 'grevlex'");
  std::string rest((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
  std::vector<int> reading;
  std::vector<bool> listed(ring.size(), false);
  std::istringstream names(rest);
  for (std::string name; std::getline(names, name, ',');) {
    name = trim(name);
    const int id = ring.index_of(name);
    if (listed[static_cast<std::size_t>(id)]) throw UsageError("variable '" + name + "' listed twice in --order");
    listed[static_cast<std::size_t>(id)] = true;
    reading.push_back(id);
  }
  if (reading.size() != ring.size()) throw UsageError("--order must list every variable of the ring");
  return TermOrder(kind == "lex" ? OrderKind::Lex : OrderKind::GRevLex, std::move(reading));
}

IdealFile load(const InputOptions& o, std::istream& in) {
  IdealFile f;
  if (!o.builtin.empty()) {
    if (!o.path.empty()) throw UsageError("give an input file or --builtin, not both");
    try {
      f = to_ideal_file(fixture(o.builtin));
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  } else if (o.path.empty()) {
    throw UsageError("missing input (a file, - for stdin, or --builtin NAME)");
  } else if (o.path == "-") {
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    f = parse_ideal_file(text);
  } else {
    std::ifstream is(o.path);
    if (!is) throw UsageError("cannot read '" + o.path + "'");
    const std::string text((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
    f = parse_ideal_file(text);
  }
  if (!o.order.empty()) f.order = parse_order_spec(f.ring, o.order);
  return f;
}

RenderMode mode_of(const std::string& format) { return format == "unicode" ? RenderMode::Unicode : RenderMode::Ascii; }

bool has_grid(const Ring& ring) {
  for (const Variable& v : ring.variables())
    if (!v.grid) return false;
  return true;
}

std::string prime_string(const Ring& ring, const std::vector<int>& vars) {
  std::string s = "<";
  for (std::size_t i = 0; i < vars.size(); ++i) s += (i ? ", " : "") + ring.var(vars[i]).name();
  return s + ">";
}

void print_tablet(std::ostream& out, const Tablet& t, const std::string& format) {
  if (format == "json") {
    out << tablet_to_json(t);
    return;
  }
  std::size_t largest = 0;
  for (const Hieroglyph& h : t.all_components) largest = std::max(largest, h.size());
  out << "tablet size: " << t.size() << "\n"
      << "degree: " << t.degree << "\n"
      << "multidegree: " << to_string(t.multidegree) << "\n"
      << "equidimensional: " << (t.equidimensional ? "yes" : "no") << "\n"
      << "components: " << t.all_components.size() << " (sizes " << t.all_components.front().size() << ".."
      << largest << ")\n";
  if (has_grid(t.ring)) {
    out << "\n" << render_tablet(t.hieroglyphs, t.ring, mode_of(format));
  } else {
    for (const Hieroglyph& h : t.hieroglyphs) out << prime_string(t.ring, h.marks) << "\n";
  }
}

std::string show_cells(const std::vector<Cell>& cells) {
  std::string s = "{";
  for (std::size_t i = 0; i < cells.size(); ++i)
    s += (i ? "," : "") + std::string("(") + std::to_string(cells[i].first) + "," + std::to_string(cells[i].second) + ")";
  return s + "}";
}

std::string pipe_dream_grid(int n, const PipeDream& p) {
  std::string s;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; i + j <= n + 1; ++j) {
      const bool cross = std::binary_search(p.crosses.begin(), p.crosses.end(), Cell{i, j});
      s += cross ? '+' : (i + j == n + 1 ? '/' : '.');
    }
    s += '\n';
  }
  return s;
}

Permutation parse_perm(const std::string& text) {
  try {
    return Permutation::parse(text);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Initial ideals, polarization, prime decomposition and tablets of hieroglyphs", "hiero"};
  app.require_subcommand(1);

  InputOptions input;
  std::string format = "ascii";
  const auto formats = CLI::IsMember({"ascii", "unicode", "json"});

  auto* tablet = app.add_subcommand("tablet", "Run the full pipeline and print the tablet");
  add_input(tablet, input);
  tablet->add_option("--format", format, "ascii, unicode or json")->check(formats);

  auto* groebner = app.add_subcommand("groebner", "Print the reduced Groebner basis");
  add_input(groebner, input);
  auto* init = app.add_subcommand("init", "Print the minimal generators of the initial ideal");
  add_input(init, input);
  auto* polar = app.add_subcommand("polarize", "Print the polarized initial ideal");
  add_input(polar, input);
  auto* decompose = app.add_subcommand("decompose", "Print the minimal primes of the polarized initial ideal");
  add_input(decompose, input);

  std::string algo = "split";
  auto* kpoly = app.add_subcommand("kpoly", "K-polynomial, multidegree and degree of the initial ideal");
  add_input(kpoly, input);
  kpoly->add_option("--algo", algo, "taylor, split or faces")->check(CLI::IsMember({"taylor", "split", "faces"}));

  std::string perm_text, rows_text;
  bool antidiagonal = false, emit = false;
  auto* schubert = app.add_subcommand("schubert", "Tablet of a Schubert determinantal ideal");
  schubert->add_option("w", perm_text, "Permutation in one-line notation, e.g. 2143")->required();
  schubert->add_option("--rows", rows_text, "Read rows in this order (lex, each row left to right)");
  schubert->add_flag("--antidiagonal", antidiagonal, "Use the antidiagonal order");
  schubert->add_flag("--emit", emit, "Print the ideal file instead of the tablet");
  schubert->add_option("--format", format, "ascii, unicode or json")->check(formats);

  int size = 0;
  auto* commuting = app.add_subcommand("commuting", "Tablet of the commuting variety of n x n matrices");
  commuting->add_option("n", size, "Matrix size")->required()->check(CLI::PositiveNumber);
  commuting->add_flag("--emit", emit, "Print the ideal file instead of the tablet");
  commuting->add_option("--format", format, "ascii, unicode or json")->check(formats);

  auto* pipes = app.add_subcommand("pipedreams", "List the reduced pipe dreams of w");
  pipes->add_option("w", perm_text, "Permutation")->required();
  auto* bumpless = app.add_subcommand("bpds", "List the reduced bumpless pipe dreams of w");
  bumpless->add_option("w", perm_text, "Permutation")->required();

  std::string conjecture;
  int upto = 0;
  unsigned threads = 0;
  auto* check = app.add_subcommand("check", "Sweep S_1..S_n and print a JSON report");
  check->add_option("conjecture", conjecture, "km, bpd or equidim")
      ->required()
      ->check(CLI::IsMember({"km", "bpd", "equidim"}));
  check->add_option("--upto", upto, "Largest n")->required()->check(CLI::PositiveNumber);
  check->add_option("--threads", threads, "Worker threads (0 = all cores)");

  std::string dump;
  auto* fixtures = app.add_subcommand("fixtures", "List built-in examples");
  fixtures->add_option("--dump", dump, "Print the ideal file of one example");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (tablet->parsed()) {
      const IdealFile f = load(input, in);
      print_tablet(out, build_tablet(f.ideal, f.order, f.grading), format);
    } else if (groebner->parsed()) {
      const IdealFile f = load(input, in);
      for (const Polynomial& g : buchberger(f.order, f.ideal).elements) out << to_string(g, f.ring) << "\n";
    } else if (init->parsed()) {
      const IdealFile f = load(input, in);
      const MonomialIdeal j = initial_ideal(f.order, f.ideal);
      for (const Monomial& m : j.gens()) out << to_string(m, f.ring) << "\n";
      out << "squarefree: " << (is_squarefree(j) ? "yes" : "no") << "\n";
    } else if (polar->parsed()) {
      const IdealFile f = load(input, in);
      const Polarization p = polarize(initial_ideal(f.order, f.ideal), f.grading);
      std::string added;
      for (std::size_t i = f.ring.size(); i < p.ideal.nvars(); ++i)
        added += (added.empty() ? "" : ", ") + p.ideal.ring().var(static_cast<int>(i)).name();
      out << "new variables: " << (added.empty() ? "none" : added) << "\n";
      for (const Monomial& m : p.ideal.gens()) out << to_string(m, p.ideal.ring()) << "\n";
    } else if (decompose->parsed()) {
      const IdealFile f = load(input, in);
      const Polarization p = polarize(initial_ideal(f.order, f.ideal), f.grading);
      const auto primes = minimal_primes(p.ideal);
      for (const PrimeComponent& c : primes) out << prime_string(p.ideal.ring(), c.vars) << "\n";
      const bool equi = primes.empty() || primes.front().size() == primes.back().size();
      out << "components: " << primes.size() << "\nequidimensional: " << (equi ? "yes" : "no") << "\n";
    } else if (kpoly->parsed()) {
      const IdealFile f = load(input, in);
      const MonomialIdeal j = initial_ideal(f.order, f.ideal);
      LaurentPoly k;
      if (algo == "taylor") {
        k = kpoly_taylor(j, f.grading);
      } else if (algo == "split") {
        k = kpoly_split(j, f.grading);
      } else {
        const Polarization p = polarize(j, f.grading);
        k = kpoly_faces(p.ideal, p.grading);
      }
      out << "K: " << to_string(k) << "\nmultidegree: " << to_string(multidegree(k)) << "\n";
      if (f.grading.is_standard()) out << "degree: " << degree(k, f.grading) << "\n";
    } else if (schubert->parsed()) {
      const Permutation w = parse_perm(perm_text);
      Problem p = schubert_problem(w);
      if (!rows_text.empty()) {
        const Permutation rows = parse_perm(rows_text);
        if (rows.size() != w.size()) throw UsageError("--rows must be a permutation of the same size as w");
        p.order = row_reading_order(p.ideal.ring, rows);
      } else if (antidiagonal) {
        p.order = antidiagonal_order(p.ideal.ring);
      }
      if (emit)
        out << print_ideal_file(to_ideal_file(p));
      else
        print_tablet(out, build_tablet(p.ideal, p.order, p.grading), format);
    } else if (commuting->parsed()) {
      const Problem p = commuting_problem(size);
      if (emit)
        out << print_ideal_file(to_ideal_file(p));
      else
        print_tablet(out, build_tablet(p.ideal, p.order, p.grading), format);
    } else if (pipes->parsed()) {
      const Permutation w = parse_perm(perm_text);
      const auto ps = pipe_dreams(w);
      out << ps.size() << " pipe dreams for " << w.to_string() << "\n";
      for (const PipeDream& p : ps) out << "\n" << show_cells(p.crosses) << "\n" << pipe_dream_grid(w.size(), p);
    } else if (bumpless->parsed()) {
      const Permutation w = parse_perm(perm_text);
      const auto ds = bpds(w);
      out << ds.size() << " bumpless pipe dreams for " << w.to_string() << "\n";
      for (const BumplessPipeDream& d : ds) out << "\n" << show_cells(d.blank_support()) << "\n" << d.to_string();
    } else if (check->parsed()) {
      out << sweep(parse_conjecture(conjecture), upto, threads).to_json();
    } else if (fixtures->parsed()) {
      if (!dump.empty()) {
        try {
          out << print_ideal_file(to_ideal_file(fixture(dump)));
        } catch (const Error& e) {
          throw UsageError(e.what());
        }
      } else {
        for (const FixtureInfo& fi : fixture_list()) out << fi.name << "\t" << fi.description << "\n";
      }
    }
  } catch (const UsageError& e) {
    err << "hiero: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "hiero: " << to_string(e.code()) << ": " << e.what() << "\n";
    return e.is_input_error() ? 2 : 1;
  } catch (const std::exception& e) {
    err << "hiero: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace hiero::cli
