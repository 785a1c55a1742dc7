// Runs every acceptance criterion and prints one PASS/FAIL line for each.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include "hiero/harness.hpp"
#include "hiero/kpoly.hpp"
#include "hiero/pipe_dreams.hpp"
#include "hiero/stanley_reisner.hpp"
#include "hiero/tablet.hpp"
#include "hiero/zoo.hpp"
#include "oracles.hpp"

using namespace hiero;
namespace oracle = hiero::testing;

namespace {

// Wall-clock budgets in seconds. Integer results are compared exactly.
constexpr double kBudgetEx12 = 5;
constexpr double kBudgetEx13 = 5;
constexpr double kBudgetEx33 = 60;
constexpr double kBudgetEx36 = 10;
constexpr double kBudgetCommuting2 = 5;
constexpr double kBudgetCommuting3 = 600;
constexpr double kBudgetKl = 5;
constexpr double kBudgetEquidimSweep = 900;

// Random suite sizes and seeds.
constexpr int kRandomHomogeneous = 100;
constexpr int kRandomMonomial = 200;
constexpr int kRandomSquarefree = 200;
constexpr int kRandomHilbert = 30;
constexpr int kHilbertMaxDegree = 8;
constexpr std::uint32_t kSeed = 20240915;

using Cells = std::vector<std::pair<int, int>>;  // (row, col)
using Support = std::set<std::tuple<int, int, int>>;

struct Verdict {
  bool pass = true;
  std::ostringstream notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes << "[failed: " << what << "] ";
    }
  }
};

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Tablet run(const Problem& p) { return build_tablet(p.ideal, p.order, p.grading); }

Support support_of(const Hieroglyph& h) {
  Support s;
  for (const GridCell& c : h.support) s.insert({c.pane, c.row, c.col});
  return s;
}

Support single_pane(const Cells& cells) {
  Support s;
  for (auto [r, c] : cells) s.insert({0, r, c});
  return s;
}

std::multiset<Support> supports(const Tablet& t) {
  std::multiset<Support> out;
  for (const Hieroglyph& h : t.hieroglyphs) out.insert(support_of(h));
  return out;
}

std::multiset<Support> expected(const std::vector<Cells>& grids) {
  std::multiset<Support> out;
  for (const Cells& g : grids) out.insert(single_pane(g));
  return out;
}

std::set<std::string> monomial_names(const MonomialIdeal& J) {
  std::set<std::string> out;
  for (const Monomial& m : J.gens()) out.insert(to_string(m, J.ring()));
  return out;
}

std::set<std::string> mark_names(const Hieroglyph& h, const Ring& ring) {
  std::set<std::string> out;
  for (int v : h.marks) out.insert(ring.var(v).name());
  return out;
}

// #tablet against the degree read off K(1 - t) of the initial ideal.
bool tablet_matches_kpoly_degree(const Tablet& t) {
  const LaurentPoly k = kpoly_split(t.initial, Grading::standard(t.initial.nvars()));
  return static_cast<std::int64_t>(t.size()) == degree(k, Grading::standard(t.initial.nvars()));
}

void budget(Verdict& v, const Stopwatch& sw, double limit, const std::string& what) {
  const double s = sw.seconds();
  v.notes << what << " " << std::fixed << std::setprecision(3) << s << " s; ";
  v.require(s < limit, what + " under " + std::to_string(static_cast<int>(limit)) + " s");
}

// ------------------------------------------------------------------------

Verdict criterion1() {
  Verdict v;
  Stopwatch sw;
  const Tablet t = run(fixture("ex1.2"));
  v.require(t.degree == 6, "degree 6");
  v.require(supports(t) == expected({{{1, 1}, {1, 2}, {2, 1}, {2, 2}},
                                     {{1, 1}, {1, 2}, {2, 1}, {3, 3}},
                                     {{1, 1}, {1, 2}, {3, 2}, {3, 3}},
                                     {{1, 1}, {2, 1}, {2, 3}, {3, 3}},
                                     {{1, 1}, {2, 3}, {3, 2}, {3, 3}},
                                     {{2, 2}, {2, 3}, {3, 2}, {3, 3}}}),
            "six printed grids");
  v.notes << "degree " << t.degree << ", tablet " << t.size() << "; ";
  budget(v, sw, kBudgetEx12, "runtime");
  return v;
}

Verdict criterion2() {
  Verdict v;
  Stopwatch sw;
  const Tablet t = run(fixture("ex1.3"));
  v.require(monomial_names(t.initial) ==
                std::set<std::string>{"x23^2", "x13*x23", "x13*x22", "x13^2", "x12*x13", "x12^2"},
            "initial ideal equals the printed six generators");
  v.require(t.all_components.size() == 5, "5 components");
  v.require(t.size() == 4, "tablet size 4");
  v.require(!t.equidimensional, "not equidimensional");
  // the four printed hieroglyphs: (row, col, is_copy)
  std::multiset<std::set<std::tuple<int, int, bool>>> got, want{
      {{1, 2, false}, {1, 3, false}, {2, 3, false}},
      {{1, 2, false}, {1, 3, false}, {2, 3, true}},
      {{1, 2, true}, {1, 3, false}, {2, 3, false}},
      {{1, 2, true}, {1, 3, false}, {2, 3, true}}};
  for (const Hieroglyph& h : t.hieroglyphs) {
    std::set<std::tuple<int, int, bool>> g;
    for (std::size_t i = 0; i < h.marks.size(); ++i) {
      const GridCell c = *t.ring.var(h.marks[i]).grid;
      g.insert({c.row, c.col, h.glyphs[i] == Glyph::CircledPlus});
    }
    got.insert(g);
  }
  v.require(got == want, "the four printed hieroglyphs with their circled marks");
  v.notes << "components " << t.all_components.size() << ", tablet " << t.size() << "; ";
  budget(v, sw, kBudgetEx13, "runtime");
  return v;
}

Verdict criterion3() {
  Verdict v;
  Stopwatch sw;
  const Tablet t = run(fixture("ex3.3"));
  v.require(t.all_components.size() == 15, "15 components");
  bool all3 = true;
  for (const Hieroglyph& h : t.all_components) all3 &= h.size() == 3;
  v.require(all3, "all components of size 3");
  const auto s = supports(t);
  const Support shared = single_pane({{1, 1}, {1, 2}, {2, 1}});
  v.require(s.count(shared) == 2, "two hieroglyphs on {(1,1),(1,2),(2,1)}");
  v.require(std::set<Support>(s.begin(), s.end()).size() == 14, "all other supports distinct");
  const std::size_t dreams = pipe_dreams(Permutation::parse("214365")).size();
  v.require(dreams == 15, "15 pipe dreams");
  v.notes << "components " << t.all_components.size() << ", pipe dreams " << dreams << "; ";
  budget(v, sw, kBudgetEx33, "runtime");
  return v;
}

Verdict criterion4() {
  Verdict v;
  Stopwatch sw;
  std::map<std::string, Tablet> tablets;
  for (const char* rows : {"1234", "1324", "3124", "3142", "3412", "3421", "4321"})
    tablets.emplace(rows, run(fixture(std::string("ex3.6-") + rows)));
  v.require(supports(tablets.at("1234")) == expected({{{1, 1}, {1, 2}}, {{1, 1}, {2, 1}}, {{1, 1}, {3, 3}}}),
            "1234 tablet");
  v.require(supports(tablets.at("1324")) == expected({{{1, 1}, {1, 2}}, {{1, 1}, {2, 3}}, {{1, 1}, {3, 1}}}),
            "1324 tablet");
  v.require(supports(tablets.at("4321")) == expected({{{1, 1}, {1, 3}}, {{1, 1}, {2, 2}}, {{1, 1}, {3, 1}}}),
            "4321 tablet");
  for (const char* rows : {"3124", "3142", "3412"})
    v.require(supports(tablets.at(rows)) == supports(tablets.at("1324")), std::string(rows) + " equals 1324");
  v.require(supports(tablets.at("3421")) == supports(tablets.at("4321")), "3421 equals 4321");
  v.require(supports(tablets.at("3412")) != supports(tablets.at("3421")), "3412 differs from 3421");
  budget(v, sw, kBudgetEx36, "runtime");
  return v;
}

Verdict criterion5() {
  Verdict v;
  {
    Stopwatch sw;
    const Tablet t = run(fixture("commuting2"));
    v.require(t.degree == 3, "n=2 degree 3");
    std::multiset<Support> want{{{0, 1, 2}, {0, 2, 1}}, {{0, 2, 1}, {1, 1, 1}}, {{1, 1, 1}, {1, 1, 2}}};
    v.require(supports(t) == want, "n=2 printed tablet");
    budget(v, sw, kBudgetCommuting2, "n=2");
  }
  {
    Stopwatch sw;
    const Tablet t = run(fixture("commuting3"));
    const std::set<std::string> printed{
        "a31*b13",         "a21*b13",         "a31*b12",         "a21*b12",         "a31*b11",
        "a21*b11",         "a13*b11",         "a12*b11",         "a32*b13*b22",     "a32*b13*b21",
        "a32*b12*b21",     "a23*b12*b21",     "a13*b12*b21",     "a13*a32*b21",     "a12*a32*b21",
        "a13*a31*b21",     "a12*a31*b21",     "a11*a31*b21",     "a13*a22*b21",     "a11*a13*b12",
        "a12*a31^2*b23",   "a12*a31^2*b22",   "a12*a23*a31*b22", "a13*a21*a31*b22", "a12*a13*a31*b22",
        "a13^2*a21*a32*b22"};
    v.require(monomial_names(t.initial) == printed, "n=3 initial ideal equals the printed 26 generators");
    v.require(t.all_components.size() == 32, "n=3 32 components");
    v.require(t.size() == 31, "n=3 tablet size 31");
    v.require(t.degree == 31, "n=3 degree 31");
    v.notes << "n=3 generators " << t.initial.size() << ", components " << t.all_components.size() << ", tablet "
            << t.size() << "; ";
    budget(v, sw, kBudgetCommuting3, "n=3");
  }
  return v;
}

Verdict criterion6() {
  Verdict v;
  Stopwatch sw;
  const Tablet t = run(kl_fixture());
  v.require(monomial_names(t.initial) == std::set<std::string>{"x21", "x11", "x13*x22", "x14*x31"}, "initial ideal");
  v.require(t.equidimensional, "equidimensional");
  v.require(t.size() == 4, "tablet size 4");
  std::multiset<std::set<std::string>> got, want{{"x11", "x21", "x13", "x14"},
                                                 {"x11", "x21", "x22", "x14"},
                                                 {"x11", "x21", "x13", "x31"},
                                                 {"x11", "x21", "x22", "x31"}};
  for (const Hieroglyph& h : t.hieroglyphs) got.insert(mark_names(h, t.ring));
  v.require(got == want, "the four printed hieroglyphs");
  budget(v, sw, kBudgetKl, "runtime");
  return v;
}

Verdict criterion7() {
  Verdict v;
  int checked = 0;
  for (const FixtureInfo& f : fixture_list()) {
    v.require(tablet_matches_kpoly_degree(run(fixture(f.name))), "fixture " + f.name);
    ++checked;
  }
  std::mt19937 rng(kSeed);
  for (int i = 0; i < kRandomHomogeneous; ++i) {
    // up to 4 variables and 3 generators of degree at most 3
    const Ideal I = oracle::random_homogeneous_ideal(rng, 2 + static_cast<std::size_t>(i % 3), 3, 1, 3);
    const std::size_t n = I.ring.size();
    const TermOrder ord = i % 2 ? TermOrder::grevlex(n) : TermOrder::lex(n);
    v.require(tablet_matches_kpoly_degree(build_tablet(I, ord, Grading::standard(n))),
              "random ideal " + std::to_string(i));
    ++checked;
  }
  v.notes << checked << " ideals; ";
  return v;
}

Verdict criterion8() {
  Verdict v;
  std::mt19937 rng(kSeed + 8);
  int polarized = 0;
  for (int i = 0; i < kRandomMonomial; ++i) {
    const MonomialIdeal J = oracle::random_monomial_ideal(rng, 6, 4, 6);
    const Grading g = oracle::random_grading(rng, J.nvars(), 3);
    const Polarization p = polarize(J, g);
    polarized += p.ideal.nvars() > J.nvars();
    v.require(kpoly_taylor(J, g) == kpoly_taylor(p.ideal, p.grading), "ideal " + std::to_string(i) + " " + to_string(J));
  }
  v.notes << kRandomMonomial << " ideals, " << polarized << " needed new variables; ";
  return v;
}

Verdict criterion9() {
  Verdict v;
  std::mt19937 rng(kSeed + 9);
  for (int i = 0; i < kRandomSquarefree; ++i) {
    const int n = 2 + i % 13;  // up to 14 variables
    const MonomialIdeal J = oracle::random_squarefree_ideal(rng, n, 2 + i % 9);
    const std::string tag = "ideal " + std::to_string(i);
    v.require(ideal_from_facets(J.ring(), sr_facets(J)) == J, tag + " SR round trip");
    const Grading g = oracle::random_grading(rng, J.nvars(), 3);
    v.require(kpoly_faces(J, g) == kpoly_split(J, g), tag + " faces vs split");
    std::vector<std::vector<int>> primes;
    for (const PrimeComponent& p : minimal_primes(J)) primes.push_back(p.vars);
    v.require(primes == oracle::brute_force_minimal_primes(J), tag + " minimal primes");
  }
  v.notes << kRandomSquarefree << " ideals on 2..14 variables; ";
  return v;
}

Verdict criterion10() {
  Verdict v;
  std::mt19937 rng(kSeed + 10);
  int comparisons = 0;
  for (int i = 0; i < kRandomHilbert; ++i) {
    const Ideal I = oracle::random_homogeneous_ideal(rng, 3 + static_cast<std::size_t>(i % 2), 3);
    const std::size_t n = I.ring.size();
    const auto hf = oracle::hilbert_function_linear_algebra(I, kHilbertMaxDegree);
    for (const TermOrder& ord : {TermOrder::lex(n), TermOrder::grevlex(n)}) {
      v.require(hilbert_function_oracle(initial_ideal(ord, I), kHilbertMaxDegree) == hf,
                "ideal " + std::to_string(i));
      ++comparisons;
    }
  }
  v.notes << comparisons << " comparisons up to degree " << kHilbertMaxDegree << "; ";
  return v;
}

Verdict criterion11() {
  Verdict v;
  const auto report = [&](Conjecture c, int upto) {
    Stopwatch sw;
    const SweepReport r = sweep(c, upto);
    std::size_t fails = 0;
    for (const CheckResult& x : r.results) fails += !x.pass;
    v.notes << to_string(c) << " upto " << upto << ": " << r.results.size() - fails << "/" << r.results.size()
            << " in " << std::fixed << std::setprecision(3) << sw.seconds() << " s; ";
    v.require(r.all_pass(), to_string(c) + " all pass");
    return sw.seconds();
  };
  report(Conjecture::KM, 4);
  report(Conjecture::BPD, 4);
  v.require(report(Conjecture::Equidim, 5) < kBudgetEquidimSweep, "equidim within 15 min");
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<int, std::function<Verdict()>>> criteria{
      {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4},   {5, criterion5},  {6, criterion6},
      {7, criterion7}, {8, criterion8}, {9, criterion9}, {10, criterion10}, {11, criterion11}};
  int failed = 0;
  for (const auto& [id, fn] : criteria) {
    Verdict v;
    try {
      v = fn();
    } catch (const std::exception& e) {
      v.pass = false;
      v.notes << "exception: " << e.what();
    }
    failed += !v.pass;
    std::cout << "criterion " << id << ": " << (v.pass ? "PASS" : "FAIL") << "  " << v.notes.str() << std::endl;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed") << std::endl;
  return failed ? 1 : 0;
}
