#include "hiero/tablet.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hiero {

namespace {

bool support_then_marks(const Hieroglyph& a, const Hieroglyph& b) {
  if (a.support != b.support) return a.support < b.support;
  return a.marks < b.marks;
}

bool size_support_marks(const Hieroglyph& a, const Hieroglyph& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return support_then_marks(a, b);
}

struct PaneExtent {
  int rows = 0;
  int cols = 0;
};

}  // namespace

Hieroglyph make_hieroglyph(const Ring& ring, const PrimeComponent& p) {
  Hieroglyph h;
  h.marks = p.vars;
  std::set<GridCell> cells;
  for (int id : h.marks) {
    const Variable& v = ring.var(id);
    h.glyphs.push_back(v.copy_index == 1 ? Glyph::Plus : Glyph::CircledPlus);
    if (v.grid) cells.insert(*v.grid);
  }
  h.support.assign(cells.begin(), cells.end());
  return h;
}

Tablet tablet_from_initial(const MonomialIdeal& initial, const TermOrder& ord, const Grading& g) {
  if (g.size() != initial.nvars()) throw Error(ErrorCode::InvalidArgument, "grading does not match the ring");
  Polarization pol = polarize(initial, g);

  Tablet t;
  t.ring = pol.ideal.ring();
  t.order = ord;
  t.grading = pol.grading;
  t.initial = initial;
  t.polarized = pol.ideal;
  t.base_of = std::move(pol.base_of);

  const auto primes = minimal_primes(t.polarized);
  if (primes.empty()) {
    t.all_components.push_back(Hieroglyph{});
  } else {
    for (const PrimeComponent& p : primes) t.all_components.push_back(make_hieroglyph(t.ring, p));
  }
  std::sort(t.all_components.begin(), t.all_components.end(), size_support_marks);
  const std::size_t low = t.all_components.front().size();
  for (const Hieroglyph& h : t.all_components)
    if (h.size() == low) t.hieroglyphs.push_back(h);
  std::sort(t.hieroglyphs.begin(), t.hieroglyphs.end(), support_then_marks);
  t.equidimensional = t.all_components.back().size() == low;

  const Grading standard = Grading::standard(initial.nvars());
  const LaurentPoly k_std = kpoly_split(initial, standard);
  t.degree = degree(k_std, standard);
  t.multidegree = g == standard ? multidegree(k_std) : multidegree(kpoly_split(initial, g));
  return t;
}

Tablet build_tablet(const Ideal& ideal, const TermOrder& ord, const Grading& g) {
  if (g.size() != ideal.ring.size()) throw Error(ErrorCode::InvalidArgument, "grading does not match the ring");
  for (const Polynomial& f : ideal.gens)
    if (!f.is_homogeneous(g))
      throw Error(ErrorCode::NotHomogeneous, "generator " + to_string(f, ideal.ring) + " is not homogeneous");
  return tablet_from_initial(initial_ideal(ord, ideal), ord, g);
}

LaurentPoly tablet_multidegree(const Tablet& t) {
  if (!t.grading.equal_total_degrees())
    throw Error(ErrorCode::UnequalTotalDegrees, "variable weights have different total degrees");
  // Each mark contributes the linear form <w_i, t>; for unit weight vectors
  // this is the monomial t^{w_i}.
  const std::size_t d = t.grading.dim();
  LaurentPoly out(d);
  for (const Hieroglyph& h : t.hieroglyphs) {
    LaurentPoly term = LaurentPoly::one(d);
    for (int id : h.marks) {
      const auto& w = t.grading.weight(id);
      LaurentPoly linear(d);
      for (std::size_t k = 0; k < d; ++k) {
        if (w[k] == 0) continue;
        std::vector<int> e(d, 0);
        e[k] = 1;
        linear.add_term(e, w[k]);
      }
      term = term * linear;
    }
    out += term;
  }
  return out;
}

std::string render_hieroglyph(const Hieroglyph& h, const Ring& ring, RenderMode mode) {
  std::map<int, PaneExtent> panes;
  std::set<GridCell> present;
  std::map<GridCell, Glyph> marked;
  for (const Variable& v : ring.variables()) {
    if (!v.grid) continue;
    auto& ext = panes[v.grid->pane];
    ext.rows = std::max(ext.rows, v.grid->row);
    ext.cols = std::max(ext.cols, v.grid->col);
    present.insert(*v.grid);
  }
  for (int id : h.marks) {
    const Variable& v = ring.var(id);
    if (!v.grid) throw Error(ErrorCode::MissingGridMetadata, "variable '" + v.name() + "' has no grid cell");
    const Glyph gl = v.copy_index == 1 ? Glyph::Plus : Glyph::CircledPlus;
    auto [it, inserted] = marked.emplace(*v.grid, gl);
    if (!inserted && gl == Glyph::Plus) it->second = Glyph::Plus;
  }
  const bool uni = mode == RenderMode::Unicode;
  int rows = 0;
  for (const auto& [p, ext] : panes) rows = std::max(rows, ext.rows);
  std::string out;
  for (int r = 1; r <= rows; ++r) {
    bool first_pane = true;
    for (const auto& [p, ext] : panes) {
      if (!first_pane) out += ' ';
      first_pane = false;
      for (int c = 1; c <= ext.cols; ++c) {
        const GridCell cell{p, r, c};
        if (auto it = marked.find(cell); it != marked.end()) {
          out += it->second == Glyph::Plus ? "+" : (uni ? "⊕" : "@");
        } else if (present.count(cell)) {
          out += uni ? "·" : ".";
        } else {
          out += ' ';
        }
      }
    }
    out += '\n';
  }
  return out;
}

std::string render_tablet(const std::vector<Hieroglyph>& hs, const Ring& ring, RenderMode mode) {
  std::vector<std::vector<std::string>> blocks;
  for (const Hieroglyph& h : hs) {
    std::vector<std::string> lines;
    const std::string s = render_hieroglyph(h, ring, mode);
    std::size_t start = 0;
    for (std::size_t nl; (nl = s.find('\n', start)) != std::string::npos; start = nl + 1)
      lines.push_back(s.substr(start, nl - start));
    blocks.push_back(std::move(lines));
  }
  std::string out;
  const std::size_t rows = blocks.empty() ? 0 : blocks.front().size();
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (b) out += "  ";
      out += blocks[b][r];
    }
    out += '\n';
  }
  return out;
}

}  // namespace hiero
