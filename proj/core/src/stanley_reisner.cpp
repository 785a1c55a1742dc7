#include "hiero/stanley_reisner.hpp"

#include <algorithm>
#include <limits>

#include <boost/dynamic_bitset.hpp>

namespace hiero {

namespace {

using VarSet = boost::dynamic_bitset<>;

std::vector<int> to_list(const VarSet& s) {
  std::vector<int> out;
  for (auto i = s.find_first(); i != VarSet::npos; i = s.find_next(i)) out.push_back(static_cast<int>(i));
  return out;
}

bool size_then_lex(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

// Branch on the uncovered edge with the fewest admissible vertices. Vertices
// of earlier branches are forbidden in later ones, so each transversal is
// produced once; a partial set whose members lack private edges is pruned.
class TransversalSearch {
 public:
  TransversalSearch(std::size_t n, std::vector<VarSet> edges)
      : edges_(std::move(edges)), chosen_(n), forbidden_(n), marked_(n) {}

  std::vector<std::vector<int>> run() {
    recurse();
    std::sort(out_.begin(), out_.end(), size_then_lex);
    return std::move(out_);
  }

 private:
  void recurse() {
    const VarSet* best = nullptr;
    std::size_t best_count = std::numeric_limits<std::size_t>::max();
    for (const VarSet& e : edges_) {
      if (e.intersects(chosen_)) continue;
      const std::size_t c = (e - forbidden_).count();
      if (c == 0) return;
      if (c < best_count) {
        best = &e;
        best_count = c;
      }
    }
    if (!best) {
      out_.push_back(chosen_list_);
      std::sort(out_.back().begin(), out_.back().end());
      return;
    }
    const std::vector<int> candidates = to_list(*best - forbidden_);
    const VarSet saved = forbidden_;
    for (int v : candidates) {
      const auto uv = static_cast<std::size_t>(v);
      chosen_.set(uv);
      chosen_list_.push_back(v);
      if (all_private()) recurse();
      chosen_list_.pop_back();
      chosen_.reset(uv);
      forbidden_.set(uv);
    }
    forbidden_ = saved;
  }

  bool all_private() {
    marked_.reset();
    for (const VarSet& e : edges_) {
      const VarSet inter = e & chosen_;
      if (inter.count() == 1) marked_.set(inter.find_first());
    }
    return chosen_.is_subset_of(marked_);
  }

  std::vector<VarSet> edges_;
  VarSet chosen_;
  VarSet forbidden_;
  VarSet marked_;
  std::vector<int> chosen_list_;
  std::vector<std::vector<int>> out_;
};

void require_squarefree(const MonomialIdeal& ideal) {
  if (!is_squarefree(ideal)) throw Error(ErrorCode::NotSquarefree, "ideal is not squarefree");
}

}  // namespace

std::size_t SimplicialComplex::max_facet_size() const noexcept {
  std::size_t m = 0;
  for (const auto& f : facets) m = std::max(m, f.size());
  return m;
}

std::vector<std::vector<int>> minimal_transversals(std::size_t nvertices,
                                                   const std::vector<std::vector<int>>& edges) {
  std::vector<VarSet> sets;
  for (const auto& e : edges) {
    VarSet s(nvertices);
    for (int v : e) {
      if (v < 0 || static_cast<std::size_t>(v) >= nvertices)
        throw Error(ErrorCode::InvalidArgument, "edge vertex out of range");
      s.set(static_cast<std::size_t>(v));
    }
    if (s.none()) return {};
    sets.push_back(std::move(s));
  }
  // Only inclusion-minimal edges constrain the transversals.
  std::sort(sets.begin(), sets.end(), [](const VarSet& a, const VarSet& b) { return a.count() < b.count(); });
  std::vector<VarSet> minimal;
  for (VarSet& s : sets) {
    const bool redundant = std::any_of(minimal.begin(), minimal.end(),
                                       [&](const VarSet& m) { return m.is_subset_of(s); });
    if (!redundant) minimal.push_back(std::move(s));
  }
  return TransversalSearch(nvertices, std::move(minimal)).run();
}

std::vector<PrimeComponent> minimal_primes(const MonomialIdeal& ideal) {
  require_squarefree(ideal);
  if (ideal.is_zero()) return {};
  std::vector<std::vector<int>> edges;
  edges.reserve(ideal.size());
  for (const Monomial& g : ideal.gens()) edges.push_back(g.support());
  std::vector<PrimeComponent> out;
  for (auto& t : minimal_transversals(ideal.nvars(), edges)) out.push_back(PrimeComponent{std::move(t)});
  return out;
}

SimplicialComplex sr_facets(const MonomialIdeal& ideal) {
  const std::size_t n = ideal.nvars();
  SimplicialComplex cx{n, {}};
  if (ideal.is_zero()) {
    require_squarefree(ideal);
    std::vector<int> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<int>(i);
    cx.facets.push_back(std::move(all));
    return cx;
  }
  for (const PrimeComponent& p : minimal_primes(ideal)) {
    std::vector<int> f;
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (k < p.vars.size() && p.vars[k] == static_cast<int>(i)) {
        ++k;
        continue;
      }
      f.push_back(static_cast<int>(i));
    }
    cx.facets.push_back(std::move(f));
  }
  std::sort(cx.facets.begin(), cx.facets.end());
  return cx;
}

MonomialIdeal ideal_from_facets(const Ring& ring, const SimplicialComplex& complex) {
  const std::size_t n = complex.nvertices;
  if (ring.size() != n) throw Error(ErrorCode::InvalidArgument, "ring size differs from vertex count");
  if (complex.facets.empty()) throw Error(ErrorCode::ContainsUnit, "the void complex has no Stanley-Reisner ideal");
  // sigma is a non-face iff it meets the complement of every facet.
  std::vector<std::vector<int>> complements;
  for (const auto& f : complex.facets) {
    VarSet s(n);
    s.set();
    for (int v : f) s.reset(static_cast<std::size_t>(v));
    if (s.none()) return MonomialIdeal(ring, {});
    complements.push_back(to_list(s));
  }
  std::vector<Monomial> gens;
  for (const auto& t : minimal_transversals(n, complements)) {
    std::vector<int> e(n, 0);
    for (int v : t) e[static_cast<std::size_t>(v)] = 1;
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(ring, std::move(gens));
}

bool is_face(const SimplicialComplex& complex, std::span<const int> sigma) {
  std::vector<int> s(sigma.begin(), sigma.end());
  std::sort(s.begin(), s.end());
  return std::any_of(complex.facets.begin(), complex.facets.end(), [&](const std::vector<int>& f) {
    return std::includes(f.begin(), f.end(), s.begin(), s.end());
  });
}

MonomialIdeal prime_ideal(const Ring& ring, const PrimeComponent& p) {
  std::vector<Monomial> gens;
  for (int v : p.vars) gens.push_back(Monomial::variable(ring.size(), v));
  return MonomialIdeal(ring, std::move(gens));
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (!(a.ring() == b.ring())) throw Error(ErrorCode::InvalidArgument, "ideals from different rings");
  if (a.is_zero() || b.is_zero()) return MonomialIdeal(a.ring(), {});
  std::vector<Monomial> gens;
  gens.reserve(a.size() * b.size());
  for (const Monomial& x : a.gens())
    for (const Monomial& y : b.gens()) gens.push_back(mono_lcm(x, y));
  return MonomialIdeal(a.ring(), std::move(gens));
}

}  // namespace hiero
