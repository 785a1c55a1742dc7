#include "hiero/harness.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "json.hpp"

#include "hiero/pipe_dreams.hpp"
#include "hiero/tablet.hpp"
#include "hiero/zoo.hpp"

namespace hiero {

namespace {

using Support = std::vector<Cell>;

constexpr int kMaxCheckSize = 5;

void require_checkable(const Permutation& w) {
  if (w.size() > kMaxCheckSize)
    throw Error(ErrorCode::TooLarge, "checks limited to n <= " + std::to_string(kMaxCheckSize));
}

std::vector<Support> tablet_supports(const Tablet& t) {
  std::vector<Support> out;
  for (const Hieroglyph& h : t.hieroglyphs) {
    Support s;
    for (const GridCell& c : h.support) s.emplace_back(c.row, c.col);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string show(const Support& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += "(" + std::to_string(s[i].first) + "," + std::to_string(s[i].second) + ")";
  }
  return out + "}";
}

// Empty when equal, else the first entry present on one side only.
std::string multiset_diff(const std::vector<Support>& a, const std::vector<Support>& b, const char* an,
                          const char* bn) {
  std::vector<Support> only_a, only_b;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(only_a));
  std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(only_b));
  if (only_a.empty() && only_b.empty()) return {};
  if (!only_a.empty()) return std::string("only in ") + an + ": " + show(only_a.front());
  return std::string("only in ") + bn + ": " + show(only_b.front());
}

Tablet schubert_tablet(const Permutation& w, bool antidiagonal) {
  Ideal ideal = schubert_ideal(w);
  const TermOrder ord = antidiagonal ? antidiagonal_order(ideal.ring) : lex_diagonal_order(ideal.ring);
  const Grading g = Grading::standard(ideal.ring.size());
  return build_tablet(ideal, ord, g);
}

}  // namespace

std::string to_string(Conjecture c) {
  switch (c) {
    case Conjecture::KM: return "km";
    case Conjecture::BPD: return "bpd";
    case Conjecture::Equidim: return "equidim";
  }
  return "unknown";
}

Conjecture parse_conjecture(const std::string& name) {
  if (name == "km") return Conjecture::KM;
  if (name == "bpd") return Conjecture::BPD;
  if (name == "equidim") return Conjecture::Equidim;
  throw Error(ErrorCode::InvalidArgument, "unknown check '" + name + "' (km, bpd, equidim)");
}

CheckResult check_km(const Permutation& w) {
  require_checkable(w);
  const Tablet t = schubert_tablet(w, true);
  std::vector<Support> dreams;
  for (const PipeDream& p : pipe_dreams(w)) dreams.push_back(p.crosses);
  std::sort(dreams.begin(), dreams.end());
  const auto supports = tablet_supports(t);

  CheckResult r{Conjecture::KM, w, false, {}};
  r.details = "tablet " + std::to_string(t.size()) + ", pipe dreams " + std::to_string(dreams.size());
  const std::string diff = multiset_diff(supports, dreams, "tablet", "pipe dreams");
  r.pass = t.size() == dreams.size() && diff.empty();
  if (!diff.empty()) r.details += "; " + diff;
  return r;
}

CheckResult check_bpd_conjecture(const Permutation& w) {
  require_checkable(w);
  const Tablet t = schubert_tablet(w, false);
  std::vector<Support> blanks;
  for (const BumplessPipeDream& d : bpds(w)) blanks.push_back(d.blank_support());
  std::sort(blanks.begin(), blanks.end());
  const auto supports = tablet_supports(t);

  CheckResult r{Conjecture::BPD, w, false, {}};
  r.details = "tablet " + std::to_string(t.size()) + ", bpds " + std::to_string(blanks.size()) +
              (t.equidimensional ? ", equidimensional" : ", not equidimensional");
  const std::string diff = multiset_diff(supports, blanks, "tablet", "bpds");
  r.pass = t.equidimensional && supports.size() == blanks.size() && diff.empty();
  if (!diff.empty()) r.details += "; " + diff;
  return r;
}

CheckResult check_equidim(const Permutation& w) {
  const Tablet t = schubert_tablet(w, false);
  std::size_t largest = 0;
  for (const Hieroglyph& h : t.all_components) largest = std::max(largest, h.size());
  CheckResult r{Conjecture::Equidim, w, t.equidimensional, {}};
  r.details = std::to_string(t.all_components.size()) + " components, sizes " +
              std::to_string(t.all_components.front().size()) + ".." + std::to_string(largest);
  return r;
}

CheckResult run_check(Conjecture c, const Permutation& w) {
  switch (c) {
    case Conjecture::KM: return check_km(w);
    case Conjecture::BPD: return check_bpd_conjecture(w);
    case Conjecture::Equidim: return check_equidim(w);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown check");
}

bool SweepReport::all_pass() const {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.pass; });
}

std::string SweepReport::to_json() const {
  using Json = nlohmann::ordered_json;
  Json rs = Json::array();
  for (const CheckResult& r : results)
    rs.push_back(Json{{"conjecture", hiero::to_string(r.conjecture)},
                      {"n", r.w.size()},
                      {"permutation", r.w.to_string()},
                      {"pass", r.pass},
                      {"details", r.details}});
  Json j{{"conjecture", hiero::to_string(conjecture)}, {"upto", upto}, {"all_pass", all_pass()}, {"results", rs}};
  return j.dump(2) + "\n";
}

SweepReport sweep(Conjecture c, int upto, unsigned threads) {
  if (upto < 1) throw Error(ErrorCode::InvalidArgument, "--upto must be at least 1");
  if (c != Conjecture::Equidim && upto > kMaxCheckSize)
    throw Error(ErrorCode::TooLarge, "checks limited to n <= " + std::to_string(kMaxCheckSize));
  std::vector<Permutation> perms;
  for (int n = 1; n <= upto; ++n)
    for (Permutation& w : Permutation::all(n)) perms.push_back(std::move(w));

  SweepReport report{c, upto, std::vector<CheckResult>(perms.size())};
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < perms.size();) {
      try {
        report.results[k] = run_check(c, perms[k]);
      } catch (const std::exception& e) {
        report.results[k] = CheckResult{c, perms[k], false, std::string("error: ") + e.what()};
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(perms.size()));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  return report;
}

}  // namespace hiero
