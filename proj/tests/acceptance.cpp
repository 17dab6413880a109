// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "srgb/cab_bounds.hpp"
#include "srgb/catalog.hpp"
#include "srgb/exactnum.hpp"
#include "srgb/graph.hpp"
#include "srgb/identities.hpp"

using namespace srgb;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string secs(double s) {
  std::ostringstream os;
  os.precision(3);
  os << s << " s";
  return os.str();
}

unsigned cores() { return std::max(1U, std::thread::hardware_concurrency()); }

// Every feasible tuple up to v_max, including ones known to have no graph:
// the properties below are statements about parameters.
std::vector<SrgParams> all_feasible(std::int64_t v_max) {
  ScanConfig cfg;
  cfg.v_max = v_max;
  cfg.include_nonexistent = true;
  return enumerate_feasible(cfg);
}

Outcome table_reproduction() {
  auto t0 = Clock::now();
  ScanConfig cfg;
  cfg.v_max = 150;
  cfg.filter = ScanFilter::Gap;
  ScanResult res = scan_compare(cfg);
  std::ostringstream table;
  emit(table, res.records, OutputFormat::Table);
  double elapsed = seconds_since(t0);

  std::ifstream golden(SRGB_GOLDEN_DIR "/table1.txt");
  std::stringstream expected;
  expected << golden.rdbuf();
  const auto& rows = published_table();
  bool same_rows = res.records.size() == rows.size();
  for (std::size_t i = 0; same_rows && i < rows.size(); ++i)
    same_rows = res.records[i].params == rows[i].params && res.records[i].cab == rows[i].cab;
  bool golden_ok = golden && table.str() == expected.str();
  return {same_rows && golden_ok && elapsed < 5.0,
          std::to_string(res.records.size()) + " rows, CAB column " +
              (same_rows ? "matches" : "differs") + ", golden file " +
              (golden_ok ? "identical" : "differs") + ", " + secs(elapsed)};
}

Outcome gap_two() {
  BoundsReport r = full_report({378, 52, 1, 8});
  bool ok = r.delsarte == 5 && r.cab == 3;
  return {ok, "(378,52,1,8): delsarte=" + std::to_string(r.delsarte.value_or(-1)) +
                  ", cab=" + std::to_string(r.cab)};
}

Outcome delsarte_point(const std::vector<SrgParams>& tuples) {
  auto t0 = Clock::now();
  std::size_t checked = 0, violations = 0;
  for (const SrgParams& p : tuples) {
    if (!p.connected()) continue;
    ++checked;
    BoundsReport r = full_report(p);
    if (!(delsarte_point_value(p) < 0) || r.cab > *r.delsarte) ++violations;
  }
  double elapsed = seconds_since(t0);
  return {violations == 0 && checked > 1000 && elapsed < 60.0,
          std::to_string(checked) + " connected tuples, " + std::to_string(violations) +
              " violations, " + secs(elapsed)};
}

Outcome trivial_equality(const std::vector<SrgParams>& tuples) {
  std::size_t hits = 0, violations = 0;
  for (const SrgParams& p : tuples) {
    if (!p.connected() || !thm51_predicate(p)) continue;
    ++hits;
    if (cab(p.edge_regular()).bound != p.lambda + 2) ++violations;
  }
  return {violations == 0 && hits > 0, std::to_string(hits) + " tuples with lambda+1 <= -k/s, " +
                                           std::to_string(violations) + " violations"};
}

Outcome identities() {
  auto t0 = Clock::now();
  std::size_t verified = 0, cross = 0, mutants = 0, killed = 0;
  auto cases = shipped_identities();
  for (const IdentityCase& c : cases) {
    if (verify_identity(c)) ++verified;
    if (random_point_crosscheck(c, 100, 2024)) ++cross;
    for (std::size_t i = 0; i < c.rhs.size(); ++i) {
      ++mutants;
      if (!verify_identity(mutate_rhs_sign(c, i))) ++killed;
    }
  }
  double elapsed = seconds_since(t0);
  bool ok = cases.size() == 8 && verified == 8 && cross == 8 && killed == mutants &&
            elapsed < 1.0;
  return {ok, std::to_string(verified) + "/8 zero, " + std::to_string(cross) +
                  "/8 cross-checked x100, " + std::to_string(killed) + "/" +
                  std::to_string(mutants) + " sign flips caught, " + secs(elapsed)};
}

Outcome delta3() {
  Graph g = heawood_line_distance3();
  auto e = is_edge_regular(g);
  bool edge_ok = e && *e == EdgeRegularParams{21, 8, 3};
  bool not_srg = !is_strongly_regular(g);
  std::int64_t c = edge_ok ? cab(*e).bound : -1;
  std::size_t omega = max_clique(g).size;
  std::int64_t hoff = hoffman_clique_bound(21, 12, QuadExt(-1) - QuadExt::sqrt(8));
  std::int64_t dels = delsarte_bound(8, -QuadExt::sqrt(8));
  bool ok = edge_ok && not_srg && c == 4 && omega == 3 && hoff == 5 && dels == 3;
  return {ok, std::string("edge-regular (21,8,3): ") + (edge_ok ? "yes" : "no") +
                  ", strongly regular: " + (not_srg ? "no" : "yes") +
                  ", cab=" + std::to_string(c) + ", omega=" + std::to_string(omega) +
                  ", hoffman=" + std::to_string(hoff) + ", delsarte=" + std::to_string(dels)};
}

// Independent of max_clique: grow cliques in increasing vertex order.
std::size_t exhaustive_clique(const Graph& g, std::vector<std::size_t>& cur, std::size_t from) {
  std::size_t best = cur.size();
  for (std::size_t v = from; v < g.order(); ++v) {
    bool ok = std::all_of(cur.begin(), cur.end(), [&](std::size_t u) { return g.adjacent(u, v); });
    if (!ok) continue;
    cur.push_back(v);
    best = std::max(best, exhaustive_clique(g, cur, v + 1));
    cur.pop_back();
  }
  return best;
}

Outcome paley_suite() {
  auto t0 = Clock::now();
  bool all_srg = true;
  for (std::int64_t p : {5, 13, 17, 29, 37, 41}) {
    auto srg = is_strongly_regular(paley(p));
    all_srg = all_srg && srg && *srg == SrgParams{p, (p - 1) / 2, (p - 5) / 4, (p - 1) / 4};
  }
  std::size_t w17 = max_clique(paley(17)).size;
  auto ann = published_annotation({17, 8, 3, 4});
  bool sharp17 = w17 == 3 && ann && ann->sharp == "Y" &&
                 cab(EdgeRegularParams{17, 8, 3}).bound == 3;
  Graph p37 = paley(37);
  std::vector<std::size_t> cur;
  std::size_t oracle = exhaustive_clique(p37, cur, 0);
  std::size_t w37 = max_clique(p37).size;
  double elapsed = seconds_since(t0);
  bool ok = all_srg && sharp17 && w37 == oracle && elapsed < 30.0;
  return {ok, std::string("conference parameters ") + (all_srg ? "ok" : "wrong") +
                  ", omega(P17)=" + std::to_string(w17) + ", omega(P37)=" + std::to_string(w37) +
                  " (oracle " + std::to_string(oracle) + "), " + secs(elapsed)};
}

Outcome delsarte_hoffman(const std::vector<SrgParams>& tuples) {
  std::size_t checked = 0, mismatches = 0;
  for (const SrgParams& p : tuples) {
    if (p.v > 300 || !p.primitive()) continue;
    ++checked;
    Spectrum sp = spectrum(p);
    QuadExt s_bar = -sp.r - QuadExt(1);
    if (delsarte_value(p) != hoffman_clique_value(p.v, p.v - p.k - 1, s_bar)) ++mismatches;
  }
  return {mismatches == 0 && checked > 0,
          std::to_string(checked) + " tuples, " + std::to_string(mismatches) + " mismatches"};
}

Outcome conjecture() {
  ScanConfig cfg;
  cfg.v_max = 500;
  cfg.parallelism = cores();
  auto literal = conjecture_scan(cfg, ConjectureForm::Literal);
  auto converse = conjecture_scan(cfg, ConjectureForm::Converse);
  std::string first;
  for (std::size_t i = 0; i < std::min<std::size_t>(3, literal.size()); ++i)
    first += (i ? " " : "") + to_string(literal[i].params);
  return {literal.empty(),
          std::to_string(literal.size()) + " tuples with cab < -k/s < lambda+1" +
              (first.empty() ? "" : " (first: " + first + ")") +
              "; converse form (cab = lambda+2 => lambda+1 <= -k/s): " +
              std::to_string(converse.size()) + " counterexamples"};
}

Outcome exclusivity(const std::vector<SrgParams>& tuples) {
  std::size_t applicable = 0, both = 0;
  for (const SrgParams& p : tuples) {
    if (!p.primitive() || !is_type_two(classify(p))) continue;
    if (!thm22_applies(p).applies) continue;
    ++applicable;
    if (thm22_applies(complement(p)).applies) ++both;
  }
  return {both == 0 && applicable > 0, std::to_string(applicable) +
                                           " integral tuples meet the test, " +
                                           std::to_string(both) + " complements also do"};
}

Outcome exact_arithmetic() {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> num(-500, 500), den(1, 40);
  static constexpr std::uint64_t kRadicands[] = {2, 3, 5, 6, 7, 17, 37, 101, 8069};
  std::uniform_int_distribution<std::size_t> pick(0, std::size(kRadicands) - 1);
  auto rational = [&] { return Rational(num(rng), den(rng)); };
  std::size_t checks = 0, failures = 0;
  auto check = [&](bool ok) {
    ++checks;
    if (!ok) ++failures;
  };
  for (int i = 0; i < 4000; ++i) {
    std::uint64_t d = kRadicands[pick(rng)];
    QuadExt x = QuadExt::normalize(rational(), rational(), d);
    BigInt n = floor_of(x);
    // floor sandwich
    check(sign_of(x - QuadExt(Rational(n))) >= 0 && sign_of(x - QuadExt(Rational(n + 1))) < 0);
    // fractional part range
    QuadExt f = frac_of(x);
    check(sign_of(f) >= 0 && sign_of(f - QuadExt(1)) < 0 && QuadExt(Rational(n)) + f == x);
    // order transitivity and antisymmetry
    QuadExt y = QuadExt::normalize(rational(), rational(), d);
    QuadExt z = QuadExt::normalize(rational(), rational(), d);
    check(sign_of(x - y) == -sign_of(y - x));
    if (x <= y && y <= z) check(x <= z);
  }
  return {failures == 0 && checks >= 10000,
          std::to_string(checks) + " checks, " + std::to_string(failures) + " failures"};
}

}  // namespace

int main() {
  std::cout << "enumerating feasible tuples up to v = 500..." << std::endl;
  const std::vector<SrgParams> tuples = all_feasible(500);

  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "Table reproduction (v <= 150, gap > 0)", table_reproduction},
      {2, "Gap-two example", gap_two},
      {3, "Delsarte point negative, cab <= delsarte (v <= 500)", [&] { return delsarte_point(tuples); }},
      {4, "cab = lambda+2 when lambda+1 <= -k/s (v <= 500)", [&] { return trivial_equality(tuples); }},
      {5, "Identity suite", identities},
      {6, "Distance-3 fixture", delta3},
      {7, "Paley graphs", paley_suite},
      {8, "Delsarte equals Hoffman on the complement (v <= 300)", [&] { return delsarte_hoffman(tuples); }},
      {9, "Conjecture scan empty (v <= 500)", conjecture},
      {10, "Complementary exclusivity of the integral test", [&] { return exclusivity(tuples); }},
      {11, "Exact arithmetic micro-suite", exact_arithmetic},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << c.id << ". " << c.name << ": " << o.detail
              << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
            << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
