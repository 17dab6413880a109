// Command-line front end for the bounds library.
//
// Exit codes: 0 success, 1 invariant violation or internal failure,
// 2 usage error (bad flags, malformed or infeasible input).

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "srgb/cab_bounds.hpp"
#include "srgb/catalog.hpp"
#include "srgb/graph.hpp"
#include "srgb/graph_io.hpp"
#include "srgb/identities.hpp"

using namespace srgb;

namespace {

constexpr int kExitInvariant = 1;
constexpr int kExitUsage = 2;

bool stdout_color() { return std::getenv("NO_COLOR") == nullptr && isatty(STDOUT_FILENO); }

std::string fixed6(double x) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << x;
  return os.str();
}

void line(std::ostream& out, std::string_view label, const std::string& value) {
  out << std::left << std::setw(20) << label << value << '\n';
}

std::string opt_int(const std::optional<std::int64_t>& x) {
  return x ? std::to_string(*x) : std::string("-");
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1U, std::thread::hardware_concurrency());
}

// bounds ---------------------------------------------------------------------

int run_bounds(const std::vector<std::string>& args, bool json) {
  std::string joined;
  for (const auto& a : args) joined += a + ' ';
  ParsedTuple t = parse_tuple(joined);

  BoundsReport rep;
  std::optional<Spectrum> sp;
  if (t.mu) {
    SrgParams p{t.edge.v, t.edge.k, t.edge.lambda, *t.mu};
    p.validate();
    rep = full_report(p);
    sp = spectrum(p);
  } else {
    t.edge.validate();
    rep = edge_regular_report(t.edge);
  }

  if (json) {
    std::cout << to_json(rep).dump() << '\n';
    return 0;
  }

  auto& out = std::cout;
  if (rep.has_mu) {
    line(out, "Parameters", to_string(rep.params));
    line(out, "Type", std::string(to_string(rep.type)));
    line(out, "Eigenvalues", "r = " + sp->r.to_string() + ", s = " + sp->s.to_string());
  } else {
    const auto& p = rep.params;
    line(out, "Parameters", "edge-regular (" + std::to_string(p.v) + "," + std::to_string(p.k) +
                                "," + std::to_string(p.lambda) + ")");
  }
  const CabWitness& w = rep.cab_witness;
  line(out, "CAB", std::to_string(rep.cab) + "   (C(" + std::to_string(w.b) + ", " +
                       std::to_string(w.c_plus_1) + ") = " + w.value.str() + ")");
  line(out, "Trivial", std::to_string(rep.trivial));
  if (!rep.has_mu) return 0;

  line(out, "Delsarte", opt_int(rep.delsarte) + (rep.delsarte_degenerate ? "   (disconnected)" : ""));
  line(out, "Hoffman (compl.)", opt_int(rep.hoffman_complement));
  line(out, "Conference test", yes_no(rep.thm21));
  line(out, "Integral test", yes_no(rep.thm22));
  if (rep.thm_threshold) {
    line(out, "  threshold", rep.thm_threshold->to_string() + " = " +
                                 fixed6(rep.thm_threshold->to_double()));
  }
  line(out, "Improved", opt_int(rep.improved));
  line(out, "lambda+1 <= -k/s", yes_no(rep.thm51));
  return 0;
}

// scan / conjecture ----------------------------------------------------------

struct ScanOptions {
  std::int64_t max_v = 150;
  std::string level = "absolute";
  std::string filter = "none";
  std::string type = "any";
  std::string format = "table";
  std::string out;
  unsigned threads = 0;
  bool pairs = false;
  bool include_nonexistent = false;
  bool stats = false;
};

ScanConfig make_config(const ScanOptions& o) {
  ScanConfig cfg;
  cfg.v_max = o.max_v;
  cfg.level = parse_feasibility_level(o.level);
  cfg.parallelism = resolve_threads(o.threads);
  cfg.filter = o.filter == "none" ? ScanFilter::None : parse_scan_filter(o.filter);
  if (o.type == "I")
    cfg.type = TypeFilter::TypeI;
  else if (o.type == "II")
    cfg.type = TypeFilter::TypeII;
  else if (o.type != "any")
    throw DomainError("unknown type filter '" + o.type + "'");
  cfg.pairs = o.pairs;
  cfg.include_nonexistent = o.include_nonexistent;
  cfg.validate();
  return cfg;
}

void write_records(const ScanOptions& o, const std::vector<ScanRecord>& records) {
  OutputFormat fmt = parse_output_format(o.format);
  if (o.out.empty()) {
    emit(std::cout, records, fmt, fmt == OutputFormat::Table && stdout_color());
    return;
  }
  std::ofstream file(o.out);
  if (!file) throw DomainError("cannot open '" + o.out + "' for writing");
  emit(file, records, fmt, false);
}

int run_scan(const ScanOptions& o) {
  ScanConfig cfg = make_config(o);
  ScanResult res = scan_compare(cfg);
  write_records(o, res.records);
  if (o.stats) {
    const ScanStats& s = res.stats;
    std::cerr << "tuples scanned: " << s.tuples << '\n'
              << "conference tuples meeting the improvement test: " << s.type_one_thm21 << "/"
              << s.type_one << " = " << fixed6(s.thm21_fraction()) << '\n'
              << "integral tuples meeting the improvement test: " << s.type_two_thm22 << "/"
              << s.type_two << " = " << fixed6(s.thm22_fraction()) << '\n'
              << "  per complementary pair: " << s.type_two_pairs_thm22 << "/"
              << s.type_two_pairs << " = " << fixed6(s.thm22_pair_fraction()) << '\n';
  }
  return 0;
}

int run_conjecture(const ScanOptions& o, const std::string& form_name) {
  ConjectureForm form = parse_conjecture_form(form_name);
  ScanConfig cfg = make_config(o);
  std::vector<ScanRecord> hits = conjecture_scan(cfg, form);
  write_records(o, hits);
  std::cerr << hits.size() << " counterexample(s) to the " << form_name
            << " form for v <= " << cfg.v_max << '\n';
  return 0;
}

// identities -----------------------------------------------------------------

int run_verify(bool json, int trials) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  bool all = true;
  for (const IdentityCase& c : shipped_identities()) {
    VerifyResult res = verify_identity_detailed(c);
    bool cross = random_point_crosscheck(c, trials, 1);
    bool ok = res.zero && cross;
    all = all && ok;
    if (json) {
      arr.push_back({{"id", c.id},
                     {"parameterization", std::string(to_string(c.param))},
                     {"degree", res.degree},
                     {"zero", res.zero},
                     {"crosscheck", cross},
                     {"pass", ok}});
    } else {
      std::cout << std::left << std::setw(32) << c.id << std::setw(13) << to_string(c.param)
                << "deg " << std::setw(4) << res.degree << (ok ? "PASS" : "FAIL") << '\n';
    }
  }
  if (json) std::cout << arr.dump(2) << '\n';
  return all ? 0 : kExitInvariant;
}

// graphs ---------------------------------------------------------------------

void print_clique(const Graph& g) {
  CliqueResult c = max_clique(g);
  std::ostringstream w;
  for (std::size_t i = 0; i < c.witness.size(); ++i) w << (i ? " " : "") << c.witness[i];
  line(std::cout, "omega", std::to_string(c.size) + "   {" + w.str() + "}");
}

int run_paley(std::int64_t p, bool clique) {
  Graph g = paley(p);
  auto srg = is_strongly_regular(g);
  if (!srg) throw InvariantViolation("Paley graph failed the regularity check");
  line(std::cout, "Paley graph", "order " + std::to_string(p));
  line(std::cout, "Parameters", to_string(*srg));
  line(std::cout, "CAB", std::to_string(cab(srg->edge_regular()).bound));
  line(std::cout, "Delsarte", std::to_string(delsarte_bound(*srg)));
  if (clique) print_clique(g);
  return 0;
}

int run_maxclique(const std::string& path) {
  Graph g = read_graph_file(path);
  line(std::cout, "Order", std::to_string(g.order()));
  line(std::cout, "Edges", std::to_string(g.edge_count()));
  if (auto srg = is_strongly_regular(g)) {
    line(std::cout, "Strongly regular", to_string(*srg));
  } else if (auto e = is_edge_regular(g)) {
    line(std::cout, "Edge-regular", "(" + std::to_string(e->v) + "," + std::to_string(e->k) +
                                        "," + std::to_string(e->lambda) + ")");
  }
  if (auto e = is_edge_regular(g)) line(std::cout, "CAB", std::to_string(cab(*e).bound));
  print_clique(g);
  return 0;
}

int run_delta3() {
  Graph g = heawood_line_distance3();
  auto e = is_edge_regular(g);
  if (!e) throw InvariantViolation("distance-3 graph is not edge-regular");
  bool srg = is_strongly_regular(g).has_value();
  // Eigenvalues of this graph are fixture values, not computed here.
  QuadExt s = -QuadExt::sqrt(8);
  QuadExt s_bar = QuadExt(-1) - QuadExt::sqrt(8);
  std::int64_t k_bar = e->v - e->k - 1;
  std::cout << "Distance-3 graph of the Heawood line graph: edge-regular (" << e->v << ","
            << e->k << "," << e->lambda << "), " << (srg ? "strongly regular" : "not strongly regular")
            << '\n';
  line(std::cout, "CAB", std::to_string(cab(*e).bound));
  line(std::cout, "Delsarte", std::to_string(delsarte_bound(e->k, s)) + "   (s = " + s.to_string() + ")");
  line(std::cout, "Hoffman (compl.)", std::to_string(hoffman_clique_bound(e->v, k_bar, s_bar)) +
                                          "   (complement s = " + s_bar.to_string() + ")");
  print_clique(g);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clique-number bounds for strongly regular and edge-regular parameters"};
  app.require_subcommand(1);

  std::vector<std::string> tuple;
  bool bounds_json = false;
  auto* bounds = app.add_subcommand("bounds", "Bounds for one tuple: v k lambda [mu]");
  bounds->add_option("tuple", tuple, "v k lambda [mu], or v,k,lambda,mu")->required();
  bounds->add_flag("--json", bounds_json, "Compact JSON output");

  ScanOptions so;
  auto add_scan_opts = [&so](CLI::App* sub) {
    sub->add_option("--max-v", so.max_v, "Largest vertex count")->required();
    sub->add_option("--level", so.level, "counting | integrality | krein | absolute");
    sub->add_option("--type", so.type, "any | I | II");
    sub->add_option("--format", so.format, "table | csv | json");
    sub->add_option("--out", so.out, "Write to FILE instead of stdout");
    sub->add_option("--threads", so.threads, "Worker threads (0 = all cores)");
    sub->add_flag("--pairs", so.pairs, "One member per complementary pair (k < v/2)");
    sub->add_flag("--include-nonexistent", so.include_nonexistent,
                  "Keep feasible tuples known to have no graph");
  };
  auto* scan = app.add_subcommand("scan", "Enumerate feasible tuples and compare bounds");
  add_scan_opts(scan);
  scan->add_option("--filter", so.filter, "none | gap | thm | thm51");
  scan->add_flag("--stats", so.stats, "Print applicability shares to stderr");

  std::string form = "literal";
  auto* conj = app.add_subcommand("conjecture", "Search for tuples violating the CAB conjecture");
  add_scan_opts(conj);
  conj->add_option("--form", form, "literal | converse");

  bool verify_json = false;
  int trials = 100;
  auto* verify = app.add_subcommand("verify-identities", "Re-prove the CAP identities");
  verify->add_flag("--json", verify_json, "JSON output");
  verify->add_option("--trials", trials, "Random cross-check points per identity");

  std::int64_t prime = 0;
  bool paley_clique = false;
  auto* pal = app.add_subcommand("paley", "Build a Paley graph over a prime field");
  pal->add_option("p", prime, "prime p = 1 mod 4")->required();
  pal->add_flag("--clique", paley_clique, "Compute the clique number");

  std::string graph_path;
  auto* mc = app.add_subcommand("maxclique", "Maximum clique of a graph file (edge list or graph6)");
  mc->add_option("file", graph_path)->required();

  auto* d3 = app.add_subcommand("delta3", "Report on the edge-regular (21,8,3) example");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*bounds) return run_bounds(tuple, bounds_json);
    if (*scan) return run_scan(so);
    if (*conj) return run_conjecture(so, form);
    if (*verify) return run_verify(verify_json, trials);
    if (*pal) return run_paley(prime, paley_clique);
    if (*mc) return run_maxclique(graph_path);
    if (*d3) return run_delta3();
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInvariant;
  }
  return 0;
}
