#include "srgb/catalog.hpp"

#include <algorithm>
#include <exception>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

namespace srgb {

// Annotations ----------------------------------------------------------------

const std::vector<PublishedRow>& published_table() {
  using T = SrgType;
  static const std::vector<PublishedRow> rows = {
      {{17, 8, 3, 4}, T::TypeIOnly, 3, {"!", "Y"}},
      {{37, 18, 8, 9}, T::TypeIOnly, 5, {"+", "Y"}},
      {{50, 7, 0, 1}, T::TypeIIOnly, 2, {"!", "Y"}},
      {{56, 10, 0, 2}, T::TypeIIOnly, 2, {"!", "Y"}},
      {{65, 32, 15, 16}, T::TypeIOnly, 7, {"?", "?"}},
      {{77, 16, 0, 4}, T::TypeIIOnly, 2, {"!", "Y"}},
      {{88, 27, 6, 9}, T::TypeIIOnly, 4, {"?", "?"}},
      {{99, 14, 1, 2}, T::TypeIIOnly, 3, {"?", "Y"}},
      {{100, 22, 0, 6}, T::TypeIIOnly, 2, {"!", "Y"}},
      {{101, 50, 24, 25}, T::TypeIOnly, 9, {"+", "?"}},
      {{105, 32, 4, 12}, T::TypeIIOnly, 3, {"!", "Y"}},
      {{111, 30, 5, 9}, T::TypeIIOnly, 4, {"?", "?"}},
      {{115, 18, 1, 3}, T::TypeIIOnly, 3, {"?", "Y"}},
      {{120, 42, 8, 18}, T::TypeIIOnly, 3, {"!", "Y"}},
      {{121, 36, 7, 12}, T::TypeIIOnly, 4, {"?", "?"}},
      {{133, 32, 6, 8}, T::TypeIIOnly, 5, {"?", "?"}},
      {{144, 39, 6, 12}, T::TypeIIOnly, 4, {"+", "Y"}},
      {{144, 52, 16, 20}, T::TypeIIOnly, 6, {"?", "?"}},
      {{145, 72, 35, 36}, T::TypeIOnly, 11, {"?", "?"}},
      {{149, 74, 36, 37}, T::TypeIOnly, 11, {"+", "?"}},
  };
  return rows;
}

std::optional<Annotation> published_annotation(const SrgParams& p) {
  for (const auto& row : published_table())
    if (row.params == p) return row.annotation;
  return std::nullopt;
}

bool known_nonexistent(const SrgParams& p) {
  // Bussemaker, Haemers, Mathon, Wilbrink (1989): no (49,16,3,6) graph.
  static const SrgParams kNone[] = {{49, 16, 3, 6}, {49, 32, 21, 20}};
  return std::find(std::begin(kNone), std::end(kNone), p) != std::end(kNone);
}

// Parsing ------------------------------------------------------------------

ScanFilter parse_scan_filter(std::string_view s) {
  if (s == "none") return ScanFilter::None;
  if (s == "gap") return ScanFilter::Gap;
  if (s == "thm") return ScanFilter::Thm;
  if (s == "thm51") return ScanFilter::Thm51;
  throw DomainError("unknown filter '" + std::string(s) + "'");
}

OutputFormat parse_output_format(std::string_view s) {
  if (s == "table") return OutputFormat::Table;
  if (s == "csv") return OutputFormat::Csv;
  if (s == "json") return OutputFormat::Json;
  throw DomainError("unknown format '" + std::string(s) + "'");
}

ConjectureForm parse_conjecture_form(std::string_view s) {
  if (s == "literal") return ConjectureForm::Literal;
  if (s == "converse") return ConjectureForm::Converse;
  throw DomainError("unknown conjecture form '" + std::string(s) + "'");
}

void ScanConfig::validate() const {
  if (v_max < 5) throw DomainError("scan needs v_max >= 5");
  if (parallelism == 0) throw DomainError("parallelism must be at least 1");
}

double ScanStats::thm21_fraction() const {
  return type_one ? static_cast<double>(type_one_thm21) / static_cast<double>(type_one) : 0.0;
}
double ScanStats::thm22_fraction() const {
  return type_two ? static_cast<double>(type_two_thm22) / static_cast<double>(type_two) : 0.0;
}
double ScanStats::thm22_pair_fraction() const {
  return type_two_pairs ? static_cast<double>(type_two_pairs_thm22) /
                              static_cast<double>(type_two_pairs)
                        : 0.0;
}

// Enumeration --------------------------------------------------------------

std::vector<SrgParams> enumerate_feasible(const ScanConfig& cfg) {
  cfg.validate();
  std::vector<SrgParams> out;
  for (std::int64_t v = 5; v <= cfg.v_max; ++v) {
    for (std::int64_t k = 1; k <= v - 2; ++k) {
      // lambda = k-1 - (v-k-1)mu/k falls as mu grows; walk mu downwards so
      // lambda comes out ascending.
      for (std::int64_t mu = k; mu >= 0; --mu) {
        std::int64_t drop = (v - k - 1) * mu;
        if (drop % k != 0) continue;
        std::int64_t lambda = k - 1 - drop / k;
        if (lambda < 0) continue;
        SrgParams p{v, k, lambda, mu};
        if (is_feasible(p, cfg.level)) out.push_back(p);
      }
    }
  }
  return out;
}

// Scanning -----------------------------------------------------------------

ScanRecord make_record(const SrgParams& p) {
  BoundsReport rep = full_report(p);
  ScanRecord r;
  r.params = p;
  r.type = rep.type;
  r.cab = rep.cab;
  r.delsarte = *rep.delsarte;
  r.gap = r.delsarte - r.cab;
  r.thm21 = rep.thm21;
  r.thm22 = rep.thm22;
  r.thm51 = rep.thm51;
  r.annotation = published_annotation(p);
  if (r.gap < 0) throw InvariantViolation("negative gap for " + to_string(p));
  if ((r.thm21 || r.thm22) && r.gap < 1)
    throw InvariantViolation("improvement hypothesis holds but gap < 1 for " + to_string(p));
  return r;
}

namespace {

std::vector<SrgParams> scan_tuples(const ScanConfig& cfg) {
  std::vector<SrgParams> tuples = enumerate_feasible(cfg);
  if (!cfg.include_nonexistent) std::erase_if(tuples, known_nonexistent);
  return tuples;
}

template <class Fn>
auto parallel_map(const std::vector<SrgParams>& in, unsigned workers, Fn fn) {
  using Out = decltype(fn(in.front()));
  std::vector<Out> out(in.size());
  workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(in.size())));
  if (workers <= 1) {
    for (std::size_t i = 0; i < in.size(); ++i) out[i] = fn(in[i]);
    return out;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  const std::size_t chunk = (in.size() + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(in.size(), lo + chunk);
        for (std::size_t i = lo; i < hi; ++i) out[i] = fn(in[i]);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

bool keep(const ScanRecord& r, const ScanConfig& cfg) {
  switch (cfg.filter) {
    case ScanFilter::None: break;
    case ScanFilter::Gap:
      if (r.gap <= 0) return false;
      break;
    case ScanFilter::Thm:
      if (!r.thm21 && !r.thm22) return false;
      break;
    case ScanFilter::Thm51:
      if (!r.thm51) return false;
      break;
  }
  if (cfg.type == TypeFilter::TypeI && !is_type_one(r.type)) return false;
  if (cfg.type == TypeFilter::TypeII && !is_type_two(r.type)) return false;
  if (cfg.pairs && 2 * r.params.k >= r.params.v) return false;
  return true;
}

bool thm22_holds(const SrgParams& p) {
  return is_type_two(classify(p)) && p.co_connected() && thm22_applies(p).applies;
}

ScanStats measure(const std::vector<ScanRecord>& records) {
  ScanStats st;
  st.tuples = records.size();
  for (const ScanRecord& r : records) {
    const SrgParams& p = r.params;
    if (is_type_one(r.type)) {
      ++st.type_one;
      if (r.thm21) ++st.type_one_thm21;
    }
    if (!is_type_two(r.type) || !p.primitive()) continue;
    ++st.type_two;
    if (r.thm22) ++st.type_two_thm22;
    // Each complementary pair once, via its member with 2k < v (or 2k = v-1).
    if (2 * p.k <= p.v - 1) {
      ++st.type_two_pairs;
      if (r.thm22 || thm22_holds(complement(p))) ++st.type_two_pairs_thm22;
    }
  }
  return st;
}

}  // namespace

ScanResult scan_compare(const ScanConfig& cfg) {
  std::vector<SrgParams> tuples = scan_tuples(cfg);
  std::vector<ScanRecord> all = parallel_map(tuples, cfg.parallelism, make_record);
  ScanResult out;
  out.stats = measure(all);
  std::copy_if(all.begin(), all.end(), std::back_inserter(out.records),
               [&](const ScanRecord& r) { return keep(r, cfg); });
  return out;
}

std::vector<ScanRecord> conjecture_scan(const ScanConfig& cfg, ConjectureForm form) {
  std::vector<SrgParams> tuples = scan_tuples(cfg);
  auto check = [form](const SrgParams& p) -> std::optional<ScanRecord> {
    ScanRecord r = make_record(p);
    QuadExt minus_k_over_s = QuadExt(-p.k) / spectrum(p).s;
    bool lambda_exceeds = QuadExt(p.lambda + 1) > minus_k_over_s;
    bool premise = form == ConjectureForm::Literal ? QuadExt(r.cab) < minus_k_over_s
                                                   : r.cab == p.lambda + 2;
    if (premise && lambda_exceeds) return r;
    return std::nullopt;
  };
  std::vector<std::optional<ScanRecord>> hits = parallel_map(tuples, cfg.parallelism, check);
  std::vector<ScanRecord> out;
  for (auto& h : hits)
    if (h) out.push_back(std::move(*h));
  return out;
}

// Output -------------------------------------------------------------------

nlohmann::ordered_json to_json(const ScanRecord& r) {
  nlohmann::ordered_json j{{"v", r.params.v},       {"k", r.params.k},
                   {"lambda", r.params.lambda}, {"mu", r.params.mu},
                   {"type", to_string(r.type)}, {"cab", r.cab},
                   {"delsarte", r.delsarte},  {"gap", r.gap},
                   {"thm21", r.thm21},        {"thm22", r.thm22},
                   {"thm51", r.thm51}};
  if (r.annotation) {
    j["exists"] = r.annotation->exists;
    j["sharp"] = r.annotation->sharp;
  }
  return j;
}

namespace {

SrgType parse_type(const std::string& s) {
  if (s == "I") return SrgType::TypeIOnly;
  if (s == "II") return SrgType::TypeIIOnly;
  if (s == "I+II") return SrgType::Both;
  throw DomainError("unknown type tag '" + s + "'");
}

std::string yes_no(bool b) { return b ? "Y" : "-"; }

void emit_table(std::ostream& out, const std::vector<ScanRecord>& records, bool color) {
  const char* bold = color ? "\x1b[1m" : "";
  const char* plain = color ? "\x1b[0m" : "";
  std::ostringstream head;
  head << std::left << std::setw(20) << "Parameters" << std::setw(6) << "Type" << std::right
       << std::setw(5) << "CAB" << std::setw(10) << "Delsarte" << std::setw(5) << "Gap"
       << std::setw(7) << "Thm21" << std::setw(7) << "Thm22" << std::setw(7) << "Thm51"
       << std::setw(8) << "Exists" << std::setw(7) << "Sharp";
  out << bold << head.str() << plain << '\n';
  out << std::string(head.str().size(), '-') << '\n';
  for (const ScanRecord& r : records) {
    std::ostringstream row;
    row << std::left << std::setw(20) << to_string(r.params) << std::setw(6) << to_string(r.type)
        << std::right << std::setw(5) << r.cab << std::setw(10) << r.delsarte << std::setw(5)
        << r.gap << std::setw(7) << yes_no(r.thm21) << std::setw(7) << yes_no(r.thm22)
        << std::setw(7) << yes_no(r.thm51) << std::setw(8)
        << (r.annotation ? r.annotation->exists : "") << std::setw(7)
        << (r.annotation ? r.annotation->sharp : "");
    out << row.str() << '\n';
  }
}

}  // namespace

void emit(std::ostream& out, const std::vector<ScanRecord>& records, OutputFormat format,
          bool color) {
  switch (format) {
    case OutputFormat::Table:
      emit_table(out, records, color);
      break;
    case OutputFormat::Csv:
      out << kCsvHeader << '\n';
      for (const ScanRecord& r : records) {
        out << r.params.v << ',' << r.params.k << ',' << r.params.lambda << ',' << r.params.mu
            << ',' << to_string(r.type) << ',' << r.cab << ',' << r.delsarte << ',' << r.gap
            << ',' << int(r.thm21) << ',' << int(r.thm22) << ',' << int(r.thm51) << '\n';
      }
      break;
    case OutputFormat::Json: {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const ScanRecord& r : records) arr.push_back(to_json(r));
      out << arr.dump(2) << '\n';
      break;
    }
  }
  if (!out) throw std::runtime_error("write failed");
}

std::vector<ScanRecord> parse_json_records(std::string_view text) {
  nlohmann::json arr = nlohmann::json::parse(text);
  std::vector<ScanRecord> out;
  for (const auto& j : arr) {
    ScanRecord r;
    r.params = j.get<SrgParams>();
    r.type = parse_type(j.at("type").get<std::string>());
    j.at("cab").get_to(r.cab);
    j.at("delsarte").get_to(r.delsarte);
    j.at("gap").get_to(r.gap);
    j.at("thm21").get_to(r.thm21);
    j.at("thm22").get_to(r.thm22);
    j.at("thm51").get_to(r.thm51);
    if (j.contains("exists"))
      r.annotation = Annotation{j.at("exists").get<std::string>(), j.at("sharp").get<std::string>()};
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace srgb
