#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "srgb/cab_bounds.hpp"
#include "srgb/srg_params.hpp"

namespace srgb {

/// Existence metadata copied from the published table ("!", "+", "?" and
/// "Y", "N", "?"); never computed.
struct Annotation {
  std::string exists;
  std::string sharp;
  friend bool operator==(const Annotation&, const Annotation&) = default;
};

/// The twenty published rows with their CAB values and annotations.
struct PublishedRow {
  SrgParams params;
  SrgType type;
  std::int64_t cab;
  Annotation annotation;
};
const std::vector<PublishedRow>& published_table();
std::optional<Annotation> published_annotation(const SrgParams& p);

/// Tuples passing every feasibility level that are known not to be realised
/// by any graph (literature results), together with their complements.
bool known_nonexistent(const SrgParams& p);

enum class ScanFilter { None, Gap, Thm, Thm51 };
enum class TypeFilter { Any, TypeI, TypeII };
enum class OutputFormat { Table, Csv, Json };

ScanFilter parse_scan_filter(std::string_view s);
OutputFormat parse_output_format(std::string_view s);

struct ScanConfig {
  std::int64_t v_max = 150;
  FeasibilityLevel level = FeasibilityLevel::AbsoluteBound;
  unsigned parallelism = 1;
  ScanFilter filter = ScanFilter::None;
  TypeFilter type = TypeFilter::Any;
  /// Keep only the member of each complementary pair with k < v/2.
  bool pairs = false;
  bool include_nonexistent = false;

  void validate() const;
};

struct ScanRecord {
  SrgParams params;
  SrgType type = SrgType::TypeIIOnly;
  std::int64_t cab = 0;
  std::int64_t delsarte = 0;
  std::int64_t gap = 0;
  bool thm21 = false;
  bool thm22 = false;
  bool thm51 = false;
  std::optional<Annotation> annotation;

  friend bool operator==(const ScanRecord&, const ScanRecord&) = default;
};

/// Measured applicability shares over the unfiltered scan.
struct ScanStats {
  std::size_t tuples = 0;
  std::size_t type_one = 0;
  std::size_t type_one_thm21 = 0;
  /// Connected, co-connected tuples with integral eigenvalues.
  std::size_t type_two = 0;
  std::size_t type_two_thm22 = 0;
  std::size_t type_two_pairs = 0;
  std::size_t type_two_pairs_thm22 = 0;

  double thm21_fraction() const;
  double thm22_fraction() const;
  double thm22_pair_fraction() const;
};

struct ScanResult {
  std::vector<ScanRecord> records;
  ScanStats stats;
};

/// Feasible tuples with 5 <= v <= v_max in lexicographic (v, k, lambda, mu)
/// order. lambda is solved from the counting identity for each mu.
std::vector<SrgParams> enumerate_feasible(const ScanConfig& cfg);

ScanRecord make_record(const SrgParams& p);
ScanResult scan_compare(const ScanConfig& cfg);

enum class ConjectureForm {
  /// cab < -k/s but lambda + 1 > -k/s.
  Literal,
  /// cab = lambda + 2 but lambda + 1 > -k/s.
  Converse,
};
ConjectureForm parse_conjecture_form(std::string_view s);

/// Tuples violating the chosen form; the filters in cfg are ignored.
std::vector<ScanRecord> conjecture_scan(const ScanConfig& cfg,
                                        ConjectureForm form = ConjectureForm::Literal);

inline constexpr std::string_view kCsvHeader =
    "v,k,lambda,mu,type,cab,delsarte,gap,thm21,thm22,thm51";

void emit(std::ostream& out, const std::vector<ScanRecord>& records, OutputFormat format,
          bool color = false);
std::vector<ScanRecord> parse_json_records(std::string_view text);

nlohmann::ordered_json to_json(const ScanRecord& r);

}  // namespace srgb
