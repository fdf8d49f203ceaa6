#ifndef DSHEAF_REPORT_HPP
#define DSHEAF_REPORT_HPP

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dsheaf/invariants.hpp"

namespace dsheaf {

enum class Format { md, csv, json };
Format parse_format(const std::string& name);  // domain_error on unknown names

// External reference data: known maximum point counts and upper bounds for
// curves over F_{q^2} of the given genus, keyed by (q, genus).
struct ReferenceRow {
  int q = 0;
  Int genus;
  Int max_known;
  Int upper_bound;
};

// CSV with header line `q,genus,max_known,upper_bound`. Parse problems
// report the line number; duplicate (q, genus) keys and rows with
// max_known > upper_bound are rejected. All failures are domain_errors.
std::vector<ReferenceRow> load_reference(const std::string& path);

struct TableRow {
  std::array<int, 2> r_degrees{};
  Int genus;
  Int supersingular;
  std::optional<Int> max_known;
  std::optional<Int> upper_bound;
};

// Comparison-table rows: one row per degree pair (d1 <= d2) with genus <=
// max_genus, ordered by (min degree, max degree). Genus and supersingular
// count depend only on the degrees; a pair is dropped only when the places
// of o's own degree cannot supply o plus the row. Reference columns are
// joined on (q, genus) when reference data is given.
std::vector<TableRow> comparison_table_rows(
    const Field& f, const Place& o, int max_genus,
    const std::optional<std::vector<ReferenceRow>>& reference,
    const Budget& budget = Budget{});

std::string render_table(const std::vector<TableRow>& rows,
                         bool with_reference, Format format);

std::string emit_comparison_table(
    const Field& f, const Place& o, int max_genus,
    const std::optional<std::vector<ReferenceRow>>& reference, Format format,
    const Budget& budget = Budget{});

// JSON (de)serialization with stable field names; from is the exact
// inverse of to, which the round-trip test relies on.
std::string report_to_json(const InvariantReport& report);
InvariantReport report_from_json(const std::string& text);
std::string reports_to_json(const std::vector<InvariantReport>& reports);
std::vector<InvariantReport> reports_from_json(const std::string& text);

std::string render_report(const InvariantReport& report, Format format);
std::string render_reports(const std::vector<InvariantReport>& reports,
                           Format format);

// Entry point shared by the dsheaf binary and the tests; args excludes the
// program name. Returns 0 on success, 1 on domain or resource errors, 2 on
// usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace dsheaf

#endif
