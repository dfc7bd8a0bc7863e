#pragma once

// Report emission and re-parsing. CSV schemas:
//   census     h,count,max_abs_disc,complete
//   comparison h,predicted,empirical,delta,dold_pred,dold_emp
//   primes     p,count,bound,verdict
// Headers are always emitted, lines end in a bare line feed, and every
// emitter round-trips through its parser.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "classzeta/census.hpp"
#include "classzeta/model.hpp"
#include "classzeta/series.hpp"

namespace classzeta {

// Provenance attached to JSON reports.
struct ReportMeta {
    std::optional<std::int64_t> bound;  // absent when comparing against the reference table
    std::string source;                 // "census" or "watkins"
    int truncation_order = 0;
    std::string version;
    bool operator==(const ReportMeta&) const = default;
};

std::string census_to_csv(const CensusTable& table);
// The bound is not part of the CSV schema, so the caller restates it.
CensusTable census_from_csv(const std::string& text, std::int64_t bound);

std::string census_to_json(const CensusTable& table);
CensusTable census_from_json(const std::string& text);

// Comparison rows + blank line + prime rows (summary is JSON-only).
std::string report_to_csv(const ComparisonReport& report);
// Parses rows and primes; the summary is reconstructed from the model.
ComparisonReport report_from_csv(const std::string& text);

std::string report_to_json(const ComparisonReport& report, const ReportMeta& meta);
std::pair<ComparisonReport, ReportMeta> report_from_json(const std::string& text);

// Exact coefficients as m,numerator,denominator.
std::string series_to_csv(const TruncatedSeries& series);
TruncatedSeries series_from_csv(const std::string& text);

// Integer sequences as m,value (m = 1-based index).
std::string sequence_to_csv(std::span<const std::int64_t> values);
std::vector<std::int64_t> sequence_from_csv(const std::string& text);

std::string verify_rows_to_text(const std::vector<VerifyRow>& rows);

}  // namespace classzeta
