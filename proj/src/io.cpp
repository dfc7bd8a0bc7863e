#include "classzeta/io.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "classzeta/errors.hpp"
#include "classzeta/version.hpp"

namespace classzeta {

namespace {

using nlohmann::json;

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string line;
    std::istringstream in(text);
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.push_back("");
    return fields;
}

std::int64_t to_int(const std::string& s, const char* what) {
    try {
        std::size_t pos = 0;
        const std::int64_t v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("bad ") + what + " field: '" + s + "'");
    }
}

void expect_header(const std::vector<std::string>& lines, const char* header, const char* what) {
    if (lines.empty() || lines.front() != header)
        throw std::invalid_argument(std::string(what) + ": expected header '" + header + "'");
}

}  // namespace

std::string census_to_csv(const CensusTable& table) {
    std::ostringstream out;
    out << "h,count,max_abs_disc,complete\n";
    for (const auto& [h, row] : table.rows)
        out << h << ',' << row.count << ',' << row.max_abs_disc << ','
            << (table.complete_through.contains(h) ? 1 : 0) << '\n';
    return out.str();
}

CensusTable census_from_csv(const std::string& text, std::int64_t bound) {
    const std::vector<std::string> lines = split_lines(text);
    expect_header(lines, "h,count,max_abs_disc,complete", "census csv");
    CensusTable table;
    table.bound = bound;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        const std::vector<std::string> f = split_fields(lines[i]);
        if (f.size() != 4) throw std::invalid_argument("census csv: expected 4 fields, got line '" + lines[i] + "'");
        const std::int64_t h = to_int(f[0], "h");
        table.rows[h] = {to_int(f[1], "count"), to_int(f[2], "max_abs_disc")};
        if (to_int(f[3], "complete") != 0) table.complete_through.insert(h);
    }
    return table;
}

namespace {

json census_rows_json(const CensusTable& table) {
    json rows = json::array();
    for (const auto& [h, row] : table.rows)
        rows.push_back({{"h", h},
                        {"count", row.count},
                        {"max_abs_disc", row.max_abs_disc},
                        {"complete", table.complete_through.contains(h)}});
    return rows;
}

}  // namespace

std::string census_to_json(const CensusTable& table) {
    json j{{"meta", {{"bound", table.bound}, {"version", kVersion}}}, {"rows", census_rows_json(table)}};
    return j.dump(2) + "\n";
}

CensusTable census_from_json(const std::string& text) {
    const json j = json::parse(text);
    CensusTable table;
    table.bound = j.at("meta").at("bound").get<std::int64_t>();
    for (const json& row : j.at("rows")) {
        const auto h = row.at("h").get<std::int64_t>();
        table.rows[h] = {row.at("count").get<std::int64_t>(), row.at("max_abs_disc").get<std::int64_t>()};
        if (row.at("complete").get<bool>()) table.complete_through.insert(h);
    }
    return table;
}

namespace {

constexpr const char* kComparisonHeader = "h,predicted,empirical,delta,dold_pred,dold_emp";
constexpr const char* kPrimesHeader = "p,count,bound,verdict";

template <typename T>
std::string opt_str(const std::optional<T>& v) {
    return v ? std::to_string(*v) : std::string();
}

}  // namespace

std::string report_to_csv(const ComparisonReport& report) {
    std::ostringstream out;
    out << kComparisonHeader << '\n';
    for (const ComparisonRow& r : report.rows)
        out << r.h << ',' << r.predicted << ',' << opt_str(r.empirical) << ',' << opt_str(r.delta) << ','
            << r.dold_residue_predicted << ',' << opt_str(r.dold_residue_empirical) << '\n';
    out << '\n' << kPrimesHeader << '\n';
    for (const PrimeBoundRow& p : report.primes)
        out << p.p << ',' << p.count << ',' << p.bound << ',' << (p.holds ? "holds" : "violated") << '\n';
    return out.str();
}

ComparisonReport report_from_csv(const std::string& text) {
    const std::vector<std::string> lines = split_lines(text);
    expect_header(lines, kComparisonHeader, "report csv");
    ComparisonReport report;
    std::size_t i = 1;
    for (; i < lines.size() && !lines[i].empty(); ++i) {
        const std::vector<std::string> f = split_fields(lines[i]);
        if (f.size() != 6) throw std::invalid_argument("report csv: bad comparison line '" + lines[i] + "'");
        ComparisonRow row{};
        row.h = to_int(f[0], "h");
        row.predicted = to_int(f[1], "predicted");
        row.dold_residue_predicted = to_int(f[4], "dold_pred");
        if (!f[2].empty()) {
            row.empirical = to_int(f[2], "empirical");
            row.delta = to_int(f[3], "delta");
            row.dold_residue_empirical = to_int(f[5], "dold_emp");
            row.at_least_h = *row.empirical >= row.h;
            row.ratio_floor = *row.empirical / row.h;
        }
        report.rows.push_back(row);
    }
    if (i >= lines.size() || lines[i] != "")
        throw std::invalid_argument("report csv: missing blank separator before prime table");
    ++i;
    if (i >= lines.size() || lines[i] != kPrimesHeader)
        throw std::invalid_argument("report csv: missing prime table header");
    for (++i; i < lines.size() && !lines[i].empty(); ++i) {
        const std::vector<std::string> f = split_fields(lines[i]);
        if (f.size() != 4) throw std::invalid_argument("report csv: bad prime line '" + lines[i] + "'");
        report.primes.push_back(
            {to_int(f[0], "p"), to_int(f[1], "count"), to_int(f[2], "bound"), f[3] == "holds"});
    }
    // the CSV form does not carry the summary; rebuild the model-only part
    const PoleZeroReport pz = pole_zero_report();
    report.summary.claimed_pole_order = pz.claimed_pole_order;
    report.summary.computed_pole_order = pz.computed_pole_order;
    report.summary.pole_order_matches = pz.pole_order_matches;
    report.summary.zeros_all_roots_of_unity = pz.zeros_all_roots_of_unity;
    return report;
}

namespace {

json row_json(const ComparisonRow& r) {
    json j{{"h", r.h},
           {"predicted", r.predicted},
           {"dold_pred", r.dold_residue_predicted},
           {"empirical", nullptr},
           {"delta", nullptr},
           {"dold_emp", nullptr},
           {"at_least_h", nullptr},
           {"ratio_floor", nullptr}};
    if (r.empirical) {
        j["empirical"] = *r.empirical;
        j["delta"] = *r.delta;
        j["dold_emp"] = *r.dold_residue_empirical;
        j["at_least_h"] = *r.at_least_h;
        j["ratio_floor"] = *r.ratio_floor;
    }
    return j;
}

ComparisonRow row_from_json(const json& j) {
    ComparisonRow r{};
    r.h = j.at("h").get<std::int64_t>();
    r.predicted = j.at("predicted").get<std::int64_t>();
    r.dold_residue_predicted = j.at("dold_pred").get<std::int64_t>();
    if (!j.at("empirical").is_null()) {
        r.empirical = j.at("empirical").get<std::int64_t>();
        r.delta = j.at("delta").get<std::int64_t>();
        r.dold_residue_empirical = j.at("dold_emp").get<std::int64_t>();
        r.at_least_h = j.at("at_least_h").get<bool>();
        r.ratio_floor = j.at("ratio_floor").get<std::int64_t>();
    }
    return r;
}

}  // namespace

std::string report_to_json(const ComparisonReport& report, const ReportMeta& meta) {
    json rows = json::array();
    for (const ComparisonRow& r : report.rows) rows.push_back(row_json(r));
    json primes = json::array();
    for (const PrimeBoundRow& p : report.primes)
        primes.push_back({{"p", p.p}, {"count", p.count}, {"bound", p.bound}, {"verdict", p.holds ? "holds" : "violated"}});
    json j{{"meta",
            {{"bound", meta.bound ? json(*meta.bound) : json(nullptr)},
             {"source", meta.source},
             {"truncation_order", meta.truncation_order},
             {"version", meta.version}}},
           {"rows", rows},
           {"primes", primes},
           {"summary",
            {{"pole_order_claimed", report.summary.claimed_pole_order},
             {"pole_order_computed", report.summary.computed_pole_order},
             {"pole_order_matches", report.summary.pole_order_matches},
             {"zeros_all_roots_of_unity", report.summary.zeros_all_roots_of_unity},
             {"h1_delta", report.summary.h1_delta ? json(*report.summary.h1_delta) : json(nullptr)},
             {"h1_consistent_with_exclusion", report.summary.h1_consistent_with_exclusion},
             {"h1_note", report.summary.h1_note}}}};
    return j.dump(2) + "\n";
}

std::pair<ComparisonReport, ReportMeta> report_from_json(const std::string& text) {
    const json j = json::parse(text);
    ComparisonReport report;
    for (const json& r : j.at("rows")) report.rows.push_back(row_from_json(r));
    for (const json& p : j.at("primes"))
        report.primes.push_back({p.at("p").get<std::int64_t>(), p.at("count").get<std::int64_t>(),
                                 p.at("bound").get<std::int64_t>(), p.at("verdict").get<std::string>() == "holds"});
    const json& s = j.at("summary");
    report.summary.claimed_pole_order = s.at("pole_order_claimed").get<int>();
    report.summary.computed_pole_order = s.at("pole_order_computed").get<int>();
    report.summary.pole_order_matches = s.at("pole_order_matches").get<bool>();
    report.summary.zeros_all_roots_of_unity = s.at("zeros_all_roots_of_unity").get<bool>();
    if (!s.at("h1_delta").is_null()) report.summary.h1_delta = s.at("h1_delta").get<std::int64_t>();
    report.summary.h1_consistent_with_exclusion = s.at("h1_consistent_with_exclusion").get<bool>();
    report.summary.h1_note = s.at("h1_note").get<std::string>();

    ReportMeta meta;
    const json& m = j.at("meta");
    if (!m.at("bound").is_null()) meta.bound = m.at("bound").get<std::int64_t>();
    meta.source = m.at("source").get<std::string>();
    meta.truncation_order = m.at("truncation_order").get<int>();
    meta.version = m.at("version").get<std::string>();
    return {report, meta};
}

std::string series_to_csv(const TruncatedSeries& series) {
    std::ostringstream out;
    out << "m,numerator,denominator\n";
    for (int m = 0; m <= series.order(); ++m)
        out << m << ',' << series[m].get_num().get_str() << ',' << series[m].get_den().get_str() << '\n';
    return out.str();
}

TruncatedSeries series_from_csv(const std::string& text) {
    const std::vector<std::string> lines = split_lines(text);
    expect_header(lines, "m,numerator,denominator", "series csv");
    std::vector<mpq_class> coeffs;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        const std::vector<std::string> f = split_fields(lines[i]);
        if (f.size() != 3) throw std::invalid_argument("series csv: bad line '" + lines[i] + "'");
        if (to_int(f[0], "m") != static_cast<std::int64_t>(coeffs.size()))
            throw std::invalid_argument("series csv: non-contiguous index at line '" + lines[i] + "'");
        mpq_class q{mpz_class(f[1]), mpz_class(f[2])};
        q.canonicalize();
        coeffs.push_back(q);
    }
    if (coeffs.size() < 2) throw std::invalid_argument("series csv: need at least orders 0 and 1");
    const int order = static_cast<int>(coeffs.size()) - 1;
    return TruncatedSeries(order, std::move(coeffs));
}

std::string sequence_to_csv(std::span<const std::int64_t> values) {
    std::ostringstream out;
    out << "m,value\n";
    for (std::size_t i = 0; i < values.size(); ++i) out << i + 1 << ',' << values[i] << '\n';
    return out.str();
}

std::vector<std::int64_t> sequence_from_csv(const std::string& text) {
    const std::vector<std::string> lines = split_lines(text);
    expect_header(lines, "m,value", "sequence csv");
    std::vector<std::int64_t> values;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        const std::vector<std::string> f = split_fields(lines[i]);
        if (f.size() != 2) throw std::invalid_argument("sequence csv: bad line '" + lines[i] + "'");
        if (to_int(f[0], "m") != static_cast<std::int64_t>(values.size()) + 1)
            throw std::invalid_argument("sequence csv: non-contiguous index at line '" + lines[i] + "'");
        values.push_back(to_int(f[1], "value"));
    }
    return values;
}

std::string verify_rows_to_text(const std::vector<VerifyRow>& rows) {
    std::ostringstream out;
    for (const VerifyRow& r : rows) {
        out << "h=" << r.h << " expected=" << r.expected_count;
        if (r.verdict == Verdict::inconclusive)
            out << " actual_so_far=" << r.actual_count;
        else
            out << " actual=" << r.actual_count << " largest=" << r.actual_largest << '/' << r.expected_largest;
        out << " verdict=" << to_string(r.verdict) << '\n';
    }
    return out.str();
}

}  // namespace classzeta
