#pragma once

// The rational closed-form model of the class-number zeta function and the
// machinery that verifies it: the claimed rational function
// (1+s^2)(1-s^6) / (1-s)^8, its local characteristic-polynomial factors,
// the Lefschetz trace recurrences, the predicted per-class-number counts,
// and reconciliation reports against empirical census / reference data.

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "classzeta/census.hpp"
#include "classzeta/series.hpp"
#include "classzeta/watkins.hpp"

namespace classzeta {

// Degree-2 local zeta factor; the roots are roots of unity of degree 1 or 2
// over Q, so power sums of the roots obey an integer two-term recurrence
// t_m = e1 t_{m-1} - e2 t_{m-2} with t_0 = 2, t_1 = e1.
struct LocalFactor {
    const char* label;
    Polynomial char_poly;
    std::int64_t root_sum;      // e1
    std::int64_t root_product;  // e2

    std::int64_t trace(int m) const;
};

// The four characteristic polynomials 1-s^2, 1+s^2, 1-s+s^2, 1+s+s^2.
const std::array<LocalFactor, 4>& local_factors();

// The claimed closed form, numerator (1+s^2)(1-s^6) over (1-s)^8, both
// expanded to integer polynomials.
RationalFunction predicted_zeta();

// Pole order the closed form is claimed to have at s = 1.
inline constexpr int kClaimedPoleOrder = 8;

struct PoleZeroReport {
    int claimed_pole_order;
    int computed_pole_order;       // after cancelling common (1-s) factors
    bool pole_order_matches;
    std::vector<int> zero_root_orders;  // root-of-unity orders of the reduced numerator's zeros
    bool zeros_all_roots_of_unity;
};

// Exact pole/zero analysis of predicted_zeta(). Note the numerator vanishes
// at s = 1 (the 1-s^6 factor), so the computed pole order is 7, one below
// the claimed 8; the report carries both.
PoleZeroReport pole_zero_report();

struct ProductCheck {
    RationalFunction product;   // prod char_i / (1-s)^8, not cancelled
    bool matches_predicted;     // equal to predicted_zeta() as a function
    int shared_one_minus_s;     // multiplicity of 1-s common to num and den
};

// Multiplies the four local factors and checks the product against the
// claimed closed form by exact polynomial arithmetic.
ProductCheck char_poly_product();

// Fixed-point counts N_1..N_M from the Lefschetz formula at the formal
// prime 1: N_m = sum_i (1 - t_m^(i) + 1) over the four local factors, with
// traces from the integer recurrences. 12-periodic in m.
std::vector<std::int64_t> lefschetz_counts(int M);

// Predicted per-class-number counts K_1..K_hmax: expand the closed form,
// read off N_m, Moebius-invert. Negative entries (K_4 = -4, K_6 = -6) are
// reported as-is, never clamped.
std::vector<std::int64_t> predicted_counts(int hmax);

struct SupportReport {
    std::set<int> exponents;        // nonzero-coefficient exponents of 1/((1+s^2)(1-s^6))
    bool all_two_six_representable; // every exponent is 2*m1 + 6*m2 with m1, m2 >= 0
};

SupportReport reciprocal_support(int order);

// One row per class number in the reconciliation report. Empty optionals
// mean the empirical side is not certified complete (inconclusive).
struct ComparisonRow {
    std::int64_t h;
    std::int64_t predicted;
    std::optional<std::int64_t> empirical;
    std::optional<std::int64_t> delta;  // empirical - predicted
    std::int64_t dold_residue_predicted;
    std::optional<std::int64_t> dold_residue_empirical;
    std::optional<bool> at_least_h;          // empirical >= h
    std::optional<std::int64_t> ratio_floor; // floor(empirical / h), descriptive only
    bool operator==(const ComparisonRow&) const = default;
};

struct PrimeBoundRow {
    std::int64_t p;
    std::int64_t count;  // empirical count for h = p
    std::int64_t bound;  // 2p
    bool holds;          // count >= 2p
    bool operator==(const PrimeBoundRow&) const = default;
};

struct ComparisonSummary {
    int claimed_pole_order = kClaimedPoleOrder;
    int computed_pole_order = 0;
    bool pole_order_matches = false;
    bool zeros_all_roots_of_unity = false;
    std::optional<std::int64_t> h1_delta;  // empirical - predicted at h = 1
    bool h1_consistent_with_exclusion = false;
    std::string h1_note;
    bool operator==(const ComparisonSummary&) const = default;
};

struct ComparisonReport {
    std::vector<ComparisonRow> rows;
    std::vector<PrimeBoundRow> primes;
    ComparisonSummary summary;
    bool operator==(const ComparisonReport&) const = default;
};

// Joins predicted counts with empirical data. The census overload only
// trusts rows certified complete; the reference overload trusts every row.
// Rows and summary are filled here; the prime table comes from
// prime_bound_report (the CLI report assembles both).
ComparisonReport compare(const CensusTable& table, int hmax);
ComparisonReport compare(const std::vector<WatkinsRow>& reference, int hmax);

// For each prime p <= 100 present in the reference: does count >= 2p hold?
// Violations are findings, not errors.
std::vector<PrimeBoundRow> prime_bound_report(const std::vector<WatkinsRow>& reference);

}  // namespace classzeta
