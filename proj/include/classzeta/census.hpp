#pragma once

// Empirical ground truth for class numbers of imaginary quadratic fields:
// per-discriminant counts via primitive reduced binary quadratic forms, an
// independent Dirichlet-formula oracle, and a batch census over all
// fundamental discriminants up to a bound, comparable row-by-row against
// the embedded reference table.

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "classzeta/numtheory.hpp"
#include "classzeta/watkins.hpp"

namespace classzeta {

// Primitive positive-definite reduced form: |b| <= a <= c, b >= 0 when
// |b| = a or a = c, gcd(a, b, c) = 1, b^2 - 4ac < 0.
struct ReducedForm {
    std::int64_t a;
    std::int64_t b;
    std::int64_t c;

    std::int64_t discriminant() const { return b * b - 4 * a * c; }
    bool operator==(const ReducedForm&) const = default;
    auto operator<=>(const ReducedForm&) const = default;
};

bool is_reduced(const ReducedForm& f);

// All primitive reduced forms of discriminant D, sorted.
std::vector<ReducedForm> reduced_forms(Discriminant D);

// h(D) = number of primitive reduced forms of discriminant D.
std::int64_t class_number_forms(Discriminant D);

// h(D) by the analytic class number formula,
//   h = (w / 2|D|) |sum_{k=1}^{|D|-1} (D/k) k|,
// w = 6 for D = -3, 4 for D = -4, 2 otherwise. Exact integer division is
// checked; inexactness indicates a Kronecker-symbol bug and throws
// internal_error.
std::int64_t class_number_dirichlet(Discriminant D);

struct CensusRow {
    std::int64_t count = 0;
    std::int64_t max_abs_disc = 0;
    bool operator==(const CensusRow&) const = default;
};

// Per-class-number histogram of all fundamental discriminants with
// |D| <= bound. complete_through holds the h values whose reference
// largest-|D| witness is <= bound (those rows are provably complete).
struct CensusTable {
    std::int64_t bound = 0;
    std::map<std::int64_t, CensusRow> rows;
    std::set<std::int64_t> complete_through;
    bool operator==(const CensusTable&) const = default;
};

// Largest bound accepted by census(); keeps 4ac - b^2 far inside int64 and
// the per-worker histograms small. The full reference check needs 2383747.
inline constexpr std::int64_t kMaxCensusBound = 10'000'000;

// Single sweep over reduced-form triples (a, b, c) with 0 < 4ac - b^2 <= X,
// bucketed by |D|; non-fundamental buckets are discarded at the end. The
// result is deterministic and independent of the worker count.
CensusTable census(std::int64_t bound, int workers = 1);

enum class Verdict { match, mismatch, inconclusive };

const char* to_string(Verdict v);

struct VerifyRow {
    std::int64_t h;
    std::int64_t expected_count;
    std::int64_t actual_count;
    std::int64_t expected_largest;
    std::int64_t actual_largest;
    Verdict verdict;
};

// Compares the census against the reference, one row per reference h.
// Rows not certified complete are inconclusive, never failures.
std::vector<VerifyRow> verify_watkins(const CensusTable& table, const std::vector<WatkinsRow>& reference);

}  // namespace classzeta
