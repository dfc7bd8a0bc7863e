#pragma once

// Embedded reference table: for each class number h = 1..100, the number of
// negative fundamental discriminants with that class number and the largest
// such |D|. Source: M. Watkins, "Class numbers of imaginary quadratic
// fields", Math. Comp. 73 (2004), Table 4.

#include <cstdint>
#include <vector>

namespace classzeta {

struct WatkinsRow {
    std::int64_t h;
    std::int64_t count;
    std::int64_t largest;
    bool operator==(const WatkinsRow&) const = default;
};

// All 100 rows sorted by h, validated on first use (exactly one row per
// h = 1..100, count >= 1, largest >= 3, row (1, 9, 163) present). A corrupt
// embedded table throws internal_error naming the offending row.
const std::vector<WatkinsRow>& load_watkins();

}  // namespace classzeta
