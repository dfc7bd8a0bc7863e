#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <numeric>
#include <set>

#include "classzeta/census.hpp"
#include "classzeta/io.hpp"
#include "classzeta/numtheory.hpp"
#include "classzeta/watkins.hpp"

using namespace classzeta;

namespace {

// Brute-force class number: enumerate every (a, b, c) with 4ac - b^2 = |D|,
// |b| <= a <= c <= |D|, keep the reduced primitive ones. Quadratic in |D|,
// fine for small discriminants.
std::int64_t class_number_brute(std::int64_t d) {
    const std::int64_t n = -d;
    std::int64_t count = 0;
    for (std::int64_t a = 1; 3 * a * a <= n; ++a)
        for (std::int64_t b = -a; b <= a; ++b) {
            if ((b * b + n) % (4 * a) != 0) continue;
            const std::int64_t c = (b * b + n) / (4 * a);
            if (is_reduced({a, b, c})) ++count;
        }
    return count;
}

}  // namespace

TEST_CASE("is_reduced enforces every invariant") {
    CHECK(is_reduced({1, 1, 1}));    // D = -3
    CHECK(is_reduced({1, 0, 1}));    // D = -4
    CHECK(is_reduced({2, 1, 3}));    // D = -23
    CHECK(is_reduced({2, -1, 3}));   // interior form, negative b allowed
    CHECK_FALSE(is_reduced({2, -1, 2}));  // a = c needs b >= 0
    CHECK_FALSE(is_reduced({2, -2, 3}));  // |b| = a needs b >= 0
    CHECK_FALSE(is_reduced({3, 1, 2}));   // a > c
    CHECK_FALSE(is_reduced({2, 3, 4}));   // |b| > a
    CHECK_FALSE(is_reduced({2, 2, 2}));   // imprimitive
    CHECK_FALSE(is_reduced({1, 2, 1}));   // positive discriminant
}

TEST_CASE("reduced_forms pinned enumerations") {
    const auto forms3 = reduced_forms(Discriminant::checked(-3));
    REQUIRE(forms3.size() == 1);
    CHECK(forms3.front() == ReducedForm{1, 1, 1});

    const auto forms23 = reduced_forms(Discriminant::checked(-23));
    REQUIRE(forms23.size() == 3);
    CHECK(forms23 == std::vector<ReducedForm>{{1, 1, 6}, {2, -1, 3}, {2, 1, 3}});

    for (const ReducedForm& f : reduced_forms(Discriminant::checked(-427))) {
        CHECK(is_reduced(f));
        CHECK(f.discriminant() == -427);
    }
}

TEST_CASE("class_number_forms pinned values") {
    CHECK(class_number_forms(Discriminant::checked(-3)) == 1);
    CHECK(class_number_forms(Discriminant::checked(-163)) == 1);
    CHECK(class_number_forms(Discriminant::checked(-427)) == 2);
    CHECK(class_number_forms(Discriminant::checked(-23)) == 3);
    CHECK(class_number_forms(Discriminant::checked(-4)) == 1);
}

TEST_CASE("class_number_forms agrees with the brute-force enumeration") {
    for (std::int64_t d = -3; d >= -600; --d) {
        if (!is_fundamental(d)) continue;
        REQUIRE(class_number_forms(Discriminant::checked(d)) == class_number_brute(d));
    }
}

TEST_CASE("class_number_dirichlet pinned values") {
    CHECK(class_number_dirichlet(Discriminant::checked(-3)) == 1);
    CHECK(class_number_dirichlet(Discriminant::checked(-4)) == 1);
    CHECK(class_number_dirichlet(Discriminant::checked(-47)) == 5);
}

TEST_CASE("oracle equivalence: forms = Dirichlet for all fundamental |D| <= 5000") {
    std::int64_t scanned = 0;
    for (std::int64_t d = -3; d >= -5000; --d) {
        if (!is_fundamental(d)) continue;
        const Discriminant D = Discriminant::checked(d);
        REQUIRE(class_number_forms(D) == class_number_dirichlet(D));
        ++scanned;
    }
    CHECK(scanned == 1524);
}

TEST_CASE("census rejects bad input") {
    CHECK_THROWS_AS(census(2), std::invalid_argument);
    CHECK_THROWS_AS(census(1000, 0), std::invalid_argument);
    CHECK_THROWS_AS(census(kMaxCensusBound + 1), std::invalid_argument);
}

TEST_CASE("census pinned tables") {
    const CensusTable t3 = census(3);
    REQUIRE(t3.rows.size() == 1);
    CHECK(t3.rows.at(1) == CensusRow{1, 3});
    CHECK(t3.complete_through.empty());  // witness 163 > 3

    const CensusTable t200 = census(200);
    CHECK(t200.rows.at(1) == CensusRow{9, 163});
    CHECK(t200.complete_through == std::set<std::int64_t>{1});

    const CensusTable t1000 = census(1000);
    CHECK(t1000.rows.at(2) == CensusRow{18, 427});
    CHECK(t1000.complete_through.contains(2));
    CHECK(t1000.complete_through.contains(3));  // witness 907
    CHECK_FALSE(t1000.complete_through.contains(4));
}

TEST_CASE("census buckets agree with per-discriminant class numbers up to 10^4") {
    const CensusTable t = census(10000, 3);
    std::map<std::int64_t, std::int64_t> counts;
    std::map<std::int64_t, std::int64_t> largest;
    std::int64_t total = 0;
    for (std::int64_t d = -3; d >= -10000; --d) {
        if (!is_fundamental(d)) continue;
        const std::int64_t h = class_number_forms(Discriminant::checked(d));
        ++counts[h];
        largest[h] = -d;  // descending d, ascending |d|: last write is max
        ++total;
    }
    REQUIRE(t.rows.size() == counts.size());
    for (const auto& [h, row] : t.rows) {
        REQUIRE(row.count == counts.at(h));
        REQUIRE(row.max_abs_disc == largest.at(h));
    }
    // total count matches an independent is_fundamental scan
    std::int64_t census_total = 0;
    for (const auto& [h, row] : t.rows) census_total += row.count;
    CHECK(census_total == total);
}

TEST_CASE("census is deterministic across worker counts") {
    const std::string reference = census_to_csv(census(10000, 1));
    for (int workers : {2, 3, 8, 19}) CHECK(census_to_csv(census(10000, workers)) == reference);
}

TEST_CASE("census counts grow monotonically with the bound") {
    const CensusTable small = census(2000);
    const CensusTable big = census(6000);
    for (const auto& [h, row] : small.rows) {
        REQUIRE(big.rows.contains(h));
        REQUIRE(row.count <= big.rows.at(h).count);
    }
}

TEST_CASE("verify_watkins verdicts") {
    const auto& reference = load_watkins();

    const auto tiny = verify_watkins(census(3), reference);
    REQUIRE(tiny.size() == 100);
    CHECK(tiny.front().verdict == Verdict::inconclusive);  // 163 > 3

    const auto desk = verify_watkins(census(200), reference);
    CHECK(desk.front().h == 1);
    CHECK(desk.front().expected_count == 9);
    CHECK(desk.front().actual_count == 9);
    CHECK(desk.front().verdict == Verdict::match);
    for (std::size_t i = 1; i < desk.size(); ++i) CHECK(desk[i].verdict == Verdict::inconclusive);

    // a deliberately corrupted table must be flagged, not absorbed
    CensusTable broken = census(200);
    broken.rows.at(1).count = 8;
    const auto flagged = verify_watkins(broken, reference);
    CHECK(flagged.front().verdict == Verdict::mismatch);
}

TEST_CASE("verify_watkins at 10^5 matches h = 23 (count 68)") {
    const auto rows = verify_watkins(census(100000, 2), load_watkins());
    const auto& r23 = rows[22];
    REQUIRE(r23.h == 23);
    CHECK(r23.expected_count == 68);
    CHECK(r23.actual_count == 68);
    CHECK(r23.verdict == Verdict::match);
    for (const VerifyRow& r : rows) CHECK(r.verdict != Verdict::mismatch);
}
