#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <numeric>
#include <random>

#include "classzeta/numtheory.hpp"

using namespace classzeta;

namespace {

// Definition checker kept independent of the library implementation.
bool squarefree_naive(std::int64_t n) {
    for (std::int64_t k = 2; k * k <= n; ++k)
        if (n % (k * k) == 0) return false;
    return true;
}

bool fundamental_naive(std::int64_t d) {
    if (d >= 0) return false;
    const std::int64_t m4 = ((d % 4) + 4) % 4;
    if (m4 == 1) return squarefree_naive(-d);
    if (d % 4 == 0) {
        const std::int64_t m = d / 4;
        const std::int64_t mm4 = ((m % 4) + 4) % 4;
        return (mm4 == 2 || mm4 == 3) && squarefree_naive(-m);
    }
    return false;
}

// Legendre symbol by an explicit quadratic-residue table, odd prime p.
int legendre_table(std::int64_t d, std::int64_t p) {
    const std::int64_t r = ((d % p) + p) % p;
    if (r == 0) return 0;
    for (std::int64_t x = 1; x < p; ++x)
        if (x * x % p == r) return 1;
    return -1;
}

// Kronecker symbol from the definition: multiply over the factorization of n.
int kronecker_naive(std::int64_t d, std::int64_t n) {
    int result = 1;
    for (std::int64_t p = 2; n > 1; p == 2 ? p = 3 : p += 2) {
        while (n % p == 0) {
            n /= p;
            if (p == 2) {
                if (d % 2 == 0) return 0;
                const std::int64_t r = ((d % 8) + 8) % 8;
                result *= (r == 1 || r == 7) ? 1 : -1;
            } else {
                const int l = legendre_table(d, p);
                if (l == 0) return 0;
                result *= l;
            }
        }
    }
    return result;
}

}  // namespace

TEST_CASE("moebius on the defining case split") {
    CHECK(moebius(1) == 1);
    CHECK(moebius(6) == 1);    // two distinct primes
    CHECK(moebius(12) == 0);   // divisible by 4
    CHECK(moebius(2) == -1);
    CHECK(moebius(30) == -1);  // three distinct primes
    CHECK(moebius(49) == 0);
    CHECK_THROWS_AS(moebius(0), std::invalid_argument);
    CHECK_THROWS_AS(moebius(-5), std::invalid_argument);
}

TEST_CASE("moebius divisor-sum identity up to 10^4") {
    const std::vector<int> mu = moebius_table(10000);
    for (std::int64_t n = 1; n <= 10000; ++n) {
        std::int64_t sum = 0;
        for (std::int64_t d = 1; d * d <= n; ++d) {
            if (n % d != 0) continue;
            sum += mu[static_cast<std::size_t>(d)];
            if (d != n / d) sum += mu[static_cast<std::size_t>(n / d)];
        }
        REQUIRE(sum == (n == 1 ? 1 : 0));
    }
}

TEST_CASE("moebius table agrees with the single-value routine") {
    const std::vector<int> mu = moebius_table(3000);
    for (std::int64_t n = 1; n <= 3000; ++n) REQUIRE(mu[static_cast<std::size_t>(n)] == moebius(n));
}

TEST_CASE("moebius is multiplicative on coprime pairs") {
    std::mt19937_64 rng(20240811);
    std::uniform_int_distribution<std::int64_t> dist(1, 1000);
    int checked = 0;
    while (checked < 500) {
        const std::int64_t m = dist(rng), n = dist(rng);
        if (std::gcd(m, n) != 1) continue;
        REQUIRE(moebius(m * n) == moebius(m) * moebius(n));
        ++checked;
    }
}

TEST_CASE("is_fundamental pinned values") {
    CHECK(is_fundamental(-3));
    CHECK(is_fundamental(-163));
    CHECK(is_fundamental(-4));
    CHECK(is_fundamental(-8));
    CHECK_FALSE(is_fundamental(-12));  // 4*(-3) with -3 = 1 mod 4
    CHECK_FALSE(is_fundamental(-9));
    CHECK_FALSE(is_fundamental(0));
    CHECK_FALSE(is_fundamental(5));    // positive: total predicate, false here
    CHECK_FALSE(is_fundamental(-1));
    CHECK_FALSE(is_fundamental(-2));
}

TEST_CASE("is_fundamental agrees with the definition checker on [-10^5, 0)") {
    for (std::int64_t d = -100000; d < 0; ++d) REQUIRE(is_fundamental(d) == fundamental_naive(d));
}

TEST_CASE("fundamental_table agrees with the scalar path") {
    const std::vector<bool> table = fundamental_table(20000);
    for (std::int64_t n = 0; n <= 20000; ++n) REQUIRE(table[static_cast<std::size_t>(n)] == is_fundamental(-n));
}

TEST_CASE("squarefree helpers agree") {
    const std::vector<bool> sf = squarefree_table(5000);
    for (std::int64_t n = 1; n <= 5000; ++n) {
        REQUIRE(sf[static_cast<std::size_t>(n)] == squarefree_naive(n));
        REQUIRE(is_squarefree(n) == squarefree_naive(n));
    }
}

TEST_CASE("kronecker pinned values") {
    CHECK(kronecker(-4, 5) == 1);
    CHECK(kronecker(-3, 3) == 0);
    CHECK(kronecker(-3, 2) == -1);  // -3 = 5 mod 8
    CHECK(kronecker(5, 1) == 1);
    CHECK(kronecker(0, 2) == 0);
    CHECK_THROWS_AS(kronecker(-3, 0), std::invalid_argument);
}

TEST_CASE("kronecker agrees with the factored quadratic-character table") {
    for (std::int64_t d = -60; d <= 60; ++d)
        for (std::int64_t n = 1; n <= 200; ++n) REQUIRE(kronecker(d, n) == kronecker_naive(d, n));
}

TEST_CASE("kronecker is completely multiplicative in n") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> dd(-300, 300), dn(1, 500);
    for (int i = 0; i < 500; ++i) {
        const std::int64_t d = dd(rng), m = dn(rng), n = dn(rng);
        REQUIRE(kronecker(d, m * n) == kronecker(d, m) * kronecker(d, n));
    }
}

TEST_CASE("kronecker is |d|-periodic in n for fundamental d") {
    for (std::int64_t d = -3; d >= -200; --d) {
        if (!is_fundamental(d)) continue;
        const std::int64_t period = -d;
        for (std::int64_t n = 1; n + period <= 4 * period; ++n)
            REQUIRE(kronecker(d, n) == kronecker(d, n + period));
    }
}

TEST_CASE("Discriminant validates on construction") {
    const Discriminant d = Discriminant::checked(-163);
    CHECK(d.value() == -163);
    CHECK(d.magnitude() == 163);
    CHECK_THROWS_AS(Discriminant::checked(-12), std::invalid_argument);
    CHECK_THROWS_AS(Discriminant::checked(0), std::invalid_argument);
    CHECK_THROWS_AS(Discriminant::checked(5), std::invalid_argument);
}
