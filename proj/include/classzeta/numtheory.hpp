#pragma once

// Elementary integer number theory shared by the census and series layers:
// Moebius function, squarefree tests, fundamental-discriminant validation,
// Kronecker symbol. Everything here is a pure function; the sieved tables
// are plain vectors the caller owns.

#include <cstdint>
#include <vector>

namespace classzeta {

// mu(l): 1 for l = 1, (-1)^k for a product of k distinct primes, 0 when a
// square > 1 divides l. Rejects l < 1.
int moebius(std::int64_t l);

// mu for all 0..n at once (mu[0] = 0), via a linear sieve.
std::vector<int> moebius_table(std::int64_t n);

// Squarefree test by trial division up to sqrt(n). n >= 1.
bool is_squarefree(std::int64_t n);

// table[k] == is_squarefree(k) for 1 <= k <= n; table[0] = false.
std::vector<bool> squarefree_table(std::int64_t n);

// True iff d is the discriminant of an imaginary quadratic field:
// d < 0 and either d = 1 (mod 4) squarefree, or d = 4m with m squarefree
// and m = 2 or 3 (mod 4). Total over all integers.
bool is_fundamental(std::int64_t d);

// table[k] == is_fundamental(-k) for 0 <= k <= n, computed with a shared
// squarefree sieve. Used by the batch census.
std::vector<bool> fundamental_table(std::int64_t n);

// Kronecker symbol (d/n) for n >= 1, completely multiplicative in n with
// the usual conventions at n = 1 and n = 2. Rejects n < 1.
int kronecker(std::int64_t d, std::int64_t n);

// A validated negative fundamental discriminant.
class Discriminant {
public:
    // Throws std::invalid_argument unless is_fundamental(value).
    static Discriminant checked(std::int64_t value);

    std::int64_t value() const { return value_; }
    std::int64_t magnitude() const { return -value_; }

    bool operator==(const Discriminant&) const = default;

private:
    explicit Discriminant(std::int64_t value) : value_(value) {}
    std::int64_t value_;
};

}  // namespace classzeta
