#include "classzeta/numtheory.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace classzeta {

int moebius(std::int64_t l) {
    if (l < 1) throw std::invalid_argument("moebius: argument must be >= 1, got " + std::to_string(l));
    int sign = 1;
    for (std::int64_t p = 2; p * p <= l; ++p) {
        if (l % p != 0) continue;
        l /= p;
        if (l % p == 0) return 0;
        sign = -sign;
    }
    if (l > 1) sign = -sign;
    return sign;
}

std::vector<int> moebius_table(std::int64_t n) {
    std::vector<int> mu(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::int64_t> primes;
    if (n >= 1) mu[1] = 1;
    // linear sieve: every k > 1 is struck exactly once by its smallest prime
    std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
    for (std::int64_t k = 2; k <= n; ++k) {
        if (!composite[k]) {
            primes.push_back(k);
            mu[k] = -1;
        }
        for (std::int64_t p : primes) {
            if (p * k > n) break;
            composite[p * k] = true;
            if (k % p == 0) {
                mu[p * k] = 0;
                break;
            }
            mu[p * k] = -mu[k];
        }
    }
    return mu;
}

bool is_squarefree(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("is_squarefree: argument must be >= 1");
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return false;
    }
    return true;
}

std::vector<bool> squarefree_table(std::int64_t n) {
    std::vector<bool> sf(static_cast<std::size_t>(n) + 1, true);
    sf[0] = false;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        const std::int64_t pp = p * p;
        if (!sf[pp]) continue;  // p composite: p^2 is a multiple of a smaller prime square
        for (std::int64_t k = pp; k <= n; k += pp) sf[k] = false;
    }
    return sf;
}

namespace {

// Shared case split on |d|: n = 3 (mod 4) with n squarefree, or n = 0 (mod 4)
// with n/4 squarefree and n/4 = 1 or 2 (mod 4)  (i.e. d/4 = 3 or 2 mod 4).
template <typename SquarefreeFn>
bool fundamental_magnitude(std::int64_t n, SquarefreeFn&& squarefree) {
    if (n < 3) return false;
    if (n % 4 == 3) return squarefree(n);
    if (n % 4 == 0) {
        const std::int64_t m = n / 4;
        return (m % 4 == 1 || m % 4 == 2) && squarefree(m);
    }
    return false;
}

}  // namespace

bool is_fundamental(std::int64_t d) {
    if (d >= 0) return false;
    return fundamental_magnitude(-d, [](std::int64_t k) { return is_squarefree(k); });
}

std::vector<bool> fundamental_table(std::int64_t n) {
    const std::vector<bool> sf = squarefree_table(n);
    std::vector<bool> fund(static_cast<std::size_t>(n) + 1, false);
    for (std::int64_t k = 3; k <= n; ++k)
        fund[k] = fundamental_magnitude(k, [&](std::int64_t m) { return sf[m]; });
    return fund;
}

int kronecker(std::int64_t d, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("kronecker: n must be >= 1, got " + std::to_string(n));
    int result = 1;
    // factor out 2s of n: each contributes (d/2)
    if (n % 2 == 0) {
        if (d % 2 == 0) return 0;
        int twos = 0;
        while (n % 2 == 0) {
            n /= 2;
            ++twos;
        }
        const std::int64_t r = ((d % 8) + 8) % 8;
        if ((twos & 1) && (r == 3 || r == 5)) result = -result;
    }
    // Jacobi symbol (d/n) for odd n >= 1 by reciprocity
    std::int64_t a = ((d % n) + n) % n;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            const std::int64_t r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

Discriminant Discriminant::checked(std::int64_t value) {
    if (!is_fundamental(value))
        throw std::invalid_argument(std::to_string(value) + " is not a negative fundamental discriminant");
    return Discriminant(value);
}

}  // namespace classzeta
