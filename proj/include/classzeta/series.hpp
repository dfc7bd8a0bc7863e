#pragma once

// Exact formal power series truncated at a fixed order, with rational
// coefficients (GMP-backed), plus the dynamical-zeta constructions:
// Artin-Mazur series from fixed-point counts, Lambert and Euler-product
// forms from least-period counts, and Moebius inversion between the two
// count sequences. No floating point anywhere; every identity asserted by
// the callers is coefficient-exact.

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace classzeta {

inline constexpr int kDefaultOrder = 50;

// num/den in lowest terms with positive denominator (mpq canonical form).
mpq_class rational(long num, long den);

// Dense integer-coefficient polynomial, trailing zeros trimmed.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<long> coeffs);
    explicit Polynomial(std::vector<mpz_class> coeffs);

    static Polynomial monomial(int k, long coeff = 1);

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    mpz_class coeff(int k) const;
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }

    mpz_class operator()(const mpz_class& x) const;

    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    bool operator==(const Polynomial&) const = default;

private:
    void trim();
    std::vector<mpz_class> coeffs_;
};

Polynomial pow(const Polynomial& base, int exponent);

// Exact quotient num / div, or nullopt when div does not divide num.
std::optional<Polynomial> divide_exact(const Polynomial& num, const Polynomial& div);

// Multiplicity of the factor (1 - s), i.e. of the root s = 1.
int multiplicity_at_one(const Polynomial& p);

// numerator / denominator with denominator(0) != 0, expandable as a series.
struct RationalFunction {
    Polynomial numerator;
    Polynomial denominator;
    bool operator==(const RationalFunction&) const = default;
};

// Equality as functions: n1*d2 == n2*d1.
bool same_function(const RationalFunction& a, const RationalFunction& b);

class TruncatedSeries {
public:
    // Zero series of the given truncation order (>= 1).
    explicit TruncatedSeries(int order);
    TruncatedSeries(int order, std::vector<mpq_class> coeffs);

    static TruncatedSeries one(int order);

    int order() const { return order_; }
    const mpq_class& operator[](int m) const { return coeffs_[static_cast<std::size_t>(m)]; }
    mpq_class& operator[](int m) { return coeffs_[static_cast<std::size_t>(m)]; }
    const std::vector<mpq_class>& coeffs() const { return coeffs_; }

    bool operator==(const TruncatedSeries&) const = default;

private:
    int order_;
    std::vector<mpq_class> coeffs_;
};

// Orders must match; mismatches throw rather than resize.
TruncatedSeries series_add(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries series_sub(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries series_scale(const mpq_class& a, const TruncatedSeries& f);

// Cauchy product truncated at the shared order.
TruncatedSeries series_mul(const TruncatedSeries& f, const TruncatedSeries& g);

// exp(f) for f(0) = 0 and log(f) for f(0) = 1, by the f'*g = g' coefficient
// recursion; exact inverses of each other at equal order.
TruncatedSeries series_exp(const TruncatedSeries& f);
TruncatedSeries series_log(const TruncatedSeries& f);

// Power-series long division of numerator by denominator to the given order.
TruncatedSeries expand_rational(const RationalFunction& r, int order);

// exp(sum_m (N_m/m) s^m) from fixed-point counts N_1..N_order.
TruncatedSeries artin_mazur_from_N(std::span<const std::int64_t> N, int order);

// exp(sum_m (K_m/m) s^m/(1-s^m)) from least-period counts K_1..K_order.
TruncatedSeries lambert_from_K(std::span<const std::int64_t> K, int order);

// prod_m (1-s^m)^(-K_m/m); non-integer exponents K_m/m are fine, each factor
// goes through exp(-(K_m/m) log(1-s^m)). Identical to lambert_from_K.
TruncatedSeries euler_from_K(std::span<const std::int64_t> K, int order);

// N_m = m * [s^m] log(zeta); zeta(0) must be 1, and every N_m must come out
// an exact integer (a non-integer means zeta is not an Artin-Mazur series of
// an integer count sequence).
std::vector<std::int64_t> extract_N(const TruncatedSeries& zeta);

// Moebius inversion K_m = sum_{l|m} mu(l) N_{m/l} and its inverse
// N_m = sum_{d|m} K_d; mutually inverse on full prefixes.
std::vector<std::int64_t> K_from_N(std::span<const std::int64_t> N);
std::vector<std::int64_t> N_from_K(std::span<const std::int64_t> K);

// (m, K_m mod m) with the canonical representative in [0, m); residue 0
// means the Dold congruence holds at m.
std::vector<std::pair<std::int64_t, std::int64_t>> dold_residues(std::span<const std::int64_t> K);

// Paired fixed-point / least-period counts with the divisor-sum relation.
struct PeriodCounts {
    std::vector<std::int64_t> N;
    std::vector<std::int64_t> K;

    static PeriodCounts from_N(std::vector<std::int64_t> N);
    static PeriodCounts from_K(std::vector<std::int64_t> K);

    std::size_t length() const { return N.size(); }
    bool consistent() const;
};

}  // namespace classzeta
