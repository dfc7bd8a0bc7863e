#include "classzeta/series.hpp"

#include <stdexcept>
#include <string>

#include "classzeta/errors.hpp"
#include "classzeta/numtheory.hpp"

namespace classzeta {

mpq_class rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

Polynomial::Polynomial(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

Polynomial::Polynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(int k, long coeff) {
    std::vector<mpz_class> c(static_cast<std::size_t>(k) + 1);
    c.back() = coeff;
    return Polynomial(std::move(c));
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class Polynomial::coeff(int k) const {
    if (k < 0 || k > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(k)];
}

mpz_class Polynomial::operator()(const mpz_class& x) const {
    mpz_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    std::vector<mpz_class> out(std::max(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < coeffs_.size()) out[i] += coeffs_[i];
        if (i < rhs.coeffs_.size()) out[i] += rhs.coeffs_[i];
    }
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
    std::vector<mpz_class> out(std::max(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < coeffs_.size()) out[i] += coeffs_[i];
        if (i < rhs.coeffs_.size()) out[i] -= rhs.coeffs_[i];
    }
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    if (is_zero() || rhs.is_zero()) return Polynomial();
    std::vector<mpz_class> out(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    return Polynomial(std::move(out));
}

Polynomial pow(const Polynomial& base, int exponent) {
    if (exponent < 0) throw std::invalid_argument("pow: negative exponent");
    Polynomial acc{1};
    for (int i = 0; i < exponent; ++i) acc = acc * base;
    return acc;
}

std::optional<Polynomial> divide_exact(const Polynomial& num, const Polynomial& div) {
    if (div.is_zero()) throw std::invalid_argument("divide_exact: zero divisor");
    if (num.is_zero()) return Polynomial();
    if (num.degree() < div.degree()) return std::nullopt;

    std::vector<mpz_class> rem = num.coeffs();
    std::vector<mpz_class> quo(static_cast<std::size_t>(num.degree() - div.degree()) + 1);
    const mpz_class& lead = div.coeff(div.degree());
    for (int k = num.degree() - div.degree(); k >= 0; --k) {
        const mpz_class& top = rem[static_cast<std::size_t>(k + div.degree())];
        if (top % lead != 0) return std::nullopt;
        mpz_class q = top / lead;
        quo[static_cast<std::size_t>(k)] = q;
        for (int j = 0; j <= div.degree(); ++j) rem[static_cast<std::size_t>(k + j)] -= q * div.coeff(j);
    }
    for (const mpz_class& r : rem)
        if (r != 0) return std::nullopt;
    return Polynomial(std::move(quo));
}

int multiplicity_at_one(const Polynomial& p) {
    const Polynomial one_minus_s{1, -1};
    int mult = 0;
    Polynomial cur = p;
    while (!cur.is_zero()) {
        auto q = divide_exact(cur, one_minus_s);
        if (!q) break;
        cur = *q;
        ++mult;
    }
    return mult;
}

bool same_function(const RationalFunction& a, const RationalFunction& b) {
    return a.numerator * b.denominator == b.numerator * a.denominator;
}

TruncatedSeries::TruncatedSeries(int order) : order_(order) {
    if (order < 1) throw std::invalid_argument("TruncatedSeries: order must be >= 1");
    coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

TruncatedSeries::TruncatedSeries(int order, std::vector<mpq_class> coeffs) : TruncatedSeries(order) {
    if (coeffs.size() != coeffs_.size())
        throw std::invalid_argument("TruncatedSeries: need exactly order+1 coefficients");
    coeffs_ = std::move(coeffs);
    for (mpq_class& c : coeffs_) c.canonicalize();
}

TruncatedSeries TruncatedSeries::one(int order) {
    TruncatedSeries s(order);
    s[0] = 1;
    return s;
}

namespace {

int common_order(const TruncatedSeries& f, const TruncatedSeries& g) {
    if (f.order() != g.order())
        throw std::invalid_argument("series order mismatch: " + std::to_string(f.order()) + " vs " +
                                    std::to_string(g.order()));
    return f.order();
}

}  // namespace

TruncatedSeries series_add(const TruncatedSeries& f, const TruncatedSeries& g) {
    const int T = common_order(f, g);
    TruncatedSeries out(T);
    for (int m = 0; m <= T; ++m) out[m] = f[m] + g[m];
    return out;
}

TruncatedSeries series_sub(const TruncatedSeries& f, const TruncatedSeries& g) {
    const int T = common_order(f, g);
    TruncatedSeries out(T);
    for (int m = 0; m <= T; ++m) out[m] = f[m] - g[m];
    return out;
}

TruncatedSeries series_scale(const mpq_class& a, const TruncatedSeries& f) {
    TruncatedSeries out(f.order());
    for (int m = 0; m <= f.order(); ++m) out[m] = a * f[m];
    return out;
}

TruncatedSeries series_mul(const TruncatedSeries& f, const TruncatedSeries& g) {
    const int T = common_order(f, g);
    TruncatedSeries out(T);
    for (int i = 0; i <= T; ++i) {
        if (f[i] == 0) continue;
        for (int j = 0; i + j <= T; ++j) {
            if (g[j] == 0) continue;
            out[i + j] += f[i] * g[j];
        }
    }
    return out;
}

TruncatedSeries series_exp(const TruncatedSeries& f) {
    if (f[0] != 0) throw std::invalid_argument("series_exp: constant term must be 0");
    const int T = f.order();
    TruncatedSeries g(T);
    g[0] = 1;
    // g' = f' g  =>  m g_m = sum_{k=1..m} k f_k g_{m-k}
    for (int m = 1; m <= T; ++m) {
        mpq_class acc = 0;
        for (int k = 1; k <= m; ++k) {
            if (f[k] == 0) continue;
            acc += k * f[k] * g[m - k];
        }
        g[m] = acc / m;
    }
    return g;
}

TruncatedSeries series_log(const TruncatedSeries& f) {
    if (f[0] != 1) throw std::invalid_argument("series_log: constant term must be 1");
    const int T = f.order();
    TruncatedSeries h(T);
    // f h' = f'  =>  h_m = f_m - (1/m) sum_{k=1..m-1} k h_k f_{m-k}
    for (int m = 1; m <= T; ++m) {
        mpq_class acc = 0;
        for (int k = 1; k < m; ++k) {
            if (h[k] == 0 || f[m - k] == 0) continue;
            acc += k * h[k] * f[m - k];
        }
        h[m] = f[m] - acc / m;
    }
    return h;
}

TruncatedSeries expand_rational(const RationalFunction& r, int order) {
    if (r.denominator.coeff(0) == 0)
        throw std::invalid_argument("expand_rational: denominator constant term is zero");
    TruncatedSeries out(order);
    const mpq_class d0(r.denominator.coeff(0));
    for (int m = 0; m <= order; ++m) {
        mpq_class acc(r.numerator.coeff(m));
        const int kmax = std::min(m, r.denominator.degree());
        for (int k = 1; k <= kmax; ++k) {
            const mpz_class dk = r.denominator.coeff(k);
            if (dk == 0) continue;
            acc -= dk * out[m - k];
        }
        out[m] = acc / d0;
    }
    return out;
}

namespace {

void require_prefix(std::span<const std::int64_t> seq, int order, const char* what) {
    if (static_cast<int>(seq.size()) < order)
        throw std::invalid_argument(std::string(what) + ": need entries for m = 1.." + std::to_string(order) +
                                    ", got " + std::to_string(seq.size()));
}

}  // namespace

TruncatedSeries artin_mazur_from_N(std::span<const std::int64_t> N, int order) {
    require_prefix(N, order, "artin_mazur_from_N");
    TruncatedSeries arg(order);
    for (int m = 1; m <= order; ++m) arg[m] = mpq_class(static_cast<long>(N[m - 1]), m);
    for (int m = 1; m <= order; ++m) arg[m].canonicalize();
    return series_exp(arg);
}

TruncatedSeries lambert_from_K(std::span<const std::int64_t> K, int order) {
    require_prefix(K, order, "lambert_from_K");
    // The Lambert series sum_m K_m s^m/(1-s^m) collects the divisor sums
    // sum_{m|t} K_m = N_t, and equals s (log zeta)'. Each inner rational is
    // expanded to the truncation order first, then the sum is integrated
    // term-wise and exponentiated.
    TruncatedSeries lambert(order);
    for (int m = 1; m <= order; ++m) {
        if (K[m - 1] == 0) continue;
        const TruncatedSeries geom =
            expand_rational({Polynomial::monomial(m), Polynomial{1} - Polynomial::monomial(m)}, order);
        lambert = series_add(lambert, series_scale(mpq_class(static_cast<long>(K[m - 1])), geom));
    }
    TruncatedSeries arg(order);
    for (int t = 1; t <= order; ++t) arg[t] = lambert[t] / t;
    return series_exp(arg);
}

TruncatedSeries euler_from_K(std::span<const std::int64_t> K, int order) {
    require_prefix(K, order, "euler_from_K");
    TruncatedSeries out = TruncatedSeries::one(order);
    for (int m = 1; m <= order; ++m) {
        if (K[m - 1] == 0) continue;
        TruncatedSeries one_minus_sm(order);
        one_minus_sm[0] = 1;
        one_minus_sm[m] = -1;
        mpq_class w(static_cast<long>(-K[m - 1]), m);
        w.canonicalize();
        out = series_mul(out, series_exp(series_scale(w, series_log(one_minus_sm))));
    }
    return out;
}

std::vector<std::int64_t> extract_N(const TruncatedSeries& zeta) {
    if (zeta[0] != 1) throw std::invalid_argument("extract_N: series must have constant term 1");
    const TruncatedSeries logz = series_log(zeta);
    std::vector<std::int64_t> N(static_cast<std::size_t>(zeta.order()));
    for (int m = 1; m <= zeta.order(); ++m) {
        mpq_class v = m * logz[m];
        v.canonicalize();
        if (v.get_den() != 1)
            throw std::invalid_argument("extract_N: N_" + std::to_string(m) + " = " + v.get_str() +
                                        " is not an integer");
        if (!v.get_num().fits_slong_p())
            throw internal_error("extract_N: N_" + std::to_string(m) + " overflows int64");
        N[static_cast<std::size_t>(m - 1)] = v.get_num().get_si();
    }
    return N;
}

std::vector<std::int64_t> K_from_N(std::span<const std::int64_t> N) {
    const std::int64_t M = static_cast<std::int64_t>(N.size());
    const std::vector<int> mu = moebius_table(M);
    std::vector<std::int64_t> K(N.size(), 0);
    for (std::int64_t l = 1; l <= M; ++l) {
        if (mu[static_cast<std::size_t>(l)] == 0) continue;
        for (std::int64_t m = l; m <= M; m += l)
            K[static_cast<std::size_t>(m - 1)] += mu[static_cast<std::size_t>(l)] * N[static_cast<std::size_t>(m / l - 1)];
    }
    return K;
}

std::vector<std::int64_t> N_from_K(std::span<const std::int64_t> K) {
    const std::int64_t M = static_cast<std::int64_t>(K.size());
    std::vector<std::int64_t> N(K.size(), 0);
    for (std::int64_t d = 1; d <= M; ++d)
        for (std::int64_t m = d; m <= M; m += d) N[static_cast<std::size_t>(m - 1)] += K[static_cast<std::size_t>(d - 1)];
    return N;
}

std::vector<std::pair<std::int64_t, std::int64_t>> dold_residues(std::span<const std::int64_t> K) {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    out.reserve(K.size());
    for (std::size_t i = 0; i < K.size(); ++i) {
        const std::int64_t m = static_cast<std::int64_t>(i) + 1;
        out.emplace_back(m, ((K[i] % m) + m) % m);
    }
    return out;
}

PeriodCounts PeriodCounts::from_N(std::vector<std::int64_t> N) {
    PeriodCounts pc;
    pc.K = K_from_N(N);
    pc.N = std::move(N);
    return pc;
}

PeriodCounts PeriodCounts::from_K(std::vector<std::int64_t> K) {
    PeriodCounts pc;
    pc.N = N_from_K(K);
    pc.K = std::move(K);
    return pc;
}

bool PeriodCounts::consistent() const {
    return N.size() == K.size() && N_from_K(K) == N;
}

}  // namespace classzeta
