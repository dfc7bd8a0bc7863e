#include "classzeta/census.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "classzeta/errors.hpp"

namespace classzeta {

namespace {

std::int64_t isqrt(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("isqrt: negative argument");
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

}  // namespace

bool is_reduced(const ReducedForm& f) {
    if (f.a < 1 || f.c < 1) return false;
    if (f.discriminant() >= 0) return false;
    const std::int64_t ab = f.b < 0 ? -f.b : f.b;
    if (ab > f.a || f.a > f.c) return false;
    if ((ab == f.a || f.a == f.c) && f.b < 0) return false;
    return std::gcd(std::gcd(f.a, f.b), f.c) == 1;
}

std::vector<ReducedForm> reduced_forms(Discriminant D) {
    const std::int64_t n = D.magnitude();
    std::vector<ReducedForm> forms;
    // b runs over 0..sqrt(n/3) with the parity of D; (b^2 + n)/4 = a*c.
    for (std::int64_t b = (n & 1); b * b * 3 <= n; b += 2) {
        const std::int64_t ac = (b * b + n) / 4;
        for (std::int64_t a = std::max<std::int64_t>(b, 1); a * a <= ac; ++a) {
            if (ac % a != 0) continue;
            const std::int64_t c = ac / a;
            if (std::gcd(std::gcd(a, b), c) != 1) continue;
            forms.push_back({a, b, c});
            if (b > 0 && b < a && a < c) forms.push_back({a, -b, c});
        }
    }
    std::sort(forms.begin(), forms.end());
    return forms;
}

std::int64_t class_number_forms(Discriminant D) {
    const std::int64_t n = D.magnitude();
    std::int64_t h = 0;
    for (std::int64_t b = (n & 1); b * b * 3 <= n; b += 2) {
        const std::int64_t ac = (b * b + n) / 4;
        for (std::int64_t a = std::max<std::int64_t>(b, 1); a * a <= ac; ++a) {
            if (ac % a != 0) continue;
            const std::int64_t c = ac / a;
            if (std::gcd(std::gcd(a, b), c) != 1) continue;
            h += (b > 0 && b < a && a < c) ? 2 : 1;
        }
    }
    return h;
}

std::int64_t class_number_dirichlet(Discriminant D) {
    const std::int64_t n = D.magnitude();
    const std::int64_t w = n == 3 ? 6 : (n == 4 ? 4 : 2);
    std::int64_t sum = 0;
    for (std::int64_t k = 1; k < n; ++k) sum += kronecker(D.value(), k) * k;
    const std::int64_t num = w * (sum < 0 ? -sum : sum);
    if (num == 0 || num % (2 * n) != 0)
        throw internal_error("class_number_dirichlet: character sum " + std::to_string(sum) +
                             " does not yield an integer class number for D = " + std::to_string(D.value()));
    return num / (2 * n);
}

namespace {

// One contiguous a-chunk of the sweep, accumulating into a private histogram.
// Forms with b > 0 count twice unless on the reduction boundary (b = a or
// a = c), matching the b >= 0 convention for boundary forms.
void sweep_chunk(std::int64_t a_lo, std::int64_t a_hi, std::int64_t bound, std::vector<std::uint32_t>& hist) {
    for (std::int64_t a = a_lo; a < a_hi; ++a) {
        const std::int64_t fourA = 4 * a;
        for (std::int64_t b = 0; b <= a; ++b) {
            const std::int64_t g = std::gcd(a, b);
            std::int64_t n = fourA * a - b * b;  // c = a
            if (n > bound) continue;
            if (g == 1) ++hist[static_cast<std::size_t>(n)];  // gcd(a, b, a) = g
            const std::uint32_t weight = (b > 0 && b < a) ? 2 : 1;
            n += fourA;
            for (std::int64_t c = a + 1; n <= bound; ++c, n += fourA) {
                if (g > 1 && std::gcd(g, c) != 1) continue;
                hist[static_cast<std::size_t>(n)] += weight;
            }
        }
    }
}

}  // namespace

CensusTable census(std::int64_t bound, int workers) {
    if (bound < 3) throw std::invalid_argument("census: bound must be >= 3");
    if (bound > kMaxCensusBound)
        throw std::invalid_argument("census: bound " + std::to_string(bound) + " exceeds the supported cap " +
                                    std::to_string(kMaxCensusBound) +
                                    " (raise kMaxCensusBound only after re-auditing overflow margins)");
    if (workers < 1) throw std::invalid_argument("census: workers must be >= 1");

    const std::int64_t a_max = isqrt(bound / 3);  // 3a^2 <= 4a*c - b^2 <= bound
    const int W = static_cast<int>(std::min<std::int64_t>(workers, std::max<std::int64_t>(a_max, 1)));

    // Contiguous chunks balanced by estimated work: the (a, b) pair admits
    // about bound/(4a) - a values of c, summed over b = 0..a.
    std::vector<std::int64_t> chunk_bounds{1};
    {
        std::vector<double> cost(static_cast<std::size_t>(a_max) + 1, 0.0);
        double total = 0.0;
        for (std::int64_t a = 1; a <= a_max; ++a) {
            const double per_b = std::max(0.0, static_cast<double>(bound) / (4.0 * a) - a + 1);
            cost[static_cast<std::size_t>(a)] = (a + 1) * per_b + 8.0;
            total += cost[static_cast<std::size_t>(a)];
        }
        double acc = 0.0;
        std::int64_t a = 1;
        for (int w = 0; w < W - 1; ++w) {
            const double target = total * (w + 1) / W;
            while (a <= a_max && acc < target) acc += cost[static_cast<std::size_t>(a++)];
            chunk_bounds.push_back(a);
        }
        chunk_bounds.push_back(a_max + 1);
    }

    std::vector<std::vector<std::uint32_t>> hists(static_cast<std::size_t>(W));
    {
        std::vector<std::thread> pool;
        for (int w = 0; w < W; ++w) {
            hists[static_cast<std::size_t>(w)].assign(static_cast<std::size_t>(bound) + 1, 0);
            pool.emplace_back(sweep_chunk, chunk_bounds[static_cast<std::size_t>(w)],
                              chunk_bounds[static_cast<std::size_t>(w) + 1], bound,
                              std::ref(hists[static_cast<std::size_t>(w)]));
        }
        for (std::thread& t : pool) t.join();
    }

    // index-ordered merge into the first histogram
    std::vector<std::uint32_t>& hist = hists.front();
    for (int w = 1; w < W; ++w)
        for (std::size_t i = 0; i < hist.size(); ++i) hist[i] += hists[static_cast<std::size_t>(w)][i];

    CensusTable table;
    table.bound = bound;
    const std::vector<bool> fundamental = fundamental_table(bound);
    for (std::int64_t n = 3; n <= bound; ++n) {
        if (!fundamental[static_cast<std::size_t>(n)]) continue;
        const std::uint32_t h = hist[static_cast<std::size_t>(n)];
        if (h == 0) throw internal_error("census: no reduced form found for fundamental |D| = " + std::to_string(n));
        CensusRow& row = table.rows[h];
        ++row.count;
        row.max_abs_disc = n;  // n ascends, so the last write is the max
    }
    for (const WatkinsRow& ref : load_watkins())
        if (ref.largest <= bound) table.complete_through.insert(ref.h);
    return table;
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::match: return "match";
        case Verdict::mismatch: return "mismatch";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

std::vector<VerifyRow> verify_watkins(const CensusTable& table, const std::vector<WatkinsRow>& reference) {
    std::vector<VerifyRow> out;
    out.reserve(reference.size());
    for (const WatkinsRow& ref : reference) {
        VerifyRow row{ref.h, ref.count, 0, ref.largest, 0, Verdict::inconclusive};
        if (auto it = table.rows.find(ref.h); it != table.rows.end()) {
            row.actual_count = it->second.count;
            row.actual_largest = it->second.max_abs_disc;
        }
        if (table.complete_through.contains(ref.h))
            row.verdict = (row.actual_count == ref.count && row.actual_largest == ref.largest) ? Verdict::match
                                                                                              : Verdict::mismatch;
        out.push_back(row);
    }
    return out;
}

}  // namespace classzeta
