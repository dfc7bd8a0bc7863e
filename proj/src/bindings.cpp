// Python bindings for the main operations. Exact rationals cross the
// boundary as fractions.Fraction; reports cross as plain dicts mirroring the
// CLI JSON schema.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <vector>

#include "classzeta/census.hpp"
#include "classzeta/io.hpp"
#include "classzeta/model.hpp"
#include "classzeta/numtheory.hpp"
#include "classzeta/series.hpp"
#include "classzeta/version.hpp"
#include "classzeta/watkins.hpp"

namespace py = pybind11;
using namespace classzeta;

namespace {

py::object to_fraction(const mpq_class& q) {
    return py::module_::import("fractions").attr("Fraction")(py::str(q.get_str()));
}

py::list series_to_py(const TruncatedSeries& s) {
    py::list out;
    for (int m = 0; m <= s.order(); ++m) out.append(to_fraction(s[m]));
    return out;
}

py::list poly_to_py(const Polynomial& p) {
    const py::object to_int = py::module_::import("builtins").attr("int");
    py::list out;
    for (const mpz_class& c : p.coeffs()) out.append(to_int(py::str(c.get_str())));
    return out;
}

TruncatedSeries series_from_py(const py::sequence& coeffs) {
    std::vector<mpq_class> c;
    c.reserve(py::len(coeffs));
    for (py::handle item : coeffs) {
        mpq_class q;
        if (q.set_str(py::str(item).cast<std::string>(), 10) != 0)
            throw py::value_error("coefficient '" + py::str(item).cast<std::string>() + "' is not a rational");
        q.canonicalize();
        c.push_back(q);
    }
    if (c.size() < 2) throw py::value_error("need at least coefficients for orders 0 and 1");
    const int order = static_cast<int>(c.size()) - 1;
    return TruncatedSeries(order, std::move(c));
}

py::object json_to_py(const std::string& text) {
    return py::module_::import("json").attr("loads")(text);
}

py::dict census_to_py(const CensusTable& t) {
    py::dict rows;
    for (const auto& [h, row] : t.rows) rows[py::int_(h)] = py::make_tuple(row.count, row.max_abs_disc);
    py::dict out;
    out["bound"] = t.bound;
    out["rows"] = rows;
    out["complete_through"] = py::cast(std::vector<std::int64_t>(t.complete_through.begin(), t.complete_through.end()));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "class-number census of imaginary quadratic fields and the exact\n"
              "zeta-series constructions over the per-class-number counts";
    m.attr("__version__") = kVersion;
    m.attr("DEFAULT_ORDER") = kDefaultOrder;

    // number theory
    m.def("moebius", &moebius, py::arg("l"));
    m.def("is_fundamental", &is_fundamental, py::arg("d"));
    m.def("kronecker", &kronecker, py::arg("d"), py::arg("n"));

    // class numbers
    m.def(
        "class_number_forms", [](std::int64_t d) { return class_number_forms(Discriminant::checked(d)); },
        py::arg("d"), "class number via primitive reduced forms");
    m.def(
        "class_number_dirichlet", [](std::int64_t d) { return class_number_dirichlet(Discriminant::checked(d)); },
        py::arg("d"), "class number via the analytic class number formula");
    m.def(
        "reduced_forms",
        [](std::int64_t d) {
            py::list out;
            for (const ReducedForm& f : reduced_forms(Discriminant::checked(d)))
                out.append(py::make_tuple(f.a, f.b, f.c));
            return out;
        },
        py::arg("d"));

    // census
    m.def(
        "census", [](std::int64_t bound, int workers) { return census_to_py(census(bound, workers)); },
        py::arg("bound"), py::arg("workers") = 1);
    m.def(
        "verify_census",
        [](std::int64_t bound, int workers) {
            const auto rows = verify_watkins(census(bound, workers), load_watkins());
            py::list out;
            for (const VerifyRow& r : rows)
                out.append(py::make_tuple(r.h, r.expected_count, r.actual_count, to_string(r.verdict)));
            return out;
        },
        py::arg("bound"), py::arg("workers") = 1);
    m.def("watkins_table", [] {
        py::list out;
        for (const WatkinsRow& r : load_watkins()) out.append(py::make_tuple(r.h, r.count, r.largest));
        return out;
    });

    // series constructions
    m.def(
        "expand_predicted", [](int order) { return series_to_py(expand_rational(predicted_zeta(), order)); },
        py::arg("order") = kDefaultOrder, "coefficients of the rational closed form");
    m.def(
        "lambert_from_k",
        [](const std::vector<std::int64_t>& K, int order) { return series_to_py(lambert_from_K(K, order)); },
        py::arg("k"), py::arg("order"));
    m.def(
        "euler_from_k",
        [](const std::vector<std::int64_t>& K, int order) { return series_to_py(euler_from_K(K, order)); },
        py::arg("k"), py::arg("order"));
    m.def(
        "artin_mazur_from_n",
        [](const std::vector<std::int64_t>& N, int order) { return series_to_py(artin_mazur_from_N(N, order)); },
        py::arg("n"), py::arg("order"));
    m.def(
        "extract_n", [](const py::sequence& coeffs) { return extract_N(series_from_py(coeffs)); },
        py::arg("coeffs"));
    m.def(
        "k_from_n", [](const std::vector<std::int64_t>& N) { return K_from_N(N); }, py::arg("n"));
    m.def(
        "n_from_k", [](const std::vector<std::int64_t>& K) { return N_from_K(K); }, py::arg("k"));
    m.def(
        "dold_residues", [](const std::vector<std::int64_t>& K) { return dold_residues(K); }, py::arg("k"));

    // model
    m.def("predicted_zeta", [] {
        const RationalFunction z = predicted_zeta();
        py::dict out;
        out["numerator"] = poly_to_py(z.numerator);
        out["denominator"] = poly_to_py(z.denominator);
        return out;
    });
    m.def("lefschetz_counts", &lefschetz_counts, py::arg("m"));
    m.def("predicted_counts", &predicted_counts, py::arg("hmax"));
    m.def("char_poly_product_check", [] {
        const ProductCheck c = char_poly_product();
        py::dict out;
        out["matches_predicted"] = c.matches_predicted;
        out["shared_one_minus_s"] = c.shared_one_minus_s;
        out["numerator"] = poly_to_py(c.product.numerator);
        return out;
    });
    m.def("pole_zero_report", [] {
        const PoleZeroReport r = pole_zero_report();
        py::dict out;
        out["claimed_pole_order"] = r.claimed_pole_order;
        out["computed_pole_order"] = r.computed_pole_order;
        out["pole_order_matches"] = r.pole_order_matches;
        out["zero_root_orders"] = py::cast(r.zero_root_orders);
        out["zeros_all_roots_of_unity"] = r.zeros_all_roots_of_unity;
        return out;
    });
    m.def(
        "reciprocal_support",
        [](int order) {
            const SupportReport r = reciprocal_support(order);
            return py::make_tuple(py::cast(std::vector<int>(r.exponents.begin(), r.exponents.end())),
                                  r.all_two_six_representable);
        },
        py::arg("order"));
    m.def(
        "report",
        [](std::optional<std::int64_t> bound, int hmax, int workers) {
            ComparisonReport cmp =
                bound ? compare(census(*bound, workers), hmax) : compare(load_watkins(), hmax);
            cmp.primes = prime_bound_report(load_watkins());
            ReportMeta meta;
            meta.bound = bound;
            meta.source = bound ? "census" : "watkins";
            meta.truncation_order = hmax;
            meta.version = kVersion;
            return json_to_py(report_to_json(cmp, meta));
        },
        py::arg("bound") = py::none(), py::arg("hmax") = 100, py::arg("workers") = 1,
        "reconciliation report as a dict; bound=None compares against the reference table");
}
