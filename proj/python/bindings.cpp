#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ellcorr/parser.hpp"
#include "ellcorr/report.hpp"

namespace py = pybind11;
using namespace ellcorr;

namespace {

SolutionFamily family_from_name(const std::string& name, const RowParams& p) {
    if (name == "wp")
        return SolutionFamily::wp(p.inv1);
    if (name == "wp_prime")
        return SolutionFamily::wp_prime(p.g3_row2);
    if (name == "wp2")
        return SolutionFamily::wp2(p.g2_row3);
    if (name == "wp3")
        return SolutionFamily::wp3(p.g3_row4);
    if (name == "a_over_sinh")
        return SolutionFamily::a_over_sinh(p.a_row5);
    if (name == "mobius_exp")
        return SolutionFamily::mobius_exp(p.a_row6, p.m_row6);
    throw Error("unknown family name: " + name);
}

} // namespace

PYBIND11_MODULE(_ellcorr, m) {
    m.doc() = "certification kernel for the schwarzian/binomial correspondence";

    py::register_exception<Error>(m, "EllcorrError");

    m.def(
        "wp",
        [](Cx z, Cx g2, Cx g3) { return wp_eval(z, {g2, g3}); },
        py::arg("z"), py::arg("g2"), py::arg("g3"));

    m.def(
        "wp_pair",
        [](Cx z, Cx g2, Cx g3) {
            WpPair w = wp_eval_pair(z, {g2, g3});
            return std::make_pair(w.p, w.pprime);
        },
        py::arg("z"), py::arg("g2"), py::arg("g3"));

    m.def(
        "jet",
        [](const std::string& family, Cx z) {
            DerivativeJet j = jet(family_from_name(family, RowParams{}), z);
            return std::vector<Cx>{j.u, j.u1, j.u2, j.u3};
        },
        py::arg("family"), py::arg("z"));

    m.def(
        "schwarzian",
        [](const std::string& family, Cx z) {
            return schwarzian_from_jet(jet(family_from_name(family, RowParams{}), z));
        },
        py::arg("family"), py::arg("z"));

    m.def(
        "row_residual",
        [](int row, Cx z) { return residual(canonical_row(row), z); },
        py::arg("row"), py::arg("z"));

    m.def(
        "max_row_residual",
        [](int row, int samples, uint64_t seed) {
            CanonicalRow r = canonical_row(row);
            SplitMix64 rng = SplitMix64::split(seed, static_cast<uint64_t>(row));
            double worst = 0.0;
            for (Cx z : sample_points(r, samples, rng))
                worst = std::max(worst, std::abs(residual(r, z)));
            return worst;
        },
        py::arg("row"), py::arg("samples") = 32, py::arg("seed") = 42);

    m.def(
        "fuchs_table",
        [](int row) {
            py::list out;
            FuchsReport rep = fuchs_report(canonical_row(row).eq);
            for (const auto& ana : rep.balances) {
                py::dict d;
                d["q"] = ana.bal.q;
                d["u0"] = ana.bal.u0;
                d["K"] = ana.K;
                d["indices"] = std::vector<Cx>(ana.indicial.roots.begin(),
                                               ana.indicial.roots.end());
                d["free_constants"] = ana.free_constants;
                out.append(d);
            }
            return out;
        },
        py::arg("row"));

    m.def(
        "fit_binomial",
        [](const std::string& family, int k, int degN, int degD, int nterms) {
            LaurentSeries base = family_base_series(family_from_name(family, RowParams{}),
                                                    nterms);
            return format_rational(fit_binomial_from_series(base, k, degN, degD));
        },
        py::arg("family"), py::arg("k"), py::arg("degN"), py::arg("degD") = 0,
        py::arg("nterms") = 36);

    m.def("correspondence", []() {
        py::list out;
        for (const auto& entry : correspondence_table()) {
            py::dict d;
            d["row"] = entry.schwarzianRow;
            d["k"] = entry.binomial.k;
            d["equation"] = format_rational(entry.binomial.R);
            out.append(d);
        }
        return out;
    });

    m.def(
        "run_suite_json",
        [](int samples, double tol, uint64_t seed, int row) {
            SuiteConfig cfg;
            cfg.samples = samples;
            cfg.tol = tol;
            cfg.seed = seed;
            cfg.row = row;
            return emit(run_suite(cfg), ReportFormat::JSON);
        },
        py::arg("samples") = 32, py::arg("tol") = 1e-8, py::arg("seed") = 42,
        py::arg("row") = 0);
}
