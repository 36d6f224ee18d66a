#include "efluct/errors.hpp"
#include "efluct/freeness.hpp"
#include "efluct/limits.hpp"
#include "efluct/sampler.hpp"
#include "efluct/spoke_arc.hpp"
#include "efluct/verify.hpp"
#include "efluct/wick.hpp"

#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace efluct;

namespace {

std::vector<std::pair<int, int>> one_based(const Pairing& pi) {
    auto b = pi.blocks();
    for (auto& [x, y] : b) {
        ++x;
        ++y;
    }
    return b;
}

Pairing from_py(const std::vector<std::pair<int, int>>& blocks) { return Pairing::from_blocks(blocks); }

py::dict config_dict(const SpokeArcConfig& cfg) {
    auto plus1 = [](std::vector<int> v) {
        for (auto& x : v) ++x;
        return v;
    };
    std::vector<std::vector<std::pair<int, int>>> ip, op;
    for (const auto& pi : cfg.inner_pairings) ip.push_back(one_based(pi));
    for (const auto& pi : cfg.outer_pairings) op.push_back(one_based(pi));
    py::dict d;
    d["a"] = cfg.a;
    d["U"] = plus1(cfg.inner);
    d["V"] = plus1(cfg.outer);
    d["iota"] = cfg.inner_arc_lengths;
    d["o"] = cfg.outer_arc_lengths;
    d["inner_pairings"] = ip;
    d["outer_pairings"] = op;
    return d;
}

Channel channel_arg(const std::string& s) { return parse_channel(s); }

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "elliptic matrix fluctuation toolkit";
    m.attr("__version__") = EFLUCT_VERSION;

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

    py::class_<GammaPoly>(m, "GammaPoly")
        .def(py::init<>())
        .def_static("constant", &GammaPoly::constant)
        .def_static("power", &GammaPoly::power, py::arg("color"), py::arg("exponent"), py::arg("coeff") = 1)
        .def("terms", [](const GammaPoly& p) {
            std::map<std::vector<std::pair<int, int>>, std::int64_t> out(p.terms().begin(), p.terms().end());
            return out;
        })
        .def("is_zero", &GammaPoly::is_zero)
        .def("evaluate", [](const GammaPoly& p, double g) { return p.evaluate_uniform(g); })
        .def("evaluate", [](const GammaPoly& p, const std::map<int, double>& g) { return p.evaluate(g); })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self == py::self)
        .def("__str__", &GammaPoly::to_string)
        .def("__repr__", [](const GammaPoly& p) { return "GammaPoly(" + p.to_string() + ")"; });

    py::class_<NExpansion>(m, "NExpansion")
        .def("terms", [](const NExpansion& e) { return e.terms(); })
        .def("coefficient", &NExpansion::coefficient)
        .def("is_zero", &NExpansion::is_zero)
        .def("evaluate", [](const NExpansion& e, double n, double g) { return e.evaluate(n, {}, g); })
        .def(py::self == py::self)
        .def("__str__", &NExpansion::to_string)
        .def("__repr__", [](const NExpansion& e) { return "NExpansion(" + e.to_string() + ")"; });

    py::class_<CovEstimate>(m, "CovEstimate")
        .def_readonly("estimate", &CovEstimate::estimate)
        .def_readonly("se", &CovEstimate::se)
        .def_readonly("reps", &CovEstimate::reps)
        .def_readonly("N", &CovEstimate::N)
        .def_readonly("seed", &CovEstimate::seed);

    m.def("cycle_count", [](const std::vector<int>& perm) { return cycle_count(perm); });
    m.def("enumerate_pairings", [](int n) {
        std::vector<std::vector<std::pair<int, int>>> out;
        for (const auto& pi : enumerate_pairings(n)) out.push_back(one_based(pi));
        return out;
    });
    m.def("enumerate_nc2_annular", [](int p, int q) {
        std::vector<std::vector<std::pair<int, int>>> out;
        for (const auto& pi : enumerate_nc2_annular(AnnularFrame(p, q))) out.push_back(one_based(pi));
        return out;
    }, py::arg("p"), py::arg("q"));
    m.def("is_noncrossing_disc", [](const std::vector<std::pair<int, int>>& b) { return is_noncrossing_disc(from_py(b)); });
    m.def("is_noncrossing_annular", [](const std::vector<std::pair<int, int>>& b, int p, int q) {
        return is_noncrossing_annular(from_py(b), AnnularFrame(p, q));
    });
    m.def("nc2_count_closed", &nc2_count_closed);
    m.def("spoke_count", [](const std::vector<std::pair<int, int>>& b, int p, int q) {
        return spoke_count(from_py(b), AnnularFrame(p, q));
    });
    m.def("decompose", [](const std::vector<std::pair<int, int>>& b, int p, int q) {
        return config_dict(decompose(from_py(b), AnnularFrame(p, q)));
    });

    m.def("arc_weight", [](const std::string& w) { return multicolor_arc_weight(parse_word(w)); });
    m.def("moment_limit", [](const std::string& w) { return moment_limit(parse_word(w)); });
    m.def("cov_limit_semiclosed", [](const std::string& inner, const std::string& outer, const std::string& ch) {
        return cov_limit_semiclosed({parse_word(inner), parse_word(outer)}, channel_arg(ch));
    }, py::arg("inner"), py::arg("outer"), py::arg("channel") = "complex");
    m.def("cov_limit_closed", [](const std::string& family, int p, int q, const std::string& ch) {
        return cov_limit_closed(parse_family(family), p, q, channel_arg(ch));
    }, py::arg("family"), py::arg("p"), py::arg("q"), py::arg("channel") = "complex");
    m.def("catalan", &catalan);
    m.def("fuss_catalan", &fuss_catalan);
    m.def("fuss_catalan_series", &fuss_catalan_series);

    m.def("exact_cov", [](const std::string& inner, const std::string& outer, const std::string& ch) {
        return exact_cov(parse_word(inner), parse_word(outer), channel_arg(ch));
    }, py::arg("inner"), py::arg("outer"), py::arg("channel") = "complex");
    m.def("exact_moment", [](const std::vector<std::string>& words, const std::string& ch, bool normalized) {
        TraceWordSystem s;
        for (const auto& w : words) s.words.push_back(parse_word(w));
        s.channel = channel_arg(ch);
        return exact_moment(s, normalized);
    }, py::arg("words"), py::arg("channel") = "complex", py::arg("normalized") = false);
    m.def("exact_cumulant", [](const std::vector<std::string>& words, const std::string& ch) {
        TraceWordSystem s;
        for (const auto& w : words) s.words.push_back(parse_word(w));
        s.channel = channel_arg(ch);
        return exact_cumulant(s);
    }, py::arg("words"), py::arg("channel") = "complex");

    m.def("estimate_cov", [](const std::string& inner, const std::string& outer, int N, double gamma,
                             const std::string& ch, int reps, std::uint64_t seed) {
        EnsembleSpec spec;
        spec.N = N;
        spec.default_gamma = gamma;
        spec.channel = channel_arg(ch);
        spec.seed = seed;
        py::gil_scoped_release release;
        return estimate_cov(spec, parse_word(inner), parse_word(outer), reps);
    }, py::arg("inner"), py::arg("outer"), py::arg("N"), py::arg("gamma"), py::arg("channel") = "complex",
          py::arg("reps") = 2000, py::arg("seed") = 20240917);

    m.def("centered_cov_limit", [](const std::string& a, const std::string& b, const std::string& ch) {
        return centered_cov_limit(parse_cluster_word(a), parse_cluster_word(b), channel_arg(ch));
    }, py::arg("inner"), py::arg("outer"), py::arg("channel") = "complex");
    m.def("sstar_cov_limit", [](const std::string& a, const std::string& b, const std::string& ch) {
        return sstar_cov_limit(parse_cluster_word(a), parse_cluster_word(b), channel_arg(ch));
    }, py::arg("inner"), py::arg("outer"), py::arg("channel") = "complex");
    m.def("second_order_rhs", [](const std::string& a, const std::string& b, const std::string& ch) {
        return second_order_rhs(parse_cluster_word(a), parse_cluster_word(b), channel_arg(ch));
    }, py::arg("inner"), py::arg("outer"), py::arg("channel") = "complex");

    m.def("verify", [](const std::string& suite, int max_letters) {
        VerifyOptions opt;
        opt.max_letters = max_letters;
        std::map<std::string, std::pair<long, long>> out;
        for (const auto& r : run_suite(suite, opt)) out[r.suite] = {r.passed(), r.failed()};
        return out;
    }, py::arg("suite") = "all", py::arg("max_letters") = 10);
}
