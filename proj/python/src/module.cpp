#include "flagcw/charclass.hpp"
#include "flagcw/enumerate.hpp"
#include "flagcw/flagchow.hpp"
#include "flagcw/steenrod.hpp"
#include "flagcw/suites.hpp"
#include "flagcw/symfunc.hpp"
#include "flagcw/wdring.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

namespace py = pybind11;
using namespace flagcw;

// mpz_class <-> Python int through the decimal string form.
namespace pybind11::detail {

template <>
struct type_caster<mpz_class> {
    PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

    bool load(handle src, bool)
    {
        if (!PyLong_Check(src.ptr())) return false;
        object text = reinterpret_steal<object>(PyObject_Str(src.ptr()));
        if (!text) {
            PyErr_Clear();
            return false;
        }
        return value.set_str(text.cast<std::string>(), 10) == 0;
    }

    static handle cast(const mpz_class& v, return_value_policy, handle)
    {
        std::string s = v.get_str();
        return PyLong_FromString(s.c_str(), nullptr, 10);
    }
};

}  // namespace pybind11::detail

namespace {

FlagShape to_shape(const py::object& s)
{
    if (py::isinstance<py::str>(s)) return FlagShape::parse(s.cast<std::string>());
    return FlagShape(s.cast<std::vector<int>>());
}

TwistClass to_twist(const py::object& t, const FlagShape& shape)
{
    if (t.is_none()) return TwistClass(shape.blocks(), 0);
    if (py::isinstance<py::str>(t)) return TwistClass::parse(t.cast<std::string>(), shape.blocks());
    uint32_t mask = 0;
    for (int b : t.cast<std::vector<int>>()) {
        if (b < 1 || b > shape.blocks()) throw std::invalid_argument("twist block outside the shape");
        mask ^= 1u << (b - 1);
    }
    return TwistClass(shape.blocks(), mask);
}

std::vector<BigInt> coefficients(const Polynomial& p) { return t_coefficients(p); }

py::dict classes_dict(const BundleClasses& c, int roots)
{
    py::dict d;
    d["rank"] = c.rank;
    d["euler"] = c.euler.to_string();
    d[roots == 2 ? "pontryagin" : "chern"] = c.total.to_string();
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Chow, Witt and mod-2 invariants of flag varieties";
    py::register_exception<std::invalid_argument>(m, "ValidationError", PyExc_ValueError);

    m.def("chow_poincare", [](const py::object& s) { return coefficients(chow_poincare(to_shape(s))); },
          py::arg("shape"), "Coefficients of the Chow Poincare polynomial.");
    m.def(
        "w_poincare",
        [](const py::object& s, const py::object& t) {
            FlagShape shape = to_shape(s);
            return coefficients(wd_poincare(shape, to_twist(t, shape)));
        },
        py::arg("shape"), py::arg("twist") = py::none(), "Ranks of the W-cohomology ring by degree.");
    m.def(
        "torsion_poincare",
        [](const py::object& s, const py::object& t) {
            FlagShape shape = to_shape(s);
            return coefficients(torsion_poincare_from_sq2(shape, to_twist(t, shape)));
        },
        py::arg("shape"), py::arg("twist") = py::none(), "2-torsion ranks from the Sq^2 complex.");
    m.def(
        "torsion_poincare_closed",
        [](int n, bool twisted) { return coefficients(torsion_poincare_closed(n, twisted)); }, py::arg("n"),
        py::arg("twisted") = false);
    m.def(
        "bockstein_ranks",
        [](const py::object& s, const py::object& t) {
            FlagShape shape = to_shape(s);
            return bockstein_cohomology_ranks(shape, to_twist(t, shape));
        },
        py::arg("shape"), py::arg("twist") = py::none());

    m.def(
        "euler_class",
        [](const std::string& expr, int roots, int blocks) {
            return classes_dict(evaluate_bundle(parse_bundle(expr), roots, blocks), roots);
        },
        py::arg("expr"), py::arg("roots") = 2, py::arg("blocks") = 0,
        "Rank, Euler class and total class of a bundle expression.");
    m.def("euler_sym_tensor", [](int a, int b) { return euler_sym_tensor(a, b).to_string(); });
    m.def("euler_sym_sum_rk2", [](int k) { return euler_sym_sum_rk2(k).to_string(); });
    m.def("q_spec", [](const std::vector<int>& parts, int m) { return q_spec(Partition(parts), m); });

    m.def("hypersurface_count", &hypersurface_count, py::arg("k"), py::arg("n"), py::arg("d"));
    m.def("count_lines_cubic", [] {
        CountResult r = count_lines_cubic();
        py::dict d;
        d["complex"] = r.complex;
        d["real"] = *r.real;
        return d;
    });
    m.def("count_quintic_fourplanes", &count_quintic_fourplanes);
    m.def("count_flags_complex", [] {
        FlagComplexCount c = count_flags_complex();
        py::dict d;
        d["via_product"] = c.via_product;
        d["via_pushforward"] = c.via_pushforward;
        d["fiber_pushforward"] = c.fiber_pushforward;
        return d;
    });
    m.def("count_flags_real", [] {
        RealFlagCount r = count_flags_real();
        py::dict d;
        d["primary"] = r.primary;
        d["diagnostic"] = r.diagnostic;
        d["upper"] = r.upper;
        d["lower"] = r.lower;
        return d;
    });
    m.def(
        "gw_form",
        [](const BigInt& c, const BigInt& r) {
            GWForm g = gw_form(c, r);
            return py::make_tuple(g.plus, g.minus);
        },
        py::arg("complex"), py::arg("real"));

    m.def("piqp_check", &piqp_check, py::arg("n"), py::arg("i"), py::arg("j"));
    m.def("schubert_ideal_rank", &schubert_ideal_rank, py::arg("n"), py::arg("i"));
    m.def(
        "ann_top_chern", [](const py::object& s, int block) { return ann_top_chern(to_shape(s), block); },
        py::arg("shape"), py::arg("block") = 0);
    m.def(
        "ann_euler",
        [](const py::object& s, int block) {
            WRing ring(to_shape(s));
            AnnihilatorReport r = ann_euler(ring, block);
            py::dict d;
            d["generator"] = r.generator_text;
            d["ok"] = r.ok();
            d["pieces"] = r.pieces.size();
            return d;
        },
        py::arg("shape"), py::arg("block"));
    m.def("run_suite", [](const std::string& name) {
        py::list out;
        for (const auto& c : run_suite(name)) out.append(py::make_tuple(c.name, c.pass, c.detail));
        return out;
    });
    m.def("suite_names", &suite_names);

    py::class_<WRing, std::shared_ptr<WRing>>(m, "WRing")
        .def(py::init([](const py::object& s) { return std::make_shared<WRing>(to_shape(s)); }), py::arg("shape"))
        .def_property_readonly("parity", &WRing::parity_name)
        .def_property_readonly("top_degree", &WRing::top_degree)
        .def_property_readonly("total_rank", &WRing::total_rank)
        .def("generators",
             [](const WRing& w) {
                 py::list out;
                 for (const auto& g : w.generators()) out.append(py::make_tuple(g.name, g.degree, g.twist.to_string()));
                 return out;
             })
        .def(
            "rank",
            [](const WRing& w, int degree, const py::object& t) {
                return w.rank(Grade{degree, to_twist(t, w.shape()).mask()});
            },
            py::arg("degree"), py::arg("twist") = py::none())
        .def(
            "basis",
            [](const WRing& w, int degree, const py::object& t) {
                return w.basis_labels(Grade{degree, to_twist(t, w.shape()).mask()});
            },
            py::arg("degree"), py::arg("twist") = py::none());
}
