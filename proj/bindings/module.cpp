#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "treehardy/random.hpp"
#include "treehardy/schur.hpp"
#include "treehardy/verify.hpp"

namespace py = pybind11;
using namespace treehardy;

PYBIND11_MODULE(_core, m) {
    m.doc() = "operator calculus on a homogeneous tree";

    py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<DivergenceError>(m, "DivergenceError", PyExc_ValueError);
    py::register_exception<RecursionBreakdownError>(m, "RecursionBreakdownError",
                                                    PyExc_ArithmeticError);

    py::class_<KElement>(m, "KElement")
        .def(py::init<>())
        .def(py::init<std::vector<Complex>, Complex>(), py::arg("prefix"),
             py::arg("tail") = Complex{})
        .def_static("constant", &KElement::constant)
        .def_static("indicator", &KElement::indicator)
        .def_static("one", &KElement::one)
        .def_static("zero", &KElement::zero)
        .def_property_readonly("prefix", &KElement::prefix)
        .def_property_readonly("tail", &KElement::tail)
        .def("at", &KElement::at)
        .def("__add__",
             [](const KElement& a, const KElement& b) { return a + b; })
        .def("__sub__",
             [](const KElement& a, const KElement& b) { return a - b; })
        .def("__neg__", [](const KElement& a) { return -a; })
        .def("__mul__",
             [](const KElement& a, const KElement& b) { return a * b; })
        .def("__rmul__", [](const KElement& a, Complex l) { return l * a; })
        .def("__eq__",
             [](const KElement& a, const KElement& b) { return a == b; })
        .def("__repr__", [](const KElement& c) {
            std::string out = "KElement(prefix_size=" +
                              std::to_string(c.prefix_size()) + ", tail=(" +
                              std::to_string(c.tail().real()) + "," +
                              std::to_string(c.tail().imag()) + "))";
            return out;
        });

    m.def("conj", &k_conj);
    m.def("shift", &k_shift);
    m.def("bracket", &k_bracket);
    m.def("rho", &k_rho);
    m.def("in_disk", &in_disk);
    m.def("invert", &k_invert, py::arg("c"), py::arg("threshold") = 1e-9);
    m.def("sqrt", &k_sqrt);
    m.def("norm_inf", &k_norm_inf);
    m.def("k2_norm", &k2_norm);
    m.def("k2_inner", &k2_inner);

    py::class_<HardySeries>(m, "HardySeries")
        .def(py::init<>())
        .def(py::init<std::vector<KElement>>())
        .def_static("one", &HardySeries::one)
        .def_static("zero", &HardySeries::zero)
        .def_static("monomial", &HardySeries::monomial)
        .def_static("constant", &HardySeries::constant)
        .def_property_readonly("coeffs", &HardySeries::coeffs)
        .def_property_readonly("degree", &HardySeries::degree)
        .def("coeff", &HardySeries::coeff)
        .def("is_hilbert_schmidt", &HardySeries::is_hilbert_schmidt)
        .def("__add__",
             [](const HardySeries& a, const HardySeries& b) { return a + b; })
        .def("__sub__",
             [](const HardySeries& a, const HardySeries& b) { return a - b; })
        .def("__mul__",
             [](const HardySeries& s, const HardySeries& f) {
                 return series_mul(s, f);
             })
        .def("__mul__", [](const HardySeries& s, const KElement& p) { return s * p; });

    m.def("series_mul", &series_mul);
    m.def("point_eval", &point_eval);
    m.def("h2_inner", &h2_inner);
    m.def("h2_norm", &h2_norm);
    m.def("series_dist", &series_dist);
    m.def("bezout_div", &bezout_div);

    py::class_<KernelResult>(m, "KernelResult")
        .def_readonly("series", &KernelResult::series)
        .def_readonly("order", &KernelResult::order);
    m.def("kernel", &kernel, py::arg("c"), py::arg("tol") = 1e-12);

    py::class_<BlaschkeResult>(m, "BlaschkeResult")
        .def_readonly("b", &BlaschkeResult::b)
        .def_readonly("l", &BlaschkeResult::l)
        .def_readonly("kaa", &BlaschkeResult::kaa)
        .def_readonly("order", &BlaschkeResult::order);
    m.def("blaschke", &blaschke, py::arg("a"), py::arg("tol") = 1e-12,
          py::arg("inv_threshold") = 1e-9);

    m.def("schur_kernel", &schur_kernel, py::arg("s"), py::arg("c"), py::arg("d"),
          py::arg("tol") = 1e-12);
    m.def("gram", &gram, py::arg("s"), py::arg("points"), py::arg("vectors"),
          py::arg("tol") = 1e-12);

    py::class_<PsdReport>(m, "PsdReport")
        .def_readonly("psd", &PsdReport::psd)
        .def_readonly("min_eigenvalue", &PsdReport::min_eigenvalue);
    m.def("is_psd", &is_psd, py::arg("g"), py::arg("tol_eig") = 1e-8);

    py::class_<InterpolationSolution>(m, "InterpolationSolution")
        .def_readonly("blaschke_product", &InterpolationSolution::blaschke_product)
        .def_readonly("ks", &InterpolationSolution::ks)
        .def_readonly("residuals", &InterpolationSolution::residuals);
    m.def(
        "interpolate",
        [](const std::vector<KElement>& points, double tol, double inv_threshold) {
            return interpolate(InterpolationProblem{points, tol, inv_threshold});
        },
        py::arg("points"), py::arg("tol") = 1e-12, py::arg("inv_threshold") = 1e-9);

    py::class_<FiniteTree>(m, "FiniteTree")
        .def(py::init<int, int>(), py::arg("q"), py::arg("depth"))
        .def_property_readonly("q", &FiniteTree::q)
        .def_property_readonly("depth", &FiniteTree::depth)
        .def_property_readonly("node_count", &FiniteTree::node_count);

    py::class_<CuntzReport>(m, "CuntzReport")
        .def_readonly("box_residual", &CuntzReport::box_residual)
        .def_readonly("sum_residual", &CuntzReport::sum_residual)
        .def_readonly("shift_sum_residual", &CuntzReport::shift_sum_residual)
        .def_readonly("left_inverse_residual", &CuntzReport::left_inverse_residual)
        .def_readonly("isometry_residual", &CuntzReport::isometry_residual)
        .def("max_residual", &CuntzReport::max_residual);
    m.def("cuntz_residuals", &cuntz_residuals, py::arg("tree"),
          py::arg("interior_depth"));

    m.def(
        "series_to_matrix",
        [](const HardySeries& s, const FiniteTree& tree) {
            return Eigen::MatrixXcd(series_to_operator(s, tree).matrix());
        },
        py::arg("s"), py::arg("tree"),
        "dense matrix of the series acting on the truncated tree");
    m.def(
        "matrix_to_series",
        [](const FiniteTree& tree, const Eigen::MatrixXcd& mat, int degree_cap,
           double tol) {
            return operator_to_series(
                TreeOperator{tree, Eigen::SparseMatrix<Complex>(mat.sparseView())},
                degree_cap, tol);
        },
        py::arg("tree"), py::arg("matrix"), py::arg("degree_cap"),
        py::arg("tol") = 1e-10);
}
