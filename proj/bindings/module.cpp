#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "splitq/chords.hpp"
#include "splitq/invariants.hpp"
#include "splitq/oracle.hpp"
#include "splitq/qcomb.hpp"
#include "splitq/splitting.hpp"
#include "splitq/typesys.hpp"

namespace py = pybind11;
using namespace splitq;

namespace {

py::int_ to_pyint(const Int& v) {
    std::string s = v.str();
    PyObject* obj = PyLong_FromString(s.c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

Int from_pyint(const py::int_& v) {
    return Int(static_cast<std::string>(py::str(static_cast<const py::object&>(v))));
}

// Polynomials cross the boundary as coefficient lists, lowest degree first.
py::list uni_to_list(const UniPoly& p) {
    py::list out;
    for (const auto& c : p.coeffs()) out.append(to_pyint(c));
    return out;
}

// Bivariate polynomials as [(eq, et, coeff), ...] sorted by (et, eq).
py::list bivar_to_list(const BivarPoly& p) {
    py::list out;
    for (const auto& [k, c] : p.terms())
        out.append(py::make_tuple(k.eq, k.et, to_pyint(c)));
    return out;
}

FqMatrix matrix_for(const std::string& type_str, int p, int e) {
    return matrix_from_type(parse_type(type_str), make_field(p, e));
}

} // namespace

PYBIND11_MODULE(_splitq, m) {
    m.doc() = "exact enumeration of splitting subspaces over finite fields";

    // Translators run newest-first, so the base class goes first.
    py::register_exception<Error>(m, "SplitqError");
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded");
    py::register_exception<NotRealizable>(m, "NotRealizable");

    // q-combinatorics
    m.def("q_integer", [](int n) { return uni_to_list(q_integer(n)); }, py::arg("n"));
    m.def("gaussian_binomial",
          [](int n, int k) { return uni_to_list(gaussian_binomial(n, k)); },
          py::arg("n"), py::arg("k"));
    m.def("binomial", [](int n, int k) { return to_pyint(binomial(n, k)); },
          py::arg("n"), py::arg("k"));
    m.def("binom2", &binom2, py::arg("x"));

    // types
    m.def("partitions_of", [](int n) {
        py::list out;
        for (const auto& p : partitions_of(n)) out.append(p.parts());
        return out;
    }, py::arg("n"));
    m.def("types_of_size", [](int n) {
        py::list out;
        for (const auto& tau : types_of_size(n)) out.append(format_type(tau));
        return out;
    }, py::arg("n"));
    m.def("canonical_type", [](const std::string& s) {
        return format_type(parse_type(s));
    }, py::arg("type"));

    // invariant subspace generating functions
    m.def("ramare_f", [](const std::vector<int>& parts) {
        return bivar_to_list(ramare_f(Partition(parts)));
    }, py::arg("partition"));
    m.def("f_tau", [](const std::string& s) {
        return bivar_to_list(f_tau(parse_type(s)));
    }, py::arg("type"));
    m.def("x_polys", [](const std::string& s) {
        py::list out;
        for (const auto& x : x_polys(parse_type(s)).X) out.append(uni_to_list(x));
        return out;
    }, py::arg("type"));

    // splitting counts
    m.def("sigma_main", [](const std::string& s) {
        return uni_to_list(sigma_main(parse_type(s)));
    }, py::arg("type"));
    m.def("sigma_via_recurrence", [](const std::string& s) {
        return uni_to_list(sigma_via_recurrence(parse_type(s)));
    }, py::arg("type"));
    m.def("sigma_simple_closed",
          [](int m) { return uni_to_list(sigma_simple_closed(m)); }, py::arg("m"));
    m.def("count_ab", [](const std::string& s, int a, int b) {
        return uni_to_list(count_ab(parse_type(s), a, b));
    }, py::arg("type"), py::arg("a"), py::arg("b"));
    m.def("vanishing_check", &vanishing_check, py::arg("m"), py::arg("i"), py::arg("k"));
    m.def("tau_i_zero_check", &tau_i_zero_check, py::arg("m"), py::arg("i"));
    m.def("xmatrix_determinant",
          [](int m) { return uni_to_list(xmatrix_determinant(m)); }, py::arg("m"));

    // chord diagrams
    m.def("crossings", [](const std::vector<int>& pairing) {
        return crossings(ChordDiagram(pairing));
    }, py::arg("pairing"));
    m.def("touchard_enum", [](int m) { return uni_to_list(touchard_enum(m)); },
          py::arg("m"));
    m.def("touchard_refine", [](int m) { return uni_to_list(touchard_refine(m)); },
          py::arg("m"));
    m.def("touchard_riordan_rhs",
          [](int m) { return uni_to_list(touchard_riordan_rhs(m)); }, py::arg("m"));
    m.def("r_values", [](const std::vector<int>& c, int mm) {
        return r_values(c, mm);
    }, py::arg("c"), py::arg("m"));

    // oracle
    m.def("oracle_count_splitting",
          [](const std::string& s, int p, int e, int d) {
              FqMatrix T = matrix_for(s, p, e);
              return count_splitting(T, T.rows() / d, d);
          },
          py::arg("type"), py::arg("p"), py::arg("e") = 1, py::arg("d") = 2);
    m.def("oracle_count_invariant",
          [](const std::string& s, int p, int e, int k) {
              return count_invariant(matrix_for(s, p, e), k);
          },
          py::arg("type"), py::arg("p"), py::arg("e"), py::arg("k"));
    m.def("oracle_classify", [](const std::string& s, int p, int e) {
        return format_type(classify_matrix(matrix_for(s, p, e)));
    }, py::arg("type"), py::arg("p"), py::arg("e") = 1);

    m.def("eval_poly", [](const std::vector<py::int_>& coeffs, const py::int_& q0) {
        std::vector<Int> c;
        for (const auto& x : coeffs) c.push_back(from_pyint(x));
        return to_pyint(UniPoly(std::move(c)).eval(from_pyint(q0)));
    }, py::arg("coeffs"), py::arg("q"));
}
