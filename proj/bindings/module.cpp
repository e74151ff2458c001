// Python bindings: thin wrappers over the core types, converting matrices to
// and from nested lists of element codes at the boundary.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "rankeq/equiv.hpp"
#include "rankeq/io.hpp"
#include "rankeq/oracle.hpp"
#include "rankeq/reduction.hpp"

namespace py = pybind11;
using namespace rankeq;

namespace {

using PyMat = std::vector<std::vector<Fel>>;

// pybind11 cannot hold a shared_ptr<const Fq> directly; wrap it.
struct PyField {
    FqPtr ptr;
};

MatFq to_mat(const FqPtr& field, const PyMat& rows) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows[0].size()) : 0;
    MatFq m(field, r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw ShapeMismatch("ragged matrix");
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

PyMat from_mat(const MatFq& m) {
    PyMat rows(m.rows(), std::vector<Fel>(m.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) rows[i][j] = m.at(i, j);
    return rows;
}

std::vector<PyMat> from_mats(const std::vector<MatFq>& ms) {
    std::vector<PyMat> out;
    for (const auto& m : ms) out.push_back(from_mat(m));
    return out;
}

struct PyOutcome {
    std::string verdict;
    std::optional<PyMat> left, right;
    std::string reason;
};

PyOutcome wrap_outcome(const SolveOutcome& out) {
    PyOutcome r;
    switch (out.verdict) {
        case Verdict::Equivalent: r.verdict = "equivalent"; break;
        case Verdict::NotEquivalent: r.verdict = "not_equivalent"; break;
        case Verdict::InvalidPromise: r.verdict = "invalid_promise"; break;
    }
    if (out.witness) {
        if (out.witness->left) r.left = from_mat(*out.witness->left);
        if (out.witness->right) r.right = from_mat(*out.witness->right);
    }
    r.reason = out.reason;
    return r;
}

Witness make_witness(const FqPtr& field, const std::optional<PyMat>& left,
                     const std::optional<PyMat>& right) {
    Witness w;
    if (left) w.left = to_mat(field, *left);
    if (right) w.right = to_mat(field, *right);
    return w;
}

}  // namespace

PYBIND11_MODULE(_rankeq, mod) {
    mod.doc() = "rank-metric code equivalence toolkit";

    py::register_exception<rankeq::Error>(mod, "RankeqError");

    py::class_<PyField>(mod, "Field")
        .def(py::init([](std::uint64_t p, std::uint64_t e,
                         std::optional<std::vector<std::uint64_t>> modulus,
                         std::uint64_t seed) {
                 Rng rng(seed);
                 return PyField{make_field(p, e, modulus, &rng)};
             }),
             py::arg("p"), py::arg("e") = 1, py::arg("modulus") = std::nullopt,
             py::arg("seed") = 1)
        .def_property_readonly("p", [](const PyField& k) { return k.ptr->p(); })
        .def_property_readonly("e", [](const PyField& k) { return k.ptr->e(); })
        .def_property_readonly("q", [](const PyField& k) { return k.ptr->q(); })
        .def_property_readonly(
            "modulus", [](const PyField& k) { return k.ptr->modulus(); })
        .def("add", [](const PyField& k, Fel a, Fel b) { return k.ptr->add(a, b); })
        .def("sub", [](const PyField& k, Fel a, Fel b) { return k.ptr->sub(a, b); })
        .def("mul", [](const PyField& k, Fel a, Fel b) { return k.ptr->mul(a, b); })
        .def("inv", [](const PyField& k, Fel a) { return k.ptr->inv(a); })
        .def("neg", [](const PyField& k, Fel a) { return k.ptr->neg(a); })
        .def("pow", [](const PyField& k, Fel a, std::uint64_t n) {
            return k.ptr->pow(a, n);
        })
        .def("__repr__", [](const PyField& k) {
            return "Field(q=" + std::to_string(k.ptr->q()) + ")";
        });

    py::class_<MatrixCode>(mod, "MatrixCode")
        .def(py::init([](const PyField& field, int m, int n,
                         const std::vector<PyMat>& gens) {
                 std::vector<MatFq> g;
                 for (const auto& x : gens) g.push_back(to_mat(field.ptr, x));
                 return MatrixCode(field.ptr, m, n, g);
             }),
             py::arg("field"), py::arg("m"), py::arg("n"),
             py::arg("generators"))
        .def_property_readonly(
            "field", [](const MatrixCode& c) { return PyField{c.field()}; })
        .def_property_readonly("m", &MatrixCode::m)
        .def_property_readonly("n", &MatrixCode::n)
        .def_property_readonly("dim", &MatrixCode::dim)
        .def_property_readonly(
            "basis", [](const MatrixCode& c) { return from_mats(c.basis()); })
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def("__repr__", [](const MatrixCode& c) {
            return "MatrixCode(m=" + std::to_string(c.m()) +
                   ", n=" + std::to_string(c.n()) +
                   ", dim=" + std::to_string(c.dim()) + ")";
        });

    py::class_<PyOutcome>(mod, "Outcome")
        .def_readonly("verdict", &PyOutcome::verdict)
        .def_readonly("left", &PyOutcome::left)
        .def_readonly("right", &PyOutcome::right)
        .def_readonly("reason", &PyOutcome::reason)
        .def("__repr__", [](const PyOutcome& o) {
            return "Outcome(" + o.verdict + ")";
        });

    mod.def(
        "random_code",
        [](const PyField& field, int m, int n, int dim,
           std::uint64_t seed) {
            Rng rng(seed);
            return gen_random_code(field.ptr, m, n, dim, rng);
        },
        py::arg("field"), py::arg("m"), py::arg("n"), py::arg("dim"),
        py::arg("seed") = 1);

    mod.def(
        "mul_right",
        [](const MatrixCode& c, const PyMat& a) {
            return mul_right(c, to_mat(c.field(), a));
        },
        py::arg("code"), py::arg("a"));
    mod.def(
        "mul_left",
        [](const PyMat& p, const MatrixCode& c) {
            return mul_left(to_mat(c.field(), p), c);
        },
        py::arg("p"), py::arg("code"));

    mod.def(
        "expand_code",
        [](const PyField& ext, const PyMat& gen,
           const std::vector<Fel>& basis) {
            return expand_code(VectorCode(ext.ptr, to_mat(ext.ptr, gen)),
                               basis);
        },
        py::arg("ext_field"), py::arg("generator"), py::arg("basis"),
        "Expansion of an extension-field code in the given basis.");

    mod.def(
        "solve_mcre",
        [](const MatrixCode& c, const MatrixCode& d, std::uint64_t seed) {
            Rng rng(seed);
            return wrap_outcome(solve_mcre(c, d, rng));
        },
        py::arg("c"), py::arg("d"), py::arg("seed") = 1);

    mod.def(
        "solve_hvmce",
        [](const MatrixCode& c, const MatrixCode& d, std::uint64_t seed) {
            Rng rng(seed);
            return wrap_outcome(solve_hvmce(c, d, rng));
        },
        py::arg("c"), py::arg("d"), py::arg("seed") = 1);

    mod.def(
        "verify_witness",
        [](const MatrixCode& c, const MatrixCode& d,
           const std::optional<PyMat>& left,
           const std::optional<PyMat>& right) {
            return verify_witness(c, d, make_witness(c.field(), left, right));
        },
        py::arg("c"), py::arg("d"), py::arg("left") = std::nullopt,
        py::arg("right") = std::nullopt,
        "True when (left or I) * C * (right or I) = D.");

    mod.def(
        "conductor",
        [](const MatrixCode& c, const MatrixCode& d) {
            return from_mats(conductor(c, d));
        },
        py::arg("c"), py::arg("d"));
    mod.def(
        "right_stabilizer",
        [](const MatrixCode& c) {
            return from_mats(right_stabilizer(c).basis());
        },
        py::arg("c"));
    mod.def(
        "left_stabilizer",
        [](const MatrixCode& c) {
            return from_mats(left_stabilizer(c).basis());
        },
        py::arg("c"));

    mod.def(
        "component_profile",
        [](const MatrixCode& c, bool right, std::uint64_t seed) {
            Rng rng(seed);
            MatAlgebra s = right ? right_stabilizer(c) : left_stabilizer(c);
            return component_profile(s, rng);
        },
        py::arg("c"), py::arg("right") = true, py::arg("seed") = 1,
        "Component shapes (u, v) of the chosen stabilizer modulo its radical.");

    mod.def(
        "reduce_me_to_mce",
        [](const PyField& field, const PyMat& a, const PyMat& b) {
            auto inst =
                reduce_me_to_mce(to_mat(field.ptr, a), to_mat(field.ptr, b));
            return py::make_tuple(inst.c, inst.d, inst.cols_a, inst.cols_b);
        },
        py::arg("field"), py::arg("a"), py::arg("b"),
        "Returns (C, D, retained columns of A, retained columns of B).");

    mod.def(
        "brute_mcre",
        [](const MatrixCode& c, const MatrixCode& d) -> std::optional<PyMat> {
            auto q = brute_mcre(c, d);
            if (!q) return std::nullopt;
            return from_mat(*q);
        },
        py::arg("c"), py::arg("d"));

    mod.def(
        "load_mcode", [](const std::string& p) { return load_mcode(p); },
        py::arg("path"));
    mod.def(
        "save_mcode",
        [](const std::string& p, const MatrixCode& c) { save_mcode(p, c); },
        py::arg("path"), py::arg("code"));
}
