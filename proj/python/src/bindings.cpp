#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "sgk/algorithms.hpp"
#include "sgk/io.hpp"
#include "sgk/kernels.hpp"
#include "sgk/semiring_registry.hpp"
#include "sgk/sparse.hpp"

namespace py = pybind11;
using namespace sgk;

namespace {

[[noreturn]] void file_error(const std::string& path) {
    PyErr_SetString(PyExc_OSError, ("cannot open " + path).c_str());
    throw py::error_already_set();
}

template <Scalar T>
std::map<Index, T> as_dict(const SparseVector<T>& v) {
    std::map<Index, T> out;
    for (Index k = 0; k < v.nvals(); ++k) out.emplace(v.indices()[k], v.values()[k]);
    return out;
}

template <Scalar T>
SparseVector<T> from_dict(Index size, const std::map<Index, T>& d) {
    std::vector<std::pair<Index, T>> entries(d.begin(), d.end());
    return build_vector<T>(size, std::move(entries), ops::plus_monoid<T>());
}

template <Scalar T>
CompressedMatrix<T> from_triples(Index nrows, Index ncols, const std::vector<Index>& rows,
                                 const std::vector<Index>& cols, const std::vector<T>& vals) {
    if (rows.size() != cols.size() || rows.size() != vals.size())
        throw Error(ErrorCode::dimension_mismatch, "rows, cols and vals must have the same length");
    std::vector<Triple<T>> t;
    t.reserve(rows.size());
    for (std::size_t k = 0; k < rows.size(); ++k) t.push_back({rows[k], cols[k], vals[k]});
    return to_compressed(build_from_triples<T>(nrows, ncols, std::move(t), ops::plus_monoid<T>()));
}

template <Scalar T>
std::tuple<std::vector<Index>, std::vector<Index>, std::vector<T>> triples_of(const CompressedMatrix<T>& m) {
    std::vector<Index> r, c;
    std::vector<T> v;
    const auto coo = to_tuples(m);
    for (const auto& t : coo.triples()) {
        r.push_back(t.row);
        c.push_back(t.col);
        v.push_back(t.val);
    }
    return {r, c, v};
}

template <Scalar T>
void bind_matrix(py::module_& m, const char* name) {
    using M = CompressedMatrix<T>;
    py::class_<M>(m, name)
        .def(py::init(&from_triples<T>), py::arg("nrows"), py::arg("ncols"), py::arg("rows"), py::arg("cols"),
             py::arg("vals"))
        .def_property_readonly("nrows", &M::nrows)
        .def_property_readonly("ncols", &M::ncols)
        .def_property_readonly("nvals", &M::nvals)
        .def("at", &M::at)
        .def("triples", &triples_of<T>)
        .def("transpose", [](const M& a) { return transpose(a); })
        .def("is_symmetric", [](const M& a) { return is_symmetric(a); })
        .def("__eq__", [](const M& a, const M& b) { return to_tuples(a).triples() == to_tuples(b).triples(); })
        .def("__repr__", [name](const M& a) {
            return std::string(name) + "(" + std::to_string(a.nrows()) + "x" + std::to_string(a.ncols()) +
                   ", nvals=" + std::to_string(a.nvals()) + ")";
        });

    m.def("mxm", [](const M& a, const M& b, const std::string& semiring) {
        return mxm(a, b, registry_get<T>(semiring));
    }, py::arg("a"), py::arg("b"), py::arg("semiring") = "plus_times");
    m.def("mxv", [](const M& a, const std::map<Index, T>& x, const std::string& semiring, bool transpose) {
        const Index len = transpose ? a.nrows() : a.ncols();
        return as_dict(mxv(a, from_dict(len, x), registry_get<T>(semiring), transpose ? Transpose::yes : Transpose::no));
    }, py::arg("a"), py::arg("x"), py::arg("semiring") = "plus_times", py::arg("transpose") = false);
    m.def("degrees", [](const M& a, const std::string& dir) {
        if (dir != "in" && dir != "out") throw Error(ErrorCode::invalid_argument, "direction must be 'in' or 'out'");
        return as_dict(degrees(a, dir == "in" ? Direction::in : Direction::out));
    }, py::arg("a"), py::arg("direction") = "out");
    m.def("bfs", [](const M& a, const std::vector<Index>& sources) { return as_dict(bfs(a, sources).levels); },
          py::arg("a"), py::arg("sources"));
    m.def("sssp", [](const M& a, Index source) { return as_dict(sssp_minplus(a, source)); }, py::arg("a"),
          py::arg("source"));
    m.def("connected_components", [](const M& a) { return connected_components(a).values(); }, py::arg("a"));
    m.def("triangle_count", [](const M& a) { return triangle_count(a); }, py::arg("a"));
    m.def("clustering", [](const M& a) { return as_dict(clustering_coefficients(a)); }, py::arg("a"));
    m.def("pagerank", [](const M& a, double alpha, Index max_iters, double tol) {
        auto r = pagerank(a, alpha, max_iters, tol);
        return py::make_tuple(as_dict(r.ranks), r.iterations, r.residual);
    }, py::arg("a"), py::arg("alpha") = 0.85, py::arg("max_iters") = 100, py::arg("tol") = 1e-8);
    m.def("write_matrix_market", [](const M& a, const std::string& path) {
        std::ofstream out(path);
        if (!out) file_error(path);
        write_matrix_market(to_tuples(a), out);
    }, py::arg("a"), py::arg("path"));
}

py::object read_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) file_error(path);
    auto file = read_matrix_market(in);
    return std::visit(
        [](auto& coo) -> py::object {
            using T = typename std::decay_t<decltype(coo)>::value_type;
            if constexpr (std::is_same_v<T, std::complex<double>>)
                throw Error(ErrorCode::domain_not_supported, "complex matrices are not exposed to Python");
            else
                return py::cast(to_compressed(coo));
        },
        file.matrix);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Semiring sparse matrices and graph algorithms";

    static py::exception<Error> sgk_error(m, "SgkError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object err = sgk_error;
            py::object instance = err(e.what());
            instance.attr("code") = std::string(to_string(e.code()));
            PyErr_SetObject(err.ptr(), instance.ptr());
        }
    });

    bind_matrix<double>(m, "Matrix");
    bind_matrix<std::int64_t>(m, "IntMatrix");

    m.def("read_matrix_market", &read_matrix, py::arg("path"));
    m.def("semiring_names", [] { return SemiringRegistry::global().names(); });
    m.def("set_threads", [](int n) {
        if (n < 1) throw Error(ErrorCode::invalid_argument, "thread count must be positive");
        ::setenv("SGK_THREADS", std::to_string(n).c_str(), 1);
    }, py::arg("n"));
}
