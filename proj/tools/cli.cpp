#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <complex>
#include <fstream>
#include <ostream>
#include <sstream>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "sgk/algorithms.hpp"
#include "sgk/io.hpp"
#include "sgk/kernels.hpp"
#include "sgk/semiring_registry.hpp"
#include "sgk/sparse.hpp"

namespace sgk::cli {

namespace {

using Json = nlohmann::ordered_json;
using Complex = std::complex<double>;
using AnyMatrix = std::variant<CompressedMatrix<std::int64_t>, CompressedMatrix<double>, CompressedMatrix<Complex>>;

/// Input that could not be read or has the wrong shape/domain for the command.
struct DataFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Flag combination rejected after parsing (still a usage error).
struct UsageFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <class T>
Json scalar_json(const T& v) {
    if constexpr (is_complex_v<T>) {
        return Json::array({v.real(), v.imag()});
    } else {
        return v;
    }
}

template <class T>
Json vector_json(const SparseVector<T>& v) {
    Json obj = Json::object();
    for (Index k = 0; k < v.nvals(); ++k) obj[std::to_string(v.indices()[k])] = scalar_json(v.values()[k]);
    return obj;
}

bool is_vector_object(const Json& j) {
    if (!j.is_object() || j.empty()) return false;
    return std::all_of(j.items().begin(), j.items().end(), [](const auto& item) {
        const auto& key = item.key();
        return !key.empty() && std::all_of(key.begin(), key.end(), [](unsigned char c) { return std::isdigit(c); });
    });
}

std::string tsv_cell(const Json& j) {
    if (j.is_array()) {
        std::string s;
        for (std::size_t k = 0; k < j.size(); ++k) s += (k ? "\t" : "") + tsv_cell(j[k]);
        return s;
    }
    if (j.is_string()) return j.get<std::string>();
    return j.dump();
}

// Vector results become "index<TAB>value" lines; other scalar fields become "# key<TAB>value".
void write_tsv(const Json& result, std::ostream& out) {
    if (!result.is_object()) {
        out << tsv_cell(result) << '\n';
        return;
    }
    if (is_vector_object(result)) {
        for (const auto& [k, v] : result.items()) out << k << '\t' << tsv_cell(v) << '\n';
        return;
    }
    for (const auto& [k, v] : result.items()) {
        if (!v.is_object() && !v.is_array()) out << "# " << k << '\t' << tsv_cell(v) << '\n';
    }
    for (const auto& [k, v] : result.items()) {
        if (v.is_object()) {
            for (const auto& [i, x] : v.items()) out << i << '\t' << tsv_cell(x) << '\n';
        } else if (v.is_array()) {
            for (const auto& row : v) out << tsv_cell(row) << '\n';
        }
    }
}

std::string lowercase(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

AnyMatrix load_matrix(const std::string& path, const CliConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw DataFailure("cannot open '" + path + "'");
    std::string first;
    std::getline(in, first);
    in.clear();
    in.seekg(0);
    try {
        AnyCooMatrix coo = lowercase(first).rfind("%%matrixmarket", 0) == 0
                               ? read_matrix_market(in).matrix
                               : read_edge_list(in, {cfg.weighted, cfg.undirected});
        return std::visit([](const auto& m) -> AnyMatrix { return to_compressed(m); }, coo);
    } catch (const Error& e) {
        throw DataFailure(path + ": " + e.what());
    }
}

template <Scalar T>
SparseVector<T> as_vector(const CompressedMatrix<T>& m, const std::string& path) {
    std::vector<std::pair<Index, T>> entries;
    const auto coo = to_tuples(m);
    if (m.ncols() == 1) {
        for (const auto& t : coo.triples()) entries.emplace_back(t.row, t.val);
        return build_vector(m.nrows(), std::move(entries), ops::sum_monoid<T>());
    }
    if (m.nrows() == 1) {
        for (const auto& t : coo.triples()) entries.emplace_back(t.col, t.val);
        return build_vector(m.ncols(), std::move(entries), ops::sum_monoid<T>());
    }
    throw DataFailure(path + ": a vector file must have a single column or a single row");
}

template <Scalar T>
CompressedMatrix<bool> nonzero_pattern(const CompressedMatrix<T>& m) {
    return apply_unary(m, UnaryOp<T, bool>{"nonzero", [](const T& x) { return x != T{}; }},
                       std::optional<bool>{false});
}

template <Scalar T>
void write_matrix_file(const CompressedMatrix<T>& m, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw DataFailure("cannot write '" + path + "'");
    try {
        write_matrix_market(to_tuples(m), out);
    } catch (const Error& e) {
        throw DataFailure(path + ": " + e.what());
    }
}

template <Scalar T>
Json matrix_summary(const CompressedMatrix<T>& m, const std::optional<std::string>& output) {
    Json r = {{"nrows", m.nrows()}, {"ncols", m.ncols()}, {"nnz", m.nvals()}};
    if (output) {
        write_matrix_file(m, *output);
        r["output"] = *output;
    } else {
        Json entries = Json::array();
        const auto coo = to_tuples(m);
        for (const auto& t : coo.triples()) entries.push_back(Json::array({t.row, t.col, scalar_json(t.val)}));
        r["entries"] = std::move(entries);
    }
    return r;
}

// Graph algorithms take real-valued inputs only.
template <class F>
Json with_real_matrix(const AnyMatrix& any, F&& f) {
    return std::visit(
        [&](const auto& m) -> Json {
            using T = typename std::decay_t<decltype(m)>::value_type;
            if constexpr (is_complex_v<T>) {
                throw Error(ErrorCode::domain_not_supported, "graph algorithms do not accept complex values");
            } else {
                return f(m);
            }
        },
        any);
}

Json run_info(const AnyMatrix& any) {
    return std::visit(
        [](const auto& m) -> Json {
            using T = typename std::decay_t<decltype(m)>::value_type;
            const bool square = m.nrows() == m.ncols();
            return {{"nrows", m.nrows()},
                    {"ncols", m.ncols()},
                    {"nnz", m.nvals()},
                    {"symmetric", square && is_symmetric(m)},
                    {"declared_symmetric", m.descriptor().symmetric},
                    {"domain", std::string(to_string(domain_of<T>))}};
        },
        any);
}

Json run_mxm(const AnyMatrix& a, const AnyMatrix& b, const CliConfig& cfg) {
    if (a.index() != b.index()) throw DataFailure("domain mismatch: operands hold different value domains");
    return std::visit(
        [&](const auto& A) -> Json {
            using M = std::decay_t<decltype(A)>;
            using T = typename M::value_type;
            const auto& B = std::get<M>(b);
            auto& registry = SemiringRegistry::global();
            if (registry.contains(cfg.semiring, domain_of<T>)) {
                return matrix_summary(mxm(A, B, registry.get<T>(cfg.semiring)), cfg.output);
            }
            if (registry.contains(cfg.semiring, Domain::boolean)) {
                return matrix_summary(mxm(nonzero_pattern(A), nonzero_pattern(B), registry.get<bool>(cfg.semiring)),
                                      cfg.output);
            }
            throw DataFailure("semiring '" + cfg.semiring + "' is not defined over " +
                              std::string(to_string(domain_of<T>)));
        },
        a);
}

Json run_mxv(const AnyMatrix& a, const AnyMatrix& vfile, const CliConfig& cfg) {
    if (a.index() != vfile.index()) throw DataFailure("domain mismatch: operands hold different value domains");
    const Transpose t = cfg.transpose ? Transpose::yes : Transpose::no;
    return std::visit(
        [&](const auto& A) -> Json {
            using M = std::decay_t<decltype(A)>;
            using T = typename M::value_type;
            const auto v = as_vector(std::get<M>(vfile), cfg.inputs[1]);
            auto& registry = SemiringRegistry::global();
            if (registry.contains(cfg.semiring, domain_of<T>)) {
                return vector_json(mxv(A, v, registry.get<T>(cfg.semiring), t));
            }
            if (registry.contains(cfg.semiring, Domain::boolean)) {
                auto vb = apply_unary(v, UnaryOp<T, bool>{"nonzero", [](const T& x) { return x != T{}; }},
                                      std::optional<bool>{false});
                return vector_json(mxv(nonzero_pattern(A), vb, registry.get<bool>(cfg.semiring), t));
            }
            throw DataFailure("semiring '" + cfg.semiring + "' is not defined over " +
                              std::string(to_string(domain_of<T>)));
        },
        a);
}

Json run_algorithm(const AnyMatrix& g, const CliConfig& cfg) {
    const std::string& c = cfg.command;
    if (c == "degrees") {
        const Direction dir = cfg.direction == "in" ? Direction::in : Direction::out;
        return with_real_matrix(g, [&](const auto& m) { return vector_json(degrees(m, dir)); });
    }
    if (c == "bfs") {
        return with_real_matrix(g, [&](const auto& m) {
            auto r = bfs(m, cfg.sources);
            return Json{{"levels", vector_json(r.levels)}, {"reached", r.reached}};
        });
    }
    if (c == "sssp") {
        return with_real_matrix(g, [&](const auto& m) -> Json {
            using T = typename std::decay_t<decltype(m)>::value_type;
            if constexpr (WeightScalar<T>) return vector_json(sssp_minplus(m, cfg.sources.front()));
            else throw Error(ErrorCode::domain_not_supported, "sssp needs numeric weights");
        });
    }
    if (c == "cc") {
        return with_real_matrix(g, [&](const auto& m) {
            auto labels = connected_components(m);
            return Json{{"labels", vector_json(labels)}, {"components", component_count(labels)}};
        });
    }
    if (c == "triangles") {
        return with_real_matrix(g, [&](const auto& m) { return Json(triangle_count(m)); });
    }
    if (c == "clustering") {
        return with_real_matrix(g, [&](const auto& m) { return vector_json(clustering_coefficients(m)); });
    }
    // pagerank
    return with_real_matrix(g, [&](const auto& m) {
        auto r = pagerank(m, cfg.alpha, cfg.max_iters, cfg.tol);
        return Json{{"ranks", vector_json(r.ranks)}, {"iterations", r.iterations}, {"residual", r.residual}};
    });
}

constexpr const char* footer =
    "Vertex indices on the command line and in results are 0-based (Matrix Market files\n"
    "remain 1-based). Inputs starting with a %%MatrixMarket banner are read as Matrix\n"
    "Market; anything else as a TAB-separated edge list (see --weighted, --undirected).\n"
    "Exit codes: 0 ok, 1 usage error, 2 data/parse error, 3 algorithm precondition failed.\n"
    "SGK_THREADS bounds the number of kernel worker threads.";

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CliConfig cfg;
    std::string format = "json";
    std::string output;
    Index single_source = 0;

    CLI::App app{"sgk: graph algorithms as semiring sparse linear algebra", "sgk"};
    app.footer(footer);
    app.require_subcommand(1);
    app.allow_extras(false);

    const auto semirings = SemiringRegistry::global().names();
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "tsv"}));
        sub->add_option("-o,--output", output, "Output file");
        sub->add_flag("--weighted", cfg.weighted, "Edge-list inputs carry a third weight column");
        sub->add_flag("--undirected", cfg.undirected, "Edge-list inputs are undirected");
    };
    auto add_graph = [&](const char* name, const char* help) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("file", cfg.inputs, "Graph file")->required()->expected(1);
        add_common(sub);
        return sub;
    };

    add_graph("info", "Dimensions, entry count, symmetry and domain of a matrix");
    add_graph("degrees", "In- or out-degree of every vertex")
        ->add_option("--dir", cfg.direction, "in or out")
        ->check(CLI::IsMember({"in", "out"}));
    add_graph("bfs", "Breadth-first levels from one or more sources")
        ->add_option("--source", cfg.sources, "Comma-separated source vertices")
        ->delimiter(',')
        ->required();
    add_graph("sssp", "Shortest-path distances (min-plus) from one source")
        ->add_option("--source", single_source, "Source vertex")
        ->required();
    add_graph("cc", "Connected components of an undirected graph");
    add_graph("triangles", "Triangle count of an undirected graph");
    add_graph("clustering", "Local clustering coefficients of an undirected graph");
    auto* pr = add_graph("pagerank", "PageRank by power iteration");
    pr->add_option("--alpha", cfg.alpha, "Damping factor")->capture_default_str();
    pr->add_option("--tol", cfg.tol, "L1 convergence tolerance")->capture_default_str();
    pr->add_option("--max-iters", cfg.max_iters, "Iteration limit")->capture_default_str();

    auto* mm = app.add_subcommand("mxm", "Sparse matrix-matrix product over a semiring");
    mm->add_option("--semiring", cfg.semiring, "Semiring name")->required()->check(CLI::IsMember(semirings));
    mm->add_option("inputs", cfg.inputs, "A B")->required()->expected(2);
    add_common(mm);

    auto* mv = app.add_subcommand("mxv", "Sparse matrix-vector product over a semiring");
    mv->add_option("--semiring", cfg.semiring, "Semiring name")->required()->check(CLI::IsMember(semirings));
    mv->add_flag("--transpose", cfg.transpose, "Multiply by the transpose of A");
    mv->add_option("inputs", cfg.inputs, "A v (v: Matrix Market file with one row or column)")
        ->required()
        ->expected(2);
    add_common(mv);

    auto* cv = app.add_subcommand("convert", "Rewrite a graph or matrix as a general Matrix Market file");
    cv->add_option("file", cfg.inputs, "Input file")->required()->expected(1);
    add_common(cv);

    try {
        app.parse(argc, argv);
        cfg.command = app.get_subcommands().front()->get_name();
        cfg.format = format == "tsv" ? OutputFormat::tsv : OutputFormat::json;
        if (!output.empty()) cfg.output = output;
        if (cfg.command == "sssp") cfg.sources = {single_source};
        if (cfg.command == "convert" && !cfg.output) throw UsageFailure("convert requires -o/--output");
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "sgk: " << e.what() << '\n';
        return exit_usage;
    } catch (const UsageFailure& e) {
        err << "sgk: " << e.what() << '\n';
        return exit_usage;
    }

    const auto start = std::chrono::steady_clock::now();
    Json result;
    const bool writes_matrix = cfg.command == "mxm" || cfg.command == "convert";
    try {
        std::vector<AnyMatrix> inputs;
        for (const auto& path : cfg.inputs) inputs.push_back(load_matrix(path, cfg));
        const std::string& c = cfg.command;
        if (c == "info") {
            result = run_info(inputs[0]);
        } else if (c == "convert") {
            result = std::visit([&](const auto& m) { return matrix_summary(m, cfg.output); }, inputs[0]);
        } else if (c == "mxm") {
            result = run_mxm(inputs[0], inputs[1], cfg);
        } else if (c == "mxv") {
            result = run_mxv(inputs[0], inputs[1], cfg);
        } else {
            try {
                result = run_algorithm(inputs[0], cfg);
            } catch (const Error& e) {
                err << "sgk: " << e.what() << '\n';
                return exit_precondition;
            }
        }
    } catch (const DataFailure& e) {
        err << "sgk: " << e.what() << '\n';
        return exit_data;
    } catch (const Error& e) {
        err << "sgk: " << e.what() << '\n';
        return exit_data;
    }
    const double elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    std::ostringstream doc;
    if (cfg.format == OutputFormat::json) {
        Json envelope = {{"command", cfg.command}, {"result", std::move(result)}, {"elapsed_ms", elapsed_ms}};
        doc << envelope.dump() << '\n';
    } else {
        write_tsv(result, doc);
    }
    if (cfg.output && !writes_matrix) {
        std::ofstream file(*cfg.output);
        if (!(file << doc.str())) {
            err << "sgk: cannot write '" << *cfg.output << "'\n";
            return exit_data;
        }
    } else {
        out << doc.str();
    }
    return exit_ok;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("sgk");
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace sgk::cli
