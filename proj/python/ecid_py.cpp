#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ecid/cli.hpp"
#include "ecid/errors.hpp"
#include "ecid/io.hpp"

namespace py = pybind11;
using namespace ecid;

namespace {

// Every entry point takes JSON text (or a file path) and returns JSON text; the Python
// package decodes it.

ClassificationReport classify_json(const std::string& field_arg, const std::string& group_arg,
                                   const std::string& wedderburn_arg, bool assert_splitting, bool modular_exhaustive,
                                   u64 budget) {
    const auto field = field_from_json(load_json_arg(field_arg));
    const auto q = field->prime_power();
    const auto gj = load_json_arg(group_arg);
    std::optional<WedderburnData> wd;
    if (!wedderburn_arg.empty()) wd = wedderburn_from_json(load_json_arg(wedderburn_arg));
    if (is_invariants_group(gj)) {
        SplittingStatus st;
        st.asserted = assert_splitting;
        return classify_nonabelian_arithmetic(invariants_from_json(gj), q, wd, st);
    }
    const auto g = group_from_json(gj);
    if (g.order() % q.p != 0) return classify_semisimple(g, q, wd, assert_splitting);
    if (!modular_exhaustive) throw HypothesisRequired("p divides |H|: pass modular_exhaustive=True");
    return classify_modular_exhaustive(g, field, budget);
}

std::string classify(const std::string& field, const std::string& group, const std::string& wedderburn,
                     bool assert_splitting, bool modular_exhaustive, u64 budget) {
    return to_json(classify_json(field, group, wedderburn, assert_splitting, modular_exhaustive, budget)).dump();
}

std::string orbits(const std::string& field_arg, const std::string& group_arg) {
    const auto field = field_from_json(load_json_arg(field_arg));
    return to_json(qorbits(group_from_json(load_json_arg(group_arg)), field->prime_power())).dump();
}

std::string code(const std::string& field_arg, const std::string& group_arg, const std::string& idempotent_arg,
                 u64 budget, unsigned threads, bool certify, bool primitive) {
    const auto field = field_from_json(load_json_arg(field_arg));
    const auto g = group_from_json(load_json_arg(group_arg));
    const auto e = element_from_json(load_json_arg(idempotent_arg), field, g);
    std::optional<ClassificationReport> cert;
    if (certify) cert = classify_json(field_arg, group_arg, "", false, true, kDefaultSearchBudget);
    CodeOptions opts;
    opts.budget = budget;
    opts.threads = threads;
    opts.certificate = cert ? &*cert : nullptr;
    opts.primitive_asserted = primitive;
    return to_json(analyze_code(e, opts)).dump();
}

std::string search(const std::string& field_arg, const std::string& group_arg, u64 budget, unsigned threads) {
    const auto field = field_from_json(load_json_arg(field_arg));
    const auto g = group_from_json(load_json_arg(group_arg));
    const auto census = idempotent_search(g, field, budget, threads);
    Json out;
    out["candidates"] = census.candidates;
    Json list = Json::array();
    for (std::size_t i = 0; i < census.idempotents.size(); ++i) {
        Json row = element_to_json(census.idempotents[i]);
        row["dim"] = census.dimension[i];
        row["primitive"] = static_cast<bool>(census.primitive[i]);
        list.push_back(std::move(row));
    }
    out["idempotents"] = std::move(list);
    return out.dump();
}

u64 min_distance(const std::string& field_arg, const std::vector<std::vector<u64>>& rows, u64 budget,
                 unsigned threads) {
    const auto field = field_from_json(load_json_arg(field_arg));
    if (rows.empty()) throw DomainError("min_distance: empty basis");
    Matrix m(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols) throw DomainError("min_distance: ragged basis");
        for (std::size_t c = 0; c < m.cols; ++c) {
            if (rows[r][c] >= field->order()) throw DomainError("min_distance: entry outside the field");
            m.at(r, c) = rows[r][c];
        }
    }
    if (matrix_rank(*field, m) != m.rows) throw DomainError("min_distance: rows are linearly dependent");
    return min_distance_of_basis(*field, m, budget, threads);
}

py::tuple run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code_;
    {
        py::gil_scoped_release release;
        code_ = cli::run(args, out, err);
    }
    return py::make_tuple(code_, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_ecid, m) {
    m.doc() = "Group algebras over finite fields: ECD/ECID classification and group-code analysis";
    m.attr("__version__") = cli::kVersion;

    auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<MismatchError>(m, "MismatchError", base.ptr());
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());
    py::register_exception<HypothesisRequired>(m, "HypothesisRequired", base.ptr());
    py::register_exception<ParseError>(m, "ParseError", base.ptr());

    m.def("classify", &classify, py::arg("field"), py::arg("group"), py::arg("wedderburn") = "",
          py::arg("assert_splitting") = false, py::arg("modular_exhaustive") = false,
          py::arg("budget") = kDefaultSearchBudget, py::call_guard<py::gil_scoped_release>());
    m.def("orbits", &orbits, py::arg("field"), py::arg("group"));
    m.def("code", &code, py::arg("field"), py::arg("group"), py::arg("idempotent"),
          py::arg("budget") = kDefaultDistanceBudget, py::arg("threads") = 0, py::arg("certify") = false,
          py::arg("primitive") = false, py::call_guard<py::gil_scoped_release>());
    m.def("search", &search, py::arg("field"), py::arg("group"), py::arg("budget") = kDefaultSearchBudget,
          py::arg("threads") = 0, py::call_guard<py::gil_scoped_release>());
    m.def("min_distance", &min_distance, py::arg("field"), py::arg("rows"), py::arg("budget") = kDefaultDistanceBudget,
          py::arg("threads") = 0, py::call_guard<py::gil_scoped_release>());
    m.def("b0", &b0, py::arg("gamma"));
    m.def("wedderburn_solver", &wedderburn_solver, py::arg("gamma"), py::arg("s"));
    m.def("run", &run, py::arg("args"), "Run one CLI command line; returns (exit_code, stdout, stderr).");
}
