#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "signalling/behavioral.hpp"
#include "signalling/duality.hpp"
#include "signalling/equilibrium.hpp"
#include "signalling/errors.hpp"
#include "signalling/graphs.hpp"
#include "signalling/grid_search.hpp"

namespace py = pybind11;
using namespace signalling;

// Rationals cross the boundary as "p/q" strings; the Python package turns
// them into fractions.Fraction.
namespace {

using Table = std::vector<std::vector<std::string>>;

std::vector<Rational> parse_row(const std::vector<std::string>& row) {
    std::vector<Rational> out;
    out.reserve(row.size());
    for (const auto& s : row) out.push_back(Rational::parse(s));
    return out;
}

std::vector<std::string> format_row(const std::vector<Rational>& row) {
    std::vector<std::string> out;
    out.reserve(row.size());
    for (const auto& r : row) out.push_back(r.to_string());
    return out;
}

Table format_table(const std::vector<std::vector<Rational>>& rows) {
    Table out;
    for (const auto& r : rows) out.push_back(format_row(r));
    return out;
}

UtilityMatrix matrix(const Table& rows) { return parse_utility(rows); }

BehavioralStrategy behavioral(const Table& rows) {
    std::vector<std::vector<Rational>> parsed;
    for (const auto& r : rows) parsed.push_back(parse_row(r));
    return BehavioralStrategy(std::move(parsed));
}

Prior prior_for(const std::optional<std::vector<std::string>>& prior, int q) {
    return prior ? Prior(parse_row(*prior)) : Prior::uniform(q);
}

std::vector<std::vector<Symbol>> blocks(const PartitionCover& p) { return p.blocks(); }

std::vector<std::optional<Symbol>> receiver_map(const ReceiverStrategy& g) { return g.map(); }

py::dict class_flags(const ClassExistence& c) {
    py::dict d;
    d["separating"] = c.separating_exists;
    d["only_separating"] = c.only_separating;
    d["pooling"] = c.pooling_exists;
    d["semi_separating"] = c.semi_separating_exists;
    d["cross_validated"] = c.cross_validated;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact analysis of sender-receiver games with misaligned utilities";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<IoError>(m, "IoError", base.ptr());
    py::register_exception<DimensionError>(m, "DimensionError", base.ptr());
    py::register_exception<SizeLimitError>(m, "SizeLimitError", base.ptr());
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<UnsupportedError>(m, "UnsupportedError", base.ptr());

    m.def("normalize", [](const Table& rows) { return format_table(matrix(rows).rows()); }, py::arg("u"));

    m.def("strong_graph", [](const Table& u) { return strong_sender_graph(matrix(u)).edges(); }, py::arg("u"));
    m.def("weak_graph", [](const Table& u) { return weak_sender_graph(matrix(u)).edges(); }, py::arg("u"));

    m.def("informativeness", [](const Table& u) { return informativeness(matrix(u)); }, py::arg("u"));
    m.def("extraction_capacity", [](const Table& u) { return extraction_capacity(matrix(u)); }, py::arg("u"));

    m.def(
        "equilibrium_partitions",
        [](const Table& u) {
            std::vector<std::vector<std::vector<Symbol>>> out;
            for (const auto& p : enumerate_equilibrium_partitions(matrix(u))) out.push_back(blocks(p));
            return out;
        },
        py::arg("u"));

    m.def(
        "is_equilibrium",
        [](const std::vector<Symbol>& s, const Table& u) { return is_equilibrium(SenderStrategy(s), matrix(u)); },
        py::arg("s"), py::arg("u"));
    m.def(
        "worst_case_utility",
        [](const std::vector<Symbol>& s, const Table& u) {
            return format_row(worst_case_utility(SenderStrategy(s), matrix(u)));
        },
        py::arg("s"), py::arg("u"));
    m.def(
        "classify", [](const std::vector<Symbol>& s) { return to_string(classify(SenderStrategy(s))); },
        py::arg("s"));

    m.def("class_existence", [](const Table& u) { return class_flags(class_existence(matrix(u))); }, py::arg("u"));

    m.def(
        "duality_report",
        [](const Table& u) {
            const auto r = duality_report(matrix(u));
            py::dict d;
            d["extraction_capacity"] = r.extraction_capacity;
            d["informativeness"] = r.informativeness;
            d["leader_follower_gap"] = r.leader_follower_gap;
            d["symmetric"] = r.symmetric;
            d["graphs_coincide"] = r.graphs_coincide;
            d["primal_optimum"] = r.primal_optimum;
            d["primal_witness"] = r.primal_witness;
            d["dual_optimum"] = r.dual_optimum;
            d["dual_witness"] = blocks(r.dual_witness);
            return d;
        },
        py::arg("u"));

    m.def(
        "min_best_response",
        [](const Table& pi, const Table& u, const std::optional<std::vector<std::string>>& prior) {
            const auto strategy = behavioral(pi);
            const auto r = min_best_response_utility(strategy, prior_for(prior, strategy.q()), matrix(u));
            py::dict d;
            d["value"] = r.value.to_string();
            d["witness"] = receiver_map(r.witness);
            d["recovery_set"] = r.recovery_set;
            return d;
        },
        py::arg("pi"), py::arg("u"), py::arg("prior") = py::none());

    m.def(
        "max_recovery_sets",
        [](const Table& pi) {
            auto r = max_recovery_sets(behavioral(pi));
            return py::make_tuple(r.size, r.sets);
        },
        py::arg("pi"));

    m.def("classify_pi", [](const Table& pi) { return classify_pi(behavioral(pi)); }, py::arg("pi"));

    m.def(
        "grid_search",
        [](const Table& u, int denominator, const std::optional<std::vector<std::string>>& prior,
           std::uint64_t max_points, bool use_symmetry) {
            const auto mat = matrix(u);
            GridSearchOptions options;
            options.max_points = max_points;
            options.use_symmetry = use_symmetry;
            GridSearchResult g;
            {
                py::gil_scoped_release release;
                g = grid_search_sup(mat, prior_for(prior, mat.q()), denominator, options);
            }
            py::dict d;
            d["denominator"] = g.denominator;
            d["points"] = g.points;
            d["evaluated"] = g.evaluated;
            d["max_value"] = g.max_value.to_string();
            d["argmax"] = format_table(g.argmax.rows());
            d["argmax_class"] = g.argmax_class;
            d["limit_point"] = format_table(g.limit_point.rows());
            d["limit_class"] = g.limit_class;
            d["limit_value"] = g.limit_value.to_string();
            d["sup_estimate"] = g.sup_estimate.to_string();
            d["attained"] = g.attained;
            d["verdict"] = g.verdict();
            return d;
        },
        py::arg("u"), py::arg("denominator"), py::arg("prior") = py::none(), py::arg("max_points") = 100'000'000ULL,
        py::arg("use_symmetry") = true);
}
