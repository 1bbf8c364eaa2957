#include "report.hpp"

#include <sstream>

namespace signalling::cli {

namespace {

std::string set_text(const SymbolSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
}

std::string partition_text(const PartitionCover& p) {
    std::string out;
    for (std::size_t i = 0; i < p.blocks().size(); ++i) out += (i ? " " : "") + set_text(p.blocks()[i]);
    return out;
}

std::string edges_text(const SenderGraph& g) {
    auto edges = g.edges();
    if (edges.empty()) return "(none)";
    std::string out;
    for (std::size_t i = 0; i < edges.size(); ++i)
        out += (i ? " " : "") + set_text({edges[i].first, edges[i].second});
    return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void matrix_text(std::ostream& out, const std::vector<std::vector<Rational>>& rows, const std::string& indent) {
    for (const auto& row : rows) {
        out << indent;
        for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j].to_string();
        out << "\n";
    }
}

json set_json(const SymbolSet& s) { return json(s); }

}  // namespace

json to_json(const Rational& r) { return r.to_string(); }

json to_json(const UtilityMatrix& u) {
    json rows = json::array();
    for (const auto& r : u.rows()) {
        json row = json::array();
        for (const auto& e : r) row.push_back(to_json(e));
        rows.push_back(row);
    }
    return rows;
}

json to_json(const SenderGraph& g) {
    json edges = json::array();
    for (auto [x, y] : g.edges()) edges.push_back({x, y});
    return {{"q", g.q()}, {"flavor", to_string(g.flavor())}, {"edges", edges}};
}

json to_json(const PartitionCover& p) { return json(p.blocks()); }

json to_json(const BehavioralStrategy& pi) {
    json rows = json::array();
    for (const auto& r : pi.rows()) {
        json row = json::array();
        for (const auto& e : r) row.push_back(to_json(e));
        rows.push_back(row);
    }
    return rows;
}

json to_json(const ClassExistence& f) {
    return {{"separating", f.separating_exists},
            {"only_separating", f.only_separating},
            {"pooling", f.pooling_exists},
            {"semi_separating", f.semi_separating_exists},
            {"cross_validated", f.cross_validated}};
}

AnalyzeReport analyze(const UtilityMatrix& u, const SolverLimits& limits) {
    auto strong = strong_sender_graph(u);
    auto weak = weak_sender_graph(u);
    auto cover = clique_cover_number(strong, limits);
    auto independent = independence_number(weak, limits);
    return AnalyzeReport{u,
                         strong,
                         weak,
                         cover.size,
                         cover.witness,
                         independent.size,
                         independent.witness,
                         class_existence(u, limits)};
}

json to_json(const AnalyzeReport& r) {
    return {{"command", "analyze"},
            {"q", r.u.q()},
            {"U", to_json(r.u)},
            {"symmetric", r.u.is_symmetric()},
            {"strong_graph", to_json(r.strong)},
            {"weak_graph", to_json(r.weak)},
            {"informativeness", r.informativeness},
            {"informativeness_witness", to_json(r.informativeness_witness)},
            {"extraction_capacity", r.extraction_capacity},
            {"extraction_witness", set_json(r.extraction_witness)},
            {"leader_follower_gap", r.informativeness - r.extraction_capacity},
            {"class_existence", to_json(r.classes)}};
}

std::string to_text(const AnalyzeReport& r) {
    std::ostringstream out;
    out << "q = " << r.u.q() << "\n";
    out << "U (row = recovered, column = source):\n";
    matrix_text(out, r.u.rows(), "  ");
    out << "strong sender graph edges: " << edges_text(r.strong) << "\n";
    out << "weak sender graph edges: " << edges_text(r.weak) << "\n";
    out << "informativeness: " << r.informativeness << "  (minimum clique cover "
        << partition_text(r.informativeness_witness) << ")\n";
    out << "extraction capacity: " << r.extraction_capacity << "  (independent set "
        << set_text(r.extraction_witness) << ")\n";
    out << "leader/follower gap: " << r.informativeness - r.extraction_capacity << "\n";
    out << "separating equilibrium exists: " << yes_no(r.classes.separating_exists) << "\n";
    out << "only separating equilibria: " << yes_no(r.classes.only_separating) << "\n";
    out << "pooling equilibrium exists: " << yes_no(r.classes.pooling_exists) << "\n";
    out << "semi-separating equilibrium exists: " << yes_no(r.classes.semi_separating_exists) << "\n";
    return out.str();
}

EnumerateReport enumerate(const UtilityMatrix& u, const SolverLimits& limits) {
    EnumerateReport r{u, {}};
    for (auto& p : enumerate_equilibrium_partitions(u, limits)) {
        auto s = witness_strategy(p);
        auto label = classify(s);
        int recovered = static_cast<int>(p.size());
        r.partitions.push_back({std::move(p), recovered, std::move(s), label});
    }
    return r;
}

json to_json(const EnumerateReport& r) {
    json parts = json::array();
    for (const auto& e : r.partitions)
        parts.push_back({{"blocks", to_json(e.partition)},
                         {"recovered", e.recovered},
                         {"witness", e.witness.map()},
                         {"class", to_string(e.label)}});
    return {{"command", "enumerate"},
            {"q", r.u.q()},
            {"U", to_json(r.u)},
            {"count", r.partitions.size()},
            {"partitions", parts}};
}

std::string to_text(const EnumerateReport& r) {
    std::ostringstream out;
    out << r.partitions.size() << " equilibrium partition" << (r.partitions.size() == 1 ? "" : "s") << " for q = "
        << r.u.q() << "\n";
    for (const auto& e : r.partitions) {
        out << "  " << partition_text(e.partition) << "  recovered " << e.recovered << "  witness s = (";
        for (std::size_t i = 0; i < e.witness.map().size(); ++i) out << (i ? "," : "") << e.witness.map()[i];
        out << ")  " << to_string(e.label) << "\n";
    }
    return out.str();
}

DualityCommandReport duality(const UtilityMatrix& u, const SolverLimits& limits) {
    auto g = strong_sender_graph(u);
    return {u, duality_report(u, limits), to_lp_string(build_primal(g, limits)), to_lp_string(build_dual(g, limits))};
}

json to_json(const DualityCommandReport& r) {
    const auto& d = r.report;
    return {{"command", "duality"},
            {"q", r.u.q()},
            {"U", to_json(r.u)},
            {"symmetric", d.symmetric},
            {"graphs_coincide", d.graphs_coincide},
            {"extraction_capacity", d.extraction_capacity},
            {"informativeness", d.informativeness},
            {"leader_follower_gap", d.leader_follower_gap},
            {"primal",
             {{"sense", "max"},
              {"variables", d.primal_variables},
              {"constraints", d.primal_constraints},
              {"optimum", d.primal_optimum},
              {"witness", set_json(d.primal_witness)},
              {"lp", r.primal_lp}}},
            {"dual",
             {{"sense", "min"},
              {"variables", d.dual_variables},
              {"constraints", d.dual_constraints},
              {"optimum", d.dual_optimum},
              {"witness", to_json(d.dual_witness)},
              {"lp", r.dual_lp}}}};
}

std::string to_text(const DualityCommandReport& r) {
    const auto& d = r.report;
    std::ostringstream out;
    out << "extraction capacity: " << d.extraction_capacity << "\n";
    out << "informativeness: " << d.informativeness << "\n";
    out << "leader/follower gap: " << d.leader_follower_gap << "\n";
    out << "symmetric: " << yes_no(d.symmetric) << "\n";
    out << "strong and weak graphs coincide: " << yes_no(d.graphs_coincide) << "\n";
    out << "packing program on the strong graph: " << d.primal_variables << " variables, " << d.primal_constraints
        << " constraints, optimum " << d.primal_optimum << ", witness " << set_text(d.primal_witness) << "\n";
    out << "covering program on the strong graph: " << d.dual_variables << " variables, " << d.dual_constraints
        << " constraints, optimum " << d.dual_optimum << ", witness " << partition_text(d.dual_witness) << "\n";
    out << "\n" << r.primal_lp << "\n" << r.dual_lp;
    return out.str();
}

json to_json(const BehavioralReport& r) {
    const auto& g = r.grid;
    json prior = json::array();
    for (const auto& v : r.prior.values()) prior.push_back(to_json(v));
    json histogram = json::object();
    for (const auto& [label, count] : g.class_histogram) histogram[label] = count;
    return {{"command", "behavioral"},
            {"q", r.u.q()},
            {"U", to_json(r.u)},
            {"prior", prior},
            {"skew_structure", r.skew_structure},
            {"denominator", g.denominator},
            {"points", g.points},
            {"evaluated", g.evaluated},
            {"max_value", to_json(g.max_value)},
            {"argmax", to_json(g.argmax)},
            {"argmax_class", g.argmax_class},
            {"class_histogram", histogram},
            {"limit_point", to_json(g.limit_point)},
            {"limit_class", g.limit_class},
            {"limit_value", to_json(g.limit_value)},
            {"sup_estimate", to_json(g.sup_estimate)},
            {"attained", g.attained},
            {"verdict", g.verdict()}};
}

std::string to_text(const BehavioralReport& r) {
    const auto& g = r.grid;
    std::ostringstream out;
    out << "grid denominator N = " << g.denominator << ", " << g.points << " strategies (" << g.evaluated
        << " evaluated)\n";
    out << "prior:";
    for (const auto& v : r.prior.values()) out << " " << v.to_string();
    out << "\nskew structure: " << yes_no(r.skew_structure) << "\n";
    out << "max of min best-response utility: " << g.max_value.to_string() << "\n";
    out << "argmax (rows = source, columns = signal), class " << g.argmax_class << ":\n";
    matrix_text(out, g.argmax.rows(), "  ");
    out << "limit point, class " << g.limit_class << ", value " << g.limit_value.to_string() << ":\n";
    matrix_text(out, g.limit_point.rows(), "  ");
    out << "supremum estimate: " << g.sup_estimate.to_string() << "\n";
    out << "class histogram:\n";
    for (const auto& [label, count] : g.class_histogram) out << "  " << label << " " << count << "\n";
    out << g.verdict() << "\n";
    return out.str();
}

}  // namespace signalling::cli
