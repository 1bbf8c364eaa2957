#include "signalling/duality.hpp"

#include <bit>
#include <cstdint>
#include <limits>
#include <sstream>

#include "signalling/equilibrium.hpp"
#include "signalling/errors.hpp"

namespace signalling {

namespace {

std::string clique_name(const SymbolSet& c) {
    std::string name = "y";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) name += '_';
        name += std::to_string(c[i]);
    }
    return name;
}

bool satisfied(const Constraint& c, int ones) {
    return c.relation == Relation::AtMost ? ones <= c.bound : ones >= c.bound;
}

bool better(Sense sense, int candidate, int incumbent) {
    return sense == Sense::Maximize ? candidate > incumbent : candidate < incumbent;
}

int worst_value(Sense sense) {
    return sense == Sense::Maximize ? std::numeric_limits<int>::min() : std::numeric_limits<int>::max();
}

BinarySolution exhaustive(const BinaryProgram& prog) {
    const std::size_t n = prog.variable_count();
    // variable i is bit n-1-i, so counting down walks assignments in
    // lexicographically decreasing order
    std::vector<std::uint32_t> masks;
    masks.reserve(prog.constraints.size());
    for (const auto& c : prog.constraints) {
        std::uint32_t m = 0;
        for (auto v : c.variables) m |= std::uint32_t{1} << (n - 1 - v);
        masks.push_back(m);
    }
    int best = worst_value(prog.sense);
    std::uint32_t best_code = 0;
    bool found = false;
    for (std::uint64_t code = (std::uint64_t{1} << n); code-- > 0;) {
        const auto assignment = static_cast<std::uint32_t>(code);
        bool ok = true;
        for (std::size_t k = 0; k < masks.size() && ok; ++k)
            ok = satisfied(prog.constraints[k], std::popcount(assignment & masks[k]));
        if (!ok) continue;
        int value = std::popcount(assignment);
        if (!found || better(prog.sense, value, best)) {
            best = value;
            best_code = assignment;
            found = true;
        }
    }
    if (!found) throw DomainError("0-1 program has no feasible assignment");
    BinarySolution sol{best, std::vector<bool>(n)};
    for (std::size_t i = 0; i < n; ++i) sol.assignment[i] = (best_code >> (n - 1 - i)) & 1U;
    return sol;
}

class BranchAndBound {
public:
    explicit BranchAndBound(const BinaryProgram& prog)
        : prog_(prog),
          n_(prog.variable_count()),
          value_(n_, -1),
          incidence_(n_),
          ones_(prog.constraints.size(), 0),
          free_(prog.constraints.size(), 0),
          mark_(n_, 0) {
        for (std::size_t k = 0; k < prog.constraints.size(); ++k) {
            for (auto v : prog.constraints[k].variables) incidence_[v].push_back(k);
            free_[k] = static_cast<int>(prog.constraints[k].variables.size());
        }
        best_ = worst_value(prog.sense);
    }

    BinarySolution run() {
        search(0, 0);
        if (!found_) throw DomainError("0-1 program has no feasible assignment");
        return {best_, best_assignment_};
    }

private:
    bool maximize() const { return prog_.sense == Sense::Maximize; }

    int need(std::size_t k) const {
        const auto& c = prog_.constraints[k];
        return c.relation == Relation::AtLeast ? std::max(0, c.bound - ones_[k]) : 0;
    }

    int room(std::size_t k) const {
        const auto& c = prog_.constraints[k];
        return c.relation == Relation::AtMost ? c.bound - ones_[k] : std::numeric_limits<int>::max();
    }

    bool can_set_one(std::size_t v) const {
        for (auto k : incidence_[v])
            if (room(k) < 1) return false;
        return true;
    }

    // Disjoint unmet covering rows each need their own variables.
    int covering_bound() {
        int bound = 0;
        ++epoch_;
        for (std::size_t k = 0; k < prog_.constraints.size(); ++k) {
            int missing = need(k);
            if (!missing) continue;
            bool disjoint = true;
            for (auto v : prog_.constraints[k].variables)
                if (value_[v] < 0 && mark_[v] == epoch_) disjoint = false;
            if (!disjoint) continue;
            bound += missing;
            for (auto v : prog_.constraints[k].variables)
                if (value_[v] < 0) mark_[v] = epoch_;
        }
        return bound;
    }

    // Each packing row admits only `room` more ones among its free variables.
    int packing_bound() {
        int bound = 0;
        ++epoch_;
        for (std::size_t k = 0; k < prog_.constraints.size(); ++k) {
            if (prog_.constraints[k].relation != Relation::AtMost) continue;
            int fresh = 0;
            for (auto v : prog_.constraints[k].variables)
                if (value_[v] < 0 && mark_[v] != epoch_ && can_set_one(v)) {
                    mark_[v] = epoch_;
                    ++fresh;
                }
            bound += std::min(fresh, room(k));
        }
        for (std::size_t v = 0; v < n_; ++v)
            if (value_[v] < 0 && mark_[v] != epoch_ && can_set_one(v)) ++bound;
        return bound;
    }

    void record(int value) {
        if (found_ && !better(prog_.sense, value, best_)) return;
        found_ = true;
        best_ = value;
        best_assignment_.assign(n_, false);
        for (std::size_t v = 0; v < n_; ++v) best_assignment_[v] = value_[v] == 1;
    }

    void assign(std::size_t v, int bit) {
        value_[v] = static_cast<std::int8_t>(bit);
        for (auto k : incidence_[v]) {
            --free_[k];
            ones_[k] += bit;
        }
    }

    void unassign(std::size_t v) {
        for (auto k : incidence_[v]) {
            ++free_[k];
            ones_[k] -= value_[v];
        }
        value_[v] = -1;
    }

    void search(std::size_t i, int current) {
        bool unmet = false;
        for (std::size_t k = 0; k < prog_.constraints.size(); ++k) {
            int missing = need(k);
            if (missing > free_[k]) return;
            if (missing) unmet = true;
        }
        if (maximize()) {
            if (found_ && current + packing_bound() <= best_) return;
        } else {
            if (!unmet) {
                // further ones only cost more; all-zero completion is optimal here
                record(current);
                return;
            }
            if (found_ && current + covering_bound() >= best_) return;
        }
        if (i == n_) {
            if (!unmet) record(current);
            return;
        }
        bool useful = maximize();
        for (auto k : incidence_[i])
            if (need(k)) useful = true;
        if (useful && can_set_one(i)) {
            assign(i, 1);
            search(i + 1, current + 1);
            unassign(i);
        }
        assign(i, 0);
        search(i + 1, current);
        unassign(i);
    }

    const BinaryProgram& prog_;
    std::size_t n_;
    std::vector<std::int8_t> value_;
    std::vector<std::vector<std::size_t>> incidence_;
    std::vector<int> ones_;
    std::vector<int> free_;
    std::vector<std::uint64_t> mark_;
    std::uint64_t epoch_ = 0;
    int best_;
    bool found_ = false;
    std::vector<bool> best_assignment_;
};

}  // namespace

BinaryProgram build_primal(const SenderGraph& g, const SolverLimits& limits) {
    BinaryProgram prog;
    prog.sense = Sense::Maximize;
    for (Symbol v = 0; v < g.q(); ++v) {
        prog.names.push_back("x" + std::to_string(v));
        prog.supports.push_back({v});
    }
    for (const auto& clique : enumerate_maximal_cliques(g, limits).cliques) {
        Constraint c;
        c.relation = Relation::AtMost;
        for (Symbol v : clique) c.variables.push_back(static_cast<std::size_t>(v));
        prog.constraints.push_back(std::move(c));
    }
    return prog;
}

BinaryProgram build_dual(const SenderGraph& g, const SolverLimits& limits) {
    BinaryProgram prog;
    prog.sense = Sense::Minimize;
    prog.supports = enumerate_all_cliques(g, limits).cliques;
    for (const auto& clique : prog.supports) prog.names.push_back(clique_name(clique));
    prog.constraints.resize(static_cast<std::size_t>(g.q()));
    for (auto& c : prog.constraints) c.relation = Relation::AtLeast;
    for (std::size_t j = 0; j < prog.supports.size(); ++j)
        for (Symbol v : prog.supports[j]) prog.constraints[static_cast<std::size_t>(v)].variables.push_back(j);
    return prog;
}

void validate(const BinaryProgram& prog) {
    if (!prog.supports.empty() && prog.supports.size() != prog.names.size())
        throw DomainError("variable supports do not match the variable list");
    for (std::size_t k = 0; k < prog.constraints.size(); ++k) {
        const auto& c = prog.constraints[k];
        if (c.bound < 0) throw DomainError("constraint " + std::to_string(k) + " has a negative bound");
        std::vector<bool> seen(prog.variable_count(), false);
        for (auto v : c.variables) {
            if (v >= prog.variable_count())
                throw DomainError("constraint " + std::to_string(k) + " references unknown variable " +
                                  std::to_string(v));
            if (seen[v]) throw DomainError("constraint " + std::to_string(k) + " repeats a variable");
            seen[v] = true;
        }
    }
}

bool is_feasible(const BinaryProgram& prog, const std::vector<bool>& assignment) {
    if (assignment.size() != prog.variable_count()) throw DimensionError("assignment length does not match the program");
    for (const auto& c : prog.constraints) {
        int ones = 0;
        for (auto v : c.variables) ones += assignment[v] ? 1 : 0;
        if (!satisfied(c, ones)) return false;
    }
    return true;
}

BinarySolution solve_binary(const BinaryProgram& prog, SolveMethod method, const BinarySolverOptions& options) {
    validate(prog);
    const std::size_t n = prog.variable_count();
    if (n > options.max_variables)
        throw SizeLimitError("0-1 program has " + std::to_string(n) + " variables, limit is " +
                             std::to_string(options.max_variables));
    if (method == SolveMethod::Exhaustive) {
        if (n >= 32) throw SizeLimitError("exhaustive 0-1 enumeration needs fewer than 32 variables");
        return exhaustive(prog);
    }
    return BranchAndBound(prog).run();
}

BinarySolution solve_binary(const BinaryProgram& prog, const BinarySolverOptions& options) {
    return solve_binary(prog,
                        prog.variable_count() < options.exhaustive_below ? SolveMethod::Exhaustive
                                                                         : SolveMethod::BranchAndBound,
                        options);
}

std::string to_lp_string(const BinaryProgram& prog) {
    std::ostringstream out;
    auto sum = [&](const std::vector<std::size_t>& vars) {
        if (vars.empty()) {
            out << "0";
            return;
        }
        for (std::size_t i = 0; i < vars.size(); ++i) out << (i ? " + " : "") << prog.names[vars[i]];
    };
    out << (prog.sense == Sense::Maximize ? "maximize" : "minimize") << "\n  obj: ";
    std::vector<std::size_t> all(prog.variable_count());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    sum(all);
    out << "\nsubject to\n";
    for (std::size_t k = 0; k < prog.constraints.size(); ++k) {
        const auto& c = prog.constraints[k];
        out << "  c" << k << ": ";
        sum(c.variables);
        out << (c.relation == Relation::AtMost ? " <= " : " >= ") << c.bound << "\n";
    }
    out << "binary\n ";
    for (const auto& name : prog.names) out << ' ' << name;
    out << "\nend\n";
    return out.str();
}

PartitionCover cover_from_assignment(int q, const BinaryProgram& dual, const std::vector<bool>& assignment) {
    if (assignment.size() != dual.supports.size()) throw DimensionError("assignment length does not match the program");
    std::vector<bool> covered(static_cast<std::size_t>(q), false);
    std::vector<SymbolSet> blocks;
    for (std::size_t j = 0; j < assignment.size(); ++j) {
        if (!assignment[j]) continue;
        SymbolSet block;
        for (Symbol v : dual.supports[j]) {
            if (v < 0 || v >= q) throw DomainError("clique vertex outside the alphabet");
            if (covered[static_cast<std::size_t>(v)]) continue;
            covered[static_cast<std::size_t>(v)] = true;
            block.push_back(v);
        }
        if (!block.empty()) blocks.push_back(std::move(block));
    }
    return PartitionCover(q, std::move(blocks));
}

int extraction_capacity(const UtilityMatrix& u, const SolverLimits& limits) {
    return independence_number(weak_sender_graph(u), limits).size;
}

DualityReport duality_report(const UtilityMatrix& u, const SolverLimits& limits, const BinarySolverOptions& options) {
    DualityReport r;
    r.extraction_capacity = extraction_capacity(u, limits);
    r.informativeness = informativeness(u, limits);
    r.leader_follower_gap = r.informativeness - r.extraction_capacity;
    r.symmetric = u.is_symmetric();

    const auto g = strong_sender_graph(u);
    const auto weak = weak_sender_graph(u);
    r.graphs_coincide = g.edges() == weak.edges();
    const auto primal = build_primal(g, limits);
    const auto p = solve_binary(primal, options);
    r.primal_variables = static_cast<int>(primal.variable_count());
    r.primal_constraints = static_cast<int>(primal.constraints.size());
    r.primal_optimum = p.optimum;
    for (std::size_t v = 0; v < p.assignment.size(); ++v)
        if (p.assignment[v]) r.primal_witness.push_back(static_cast<Symbol>(v));

    const auto dual = build_dual(g, limits);
    const auto d = solve_binary(dual, options);
    r.dual_variables = static_cast<int>(dual.variable_count());
    r.dual_constraints = static_cast<int>(dual.constraints.size());
    r.dual_optimum = d.optimum;
    r.dual_witness = cover_from_assignment(u.q(), dual, d.assignment);

    if (r.graphs_coincide && (r.primal_optimum != r.extraction_capacity || r.dual_optimum != r.informativeness))
        throw Error("strong and weak graphs coincide but the 0-1 optima differ from capacity and informativeness");
    return r;
}

}  // namespace signalling
