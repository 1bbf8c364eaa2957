#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "signalling/combinatorics.hpp"
#include "signalling/core.hpp"
#include "signalling/graphs.hpp"

namespace signalling {

enum class Sense { Maximize, Minimize };
enum class Relation { AtMost, AtLeast };

/// sum of the listed variables (relation) bound
struct Constraint {
    std::vector<std::size_t> variables;
    Relation relation = Relation::AtMost;
    int bound = 1;
};

/// 0-1 program with unit objective coefficients.
struct BinaryProgram {
    Sense sense = Sense::Maximize;
    std::vector<std::string> names;
    /// Vertices behind each variable: {v} for the packing program, the clique
    /// for the covering program.
    std::vector<SymbolSet> supports;
    std::vector<Constraint> constraints;

    std::size_t variable_count() const { return names.size(); }
};

/// max sum x_v subject to at most one vertex per maximal clique.
BinaryProgram build_primal(const SenderGraph& g, const SolverLimits& limits = {});

/// min sum y_c over all cliques c subject to every vertex being covered.
BinaryProgram build_dual(const SenderGraph& g, const SolverLimits& limits = {});

struct BinarySolverOptions {
    /// Programs with fewer variables are solved by plain enumeration.
    std::size_t exhaustive_below = 20;
    /// Larger programs go to branch and bound up to this many variables.
    std::size_t max_variables = 256;
};

enum class SolveMethod { Exhaustive, BranchAndBound };

struct BinarySolution {
    int optimum = 0;
    /// Lexicographically greatest optimal assignment (variable 0 first).
    std::vector<bool> assignment;
};

/// Checks the program's shape (indices in range, binary bounds). Throws DomainError.
void validate(const BinaryProgram& prog);

bool is_feasible(const BinaryProgram& prog, const std::vector<bool>& assignment);

/// Exact optimum. Throws SizeLimitError above options.max_variables and
/// DomainError if the program has no feasible point.
BinarySolution solve_binary(const BinaryProgram& prog, const BinarySolverOptions& options = {});

/// Forces one solver path regardless of size (used to cross-check them).
BinarySolution solve_binary(const BinaryProgram& prog, SolveMethod method, const BinarySolverOptions& options = {});

/// Human-readable LP-style listing.
std::string to_lp_string(const BinaryProgram& prog);

/// Selected cliques of a covering solution made disjoint: vertices already
/// covered by an earlier selected clique are dropped from later ones.
PartitionCover cover_from_assignment(int q, const BinaryProgram& dual, const std::vector<bool>& assignment);

/// Largest number of symbols a leading receiver can recover (independence
/// number of the weak sender graph).
int extraction_capacity(const UtilityMatrix& u, const SolverLimits& limits = {});

struct DualityReport {
    int extraction_capacity = 0;
    int informativeness = 0;
    int leader_follower_gap = 0;
    bool symmetric = false;
    /// Strong and weak sender graphs have the same edges.
    bool graphs_coincide = false;

    int primal_variables = 0;
    int primal_constraints = 0;
    int primal_optimum = 0;
    SymbolSet primal_witness;

    int dual_variables = 0;
    int dual_constraints = 0;
    int dual_optimum = 0;
    PartitionCover dual_witness = PartitionCover::whole(1);
};

/// Both programs are built on the strong sender graph. When the strong and
/// weak graphs coincide the optima must equal the capacity and the
/// informativeness; a mismatch throws Error. Symmetry of U alone does not make
/// the graphs coincide (the diagonal can differ).
DualityReport duality_report(const UtilityMatrix& u, const SolverLimits& limits = {},
                             const BinarySolverOptions& options = {});

}  // namespace signalling
