#pragma once

#include <string>

#include <json.hpp>

#include "signalling/duality.hpp"
#include "signalling/equilibrium.hpp"
#include "signalling/graphs.hpp"
#include "signalling/grid_search.hpp"

namespace signalling::cli {

using json = nlohmann::ordered_json;

json to_json(const Rational& r);
json to_json(const UtilityMatrix& u);
json to_json(const SenderGraph& g);
json to_json(const PartitionCover& p);
json to_json(const BehavioralStrategy& pi);
json to_json(const ClassExistence& flags);

struct AnalyzeReport {
    UtilityMatrix u;
    SenderGraph strong;
    SenderGraph weak;
    int informativeness = 0;
    PartitionCover informativeness_witness;
    int extraction_capacity = 0;
    SymbolSet extraction_witness;
    ClassExistence classes;
};

AnalyzeReport analyze(const UtilityMatrix& u, const SolverLimits& limits);
json to_json(const AnalyzeReport& r);
std::string to_text(const AnalyzeReport& r);

struct EnumeratedPartition {
    PartitionCover partition;
    int recovered = 0;
    SenderStrategy witness;
    EquilibriumClass label;
};

struct EnumerateReport {
    UtilityMatrix u;
    std::vector<EnumeratedPartition> partitions;
};

EnumerateReport enumerate(const UtilityMatrix& u, const SolverLimits& limits);
json to_json(const EnumerateReport& r);
std::string to_text(const EnumerateReport& r);

struct DualityCommandReport {
    UtilityMatrix u;
    DualityReport report;
    std::string primal_lp;
    std::string dual_lp;
};

DualityCommandReport duality(const UtilityMatrix& u, const SolverLimits& limits);
json to_json(const DualityCommandReport& r);
std::string to_text(const DualityCommandReport& r);

struct BehavioralReport {
    UtilityMatrix u;
    Prior prior;
    bool skew_structure = false;
    GridSearchResult grid;
};

json to_json(const BehavioralReport& r);
std::string to_text(const BehavioralReport& r);

}  // namespace signalling::cli
