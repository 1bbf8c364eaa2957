#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "signalling/core.hpp"

namespace signalling::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kUsageError = 2, kSizeLimit = 3 };

struct AnalysisConfig {
    std::string command;
    std::string input;
    std::string format = "text";
    int grid = 10;
    std::optional<std::string> prior;
    std::optional<int> limit_q;
    std::uint64_t budget = 100'000'000;
    std::string stream;

    int q = 3;
    long long lo = -1;
    long long hi = 1;
    std::uint64_t seed = 1;
    bool symmetric = false;
    bool skew = false;
    std::string output;
};

/// Deterministic integer matrix with entries drawn from [lo, hi].
/// symmetric mirrors the upper triangle; skew forces a zero diagonal and
/// U(x,y) = -U(y,x) and needs lo = -hi.
UtilityMatrix generate_matrix(int q, long long lo, long long hi, std::uint64_t seed, bool symmetric, bool skew);

/// Runs one command line; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace signalling::cli
