#pragma once

// Support-level structure of a behavioral strategy, shared by the exact
// evaluation and the grid search.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace signalling::detail {

using SignalMask = std::uint32_t;

inline constexpr std::size_t kMaxSignals = 16;
inline constexpr int kFreeSignal = -1;
inline constexpr int kUnusedSignal = -2;

struct RecoveryStructure {
    int q = 0;
    std::vector<SignalMask> support;  // E_x as a signal mask
    SignalMask used = 0;              // Y(pi)
    int max_size = 0;
    std::vector<SignalMask> max_sets;  // source masks, lexicographic order of the sets
    /// owners[k][y]: the source of max_sets[k] pinned to signal y,
    /// kFreeSignal for an unpinned signal in Y(pi), kUnusedSignal outside Y(pi).
    std::vector<std::vector<int>> owners;
};

RecoveryStructure recovery_structure(int q, const std::vector<SignalMask>& support);

/// Class label for q = 3 (see classify_pi).
std::string classify_structure(const RecoveryStructure& rs);

/// min over the maximum recovery sets of the pinned-plus-free value, where
/// w[y * q + xhat] is the (scaled) contribution of recovering xhat on signal y.
/// Writes the index of the minimizing set and the per-signal choice.
template <typename T>
T min_over_recovery_sets(const RecoveryStructure& rs, const std::vector<T>& w, std::size_t* set_index = nullptr,
                         std::vector<int>* choice = nullptr) {
    const int q = rs.q;
    std::array<T, kMaxSignals> free_min{};
    std::array<int, kMaxSignals> free_arg{};
    for (int y = 0; y < q; ++y) {
        if (!((rs.used >> y) & 1U)) continue;
        const T* row = &w[static_cast<std::size_t>(y * q)];
        int arg = 0;
        for (int xhat = 1; xhat < q; ++xhat)
            if (row[xhat] < row[arg]) arg = xhat;
        free_min[static_cast<std::size_t>(y)] = row[arg];
        free_arg[static_cast<std::size_t>(y)] = arg;
    }
    T best{};
    std::size_t best_index = 0;
    for (std::size_t k = 0; k < rs.owners.size(); ++k) {
        T value{};
        for (int y = 0; y < q; ++y) {
            int owner = rs.owners[k][static_cast<std::size_t>(y)];
            if (owner >= 0)
                value += w[static_cast<std::size_t>(y * q + owner)];
            else if (owner == kFreeSignal)
                value += free_min[static_cast<std::size_t>(y)];
        }
        if (k == 0 || value < best) {
            best = value;
            best_index = k;
        }
    }
    if (set_index) *set_index = best_index;
    if (choice) {
        choice->assign(static_cast<std::size_t>(q), kUnusedSignal);
        for (int y = 0; y < q; ++y) {
            int owner = rs.owners[best_index][static_cast<std::size_t>(y)];
            (*choice)[static_cast<std::size_t>(y)] = owner == kFreeSignal ? free_arg[static_cast<std::size_t>(y)] : owner;
        }
    }
    return best;
}

/// Value of one fixed recovery set.
template <typename T>
T value_for_recovery_set(const RecoveryStructure& rs, std::size_t k, const std::vector<T>& w) {
    const int q = rs.q;
    T value{};
    for (int y = 0; y < q; ++y) {
        int owner = rs.owners[k][static_cast<std::size_t>(y)];
        if (owner >= 0) {
            value += w[static_cast<std::size_t>(y * q + owner)];
        } else if (owner == kFreeSignal) {
            const T* row = &w[static_cast<std::size_t>(y * q)];
            T m = row[0];
            for (int xhat = 1; xhat < q; ++xhat)
                if (row[xhat] < m) m = row[xhat];
            value += m;
        }
    }
    return value;
}

}  // namespace signalling::detail
