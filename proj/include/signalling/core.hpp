#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "signalling/rational.hpp"

namespace signalling {

/// Source symbols, signals and recovered symbols all live in {0, ..., q-1}.
using Symbol = int;

/// Sorted ascending, no duplicates.
using SymbolSet = std::vector<Symbol>;

/// Square table U(recovered, source) of exact sender payoffs.
class UtilityMatrix {
public:
    /// `entries` is row-major; row index is the recovered symbol.
    UtilityMatrix(int q, std::vector<Rational> entries);

    /// Throws DimensionError unless `rows` is non-empty and square.
    static UtilityMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

    int q() const { return q_; }

    const Rational& operator()(Symbol recovered, Symbol source) const {
        return entries_[static_cast<std::size_t>(recovered) * static_cast<std::size_t>(q_) +
                        static_cast<std::size_t>(source)];
    }

    std::vector<std::vector<Rational>> rows() const;

    bool is_symmetric() const;

    friend bool operator==(const UtilityMatrix&, const UtilityMatrix&) = default;

private:
    int q_;
    std::vector<Rational> entries_;
};

/// Total map from source symbols to signals (the signal alphabet is the
/// source alphabet).
class SenderStrategy {
public:
    explicit SenderStrategy(std::vector<Symbol> map);

    static SenderStrategy identity(int q);
    static SenderStrategy constant(int q, Symbol signal);

    /// Decodes `index` as a base-q number, symbol 0 least significant.
    /// Enumerating 0 .. q^q - 1 visits every strategy exactly once.
    static SenderStrategy from_index(int q, std::uint64_t index);
    static std::uint64_t count(int q);

    int q() const { return static_cast<int>(map_.size()); }
    Symbol operator()(Symbol source) const { return map_[static_cast<std::size_t>(source)]; }
    const std::vector<Symbol>& map() const { return map_; }

    SymbolSet range() const;
    bool is_injective() const;
    bool is_constant() const;

    friend bool operator==(const SenderStrategy&, const SenderStrategy&) = default;

private:
    std::vector<Symbol> map_;
};

/// Possibly partial map from signals to recovered symbols.
class ReceiverStrategy {
public:
    explicit ReceiverStrategy(std::vector<std::optional<Symbol>> map);
    static ReceiverStrategy total(const std::vector<Symbol>& map);

    int q() const { return static_cast<int>(map_.size()); }
    std::optional<Symbol> operator()(Symbol signal) const { return map_[static_cast<std::size_t>(signal)]; }
    const std::vector<std::optional<Symbol>>& map() const { return map_; }

private:
    std::vector<std::optional<Symbol>> map_;
};

/// Partition of {0..q-1} into nonempty blocks. Stored canonically: every
/// block sorted ascending, blocks ordered by their minimum element.
class PartitionCover {
public:
    /// Throws DomainError if the blocks are not a partition of {0..q-1}.
    PartitionCover(int q, std::vector<SymbolSet> blocks);

    static PartitionCover singletons(int q);
    static PartitionCover whole(int q);

    int q() const { return q_; }
    std::size_t size() const { return blocks_.size(); }
    const std::vector<SymbolSet>& blocks() const { return blocks_; }

    /// Index of the block containing `x`.
    std::size_t block_of(Symbol x) const { return owner_[static_cast<std::size_t>(x)]; }

    friend bool operator==(const PartitionCover& a, const PartitionCover& b) {
        return a.q_ == b.q_ && a.blocks_ == b.blocks_;
    }
    friend std::strong_ordering operator<=>(const PartitionCover& a, const PartitionCover& b) {
        if (auto c = a.q_ <=> b.q_; c != 0) return c;
        return a.blocks_ <=> b.blocks_;
    }

private:
    int q_;
    std::vector<SymbolSet> blocks_;
    std::vector<std::size_t> owner_;
};

/// Parses a rectangular table of rational literals into a utility matrix.
/// Throws ParseError for a bad literal and DimensionError for a non-square table.
UtilityMatrix parse_utility(const std::vector<std::vector<std::string>>& rows);

/// Pre-image sets {P_i(s) : i in range(s)}.
PartitionCover receiver_dilemma_set(const SenderStrategy& s);

/// Symbols x with g(s(x)) = x. Throws DomainError if g is undefined on range(s).
SymbolSet recovered_set(const ReceiverStrategy& g, const SenderStrategy& s);

/// x -> U(x, x).
std::vector<Rational> diag_utility(const UtilityMatrix& u);

/// A sender strategy whose dilemma set is `partition`; every block is sent to
/// its minimum element.
SenderStrategy witness_strategy(const PartitionCover& partition);

}  // namespace signalling
