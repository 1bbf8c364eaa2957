#include "signalling/behavioral.hpp"

#include <algorithm>
#include <bit>
#include <optional>

#include "recovery.hpp"
#include "signalling/errors.hpp"
#include "signalling/graphs.hpp"

namespace signalling {

namespace detail {

RecoveryStructure recovery_structure(int q, const std::vector<SignalMask>& support) {
    RecoveryStructure rs;
    rs.q = q;
    rs.support = support;
    for (auto e : support) rs.used |= e;

    const std::size_t n = std::size_t{1} << q;
    std::vector<std::uint8_t> disjoint(n, 0);
    std::vector<SignalMask> reach(n, 0);
    disjoint[0] = 1;
    std::vector<SignalMask> best;
    for (std::size_t m = 1; m < n; ++m) {
        int low = std::countr_zero(m);
        std::size_t rest = m & (m - 1);
        const SignalMask e = support[static_cast<std::size_t>(low)];
        disjoint[m] = disjoint[rest] && !(reach[rest] & e);
        reach[m] = reach[rest] | e;
        if (!disjoint[m]) continue;
        int size = std::popcount(m);
        if (size > rs.max_size) {
            rs.max_size = size;
            best.clear();
        }
        if (size == rs.max_size) best.push_back(static_cast<SignalMask>(m));
    }
    std::sort(best.begin(), best.end(),
              [](SignalMask a, SignalMask b) { return to_set(a) < to_set(b); });
    rs.max_sets = best;

    for (auto set : rs.max_sets) {
        std::vector<int> owner(static_cast<std::size_t>(q), kUnusedSignal);
        for (int y = 0; y < q; ++y)
            if ((rs.used >> y) & 1U) owner[static_cast<std::size_t>(y)] = kFreeSignal;
        for (int x = 0; x < q; ++x) {
            if (!((set >> x) & 1U)) continue;
            for (int y = 0; y < q; ++y)
                if ((support[static_cast<std::size_t>(x)] >> y) & 1U) owner[static_cast<std::size_t>(y)] = x;
        }
        rs.owners.push_back(std::move(owner));
    }
    return rs;
}

std::string classify_structure(const RecoveryStructure& rs) {
    if (rs.q != 3) throw UnsupportedError("class labels are defined for 3 symbols only, got q = " + std::to_string(rs.q));
    if (rs.max_size == 3) return "A";
    if (rs.max_size == 1) return "B";
    const int signals = std::popcount(rs.used);
    auto size = [&](int x) { return std::popcount(rs.support[static_cast<std::size_t>(x)]); };
    if (rs.max_sets.size() == 2) {
        const auto common = rs.max_sets[0] & rs.max_sets[1];
        const int i = std::countr_zero(common);
        const int j = (i + 1) % 3;
        const int k = (i + 2) % 3;
        if (signals == 2) return "C.a-i";
        if (size(i) == 2) return "C.a-ii";
        return size(j) == 1 || size(k) == 1 ? "C.a-iii-1" : "C.a-iii-2";
    }
    if (rs.max_sets.size() != 1) throw Error("more than two maximum recovery sets among three symbols");
    const int i = std::countr_zero(rs.max_sets[0]);
    const int j = std::countr_zero(rs.max_sets[0] & (rs.max_sets[0] - 1));
    const int k = 3 - i - j;
    if (signals == 2) return "C.b-i";
    if (size(i) == 1 && size(j) == 1) return "C.b-ii-1";
    return rs.support[static_cast<std::size_t>(k)] == rs.used ? "C.b-ii-2-beta" : "C.b-ii-2-alpha";
}

}  // namespace detail

namespace {

void check_probability_vector(const std::vector<Rational>& v, const std::string& what) {
    Rational total;
    for (const auto& e : v) {
        if (e < Rational(0) || e > Rational(1)) throw DomainError(what + " has an entry outside [0, 1]: " + e.to_string());
        total += e;
    }
    if (total != Rational(1)) throw DomainError(what + " sums to " + total.to_string() + ", not 1");
}

void check_sizes(const BehavioralStrategy& pi, const Prior& p, const UtilityMatrix& u) {
    if (pi.q() != p.q() || pi.q() != u.q())
        throw DimensionError("strategy, prior and utility matrix disagree on the alphabet size (" +
                             std::to_string(pi.q()) + ", " + std::to_string(p.q()) + ", " + std::to_string(u.q()) + ")");
}

detail::RecoveryStructure structure_of(const BehavioralStrategy& pi) {
    if (pi.q() > kMaxBehavioralQ)
        throw SizeLimitError("recovery-set search supports at most " + std::to_string(kMaxBehavioralQ) +
                             " symbols, got " + std::to_string(pi.q()));
    std::vector<detail::SignalMask> support(static_cast<std::size_t>(pi.q()), 0);
    for (Symbol x = 0; x < pi.q(); ++x)
        for (Symbol y = 0; y < pi.q(); ++y)
            if (pi(y, x).sign() > 0) support[static_cast<std::size_t>(x)] |= detail::SignalMask{1} << y;
    return detail::recovery_structure(pi.q(), support);
}

SymbolSet signal_set(detail::SignalMask m) { return to_set(m); }

}  // namespace

BehavioralStrategy::BehavioralStrategy(std::vector<std::vector<Rational>> rows) : rows_(std::move(rows)) {
    if (rows_.empty()) throw DimensionError("behavioral strategy needs at least one row");
    for (std::size_t x = 0; x < rows_.size(); ++x) {
        if (rows_[x].size() != rows_.size())
            throw DimensionError("behavioral strategy row " + std::to_string(x) + " has " +
                                 std::to_string(rows_[x].size()) + " entries, expected " + std::to_string(rows_.size()));
        check_probability_vector(rows_[x], "row " + std::to_string(x) + " of the behavioral strategy");
    }
}

BehavioralStrategy BehavioralStrategy::deterministic(const SenderStrategy& s) {
    std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(s.q()),
                                            std::vector<Rational>(static_cast<std::size_t>(s.q())));
    for (Symbol x = 0; x < s.q(); ++x) rows[static_cast<std::size_t>(x)][static_cast<std::size_t>(s(x))] = 1;
    return BehavioralStrategy(std::move(rows));
}

Prior::Prior(std::vector<Rational> p) : p_(std::move(p)) {
    if (p_.empty()) throw DimensionError("prior needs at least one entry");
    Rational total;
    for (const auto& e : p_) {
        if (e.sign() <= 0) throw DomainError("prior entries must be positive, got " + e.to_string());
        total += e;
    }
    if (total != Rational(1)) throw DomainError("prior sums to " + total.to_string() + ", not 1");
}

Prior Prior::uniform(int q) {
    if (q < 1) throw DomainError("prior needs at least one entry");
    return Prior(std::vector<Rational>(static_cast<std::size_t>(q), Rational(1, q)));
}

Prior Prior::parse(std::string_view text) {
    std::vector<Rational> values;
    std::size_t start = 0;
    while (true) {
        auto comma = text.find(',', start);
        values.push_back(Rational::parse(text.substr(start, comma == std::string_view::npos ? comma : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return Prior(std::move(values));
}

ReceiverKernel::ReceiverKernel(int q, std::vector<std::vector<Rational>> columns) : q_(q), columns_(std::move(columns)) {
    if (q < 1 || columns_.size() != static_cast<std::size_t>(q))
        throw DimensionError("receiver kernel needs one column per signal");
    for (std::size_t y = 0; y < columns_.size(); ++y) {
        if (columns_[y].empty()) continue;
        if (columns_[y].size() != static_cast<std::size_t>(q))
            throw DimensionError("receiver kernel column " + std::to_string(y) + " has the wrong length");
        check_probability_vector(columns_[y], "column " + std::to_string(y) + " of the receiver kernel");
    }
}

ReceiverKernel ReceiverKernel::from(const ReceiverStrategy& g) {
    std::vector<std::vector<Rational>> columns(static_cast<std::size_t>(g.q()));
    for (Symbol y = 0; y < g.q(); ++y) {
        if (auto xhat = g(y)) {
            if (*xhat < 0 || *xhat >= g.q()) throw DomainError("receiver maps signal " + std::to_string(y) + " outside the alphabet");
            columns[static_cast<std::size_t>(y)].assign(static_cast<std::size_t>(g.q()), Rational(0));
            columns[static_cast<std::size_t>(y)][static_cast<std::size_t>(*xhat)] = 1;
        }
    }
    return ReceiverKernel(g.q(), std::move(columns));
}

SupportSets supports(const BehavioralStrategy& pi) {
    SupportSets out;
    std::vector<bool> used(static_cast<std::size_t>(pi.q()), false);
    for (Symbol x = 0; x < pi.q(); ++x) {
        SymbolSet e;
        for (Symbol y = 0; y < pi.q(); ++y)
            if (pi(y, x).sign() > 0) {
                e.push_back(y);
                used[static_cast<std::size_t>(y)] = true;
            }
        out.per_symbol.push_back(std::move(e));
    }
    for (Symbol y = 0; y < pi.q(); ++y)
        if (used[static_cast<std::size_t>(y)]) out.used.push_back(y);
    return out;
}

RecoverySets max_recovery_sets(const BehavioralStrategy& pi) {
    const auto rs = structure_of(pi);
    RecoverySets out;
    out.size = rs.max_size;
    for (auto m : rs.max_sets) out.sets.push_back(signal_set(m));
    return out;
}

Rational expected_utility(const BehavioralStrategy& pi, const ReceiverKernel& sigma, const Prior& p,
                          const UtilityMatrix& u) {
    check_sizes(pi, p, u);
    if (sigma.q() != pi.q()) throw DimensionError("receiver kernel and strategy disagree on the alphabet size");
    const int q = pi.q();
    Rational total;
    for (Symbol y = 0; y < q; ++y) {
        bool used = false;
        for (Symbol x = 0; x < q && !used; ++x) used = pi(y, x).sign() > 0;
        if (!used) continue;
        if (!sigma.specified(y)) throw DomainError("receiver kernel is unspecified on used signal " + std::to_string(y));
        for (Symbol x = 0; x < q; ++x) {
            if (pi(y, x).sign() == 0) continue;
            Rational inner;
            for (Symbol xhat = 0; xhat < q; ++xhat)
                if (sigma(xhat, y).sign() != 0) inner += sigma(xhat, y) * u(xhat, x);
            total += p[x] * pi(y, x) * inner;
        }
    }
    return total;
}

MinBestResponse min_best_response_utility(const BehavioralStrategy& pi, const Prior& p, const UtilityMatrix& u) {
    check_sizes(pi, p, u);
    const int q = pi.q();
    const auto rs = structure_of(pi);
    std::vector<Rational> w(static_cast<std::size_t>(q * q));
    for (Symbol y = 0; y < q; ++y) {
        if (!((rs.used >> y) & 1U)) continue;
        for (Symbol x = 0; x < q; ++x) {
            if (pi(y, x).sign() == 0) continue;
            const Rational mass = p[x] * pi(y, x);
            for (Symbol xhat = 0; xhat < q; ++xhat) w[static_cast<std::size_t>(y * q + xhat)] += mass * u(xhat, x);
        }
    }
    std::size_t index = 0;
    std::vector<int> choice;
    MinBestResponse out;
    out.value = detail::min_over_recovery_sets(rs, w, &index, &choice);
    std::vector<std::optional<Symbol>> map(static_cast<std::size_t>(q));
    for (Symbol y = 0; y < q; ++y)
        if (choice[static_cast<std::size_t>(y)] >= 0) map[static_cast<std::size_t>(y)] = choice[static_cast<std::size_t>(y)];
    out.witness = ReceiverStrategy(std::move(map));
    out.recovery_set = signal_set(rs.max_sets[index]);
    return out;
}

RecoveryAnalysis analyze_recovery(const BehavioralStrategy& pi, const Prior& p, const UtilityMatrix& u) {
    RecoveryAnalysis out;
    out.supports = supports(pi);
    auto sets = max_recovery_sets(pi);
    out.max_recovery_size = sets.size;
    out.recovery_sets = std::move(sets.sets);
    auto br = min_best_response_utility(pi, p, u);
    out.min_br_utility = std::move(br.value);
    out.witness_sigma = std::move(br.witness);
    return out;
}

std::string classify_pi(const BehavioralStrategy& pi) {
    if (pi.q() != 3) throw UnsupportedError("class labels are defined for 3 symbols only, got q = " + std::to_string(pi.q()));
    return detail::classify_structure(structure_of(pi));
}

std::string class_family(std::string_view label) {
    if (label.starts_with("C.a")) return "C.a";
    if (label.starts_with("C.b")) return "C.b";
    return std::string(label);
}

bool has_skew_structure(const UtilityMatrix& u) {
    const int q = u.q();
    for (Symbol x = 0; x < q; ++x)
        for (Symbol y = 0; y < q; ++y)
            if (u(x, y) != -u(y, x)) return false;
    for (Symbol x = 0; x < q; ++x)
        for (Symbol y = 0; y < q; ++y)
            for (Symbol z = 0; z < q; ++z)
                if (x != y && y != z && x != z && u(x, y) != -u(x, z)) return false;
    return true;
}

}  // namespace signalling
