#include "signalling/grid_search.hpp"

#include <algorithm>
#include <bit>
#include <memory>
#include <optional>

#include "recovery.hpp"
#include "signalling/errors.hpp"

namespace signalling {

namespace {

using detail::RecoveryStructure;
using detail::SignalMask;

// All compositions of n into q nonnegative parts, lexicographic order.
std::vector<std::vector<int>> compositions(int q, int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> c(static_cast<std::size_t>(q), 0);
    auto rec = [&](auto& self, int pos, int left) -> void {
        if (pos == q - 1) {
            c[static_cast<std::size_t>(pos)] = left;
            out.push_back(c);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            c[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, left - v);
        }
    };
    rec(rec, 0, n);
    return out;
}

SignalMask support_of(const std::vector<int>& c) {
    SignalMask m = 0;
    for (std::size_t y = 0; y < c.size(); ++y)
        if (c[y] > 0) m |= SignalMask{1} << y;
    return m;
}

mpz_class lcm_of_denominators(const std::vector<Rational>& values) {
    mpz_class l = 1;
    for (const auto& v : values) {
        mpz_class d = v.denominator();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    return l;
}

BehavioralStrategy strategy_from(const std::vector<const std::vector<int>*>& rows, int n) {
    std::vector<std::vector<Rational>> out;
    for (const auto* r : rows) {
        std::vector<Rational> row;
        for (int k : *r) row.emplace_back(k, n);
        out.push_back(std::move(row));
    }
    return BehavioralStrategy(std::move(out));
}

// w[y * q + xhat] = sum_x p(x) pi(y|x) U(xhat, x) for an explicit strategy.
std::vector<Rational> contributions(const BehavioralStrategy& pi, const Prior& p, const UtilityMatrix& u) {
    const int q = pi.q();
    std::vector<Rational> w(static_cast<std::size_t>(q * q));
    for (Symbol y = 0; y < q; ++y)
        for (Symbol x = 0; x < q; ++x) {
            if (pi(y, x).sign() == 0) continue;
            const Rational mass = p[x] * pi(y, x);
            for (Symbol xhat = 0; xhat < q; ++xhat) w[static_cast<std::size_t>(y * q + xhat)] += mass * u(xhat, x);
        }
    return w;
}

detail::RecoveryStructure structure_of(const BehavioralStrategy& pi) {
    std::vector<SignalMask> support(static_cast<std::size_t>(pi.q()), 0);
    for (Symbol x = 0; x < pi.q(); ++x)
        for (Symbol y = 0; y < pi.q(); ++y)
            if (pi(y, x).sign() > 0) support[static_cast<std::size_t>(x)] |= SignalMask{1} << y;
    return detail::recovery_structure(pi.q(), support);
}

struct Cached {
    RecoveryStructure structure;
    std::size_t label;
};

template <typename T>
class GridRunner {
public:
    // Scaled inputs: value of a grid point = sum_y w_y / scale with
    // w[y*q+xhat] = sum_x a[x] * k[x][y] * b[xhat][x].
    GridRunner(int q, int n, std::vector<T> a, std::vector<T> b, const GridSearchOptions& options)
        : q_(q), n_(n), options_(options), comps_(compositions(q, n)) {
        const std::size_t qq = static_cast<std::size_t>(q * q);
        table_.resize(static_cast<std::size_t>(q));
        for (int x = 0; x < q; ++x) {
            auto& t = table_[static_cast<std::size_t>(x)];
            t.assign(comps_.size() * qq, T{});
            for (std::size_t c = 0; c < comps_.size(); ++c)
                for (int y = 0; y < q; ++y) {
                    const int k = comps_[c][static_cast<std::size_t>(y)];
                    if (!k) continue;
                    for (int xhat = 0; xhat < q; ++xhat)
                        t[c * qq + static_cast<std::size_t>(y * q + xhat)] =
                            a[static_cast<std::size_t>(x)] * T(k) * b[static_cast<std::size_t>(xhat * q + x)];
                }
        }
        masks_.reserve(comps_.size());
        for (const auto& c : comps_) masks_.push_back(support_of(c));
        cache_.resize(std::size_t{1} << (q * q));
        w_.assign(qq, T{});
    }

    void run() {
        std::vector<std::size_t> chosen(static_cast<std::size_t>(q_));
        descend(0, chosen);
    }

    bool found = false;
    T best{};
    std::vector<std::size_t> best_rows;
    std::uint64_t evaluated = 0;
    std::uint64_t weighted = 0;
    const std::vector<std::vector<int>>& comps() const { return comps_; }

private:
    // Column y may not exceed column y+1 lexicographically (rows so far).
    bool canonical_prefix(const std::vector<std::size_t>& chosen, int rows) const {
        for (int y = 0; y + 1 < q_; ++y) {
            for (int x = 0; x < rows; ++x) {
                const auto& r = comps_[chosen[static_cast<std::size_t>(x)]];
                int lhs = r[static_cast<std::size_t>(y)];
                int rhs = r[static_cast<std::size_t>(y + 1)];
                if (lhs < rhs) break;
                if (lhs > rhs) return false;
            }
        }
        return true;
    }

    std::uint64_t orbit_size(const std::vector<std::size_t>& chosen) const {
        // columns are sorted, so identical columns are adjacent
        std::uint64_t perms = 1;
        for (int y = 1; y <= q_; ++y) perms *= static_cast<std::uint64_t>(y);
        std::uint64_t run = 1;
        for (int y = 1; y <= q_; ++y) {
            bool same = y < q_;
            for (int x = 0; x < q_ && same; ++x) {
                const auto& r = comps_[chosen[static_cast<std::size_t>(x)]];
                same = r[static_cast<std::size_t>(y - 1)] == r[static_cast<std::size_t>(y)];
            }
            if (same) {
                ++run;
                perms /= run;
            } else {
                run = 1;
            }
        }
        return perms;
    }

    void descend(int row, std::vector<std::size_t>& chosen) {
        if (row == q_) {
            evaluate(chosen);
            return;
        }
        for (std::size_t c = 0; c < comps_.size(); ++c) {
            chosen[static_cast<std::size_t>(row)] = c;
            if (options_.use_symmetry && !canonical_prefix(chosen, row + 1)) continue;
            descend(row + 1, chosen);
        }
    }

    const Cached& lookup(const std::vector<std::size_t>& chosen) {
        std::size_t key = 0;
        for (int x = q_ - 1; x >= 0; --x) key = (key << q_) | masks_[chosen[static_cast<std::size_t>(x)]];
        auto& slot = cache_[key];
        if (!slot) {
            std::vector<SignalMask> support;
            for (int x = 0; x < q_; ++x) support.push_back(masks_[chosen[static_cast<std::size_t>(x)]]);
            auto rs = detail::recovery_structure(q_, support);
            auto label = detail::classify_structure(rs);
            auto it = std::find(labels_.begin(), labels_.end(), label);
            std::size_t index = static_cast<std::size_t>(it - labels_.begin());
            if (it == labels_.end()) labels_.push_back(label);
            slot = std::make_unique<Cached>(Cached{std::move(rs), index});
        }
        return *slot;
    }

    void evaluate(const std::vector<std::size_t>& chosen) {
        const std::size_t qq = static_cast<std::size_t>(q_ * q_);
        const T* t0 = &table_[0][chosen[0] * qq];
        for (std::size_t i = 0; i < qq; ++i) w_[i] = t0[i];
        for (int x = 1; x < q_; ++x) {
            const T* t = &table_[static_cast<std::size_t>(x)][chosen[static_cast<std::size_t>(x)] * qq];
            for (std::size_t i = 0; i < qq; ++i) w_[i] += t[i];
        }
        const Cached& cached = lookup(chosen);
        T value = detail::min_over_recovery_sets(cached.structure, w_);
        ++evaluated;
        const std::uint64_t weight = options_.use_symmetry ? orbit_size(chosen) : 1;
        weighted += weight;
        if (counts_.size() <= cached.label) counts_.resize(cached.label + 1, 0);
        counts_[cached.label] += weight;
        if (!found || value > best) {
            found = true;
            best = value;
            best_rows = chosen;
        }
        if (options_.on_point) report(chosen, value, labels_[cached.label]);
    }

    void report(const std::vector<std::size_t>& chosen, const T& value, const std::string& label);

public:
    std::map<std::string, std::uint64_t> histogram() const {
        std::map<std::string, std::uint64_t> out;
        for (std::size_t i = 0; i < counts_.size(); ++i)
            if (counts_[i]) out[labels_[i]] += counts_[i];
        return out;
    }

public:
    std::function<Rational(const T&)> to_rational;

private:
    int q_;
    int n_;
    const GridSearchOptions& options_;
    std::vector<std::vector<int>> comps_;
    std::vector<SignalMask> masks_;
    std::vector<std::vector<T>> table_;
    std::vector<std::unique_ptr<Cached>> cache_;
    std::vector<std::string> labels_;
    std::vector<std::uint64_t> counts_;
    std::vector<T> w_;
};

template <typename T>
void GridRunner<T>::report(const std::vector<std::size_t>& chosen, const T& value, const std::string& label) {
    std::vector<const std::vector<int>*> rows;
    for (auto c : chosen) rows.push_back(&comps_[c]);
    options_.on_point(strategy_from(rows, n_), to_rational(value), label);
}

template <typename T>
void finish(GridRunner<T>& runner, GridSearchResult& result, int n) {
    result.evaluated = runner.evaluated;
    result.class_histogram = runner.histogram();
    result.max_value = runner.to_rational(runner.best);
    std::vector<const std::vector<int>*> rows;
    for (auto c : runner.best_rows) rows.push_back(&runner.comps()[c]);
    result.argmax = strategy_from(rows, n);
    if (runner.weighted != result.points) throw Error("grid search visited an unexpected number of points");
}

}  // namespace

std::uint64_t grid_size(int q, int denominator) {
    if (q < 1 || denominator < 1) throw DomainError("grid needs q >= 1 and N >= 1");
    mpz_class per_row;
    mpz_bin_uiui(per_row.get_mpz_t(), static_cast<unsigned long>(denominator + q - 1), static_cast<unsigned long>(q - 1));
    mpz_class total;
    mpz_pow_ui(total.get_mpz_t(), per_row.get_mpz_t(), static_cast<unsigned long>(q));
    if (total > mpz_class("18446744073709551615"))
        throw SizeLimitError("grid with denominator " + std::to_string(denominator) + " does not fit a 64-bit count");
    return std::stoull(total.get_str());
}

BehavioralStrategy limit_point(const BehavioralStrategy& pi, int denominator) {
    if (denominator < 1) throw DomainError("grid denominator must be positive");
    const Rational step(1, denominator);
    auto rows = pi.rows();
    for (auto& row : rows) {
        const auto largest = static_cast<std::size_t>(std::max_element(row.begin(), row.end()) - row.begin());
        Rational moved;
        for (std::size_t y = 0; y < row.size(); ++y)
            if (y != largest && row[y] == step) {
                moved += row[y];
                row[y] = 0;
            }
        row[largest] += moved;
    }
    return BehavioralStrategy(std::move(rows));
}

std::string GridSearchResult::verdict() const {
    if (attained) return "maximum attained on grid; max = " + max_value.to_string();
    return "supremum not attained on grid; max = " + max_value.to_string();
}

GridSearchResult grid_search_sup(const UtilityMatrix& u, const Prior& p, int denominator,
                                 const GridSearchOptions& options) {
    const int q = u.q();
    if (q != 3) throw UnsupportedError("grid search is defined for 3 symbols, got q = " + std::to_string(q));
    if (p.q() != q) throw DimensionError("prior and utility matrix disagree on the alphabet size");
    if (denominator < 1) throw DomainError("grid denominator must be positive");

    GridSearchResult result;
    result.q = q;
    result.denominator = denominator;
    result.points = grid_size(q, denominator);
    if (result.points > options.max_points)
        throw SizeLimitError("grid with denominator " + std::to_string(denominator) + " has " +
                             std::to_string(result.points) + " points, budget is " + std::to_string(options.max_points));

    GridSearchOptions effective = options;
    if (effective.on_point) effective.use_symmetry = false;

    std::vector<Rational> entries;
    for (Symbol r = 0; r < q; ++r)
        for (Symbol c = 0; c < q; ++c) entries.push_back(u(r, c));
    const mpz_class p_scale = lcm_of_denominators(p.values());
    const mpz_class u_scale = lcm_of_denominators(entries);

    mpz_class max_b = 0;
    for (const auto& e : entries) max_b = std::max(max_b, mpz_class(abs(e.raw() * u_scale)));
    // |value| <= max|b| * N * p_scale; a few extra bits cover the partial sums
    const mpz_class bound = max_b * denominator * p_scale * q * q;
    result.integer_arithmetic = bound < (mpz_class(1) << 62);

    if (result.integer_arithmetic) {
        std::vector<std::int64_t> a, b;
        for (const auto& v : p.values()) a.push_back(mpz_class(v.raw() * p_scale).get_si());
        for (const auto& e : entries) b.push_back(mpz_class(e.raw() * u_scale).get_si());
        GridRunner<std::int64_t> runner(q, denominator, a, b, effective);
        const mpq_class scale(mpz_class(p_scale * u_scale * denominator));
        runner.to_rational = [scale](const std::int64_t& v) {
            return Rational(mpq_class(mpz_class(static_cast<long>(v))) / scale);
        };
        runner.run();
        finish(runner, result, denominator);
    } else {
        GridRunner<Rational> runner(q, denominator, p.values(), entries, effective);
        runner.to_rational = [denominator](const Rational& v) { return v / Rational(denominator); };
        runner.run();
        finish(runner, result, denominator);
    }

    result.argmax_class = classify_pi(result.argmax);
    result.limit_point = limit_point(result.argmax, denominator);
    result.limit_class = classify_pi(result.limit_point);
    result.limit_value = min_best_response_utility(result.limit_point, p, u).value;
    result.sup_estimate = detail::min_over_recovery_sets(structure_of(result.argmax),
                                                         contributions(result.limit_point, p, u));
    result.attained = result.max_value >= result.sup_estimate;
    return result;
}

}  // namespace signalling
