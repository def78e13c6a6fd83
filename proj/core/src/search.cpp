#include "gzcz/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "gzcz/ccc.hpp"
#include "gzcz/errors.hpp"

namespace gzcz {

namespace {

using Clock = std::chrono::steady_clock;

// Aperiodic cross-correlation of two +-1 rows at shift tau >= 0.
std::int64_t cross_at(const std::int8_t* x, const std::int8_t* y, std::size_t n,
                      std::size_t tau) {
    std::int64_t acc = 0;
    for (std::size_t k = 0; k + tau < n; ++k) {
        acc += static_cast<std::int64_t>(x[k]) * y[k + tau];
    }
    return acc;
}

struct Dfs {
    std::size_t m;  // set size and sets count
    std::size_t n;  // row length
    SearchConfig config;
    Clock::time_point deadline;
    std::size_t global_cap; // stop after this many solutions
    std::vector<std::int8_t> entries; // m*m*n signs, set-major
    SearchCounters counters;
    std::vector<CompleteComplementaryCode> found;
    bool timed_out = false;

    const std::int8_t* row_ptr(std::size_t set, std::size_t row) const {
        return entries.data() + (set * m + row) * n;
    }

    bool out_of_time() {
        if ((counters.nodes & 0xfff) == 0 && Clock::now() >= deadline) {
            timed_out = true;
            return true;
        }
        return timed_out;
    }

    // Feasibility of set `set` through its first `rows` rows. Each missing
    // row changes the shift-tau sums by at most n - |tau|.
    bool set_feasible(std::size_t set, std::size_t rows) const {
        const auto remaining = static_cast<std::int64_t>(m - rows);
        for (std::size_t tau = 1; tau < n; ++tau) {
            std::int64_t acc = 0;
            for (std::size_t r = 0; r < rows; ++r) {
                acc += cross_at(row_ptr(set, r), row_ptr(set, r), n, tau);
            }
            const auto slack = remaining * static_cast<std::int64_t>(n - tau);
            if (acc > slack || acc < -slack) {
                return false;
            }
        }
        return true;
    }

    bool cross_feasible(std::size_t set_a, std::size_t set_b, std::size_t rows) const {
        const auto remaining = static_cast<std::int64_t>(m - rows);
        for (std::size_t tau = 0; tau < n; ++tau) {
            // positive and negative shifts of the row-wise cross sum
            std::int64_t fwd = 0;
            std::int64_t bwd = 0;
            for (std::size_t r = 0; r < rows; ++r) {
                fwd += cross_at(row_ptr(set_a, r), row_ptr(set_b, r), n, tau);
                bwd += cross_at(row_ptr(set_b, r), row_ptr(set_a, r), n, tau);
            }
            const auto slack = remaining * static_cast<std::int64_t>(n - tau);
            if (fwd > slack || fwd < -slack || bwd > slack || bwd < -slack) {
                return false;
            }
        }
        return true;
    }

    // Called when row `row` of set `set` has just been filled.
    bool row_checks(std::size_t set, std::size_t row) {
        if (!config.pruning) {
            return true;
        }
        const std::size_t rows = row + 1;
        if (!set_feasible(set, rows)) {
            return false;
        }
        for (std::size_t prev = 0; prev < set; ++prev) {
            if (!cross_feasible(prev, set, rows)) {
                return false;
            }
        }
        return true;
    }

    CompleteComplementaryCode assemble() const {
        std::vector<ComplementarySet> sets;
        sets.reserve(m);
        for (std::size_t k = 0; k < m; ++k) {
            std::vector<PhaseSequence> rows;
            rows.reserve(m);
            for (std::size_t r = 0; r < m; ++r) {
                std::vector<std::uint32_t> e(n);
                const std::int8_t* p = row_ptr(k, r);
                for (std::size_t c = 0; c < n; ++c) {
                    e[c] = p[c] == 1 ? 0u : 1u;
                }
                rows.emplace_back(2u, std::move(e));
            }
            sets.emplace_back(std::move(rows));
        }
        return CompleteComplementaryCode{std::move(sets)};
    }

    void leaf() {
        CompleteComplementaryCode code = assemble();
        if (!verify_ccc(code)) {
            // with pruning on this cannot happen; without it, it is the filter
            counters.prunes += config.pruning ? 0 : 1;
            return;
        }
        counters.solutions += 1;
        found.push_back(std::move(code));
    }

    // pos indexes entries in set-major, row-major, column order.
    void descend(std::size_t pos) {
        if (found.size() >= global_cap || out_of_time()) {
            return;
        }
        const std::size_t total = m * m * n;
        if (pos == total) {
            leaf();
            return;
        }
        const std::size_t set = pos / (m * n);
        const std::size_t row = (pos / n) % m;
        const std::size_t col = pos % n;
        const bool pinned = config.symmetry_reduction && set == 0 && row == 0;
        const bool row_done = col == n - 1;
        for (int sign = 1; sign >= -1; sign -= 2) {
            if (pinned && sign != 1) {
                continue;
            }
            entries[pos] = static_cast<std::int8_t>(sign);
            counters.nodes += 1;
            if (row_done && !row_checks(set, row)) {
                counters.prunes += 1;
                continue;
            }
            descend(pos + 1);
            if (found.size() >= global_cap || timed_out) {
                return;
            }
        }
    }
};

SearchResult run_sequential(const SearchConfig& config, Clock::time_point deadline) {
    Dfs dfs;
    dfs.m = config.set_size;
    dfs.n = config.length;
    dfs.config = config;
    dfs.deadline = deadline;
    dfs.global_cap = config.max_solutions;
    dfs.entries.assign(dfs.m * dfs.m * dfs.n, 0);
    dfs.descend(0);
    return {std::move(dfs.found), dfs.timed_out, dfs.counters};
}

// Parallel mode: fix the first row that the sequential search would branch
// on and hand each of its 2^n values to a worker; concatenating per-value
// results in value order reproduces the sequential solution order.
SearchResult run_parallel(const SearchConfig& config, Clock::time_point deadline,
                          unsigned threads) {
    const std::size_t m = config.set_size;
    const std::size_t n = config.length;
    const std::size_t first_free_row = config.symmetry_reduction ? 1 : 0;
    const std::size_t prefix_count = std::size_t{1} << n;

    std::vector<SearchResult> partial(prefix_count);
    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};

    auto worker = [&]() {
        for (;;) {
            const std::size_t v = next.fetch_add(1);
            if (v >= prefix_count || stop.load()) {
                return;
            }
            Dfs dfs;
            dfs.m = m;
            dfs.n = n;
            dfs.config = config;
            dfs.deadline = deadline;
            dfs.global_cap = config.max_solutions;
            dfs.entries.assign(m * m * n, 0);
            // preassign rows up to and including the partition row
            for (std::size_t c = 0; c < n; ++c) {
                if (first_free_row == 1) {
                    dfs.entries[c] = 1; // pinned row 0 of set 0
                }
                const bool bit = (v >> (n - 1 - c)) & 1u;
                dfs.entries[first_free_row * n + c] = bit ? -1 : 1;
                dfs.counters.nodes += 1;
            }
            if (dfs.row_checks(0, first_free_row)) {
                dfs.descend((first_free_row + 1) * n);
            } else {
                dfs.counters.prunes += 1;
            }
            partial[v] = SearchResult{std::move(dfs.found), dfs.timed_out, dfs.counters};
            if (dfs.timed_out) {
                stop.store(true);
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back(worker);
    }
    for (auto& t : pool) {
        t.join();
    }

    SearchResult merged;
    for (auto& p : partial) {
        merged.timed_out = merged.timed_out || p.timed_out;
        merged.counters.nodes += p.counters.nodes;
        merged.counters.prunes += p.counters.prunes;
        for (auto& code : p.codes) {
            if (merged.codes.size() < config.max_solutions) {
                merged.codes.push_back(std::move(code));
            }
        }
    }
    merged.counters.solutions = merged.codes.size();
    return merged;
}

} // namespace

SearchResult search_ccc(const SearchConfig& config, unsigned threads) {
    if (config.length < 1) {
        throw Error("search length must be >= 1");
    }
    if (config.set_size < 1) {
        throw Error("search set size must be >= 1");
    }
    if (config.timeout_seconds <= 0.0) {
        throw Error("search timeout must be positive");
    }
    const auto deadline =
        Clock::now() + std::chrono::duration_cast<Clock::duration>(
                           std::chrono::duration<double>(config.timeout_seconds));
    // partitioning enumerates 2^N first-row values; fall back for long rows
    if (threads <= 1 || config.set_size < 2 || config.length > 20) {
        return run_sequential(config, deadline);
    }
    return run_parallel(config, deadline, threads);
}

CompleteComplementaryCode canonicalize(const CompleteComplementaryCode& code) {
    const std::uint32_t q = code.modulus();
    const bool can_negate = q >= 1 && q % 2 == 0;

    auto flatten = [&](const CompleteComplementaryCode& c, bool neg, bool rev) {
        std::vector<std::uint32_t> flat;
        flat.reserve(c.set_count() * c.rows_per_set() * c.length());
        for (const auto& set : c.sets()) {
            for (const auto& row : set.rows()) {
                const auto exps = row.exponents();
                for (std::size_t i = 0; i < exps.size(); ++i) {
                    std::uint32_t e = rev ? exps[exps.size() - 1 - i] : exps[i];
                    if (neg) {
                        e = (e + q / 2) % q;
                    }
                    flat.push_back(e);
                }
            }
        }
        return flat;
    };

    std::vector<std::pair<bool, bool>> images = {{false, false}, {false, true}};
    if (can_negate) {
        images.emplace_back(true, false);
        images.emplace_back(true, true);
    }

    std::pair<bool, bool> best = images.front();
    std::vector<std::uint32_t> best_flat = flatten(code, best.first, best.second);
    for (std::size_t i = 1; i < images.size(); ++i) {
        auto flat = flatten(code, images[i].first, images[i].second);
        if (flat < best_flat) {
            best_flat = std::move(flat);
            best = images[i];
        }
    }

    std::vector<ComplementarySet> sets;
    sets.reserve(code.set_count());
    for (const auto& set : code.sets()) {
        std::vector<PhaseSequence> rows;
        rows.reserve(set.set_size());
        for (const auto& row : set.rows()) {
            PhaseSequence r = best.second ? reverse(row) : row;
            if (best.first) {
                r = negate(r);
            }
            rows.push_back(std::move(r));
        }
        sets.emplace_back(std::move(rows));
    }
    return CompleteComplementaryCode{std::move(sets)};
}

} // namespace gzcz
