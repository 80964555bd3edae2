#include "nfsr/census.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <thread>

#include "json.hpp"

#include "nfsr/rng.hpp"
#include "nfsr/state_space.hpp"

namespace nfsr {

namespace {

void check_code_n(int n) {
    if (n < 1 || n > 6) {
        throw std::invalid_argument("code-indexed census requires 1 <= n <= 6, got " +
                                    std::to_string(n));
    }
}

void check_range(int n, std::uint64_t begin, std::uint64_t end) {
    check_code_n(n);
    if (begin > end) {
        throw std::invalid_argument("range begin exceeds end");
    }
    if (n < 6) {
        const std::uint64_t domain = std::uint64_t(1) << (1u << n);
        if (end > domain) {
            throw std::invalid_argument("range end exceeds the 2^(2^n) domain");
        }
    }
}

unsigned resolve_threads(unsigned threads) {
    if (threads != 0) return threads;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// Allocation-free (r, d) for one function code. Same classification as
// analyze(); equivalence is covered by tests.
struct CodeScan {
    std::vector<std::uint32_t> succ;
    std::vector<std::uint32_t> indeg;
    std::vector<std::uint32_t> stack;
    std::vector<std::uint8_t> off_cycle;
    std::vector<std::uint8_t> seen;

    explicit CodeScan(int n)
        : succ(1u << n), indeg(1u << n), off_cycle(1u << n), seen(1u << n) {
        stack.reserve(1u << n);
    }

    std::pair<std::uint32_t, std::uint32_t> run(std::uint64_t fcode, int n) {
        const std::uint32_t size = 1u << n;
        const int shift = n - 1;

        std::fill(indeg.begin(), indeg.end(), 0);
        std::fill(off_cycle.begin(), off_cycle.end(), 0);
        std::fill(seen.begin(), seen.end(), 0);
        for (std::uint32_t s = 0; s < size; ++s) {
            succ[s] = (std::uint32_t((fcode >> s) & 1) << shift) | (s >> 1);
            ++indeg[succ[s]];
        }

        stack.clear();
        for (std::uint32_t s = 0; s < size; ++s) {
            if (indeg[s] == 0) stack.push_back(s);
        }
        const std::uint32_t goe = std::uint32_t(stack.size());
        while (!stack.empty()) {
            const std::uint32_t s = stack.back();
            stack.pop_back();
            off_cycle[s] = 1;
            const std::uint32_t t = succ[s];
            if (--indeg[t] == 0) stack.push_back(t);
        }

        std::uint32_t max_cycle = 0;
        for (std::uint32_t s = 0; s < size; ++s) {
            if (off_cycle[s] || seen[s]) continue;
            std::uint32_t len = 0;
            std::uint32_t cur = s;
            do {
                seen[cur] = 1;
                ++len;
                cur = succ[cur];
            } while (cur != s);
            max_cycle = std::max(max_cycle, len);
        }
        return {max_cycle, goe};
    }
};

CensusHistogram tally_range(int n, std::uint64_t begin, std::uint64_t end) {
    CensusHistogram h;
    h.n = n;
    CodeScan scan(n);
    for (std::uint64_t code = begin; code < end; ++code) {
        const auto [r, d] = scan.run(code, n);
        tally(h, r, d);
    }
    return h;
}

nlohmann::ordered_json histogram_to_json(const CensusHistogram& h) {
    nlohmann::ordered_json j;
    j["n"] = h.n;
    j["total"] = h.total;
    auto& by_r = j["by_max_cycle"] = nlohmann::ordered_json::object();
    for (const auto& [r, count] : h.by_max_cycle) by_r[std::to_string(r)] = count;
    auto& by_d = j["by_goe_count"] = nlohmann::ordered_json::object();
    for (const auto& [d, count] : h.by_goe_count) by_d[std::to_string(d)] = count;
    return j;
}

CensusHistogram histogram_from_json(const nlohmann::json& j) {
    CensusHistogram h;
    h.n = j.at("n").get<int>();
    h.total = j.at("total").get<std::uint64_t>();
    for (const auto& [key, count] : j.at("by_max_cycle").items()) {
        h.by_max_cycle[std::uint32_t(std::stoul(key))] = count.get<std::uint64_t>();
    }
    for (const auto& [key, count] : j.at("by_goe_count").items()) {
        h.by_goe_count[std::uint32_t(std::stoul(key))] = count.get<std::uint64_t>();
    }
    return h;
}

} // namespace

void tally(CensusHistogram& h, std::uint32_t max_cycle_r, std::uint32_t goe_count_d) {
    if (h.n < 1 || h.n > 16) {
        throw std::invalid_argument("histogram n must be set before tallying");
    }
    const std::uint32_t cap = (1u << h.n) - 1;
    ++h.by_max_cycle[std::min(max_cycle_r, cap)];
    ++h.by_goe_count[goe_count_d];
    ++h.total;
}

void merge(CensusHistogram& into, const CensusHistogram& from) {
    if (into.n != from.n) {
        throw std::invalid_argument("cannot merge histograms with different n");
    }
    into.total += from.total;
    for (const auto& [r, count] : from.by_max_cycle) into.by_max_cycle[r] += count;
    for (const auto& [d, count] : from.by_goe_count) into.by_goe_count[d] += count;
}

void for_each_function(
    int n, std::uint64_t begin, std::uint64_t end,
    const std::function<void(std::uint64_t, std::uint32_t, std::uint32_t)>& fn) {
    check_range(n, begin, end);
    CodeScan scan(n);
    for (std::uint64_t code = begin; code < end; ++code) {
        const auto [r, d] = scan.run(code, n);
        fn(code, r, d);
    }
}

CensusHistogram sweep(int n, unsigned threads) {
    if (n < 2 || n > 4) {
        throw std::invalid_argument("exhaustive sweep requires 2 <= n <= 4, got " +
                                    std::to_string(n));
    }
    return sweep_range(n, 0, std::uint64_t(1) << (1u << n), threads);
}

CensusHistogram sweep_range(int n, std::uint64_t begin, std::uint64_t end,
                            unsigned threads) {
    check_range(n, begin, end);
    const std::uint64_t span = end - begin;
    const unsigned workers =
        unsigned(std::min<std::uint64_t>(resolve_threads(threads), std::max<std::uint64_t>(span, 1)));

    if (workers <= 1 || span < 2) {
        return tally_range(n, begin, end);
    }

    std::vector<CensusHistogram> parts(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t lo = begin + span * w / workers;
        const std::uint64_t hi = begin + span * (w + 1) / workers;
        pool.emplace_back([&parts, w, n, lo, hi] { parts[w] = tally_range(n, lo, hi); });
    }
    for (auto& t : pool) t.join();

    CensusHistogram result;
    result.n = n;
    for (const auto& part : parts) merge(result, part);
    return result;
}

CensusHistogram sample_sweep(int n, std::uint64_t samples, std::uint64_t seed) {
    if (n < 2 || n > 16) {
        throw std::invalid_argument("sample sweep requires 2 <= n <= 16, got " +
                                    std::to_string(n));
    }
    if (samples < 1) {
        throw std::invalid_argument("sample sweep requires at least one sample");
    }
    CensusHistogram h;
    h.n = n;
    std::mt19937_64 rng(seed);
    for (std::uint64_t i = 0; i < samples; ++i) {
        const TruthTable f = random_truth_table(n, rng);
        const CycleGoeSummary s = cycle_goe_summary(f);
        tally(h, s.max_cycle_r, s.goe_count_d);
    }
    return h;
}

std::string emit_histogram(const CensusHistogram& h, HistogramFormat format) {
    if (format == HistogramFormat::Json) {
        return histogram_to_json(h).dump(2) + "\n";
    }
    std::string out = "metric,key,count\n";
    for (const auto& [d, count] : h.by_goe_count) {
        out += "goe_count," + std::to_string(d) + "," + std::to_string(count) + "\n";
    }
    for (const auto& [r, count] : h.by_max_cycle) {
        out += "max_cycle," + std::to_string(r) + "," + std::to_string(count) + "\n";
    }
    return out;
}

SweepCheckpoint load_checkpoint(std::istream& in) {
    nlohmann::json j;
    in >> j;
    SweepCheckpoint cp;
    cp.partial = histogram_from_json(j.at("partial"));
    cp.next_code = j.at("next_code").get<std::uint64_t>();
    return cp;
}

void save_checkpoint(std::ostream& out, const SweepCheckpoint& cp) {
    nlohmann::ordered_json j;
    j["next_code"] = cp.next_code;
    j["partial"] = histogram_to_json(cp.partial);
    out << j.dump(2) << "\n";
}

CensusHistogram resumable_sweep(
    int n, std::uint64_t domain_end, SweepCheckpoint cp, std::uint64_t interval,
    unsigned threads,
    const std::function<void(const SweepCheckpoint&)>& on_checkpoint) {
    check_range(n, cp.next_code, domain_end);
    if (interval == 0) {
        throw std::invalid_argument("checkpoint interval must be positive");
    }
    if (cp.partial.n == 0 && cp.partial.total == 0) {
        cp.partial.n = n; // fresh start
    }
    if (cp.partial.n != n) {
        throw std::invalid_argument("checkpoint n does not match sweep n");
    }

    while (cp.next_code < domain_end) {
        const std::uint64_t hi = std::min(domain_end, cp.next_code + interval);
        merge(cp.partial, sweep_range(n, cp.next_code, hi, threads));
        cp.next_code = hi;
        if (on_checkpoint) on_checkpoint(cp);
    }
    return cp.partial;
}

} // namespace nfsr
