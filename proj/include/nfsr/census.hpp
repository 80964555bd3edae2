#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>

#include "nfsr/truth_table.hpp"

namespace nfsr {

// Function counts keyed by max-cycle value and by Garden-of-Eden count.
// Exact integer counters; sums of each map equal total.
struct CensusHistogram {
    int n = 0;
    std::uint64_t total = 0;
    std::map<std::uint32_t, std::uint64_t> by_max_cycle;
    std::map<std::uint32_t, std::uint64_t> by_goe_count;

    friend bool operator==(const CensusHistogram&, const CensusHistogram&) = default;
};

// Tally one function. The max-cycle bucket saturates at 2^n - 1: a function
// whose single cycle runs through every state is counted under 2^n - 1, the
// largest value the census distinguishes.
void tally(CensusHistogram& h, std::uint32_t max_cycle_r, std::uint32_t goe_count_d);

// Merge is plain addition, so shards combined in any order reproduce the
// serial result exactly.
void merge(CensusHistogram& into, const CensusHistogram& from);

// Exact (unsaturated) per-function stats for every truth-table code in
// [begin, end), ascending. fn(code, max_cycle_r, goe_count_d). n <= 6.
void for_each_function(
    int n, std::uint64_t begin, std::uint64_t end,
    const std::function<void(std::uint64_t, std::uint32_t, std::uint32_t)>& fn);

// Exhaustive census over all 2^(2^n) functions, 2 <= n <= 4.
// threads = 0 picks the available hardware parallelism.
CensusHistogram sweep(int n, unsigned threads = 0);

// Census over the code range [begin, end), n <= 6.
CensusHistogram sweep_range(int n, std::uint64_t begin, std::uint64_t end,
                            unsigned threads = 0);

// `samples` truth tables drawn uniformly at random, seeded and reproducible.
CensusHistogram sample_sweep(int n, std::uint64_t samples, std::uint64_t seed);

enum class HistogramFormat { Csv, Json };

// Csv: header "metric,key,count", rows sorted by (metric, key).
// Json: {"n", "total", "by_max_cycle", "by_goe_count"}, map keys emitted as
// strings in ascending numeric order.
std::string emit_histogram(const CensusHistogram& h, HistogramFormat format);

// Partial sweep state: everything tallied so far plus the next code to
// process. Serialized as JSON so an interrupted run can resume.
struct SweepCheckpoint {
    CensusHistogram partial;
    std::uint64_t next_code = 0;

    friend bool operator==(const SweepCheckpoint&, const SweepCheckpoint&) = default;
};

SweepCheckpoint load_checkpoint(std::istream& in);
void save_checkpoint(std::ostream& out, const SweepCheckpoint& cp);

// Sweep codes [cp.next_code, domain_end) in chunks of `interval`, invoking
// on_checkpoint after each chunk (and once more at completion, with
// next_code == domain_end). Pass a loaded checkpoint to resume.
CensusHistogram resumable_sweep(
    int n, std::uint64_t domain_end, SweepCheckpoint cp, std::uint64_t interval,
    unsigned threads,
    const std::function<void(const SweepCheckpoint&)>& on_checkpoint);

} // namespace nfsr
