#ifndef PAGING_OFFLINE_HPP
#define PAGING_OFFLINE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "paging/model.hpp"
#include "paging/phases.hpp"

namespace paging {

/// Result of a deterministic LFD (longest forward distance) run.
/// evicted_before_reuse[i] tells whether LFD evicts page r_i after time i and
/// strictly before its next request (or before sequence end if never
/// re-requested). This is the discard-setup ground truth.
struct LfdSchedule {
    std::uint64_t opt_cost = 0;
    std::vector<std::uint8_t> evicted_before_reuse;
};

/// Simulates LFD: evicts a resident page never requested again if one exists
/// (smallest interned id among them), otherwise the unique page requested
/// furthest in the future. Predictions are ignored.
std::pair<LfdSchedule, RunReport> lfd_run(const Trace& trace);

struct BruteForceLimits {
    std::size_t max_requests = 20;
    std::size_t max_pages = 7;
    int max_k = 4;
    std::size_t max_states = 10'000'000;
};

/// Exact minimum number of faults over all eviction schedules, by dynamic
/// programming over (request index, cache configuration). Independent oracle
/// for lfd_run; throws when the instance exceeds the limits.
std::uint64_t brute_force_opt(const Trace& trace, const BruteForceLimits& limits = {});

/// Per-request correct bits p* for one setup, plus countability flags for
/// error accounting.
struct GroundTruth {
    std::vector<Bit> bits;
    std::vector<std::uint8_t> countable;
    Setup setup = Setup::none;
};

/// bits[i] = 1 iff LFD evicts r_i before its next request. Every index counts.
GroundTruth ground_truth_discard(const Trace& trace);

/// bits[i] = 1 iff r_i is not requested in the next k-phase. Only the last
/// request of each page within a non-final phase counts; final-phase bits are
/// 0 by convention and uncountable.
GroundTruth ground_truth_phase(const Trace& trace);

}  // namespace paging

#endif
