#include "paging/offline.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace paging {

namespace {
constexpr std::size_t kNever = std::numeric_limits<std::size_t>::max();
}

std::pair<LfdSchedule, RunReport> lfd_run(const Trace& trace) {
    require_valid(trace);
    const std::size_t n = trace.size();
    const std::size_t k = static_cast<std::size_t>(trace.cache_size);
    const std::size_t u = trace.num_pages();

    // next[i]: index of the next request of page r_i after i, or kNever.
    std::vector<std::size_t> next(n);
    {
        std::vector<std::size_t> upcoming(u, kNever);
        for (std::size_t i = n; i-- > 0;) {
            next[i] = upcoming[trace.requests[i]];
            upcoming[trace.requests[i]] = i;
        }
    }

    LfdSchedule sched;
    sched.evicted_before_reuse.assign(n, 0);
    RunReport report;
    report.fault_flags.assign(n, 0);

    std::vector<std::uint8_t> resident(u, 0);
    std::vector<std::size_t> last_req(u, 0);
    std::set<PageId> never_again;                      // resident, no future request
    std::set<std::pair<std::size_t, PageId>> future;   // resident, keyed by next request
    std::size_t resident_count = 0;

    auto insert_page = [&](PageId p, std::size_t nxt) {
        if (nxt == kNever)
            never_again.insert(p);
        else
            future.insert({nxt, p});
    };

    for (std::size_t i = 0; i < n; ++i) {
        const PageId p = trace.requests[i];
        if (resident[p]) {
            // Its stored key is exactly i; move it to the new next request.
            future.erase({i, p});
            insert_page(p, next[i]);
        } else {
            report.fault_flags[i] = 1;
            ++report.faults;
            if (resident_count == k) {
                PageId victim;
                if (!never_again.empty()) {
                    victim = *never_again.begin();
                    never_again.erase(never_again.begin());
                } else {
                    auto it = std::prev(future.end());
                    victim = it->second;
                    future.erase(it);
                }
                resident[victim] = 0;
                --resident_count;
                ++report.evictions;
                report.eviction_log.emplace_back(static_cast<std::uint32_t>(i), victim);
                sched.evicted_before_reuse[last_req[victim]] = 1;
            }
            resident[p] = 1;
            ++resident_count;
            insert_page(p, next[i]);
        }
        last_req[p] = i;
    }
    sched.opt_cost = report.faults;
    return {std::move(sched), std::move(report)};
}

std::uint64_t brute_force_opt(const Trace& trace, const BruteForceLimits& limits) {
    require_valid(trace);
    const std::size_t n = trace.size();
    const std::size_t u = trace.num_pages();
    const int k = trace.cache_size;
    if (n > limits.max_requests)
        throw std::invalid_argument("brute_force_opt: too many requests");
    if (u > limits.max_pages)
        throw std::invalid_argument("brute_force_opt: too many distinct pages");
    if (k > limits.max_k)
        throw std::invalid_argument("brute_force_opt: cache size exceeds limit");
    if (u > 31) throw std::invalid_argument("brute_force_opt: page universe too large for bitmask");

    // states[mask] = min faults so far with cache content == mask
    std::unordered_map<std::uint32_t, std::uint32_t> states;
    states.emplace(0u, 0u);
    std::size_t touched = states.size();
    std::unordered_map<std::uint32_t, std::uint32_t> nexts;

    auto relax = [&](std::uint32_t mask, std::uint32_t cost) {
        auto [it, inserted] = nexts.emplace(mask, cost);
        if (!inserted) it->second = std::min(it->second, cost);
    };

    for (std::size_t i = 0; i < n; ++i) {
        const std::uint32_t pbit = 1u << trace.requests[i];
        nexts.clear();
        for (auto [mask, cost] : states) {
            if (mask & pbit) {
                relax(mask, cost);
            } else if (std::popcount(mask) < k) {
                relax(mask | pbit, cost + 1);
            } else {
                for (std::uint32_t rest = mask; rest;) {
                    const std::uint32_t vbit = rest & (~rest + 1);
                    rest ^= vbit;
                    relax((mask ^ vbit) | pbit, cost + 1);
                }
            }
        }
        states.swap(nexts);
        touched += states.size();
        if (touched > limits.max_states)
            throw std::runtime_error("brute_force_opt: state cap exceeded");
    }

    std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
    for (auto [mask, cost] : states) best = std::min(best, cost);
    return best;
}

GroundTruth ground_truth_discard(const Trace& trace) {
    auto [sched, report] = lfd_run(trace);
    GroundTruth truth;
    truth.setup = Setup::discard;
    truth.bits = std::move(sched.evicted_before_reuse);
    truth.countable.assign(trace.size(), 1);
    return truth;
}

GroundTruth ground_truth_phase(const Trace& trace) {
    require_valid(trace);
    const std::size_t n = trace.size();
    const std::size_t u = trace.num_pages();
    const PhasePartition part = k_phase_partition(trace.requests, trace.cache_size);
    const std::size_t m = part.num_phases();

    GroundTruth truth;
    truth.setup = Setup::phase;
    truth.bits.assign(n, 0);
    truth.countable.assign(n, 0);

    // in_next[p] == j+1 iff p occurs in phase j (filled one phase ahead).
    std::vector<std::uint32_t> stamp(u, 0);
    std::vector<std::uint8_t> last_seen(u, 0);  // last-occurrence scan marker, per phase

    for (std::size_t j = 0; j + 1 < m; ++j) {
        const std::size_t begin = part.phase_begin(j);
        const std::size_t end = part.phase_end(j, n);
        const std::size_t next_end = part.phase_end(j + 1, n);
        for (std::size_t i = part.phase_begin(j + 1); i < next_end; ++i)
            stamp[trace.requests[i]] = static_cast<std::uint32_t>(j + 1);
        // backward scan marks the last occurrence of each page in phase j
        for (std::size_t i = end; i-- > begin;) {
            const PageId p = trace.requests[i];
            truth.bits[i] = stamp[p] == j + 1 ? 0 : 1;
            if (!last_seen[p]) {
                last_seen[p] = 1;
                truth.countable[i] = 1;
            }
        }
        for (std::size_t i = begin; i < end; ++i) last_seen[trace.requests[i]] = 0;
    }
    // Final phase: bits stay 0 by convention, nothing countable.
    return truth;
}

}  // namespace paging
