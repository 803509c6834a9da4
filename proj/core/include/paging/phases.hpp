#ifndef PAGING_PHASES_HPP
#define PAGING_PHASES_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "paging/model.hpp"

namespace paging {

/// Decomposition of a request sequence into maximal k-phases.
struct PhasePartition {
    std::vector<std::size_t> phase_starts;  // strictly increasing, begins with 0
    std::vector<std::uint32_t> phase_of;    // phase index of every request

    std::size_t num_phases() const { return phase_starts.size(); }
    std::size_t phase_begin(std::size_t j) const { return phase_starts[j]; }
    std::size_t phase_end(std::size_t j, std::size_t n) const {
        return j + 1 < phase_starts.size() ? phase_starts[j + 1] : n;
    }
};

/// Greedy left-to-right construction: a phase ends right before the request
/// that would introduce a (k+1)-th distinct page. Throws on empty input.
PhasePartition k_phase_partition(std::span<const PageId> requests, int k);

/// Number of new pages per phase: pages of phase i absent from the marking
/// cache at the phase start (the distinct pages of phase i-1; for phase 0,
/// every page is new).
std::vector<std::uint64_t> new_page_counts(std::span<const PageId> requests,
                                           const PhasePartition& partition,
                                           std::size_t num_pages);

}  // namespace paging

#endif
