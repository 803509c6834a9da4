#include "paging/phases.hpp"

#include <stdexcept>

namespace paging {

PhasePartition k_phase_partition(std::span<const PageId> requests, int k) {
    if (requests.empty()) throw std::invalid_argument("k_phase_partition: empty request sequence");
    if (k < 1) throw std::invalid_argument("k_phase_partition: k must be at least 1");

    PageId max_page = 0;
    for (PageId p : requests) max_page = std::max(max_page, p);

    PhasePartition part;
    part.phase_of.resize(requests.size());
    // seen[p] == stamp of the phase that last touched p
    std::vector<std::uint32_t> seen(max_page + 1, 0);
    std::uint32_t stamp = 0;
    int distinct = 0;
    for (std::size_t i = 0; i < requests.size(); ++i) {
        PageId p = requests[i];
        if (stamp == 0 || (seen[p] != stamp && distinct == k)) {
            ++stamp;
            distinct = 0;
            part.phase_starts.push_back(i);
        }
        if (seen[p] != stamp) {
            seen[p] = stamp;
            ++distinct;
        }
        part.phase_of[i] = stamp - 1;
    }
    return part;
}

std::vector<std::uint64_t> new_page_counts(std::span<const PageId> requests,
                                           const PhasePartition& partition,
                                           std::size_t num_pages) {
    const std::size_t m = partition.num_phases();
    std::vector<std::uint64_t> counts(m, 0);
    // in_phase[p] == j+1 when p occurs in phase j
    std::vector<std::uint32_t> in_phase(num_pages, 0);
    for (std::size_t j = 0; j < m; ++j) {
        const std::size_t end = partition.phase_end(j, requests.size());
        for (std::size_t i = partition.phase_begin(j); i < end; ++i) {
            PageId p = requests[i];
            if (in_phase[p] == j + 1) continue;
            bool in_prev = (j > 0 && in_phase[p] == j);
            in_phase[p] = static_cast<std::uint32_t>(j + 1);
            if (!in_prev) ++counts[j];
        }
    }
    return counts;
}

}  // namespace paging
