#ifndef PAGING_ADVERSARY_HPP
#define PAGING_ADVERSARY_HPP

#include <cstdint>

#include "paging/model.hpp"
#include "paging/policy.hpp"

namespace paging {

/// All generators work on the page universe {1..k+1} and prepend a
/// deterministic warm-up of pages 1..k (bit 0) so the cache starts full; the
/// trace label records the prologue length.
struct AdversaryConfig {
    int k = 2;
    std::uint64_t length = 0;  // n (requests) or m (phases/rounds), per generator
    std::uint64_t seed = 0;
    std::uint64_t block_repeats = 0;  // 0 = default k+1
};

/// Number of warm-up requests recorded in a generated trace's label, or 0.
std::uint64_t prologue_length(const Trace& trace);

struct AdaptiveResult {
    Trace trace;
    RunReport report;
};

/// Co-generates the worst case for a deterministic policy: after requesting
/// pages 1..k, always requests the unique page of {1..k+1} absent from the
/// policy's cache (smallest absent page while the cache is not full). All
/// predictions carry `bit`. Throws if the policy is randomized or n <= k.
AdaptiveResult adaptive_adversary_run(Policy& policy, int k, std::uint64_t n, Bit bit);

/// n i.i.d. uniform requests over k+1 pages with a constant prediction bit.
Trace uniform_random_instance(int k, std::uint64_t n, std::uint64_t seed, Bit bit);

/// Lower-bound block construction: each phase requests prefix-nested blocks
/// (p0, s1..si) of a random permutation of the tracked optimal cache, each
/// block repeated block_repeats times; predictions are 0 everywhere except
/// the final repeat of the final block, whose k requests carry 1.
Trace block_instance(int k, std::uint64_t phases, std::uint64_t block_repeats,
                     std::uint64_t seed);

/// m rounds of k-1 requests: one uniform page of {1,2,3} with bit 1, then
/// pages 4..k+1 ascending with bit 0. Requires k >= 3 (the tail is empty at
/// k = 3, leaving one-request rounds).
Trace three_page_round_instance(int k, std::uint64_t m, std::uint64_t seed);

}  // namespace paging

#endif
