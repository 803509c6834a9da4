#ifndef PAGING_POLICIES_HPP
#define PAGING_POLICIES_HPP

#include <cstdint>
#include <vector>

#include "paging/policy.hpp"

namespace paging {
namespace detail {

/// Resident set with O(1) membership and removal; shared by all policies.
class CacheCore {
public:
    CacheCore(int k, std::size_t num_pages);

    bool resident(PageId p) const { return pos_[p] != kAbsent; }
    bool full() const { return resident_.size() == static_cast<std::size_t>(k_); }
    const std::vector<PageId>& resident_pages() const { return resident_; }

    void load(PageId p);
    void evict(PageId p);

protected:
    static constexpr std::uint32_t kAbsent = ~std::uint32_t{0};
    int k_;
    std::vector<PageId> resident_;      // unordered
    std::vector<std::uint32_t> pos_;    // page -> index in resident_, or kAbsent
};

}  // namespace detail

class LruPolicy final : public Policy {
public:
    LruPolicy(int k, std::size_t num_pages);
    StepOutcome serve(PageId page, Bit bit) override;
    CacheSnapshot snapshot() const override;
    std::string_view name() const override { return "lru"; }
    bool deterministic() const override { return true; }

private:
    detail::CacheCore cache_;
    std::vector<std::uint64_t> last_use_;
    std::uint64_t tick_ = 0;
};

class FifoPolicy final : public Policy {
public:
    FifoPolicy(int k, std::size_t num_pages);
    StepOutcome serve(PageId page, Bit bit) override;
    CacheSnapshot snapshot() const override;
    std::string_view name() const override { return "fifo"; }
    bool deterministic() const override { return true; }

private:
    detail::CacheCore cache_;
    std::vector<std::uint64_t> load_time_;
    std::uint64_t tick_ = 0;
};

/// Classical marking algorithm: evicts an unmarked resident page chosen
/// uniformly at random; a fault on a full, fully marked cache opens a new
/// phase.
class MarkPolicy final : public Policy {
public:
    MarkPolicy(int k, std::size_t num_pages, std::uint64_t seed);
    StepOutcome serve(PageId page, Bit bit) override;
    CacheSnapshot snapshot() const override;
    std::string_view name() const override { return "mark"; }
    bool deterministic() const override { return false; }

private:
    detail::CacheCore cache_;
    std::vector<std::uint8_t> marked_;
    CounterRng rng_;
};

/// Deterministic discard-setup policy: on a fault evicts the 1-page with the
/// smallest interned id, or flushes the whole cache when every resident page
/// is a 0-page.
class FlushOnAllZeroPolicy final : public Policy {
public:
    FlushOnAllZeroPolicy(int k, std::size_t num_pages);
    StepOutcome serve(PageId page, Bit bit) override;
    CacheSnapshot snapshot() const override;
    std::string_view name() const override { return "flush0"; }
    bool deterministic() const override { return true; }

    std::uint64_t flushes() const { return flushes_; }

private:
    detail::CacheCore cache_;
    std::vector<Bit> bits_;
    std::uint64_t flushes_ = 0;
};

/// Randomized discard-setup strategy that evicts 1-pages immediately and,
/// when forced by a full cache of 0-pages, a random unmarked page from the
/// tracked set S (the cache content at the last phase boundary).
class Mark0Policy final : public Policy {
public:
    Mark0Policy(int k, std::size_t num_pages, std::uint64_t seed);
    StepOutcome serve(PageId page, Bit bit) override;
    CacheSnapshot snapshot() const override;
    std::string_view name() const override { return "mark0"; }
    bool deterministic() const override { return false; }

    /// Executions of the forced full-cache eviction in each phase so far.
    const std::vector<std::uint64_t>& forced_evictions_per_phase() const { return forced_; }
    std::uint64_t zero_page_evictions() const { return zero_evictions_; }
    /// Members of the tracked set S (ascending; survives eviction).
    std::vector<PageId> tracked_set() const;

private:
    std::vector<PageId> unmarked_s_in_cache() const;

    detail::CacheCore cache_;
    std::vector<std::uint8_t> marked_;  // global: survives eviction
    std::vector<std::uint8_t> in_s_;
    std::vector<Bit> bits_;
    std::vector<std::uint64_t> forced_;
    std::uint64_t zero_evictions_ = 0;
    CounterRng rng_;
};

/// Marking algorithm for the phase setup that gives eviction priority to
/// unmarked 1-pages. With deterministic_1_evictions, the least recently used
/// unmarked 1-page is evicted instead of a random one.
class MarkPredictPolicy final : public Policy {
public:
    MarkPredictPolicy(int k, std::size_t num_pages, std::uint64_t seed,
                      bool deterministic_1_evictions);
    StepOutcome serve(PageId page, Bit bit) override;
    CacheSnapshot snapshot() const override;
    std::string_view name() const override {
        return det_mode_ ? "mark-predict-det" : "mark-predict";
    }
    bool deterministic() const override { return false; }

    /// Request indices at which internal phases began.
    const std::vector<std::uint64_t>& phase_starts() const { return phase_starts_; }
    /// New pages loaded in each phase (the running phase included).
    std::vector<std::uint64_t> new_pages_per_phase() const;

private:
    void begin_phase(std::uint64_t request_index);

    detail::CacheCore cache_;
    std::vector<std::uint8_t> marked_;
    std::vector<Bit> bits_;
    std::vector<std::uint32_t> phase_stamp_;  // phase at whose start the page was resident
    std::vector<std::uint64_t> last_use_;
    std::uint64_t tick_ = 0;
    std::uint32_t current_phase_ = 0;
    std::uint64_t current_new_pages_ = 0;
    std::vector<std::uint64_t> finished_new_pages_;
    std::vector<std::uint64_t> phase_starts_;
    std::uint64_t request_index_ = 0;
    bool det_mode_;
    CounterRng rng_;
};

}  // namespace paging

#endif
