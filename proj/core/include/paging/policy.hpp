#ifndef PAGING_POLICY_HPP
#define PAGING_POLICY_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "paging/model.hpp"
#include "paging/rng.hpp"

namespace paging {

/// Outcome of serving one request.
struct StepOutcome {
    bool fault = false;
    std::vector<PageId> evictions;  // at most two, except FlushOnAllZero's flush
};

/// Faithful read-only copy of a policy's cache at query time.
struct CacheSnapshot {
    std::vector<PageId> resident;        // ascending interned id
    std::vector<std::uint8_t> marked;    // parallel to resident
    std::vector<Bit> page_bits;          // parallel to resident; last prediction
};

/// An online eviction strategy. One instance per run; single-threaded.
class Policy {
public:
    virtual ~Policy() = default;

    virtual StepOutcome serve(PageId page, Bit bit) = 0;
    virtual CacheSnapshot snapshot() const = 0;
    virtual std::string_view name() const = 0;
    virtual bool deterministic() const = 0;

    int cache_size() const { return k_; }

protected:
    explicit Policy(int k) : k_(k) {}
    int k_;
};

/// Stable string identifiers used by the CLI.
inline constexpr const char* kPolicyIds[] = {"lru",   "fifo",  "mark",        "flush0",
                                             "mark0", "mark-predict", "mark-predict-det"};

bool is_known_policy(const std::string& id);
bool policy_uses_predictions(const std::string& id);

/// Builds a fresh policy. num_pages bounds the interned page universe; seed
/// feeds the policy's deterministic random stream (ignored by deterministic
/// policies). Throws std::invalid_argument for unknown ids.
std::unique_ptr<Policy> make_policy(const std::string& id, int k, std::size_t num_pages,
                                    std::uint64_t seed = 0);

/// Drives a policy over a whole trace. Prediction-aware policies reject
/// traces with setup == none. keep_log controls eviction_log retention.
RunReport run_policy(Policy& policy, const Trace& trace, bool keep_log = true);

/// As run_policy, but with an explicit prediction sequence replacing the one
/// stored in the trace (used by the experiment harness after noise injection).
RunReport run_policy(Policy& policy, const Trace& trace, std::span<const Bit> predictions,
                     bool keep_log = true);

}  // namespace paging

#endif
