#ifndef PAGING_MODEL_HPP
#define PAGING_MODEL_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace paging {

/// Interned page identifier: dense small integers assigned in order of first
/// appearance. All deterministic tie-breaking in the library uses ascending
/// interned id.
using PageId = std::uint32_t;

/// A one-bit prediction. 0 = "keep in cache", 1 = "safe to evict" /
/// "not requested in the next phase", depending on the setup.
using Bit = std::uint8_t;

/// Which ground-truth semantics the prediction stream follows.
enum class Setup { discard, phase, none };

std::string to_string(Setup s);
std::optional<Setup> setup_from_string(const std::string& s);

/// A request sequence over a page universe, a parallel one-bit prediction
/// sequence, and the cache size k. Requests hold interned ids; page_names
/// maps them back to the labels used in trace files.
struct Trace {
    int cache_size = 0;
    std::vector<PageId> requests;
    std::vector<Bit> predictions;
    std::vector<std::uint64_t> page_names;
    Setup setup = Setup::none;
    std::string label;

    std::size_t size() const { return requests.size(); }
    std::size_t num_pages() const { return page_names.size(); }
};

/// Builds a Trace from raw page labels, interning them by first appearance.
Trace make_trace(int cache_size, const std::vector<std::uint64_t>& raw_requests,
                 std::vector<Bit> predictions, Setup setup, std::string label = {});

struct TraceValidation {
    bool ok = true;
    std::string message;
    std::size_t index = 0;  // first offending position, when applicable
};

TraceValidation validate_trace(const Trace& trace);

/// Throws std::invalid_argument when the trace is malformed.
void require_valid(const Trace& trace);

/// Per-request fault/eviction log and totals for one policy run on one trace.
/// Cost is counted as page loads (faults); faults - evictions is in [0, k].
struct RunReport {
    std::vector<std::uint8_t> fault_flags;
    std::uint64_t faults = 0;
    std::uint64_t evictions = 0;
    std::vector<std::pair<std::uint32_t, PageId>> eviction_log;
    std::optional<std::uint64_t> rng_seed;
};

/// Parameters of an (alpha, beta, gamma)-competitiveness bound
/// ALG <= alpha*OPT + beta*eta0 + gamma*eta1 + b.
struct BoundParams {
    double alpha = 1.0;
    double beta = 0.0;
    double gamma = 0.0;
    double b = 0.0;
};

}  // namespace paging

#endif
