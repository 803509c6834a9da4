#include "paging/model.hpp"

#include <stdexcept>
#include <unordered_map>

namespace paging {

std::string to_string(Setup s) {
    switch (s) {
    case Setup::discard: return "discard";
    case Setup::phase: return "phase";
    case Setup::none: return "none";
    }
    return "none";
}

std::optional<Setup> setup_from_string(const std::string& s) {
    if (s == "discard") return Setup::discard;
    if (s == "phase") return Setup::phase;
    if (s == "none") return Setup::none;
    return std::nullopt;
}

Trace make_trace(int cache_size, const std::vector<std::uint64_t>& raw_requests,
                 std::vector<Bit> predictions, Setup setup, std::string label) {
    Trace t;
    t.cache_size = cache_size;
    t.setup = setup;
    t.label = std::move(label);
    t.predictions = std::move(predictions);
    t.requests.reserve(raw_requests.size());
    std::unordered_map<std::uint64_t, PageId> intern;
    intern.reserve(64);
    for (std::uint64_t name : raw_requests) {
        auto [it, inserted] = intern.emplace(name, static_cast<PageId>(t.page_names.size()));
        if (inserted) t.page_names.push_back(name);
        t.requests.push_back(it->second);
    }
    return t;
}

TraceValidation validate_trace(const Trace& trace) {
    if (trace.cache_size < 1)
        return {false, "cache_size must be at least 1", 0};
    if (trace.requests.size() != trace.predictions.size())
        return {false, "requests and predictions have different lengths",
                std::min(trace.requests.size(), trace.predictions.size())};
    for (std::size_t i = 0; i < trace.requests.size(); ++i) {
        if (trace.requests[i] >= trace.page_names.size())
            return {false, "request refers to an uninterned page id", i};
        if (trace.predictions[i] > 1)
            return {false, "prediction bit out of {0,1}", i};
    }
    return {};
}

void require_valid(const Trace& trace) {
    TraceValidation v = validate_trace(trace);
    if (!v.ok)
        throw std::invalid_argument("invalid trace: " + v.message + " (index " +
                                    std::to_string(v.index) + ")");
}

}  // namespace paging
