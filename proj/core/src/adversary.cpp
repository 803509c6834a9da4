#include "paging/adversary.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "paging/rng.hpp"

namespace paging {

namespace {

std::string gen_label(const std::string& head, int k, std::uint64_t prologue) {
    return head + " k=" + std::to_string(k) + " prologue=" + std::to_string(prologue);
}

void append_warmup(std::vector<std::uint64_t>& requests, std::vector<Bit>& bits, int k) {
    for (int p = 1; p <= k; ++p) {
        requests.push_back(static_cast<std::uint64_t>(p));
        bits.push_back(0);
    }
}

}  // namespace

std::uint64_t prologue_length(const Trace& trace) {
    const std::string key = "prologue=";
    const auto pos = trace.label.rfind(key);
    if (pos == std::string::npos) return 0;
    return std::strtoull(trace.label.c_str() + pos + key.size(), nullptr, 10);
}

AdaptiveResult adaptive_adversary_run(Policy& policy, int k, std::uint64_t n, Bit bit) {
    if (!policy.deterministic())
        throw std::invalid_argument("adaptive adversary requires a deterministic policy");
    if (n <= static_cast<std::uint64_t>(k))
        throw std::invalid_argument("adaptive adversary requires n > k");

    std::vector<std::uint64_t> requests;
    requests.reserve(n);
    std::vector<Bit> bits(n, bit);

    AdaptiveResult result;
    result.report.fault_flags.assign(n, 0);
    std::vector<std::uint8_t> in_cache(static_cast<std::size_t>(k) + 2, 0);

    for (std::uint64_t i = 0; i < n; ++i) {
        std::uint64_t page;
        if (i < static_cast<std::uint64_t>(k)) {
            page = i + 1;
        } else {
            std::fill(in_cache.begin(), in_cache.end(), 0);
            for (PageId p : policy.snapshot().resident) in_cache[p + 1] = 1;  // names = id+1
            page = 0;
            for (int q = 1; q <= k + 1; ++q)
                if (!in_cache[q]) {
                    page = static_cast<std::uint64_t>(q);
                    break;
                }
        }
        requests.push_back(page);
        // Interned id of page name q is q-1: names appear in ascending order.
        StepOutcome out = policy.serve(static_cast<PageId>(page - 1), bit);
        if (out.fault) {
            result.report.fault_flags[i] = 1;
            ++result.report.faults;
        }
        result.report.evictions += out.evictions.size();
        for (PageId p : out.evictions)
            result.report.eviction_log.emplace_back(static_cast<std::uint32_t>(i), p);
    }

    result.trace = make_trace(k, requests, std::move(bits), Setup::none,
                              gen_label("adaptive", k, static_cast<std::uint64_t>(k)));
    return result;
}

Trace uniform_random_instance(int k, std::uint64_t n, std::uint64_t seed, Bit bit) {
    if (k < 2) throw std::invalid_argument("uniform_random_instance: k must be at least 2");
    if (n < 1) throw std::invalid_argument("uniform_random_instance: n must be at least 1");
    CounterRng rng(seed);
    std::vector<std::uint64_t> requests;
    std::vector<Bit> bits;
    requests.reserve(n + k);
    bits.reserve(n + k);
    append_warmup(requests, bits, k);
    for (std::uint64_t i = 0; i < n; ++i) {
        requests.push_back(1 + rng.uniform_below(static_cast<std::uint64_t>(k) + 1));
        bits.push_back(bit);
    }
    return make_trace(k, requests, std::move(bits), Setup::none,
                      gen_label("uniform seed=" + std::to_string(seed), k,
                                static_cast<std::uint64_t>(k)));
}

Trace block_instance(int k, std::uint64_t phases, std::uint64_t block_repeats,
                     std::uint64_t seed) {
    if (k < 2) throw std::invalid_argument("block_instance: k must be at least 2");
    if (phases < 1) throw std::invalid_argument("block_instance: phases must be at least 1");
    if (block_repeats == 0) block_repeats = static_cast<std::uint64_t>(k) + 1;
    if (block_repeats < 2) throw std::invalid_argument("block_instance: block_repeats < 2");

    CounterRng rng(seed);
    std::vector<std::uint64_t> requests;
    std::vector<Bit> bits;
    append_warmup(requests, bits, k);

    std::vector<std::uint64_t> opt_cache(static_cast<std::size_t>(k));
    for (int p = 1; p <= k; ++p) opt_cache[static_cast<std::size_t>(p - 1)] = p;
    std::uint64_t absent = static_cast<std::uint64_t>(k) + 1;

    for (std::uint64_t ph = 0; ph < phases; ++ph) {
        const std::uint64_t p0 = absent;
        for (std::size_t i = opt_cache.size(); i-- > 1;)
            std::swap(opt_cache[i], opt_cache[rng.uniform_below(i + 1)]);
        const std::uint64_t left_out = opt_cache.back();
        for (int block = 1; block <= k - 1; ++block) {
            for (std::uint64_t rep = 0; rep < block_repeats; ++rep) {
                const bool predicted_one =
                    block == k - 1 && rep == block_repeats - 1;
                requests.push_back(p0);
                bits.push_back(predicted_one ? 1 : 0);
                for (int j = 0; j < block; ++j) {
                    requests.push_back(opt_cache[static_cast<std::size_t>(j)]);
                    bits.push_back(predicted_one ? 1 : 0);
                }
            }
        }
        opt_cache.back() = p0;  // OPT evicts left_out when loading p0
        absent = left_out;
    }
    return make_trace(k, requests, std::move(bits), Setup::none,
                      gen_label("blocks seed=" + std::to_string(seed) +
                                    " phases=" + std::to_string(phases) +
                                    " repeats=" + std::to_string(block_repeats),
                                k, static_cast<std::uint64_t>(k)));
}

Trace three_page_round_instance(int k, std::uint64_t m, std::uint64_t seed) {
    if (k < 3) throw std::invalid_argument("three_page_round_instance: k must be at least 3");
    if (m < 1) throw std::invalid_argument("three_page_round_instance: m must be at least 1");
    CounterRng rng(seed);
    std::vector<std::uint64_t> requests;
    std::vector<Bit> bits;
    requests.reserve(k + m * static_cast<std::uint64_t>(k - 1));
    bits.reserve(requests.capacity());
    append_warmup(requests, bits, k);
    for (std::uint64_t r = 0; r < m; ++r) {
        requests.push_back(1 + rng.uniform_below(3));
        bits.push_back(1);
        for (int q = 4; q <= k + 1; ++q) {
            requests.push_back(static_cast<std::uint64_t>(q));
            bits.push_back(0);
        }
    }
    return make_trace(k, requests, std::move(bits), Setup::none,
                      gen_label("rounds seed=" + std::to_string(seed) +
                                    " m=" + std::to_string(m),
                                k, static_cast<std::uint64_t>(k)));
}

}  // namespace paging
