#include "paging/prediction_lab.hpp"

#include <stdexcept>

#include "paging/rng.hpp"

namespace paging {

namespace {

/// Floyd-style sampling of `count` indices without replacement from `pool`,
/// via a partial Fisher-Yates shuffle driven by the spec seed.
std::vector<std::size_t> sample_without_replacement(std::vector<std::size_t> pool,
                                                    std::uint64_t count, CounterRng& rng) {
    for (std::uint64_t i = 0; i < count; ++i) {
        const std::size_t j = i + rng.uniform_below(pool.size() - i);
        std::swap(pool[i], pool[j]);
    }
    pool.resize(count);
    return pool;
}

}  // namespace

std::vector<Bit> apply_noise(const GroundTruth& truth, const NoiseSpec& spec) {
    const std::size_t n = truth.bits.size();
    CounterRng rng(spec.seed);

    switch (spec.kind) {
    case NoiseSpec::Kind::constant:
        return std::vector<Bit>(n, spec.bit);
    case NoiseSpec::Kind::replace_all:
        if (spec.bits.size() != n)
            throw std::invalid_argument("apply_noise: replace_all length mismatch");
        return spec.bits;
    case NoiseSpec::Kind::flip_each_zero:
    case NoiseSpec::Kind::flip_each_one: {
        if (spec.prob < 0.0 || spec.prob > 1.0)
            throw std::invalid_argument("apply_noise: probability out of [0,1]");
        const Bit target = spec.kind == NoiseSpec::Kind::flip_each_zero ? 0 : 1;
        std::vector<Bit> out = truth.bits;
        for (std::size_t i = 0; i < n; ++i)
            if (out[i] == target && rng.uniform01() < spec.prob) out[i] ^= 1;
        return out;
    }
    case NoiseSpec::Kind::flip_exactly: {
        std::vector<std::size_t> ones, zeros;
        for (std::size_t i = 0; i < n; ++i) {
            if (!truth.countable[i]) continue;
            (truth.bits[i] ? ones : zeros).push_back(i);
        }
        if (spec.count0 > ones.size())
            throw std::invalid_argument("apply_noise: count0 exceeds countable truth-1 positions");
        if (spec.count1 > zeros.size())
            throw std::invalid_argument("apply_noise: count1 exceeds countable truth-0 positions");
        std::vector<Bit> out = truth.bits;
        for (std::size_t i : sample_without_replacement(std::move(ones), spec.count0, rng))
            out[i] = 0;
        for (std::size_t i : sample_without_replacement(std::move(zeros), spec.count1, rng))
            out[i] = 1;
        return out;
    }
    }
    throw std::logic_error("apply_noise: unreachable");
}

ErrorReport count_errors(std::span<const Bit> predictions, const GroundTruth& truth,
                         Setup setup) {
    if (truth.setup != setup) throw std::invalid_argument("count_errors: setup mismatch");
    if (predictions.size() != truth.bits.size())
        throw std::invalid_argument("count_errors: length mismatch");
    ErrorReport report;
    report.mismatch_flags.assign(predictions.size(), 0);
    for (std::size_t i = 0; i < predictions.size(); ++i) {
        if (!truth.countable[i] || predictions[i] == truth.bits[i]) continue;
        report.mismatch_flags[i] = 1;
        if (predictions[i] == 0)
            ++report.eta0;
        else
            ++report.eta1;
    }
    return report;
}

}  // namespace paging
