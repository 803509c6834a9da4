#ifndef PAGING_PREDICTION_LAB_HPP
#define PAGING_PREDICTION_LAB_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "paging/model.hpp"
#include "paging/offline.hpp"

namespace paging {

/// A deterministic transformation of ground truth into imperfect predictions.
struct NoiseSpec {
    enum class Kind {
        flip_each_zero,  // flip each truth-0 bit with probability prob
        flip_each_one,   // flip each truth-1 bit with probability prob
        flip_exactly,    // flip exactly count0 countable ones and count1 countable zeros
        constant,        // every prediction = bit
        replace_all,     // predictions = bits verbatim
    };
    Kind kind = Kind::flip_each_zero;
    double prob = 0.0;
    std::uint64_t count0 = 0;  // injected eta0 errors (truth-1 positions flipped to 0)
    std::uint64_t count1 = 0;  // injected eta1 errors (truth-0 positions flipped to 1)
    Bit bit = 0;
    std::vector<Bit> bits;
    std::uint64_t seed = 0;
};

/// Deterministic in (truth, spec). flip_exactly samples positions uniformly
/// without replacement among countable indices of the matching truth value
/// and throws when the counts exceed what is available.
std::vector<Bit> apply_noise(const GroundTruth& truth, const NoiseSpec& spec);

/// eta0 = countable positions predicted 0 with truth 1; eta1 the converse.
struct ErrorReport {
    std::uint64_t eta0 = 0;
    std::uint64_t eta1 = 0;
    std::vector<std::uint8_t> mismatch_flags;
};

/// Discard setup counts every index; phase setup counts only the last request
/// of each page within each non-final phase (encoded in truth.countable).
/// Throws on setup or length mismatch.
ErrorReport count_errors(std::span<const Bit> predictions, const GroundTruth& truth, Setup setup);

}  // namespace paging

#endif
