// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failures. Each criterion is a desk-scale check of a bound, identity or
// proof-level quantity on synthetic instances.

#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <iterator>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "paging/adversary.hpp"
#include "paging/experiment.hpp"
#include "paging/offline.hpp"
#include "paging/phases.hpp"
#include "paging/policies.hpp"
#include "paging/prediction_lab.hpp"
#include "paging/trace_io.hpp"
#include "test_util.hpp"

using namespace paging;
using test::random_trace;

namespace {

double harmonic(std::uint64_t k) {
    double h = 0;
    for (std::uint64_t i = 1; i <= k; ++i) h += 1.0 / static_cast<double>(i);
    return h;
}

struct Stats {
    double mean = 0.0;
    double se = 0.0;  // standard error of the mean
};

Stats stats_of(const std::vector<double>& xs) {
    Stats s;
    if (xs.empty()) return s;
    double sum = 0;
    for (double x : xs) sum += x;
    s.mean = sum / static_cast<double>(xs.size());
    if (xs.size() > 1) {
        double ss = 0;
        for (double x : xs) ss += (x - s.mean) * (x - s.mean);
        s.se = std::sqrt(ss / static_cast<double>(xs.size() - 1) /
                         static_cast<double>(xs.size()));
    }
    return s;
}

/// Evaluates f(i) for i in [0, count) across hardware threads.
std::vector<double> parallel_map(std::uint64_t count, const std::function<double(std::uint64_t)>& f) {
    std::vector<double> out(count, std::nan(""));
    std::atomic<std::uint64_t> next{0};
    const unsigned workers =
        std::min<std::uint64_t>(count, std::max(1u, std::thread::hardware_concurrency()));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (;;) {
                const std::uint64_t i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    out[i] = f(i);
                } catch (...) {
                    // leave NaN; the caller treats it as a failure
                }
            }
        });
    for (std::thread& t : pool) t.join();
    return out;
}

bool all_finite(const std::vector<double>& xs) {
    for (double x : xs)
        if (!std::isfinite(x)) return false;
    return true;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

GroundTruth truth_of(const Trace& t, Setup setup) {
    return setup == Setup::discard ? ground_truth_discard(t) : ground_truth_phase(t);
}

// ---------------------------------------------------------------------------
// 1. LFD equals the exhaustive DP optimum on >= 10^4 small random traces.
bool criterion_1(std::string& detail) {
    for (std::uint64_t seed = 0; seed < 10000; ++seed) {
        const int k = 1 + static_cast<int>(seed % 4);
        const std::size_t n = 4 + seed % 17;
        const std::size_t universe = 2 + seed % 5;
        Trace t = random_trace(k, n, universe, seed);
        const std::uint64_t lfd = lfd_run(t).first.opt_cost;
        const std::uint64_t dp = brute_force_opt(t);
        if (lfd != dp) {
            detail = "seed " + std::to_string(seed) + ": lfd=" + std::to_string(lfd) +
                     " dp=" + std::to_string(dp);
            return false;
        }
    }
    detail = "10000 traces, k<=4, n<=20, <=6 pages";
    return true;
}

// ---------------------------------------------------------------------------
// 2. FlushOnAllZero with perfect discard predictions: faults - OPT <= 2k.
bool criterion_2(std::string& detail) {
    const int k = 10;
    std::vector<double> gaps = parallel_map(100, [&](std::uint64_t seed) {
        Trace t = random_trace(k, 100000, 20, seed, Setup::discard);
        t.predictions = ground_truth_discard(t).bits;
        FlushOnAllZeroPolicy flush0(k, t.num_pages());
        const std::uint64_t opt = lfd_run(t).first.opt_cost;
        const std::uint64_t alg = run_policy(flush0, t, /*keep_log=*/false).faults;
        return static_cast<double>(alg) - static_cast<double>(opt);
    });
    if (!all_finite(gaps)) {
        detail = "a run threw";
        return false;
    }
    double worst = gaps[0];
    for (double g : gaps) worst = std::max(worst, g);
    detail = "worst faults-OPT = " + fmt(worst) + " over 100 traces (limit " +
             std::to_string(2 * k) + ")";
    return worst <= 2.0 * k;
}

// Shared flip grid for criteria 3, 4 and 6.
const std::uint64_t kGrid[] = {0, 5, 25};

// ---------------------------------------------------------------------------
// 3. FlushOnAllZero slack <= 0 for (1, k-1, 1, b=2k) on the whole flip grid.
bool criterion_3(std::string& detail) {
    const int k = 10;
    Trace t = random_trace(k, 3000, 20, 424242, Setup::discard);
    GroundTruth truth = ground_truth_discard(t);
    const double opt = static_cast<double>(lfd_run(t).first.opt_cost);
    double worst = -1e18;
    for (std::uint64_t e0 : kGrid) {
        for (std::uint64_t e1 : kGrid) {
            NoiseSpec spec{.kind = NoiseSpec::Kind::flip_exactly, .count0 = e0, .count1 = e1,
                           .seed = 1000 + e0 * 100 + e1};
            std::vector<Bit> preds = apply_noise(truth, spec);
            ErrorReport errors = count_errors(preds, truth, Setup::discard);
            if (errors.eta0 != e0 || errors.eta1 != e1) {
                detail = "noise injection mismatch";
                return false;
            }
            FlushOnAllZeroPolicy flush0(k, t.num_pages());
            const double alg =
                static_cast<double>(run_policy(flush0, t, preds, /*keep_log=*/false).faults);
            const double slack = alg - (opt + (k - 1.0) * static_cast<double>(e0) +
                                        static_cast<double>(e1) + 2.0 * k);
            worst = std::max(worst, slack);
        }
    }
    detail = "worst grid slack = " + fmt(worst);
    return worst <= 0.0;
}

// ---------------------------------------------------------------------------
// 4. Mark0 mean cost <= OPT + 2 H_k eta0 + eta1 + 2k on the grid (3 SE).
bool criterion_4(std::string& detail) {
    const int k = 10;
    Trace t = random_trace(k, 3000, 20, 424242, Setup::discard);
    GroundTruth truth = ground_truth_discard(t);
    const double opt = static_cast<double>(lfd_run(t).first.opt_cost);
    double worst = -1e18;
    for (std::uint64_t e0 : kGrid) {
        for (std::uint64_t e1 : kGrid) {
            NoiseSpec spec{.kind = NoiseSpec::Kind::flip_exactly, .count0 = e0, .count1 = e1,
                           .seed = 2000 + e0 * 100 + e1};
            std::vector<Bit> preds = apply_noise(truth, spec);
            std::vector<double> costs = parallel_map(1000, [&](std::uint64_t seed) {
                Mark0Policy mark0(k, t.num_pages(), derive_seed(e0 * 31 + e1, "mark0", seed));
                return static_cast<double>(
                    run_policy(mark0, t, preds, /*keep_log=*/false).faults);
            });
            if (!all_finite(costs)) {
                detail = "a run threw";
                return false;
            }
            Stats s = stats_of(costs);
            const double rhs = opt + 2.0 * harmonic(k) * static_cast<double>(e0) +
                               static_cast<double>(e1) + 2.0 * k + 3.0 * s.se;
            worst = std::max(worst, s.mean - rhs);
        }
    }
    detail = "worst grid slack (3 SE) = " + fmt(worst) + ", 1000 seeds/point";
    return worst <= 0.0;
}

// ---------------------------------------------------------------------------
// 5. Mark&Predict with perfect phase predictions faults exactly sum(c_i);
//    also sum(c_i) <= 2 OPT + k on every trace.
bool criterion_5(std::string& detail) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const int k = 2 + static_cast<int>(seed % 7);
        Trace t = random_trace(k, 2000, static_cast<std::size_t>(k) + 3, seed, Setup::phase);
        t.predictions = ground_truth_phase(t).bits;
        PhasePartition part = k_phase_partition(t.requests, k);
        std::uint64_t total = 0;
        for (std::uint64_t c : new_page_counts(t.requests, part, t.num_pages())) total += c;
        const std::uint64_t opt = lfd_run(t).first.opt_cost;
        if (total > 2 * opt + static_cast<std::uint64_t>(k)) {
            detail = "seed " + std::to_string(seed) + ": sum c = " + std::to_string(total) +
                     " > 2 OPT + k = " + std::to_string(2 * opt + k);
            return false;
        }
        for (std::uint64_t trial = 0; trial < 10; ++trial) {
            for (bool det : {false, true}) {
                MarkPredictPolicy mp(k, t.num_pages(), derive_seed(seed, "mp", trial), det);
                const std::uint64_t alg = run_policy(mp, t, /*keep_log=*/false).faults;
                if (alg != total) {
                    detail = "seed " + std::to_string(seed) + " trial " +
                             std::to_string(trial) + ": faults " + std::to_string(alg) +
                             " != sum c = " + std::to_string(total);
                    return false;
                }
            }
        }
    }
    detail = "50 traces x 10 trials x 2 modes, exact";
    return true;
}

// ---------------------------------------------------------------------------
// 6. Mark&Predict mean cost <= 2 OPT + H_k eta0 + eta1 + 2k on the grid,
//    both eviction modes (3 SE).
bool criterion_6(std::string& detail) {
    const int k = 10;
    Trace t = random_trace(k, 3000, 20, 424242, Setup::phase);
    GroundTruth truth = ground_truth_phase(t);
    const double opt = static_cast<double>(lfd_run(t).first.opt_cost);
    double worst = -1e18;
    for (std::uint64_t e0 : kGrid) {
        for (std::uint64_t e1 : kGrid) {
            NoiseSpec spec{.kind = NoiseSpec::Kind::flip_exactly, .count0 = e0, .count1 = e1,
                           .seed = 3000 + e0 * 100 + e1};
            std::vector<Bit> preds = apply_noise(truth, spec);
            for (bool det : {false, true}) {
                std::vector<double> costs = parallel_map(1000, [&](std::uint64_t seed) {
                    MarkPredictPolicy mp(k, t.num_pages(),
                                         derive_seed(e0 * 31 + e1, det ? "d" : "r", seed), det);
                    return static_cast<double>(
                        run_policy(mp, t, preds, /*keep_log=*/false).faults);
                });
                if (!all_finite(costs)) {
                    detail = "a run threw";
                    return false;
                }
                Stats s = stats_of(costs);
                const double rhs = 2.0 * opt + harmonic(k) * static_cast<double>(e0) +
                                   static_cast<double>(e1) + 2.0 * k + 3.0 * s.se;
                worst = std::max(worst, s.mean - rhs);
            }
        }
    }
    detail = "worst grid slack (3 SE) = " + fmt(worst) + ", both modes";
    return worst <= 0.0;
}

// ---------------------------------------------------------------------------
// 7. Large-eta1 refinement: mean cost <= 2 (ln(2 eta1/OPT + 1) + 2) OPT + 2k
//    for eta1/OPT in {5, 20, 100}, eta0 = 0.
bool criterion_7(std::string& detail) {
    const int k = 128;
    const std::size_t phases = 600;
    std::vector<std::uint64_t> raw(phases * static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < raw.size(); ++i) raw[i] = 1 + i % (k + 1);
    Trace t = make_trace(k, raw, std::vector<Bit>(raw.size(), 0), Setup::phase, "round-robin");
    GroundTruth truth = ground_truth_phase(t);
    const double opt = static_cast<double>(lfd_run(t).first.opt_cost);

    std::string parts;
    for (std::uint64_t x : {5, 20, 100}) {
        const std::uint64_t count1 = x * static_cast<std::uint64_t>(opt);
        NoiseSpec spec{.kind = NoiseSpec::Kind::flip_exactly, .count1 = count1,
                       .seed = 7000 + x};
        std::vector<Bit> preds = apply_noise(truth, spec);
        ErrorReport errors = count_errors(preds, truth, Setup::phase);
        if (errors.eta0 != 0 || errors.eta1 != count1) {
            detail = "noise injection mismatch at x=" + std::to_string(x);
            return false;
        }
        std::vector<double> costs = parallel_map(30, [&](std::uint64_t seed) {
            MarkPredictPolicy mp(k, t.num_pages(), derive_seed(x, "refine", seed), false);
            return static_cast<double>(run_policy(mp, t, preds, /*keep_log=*/false).faults);
        });
        if (!all_finite(costs)) {
            detail = "a run threw";
            return false;
        }
        Stats s = stats_of(costs);
        const double ratio = static_cast<double>(count1) / opt;
        const double rhs = 2.0 * (std::log(2.0 * ratio + 1.0) + 2.0) * opt + 2.0 * k;
        parts += " x=" + std::to_string(x) + ": mean=" + fmt(s.mean) + " rhs=" + fmt(rhs);
        if (s.mean > rhs) {
            detail = "violated at" + parts;
            return false;
        }
    }
    detail = "OPT=" + fmt(opt) + parts;
    return true;
}

// ---------------------------------------------------------------------------
// 8. Adaptive adversary vs LRU: ALG = n, OPT <= k + ceil((n-k)/k),
//    (ALG - 2k)/OPT >= k - 0.1.
bool criterion_8(std::string& detail) {
    const int k = 5;
    const std::uint64_t n = 10000;
    LruPolicy lru(k, static_cast<std::size_t>(k) + 1);
    AdaptiveResult result = adaptive_adversary_run(lru, k, n, 0);
    const std::uint64_t opt = lfd_run(result.trace).first.opt_cost;
    const double ratio = (static_cast<double>(n) - 2.0 * k) / static_cast<double>(opt);
    detail = "ALG=" + std::to_string(result.report.faults) + " OPT=" + std::to_string(opt) +
             " ratio=" + fmt(ratio);
    return result.report.faults == n && opt <= 2004 && ratio >= k - 0.1;
}

// ---------------------------------------------------------------------------
// 9. Uniform instance, k=4, n=10^6: mean phase length ~ 125/12, fault rate
//    ~ n/5 for every cache-preserving policy, eta0/OPT ~ 1 in both setups.
//    FlushOnAllZero empties its cache on a flush, so the two-sided fault-rate
//    figure does not apply to it; it is checked against the theorem's lower
//    bound only.
bool criterion_9(std::string& detail) {
    const int k = 4;
    const std::uint64_t n = 1000000;
    Trace t = uniform_random_instance(k, n, 1, 0);
    t.setup = Setup::discard;  // all-0 predictions, error accounting below

    PhasePartition part = k_phase_partition(t.requests, k);
    const double mean_len = static_cast<double>(t.size()) /
                            static_cast<double>(part.num_phases());
    const double expect_len = 125.0 / 12.0;
    if (std::abs(mean_len / expect_len - 1.0) > 0.02) {
        detail = "mean phase length " + fmt(mean_len) + " vs " + fmt(expect_len);
        return false;
    }

    const double opt = static_cast<double>(lfd_run(t).first.opt_cost);
    for (Setup setup : {Setup::discard, Setup::phase}) {
        GroundTruth truth = truth_of(t, setup);
        truth.setup = setup;
        t.setup = setup;
        ErrorReport errors = count_errors(t.predictions, truth, setup);
        const double ratio = static_cast<double>(errors.eta0) / opt;
        if (std::abs(ratio - 1.0) > 0.05) {
            detail = std::string("eta0/OPT = ") + fmt(ratio) + " in setup " +
                     std::string(to_string(setup));
            return false;
        }
    }
    t.setup = Setup::discard;

    const double expect_rate = 0.2;
    for (const char* id : kPolicyIds) {
        auto policy = make_policy(id, k, t.num_pages(), 5);
        const std::uint64_t faults = run_policy(*policy, t, /*keep_log=*/false).faults;
        const double rate = (static_cast<double>(faults) - k) / static_cast<double>(n);
        if (std::string(id) == "flush0") {
            if (rate < expect_rate * 0.98) {
                detail = "flush0 rate " + fmt(rate) + " below the n/5 lower bound";
                return false;
            }
            continue;
        }
        if (std::abs(rate / expect_rate - 1.0) > 0.02) {
            detail = std::string(id) + " fault rate " + fmt(rate) + " vs " + fmt(expect_rate);
            return false;
        }
    }
    detail = "phase length " + fmt(mean_len) + ", all rates ~ n/5, eta0 ~ OPT";
    return true;
}

// ---------------------------------------------------------------------------
// 10. Block instance, k=8, 10^4 phases, 100 seeds: per non-final phase
//     exactly eta0=0, eta1=7 in both setups (the final phase has no successor
//     phase and is excluded); OPT = 1 fault per phase; Mark's mean cost per
//     phase >= H_8 - 0.1.
bool criterion_10(std::string& detail) {
    const int k = 8;
    const std::uint64_t phases = 10000;
    const std::size_t per_phase = 9 * 35;  // repeats (k+1) * sum of block sizes

    std::atomic<bool> structure_ok{true};
    std::vector<double> costs = parallel_map(100, [&](std::uint64_t seed) {
        Trace t = block_instance(k, phases, 0, seed);
        if (t.size() != static_cast<std::size_t>(k) + phases * per_phase) {
            structure_ok = false;
            return std::nan("");
        }
        if (lfd_run(t).first.opt_cost != static_cast<std::uint64_t>(k) + phases) {
            structure_ok = false;
            return std::nan("");
        }
        for (Setup setup : {Setup::discard, Setup::phase}) {
            GroundTruth truth = truth_of(t, setup);
            for (std::uint64_t ph = 0; ph + 1 < phases; ++ph) {
                std::uint64_t eta0 = 0, eta1 = 0;
                const std::size_t begin = static_cast<std::size_t>(k) + ph * per_phase;
                for (std::size_t i = begin; i < begin + per_phase; ++i) {
                    if (!truth.countable[i] || t.predictions[i] == truth.bits[i]) continue;
                    (t.predictions[i] == 0 ? eta0 : eta1) += 1;
                }
                if (eta0 != 0 || eta1 != static_cast<std::uint64_t>(k) - 1) {
                    structure_ok = false;
                    return std::nan("");
                }
            }
        }
        MarkPolicy mark(k, t.num_pages(), derive_seed(seed, "mark", 0));
        const std::uint64_t faults = run_policy(mark, t, /*keep_log=*/false).faults;
        return (static_cast<double>(faults) - k) / static_cast<double>(phases);
    });
    if (!structure_ok || !all_finite(costs)) {
        detail = "per-phase error counts, OPT, or a run failed";
        return false;
    }
    Stats s = stats_of(costs);
    const double target = harmonic(k) - 0.1;
    detail = "Mark mean cost/phase = " + fmt(s.mean) + " (target >= " + fmt(target) +
             "), errors exact on all seeds";
    return s.mean >= target;
}

// ---------------------------------------------------------------------------
// 11. Three-page rounds, k=10, m=10^5: OPT ~ m/4.5, discard eta1 ~ 3.5m/4.5,
//     phase eta1 ~ m/4.5, every policy's mean cost >= m/3 - 3 SE.
bool criterion_11(std::string& detail) {
    const int k = 10;
    const std::uint64_t m = 100000;
    const std::uint64_t seeds = 10;

    std::vector<double> opts(seeds), eta1_d(seeds), eta1_p(seeds);
    std::vector<std::vector<double>> costs(std::size(kPolicyIds),
                                           std::vector<double>(seeds));
    std::vector<double> ok = parallel_map(seeds, [&](std::uint64_t seed) {
        Trace t = three_page_round_instance(k, m, seed);
        opts[seed] = static_cast<double>(lfd_run(t).first.opt_cost);
        GroundTruth td = ground_truth_discard(t);
        eta1_d[seed] = static_cast<double>(
            count_errors(t.predictions, td, Setup::discard).eta1);
        GroundTruth tp = ground_truth_phase(t);
        eta1_p[seed] = static_cast<double>(
            count_errors(t.predictions, tp, Setup::phase).eta1);
        for (std::size_t p = 0; p < std::size(kPolicyIds); ++p) {
            auto policy = make_policy(kPolicyIds[p], k, t.num_pages(),
                                      derive_seed(seed, kPolicyIds[p], 0));
            costs[p][seed] = static_cast<double>(
                run_policy(*policy, t, t.predictions, /*keep_log=*/false).faults);
        }
        return 1.0;
    });
    if (!all_finite(ok)) {
        detail = "a run threw";
        return false;
    }

    const double md = static_cast<double>(m);
    struct Target {
        const char* what;
        const std::vector<double>* xs;
        double expect;
    } targets[] = {{"OPT", &opts, md / 4.5},
                   {"discard eta1", &eta1_d, 3.5 * md / 4.5},
                   {"phase eta1", &eta1_p, md / 4.5}};
    for (const Target& tgt : targets) {
        Stats s = stats_of(*tgt.xs);
        if (std::abs(s.mean / tgt.expect - 1.0) > 0.02) {
            detail = std::string(tgt.what) + " mean " + fmt(s.mean) + " vs " + fmt(tgt.expect);
            return false;
        }
    }
    for (std::size_t p = 0; p < std::size(kPolicyIds); ++p) {
        Stats s = stats_of(costs[p]);
        if (s.mean < md / 3.0 - 3.0 * s.se) {
            detail = std::string(kPolicyIds[p]) + " mean cost " + fmt(s.mean) +
                     " below m/3 = " + fmt(md / 3.0);
            return false;
        }
    }
    detail = "OPT, eta1 (both setups) within 2%; all 7 policies >= m/3";
    return true;
}

// ---------------------------------------------------------------------------
// 12. Observation-style identity z = c - l on every non-first phase. Traces
//     are trimmed at their last phase boundary so that every phase holds
//     exactly k distinct pages (a ragged final phase has no defined z).
bool criterion_12(std::string& detail) {
    std::uint64_t phases_checked = 0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const int k = 2 + static_cast<int>(seed % 5);
        Trace t = random_trace(k, 400, static_cast<std::size_t>(k) + 3, seed, Setup::phase);
        PhasePartition part = k_phase_partition(t.requests, k);
        if (part.num_phases() < 3) continue;
        t.requests.resize(part.phase_starts.back());
        t.predictions.resize(t.requests.size());
        part = k_phase_partition(t.requests, k);
        GroundTruth truth = ground_truth_phase(t);

        for (std::size_t j = 1; j < part.num_phases(); ++j) {
            // Cache at phase start = distinct pages of phase j-1, each with
            // the bit of its last request in phase j-1.
            std::vector<int> bit_of(t.num_pages(), -1);
            for (std::size_t i = part.phase_begin(j - 1); i < part.phase_begin(j); ++i)
                bit_of[t.requests[i]] = truth.bits[i];
            std::set<PageId> in_phase(t.requests.begin() + part.phase_begin(j),
                                      t.requests.begin() + part.phase_end(j, t.size()));
            std::uint64_t c = 0, l = 0, z = 0;
            for (PageId p : in_phase)
                if (bit_of[p] < 0) ++c;  // new page
            for (PageId p = 0; p < t.num_pages(); ++p) {
                if (bit_of[p] < 0 || in_phase.count(p)) continue;
                (bit_of[p] == 1 ? l : z) += 1;
            }
            if (z != c - l) {
                detail = "seed " + std::to_string(seed) + " phase " + std::to_string(j) +
                         ": z=" + std::to_string(z) + " c=" + std::to_string(c) +
                         " l=" + std::to_string(l);
                return false;
            }
            ++phases_checked;
        }
    }
    detail = std::to_string(phases_checked) + " non-first phases, identity exact";
    return phases_checked > 1000;
}

// ---------------------------------------------------------------------------
// 13. Determinism: same base_seed => byte-identical CSV; trace round trip.
bool criterion_13(std::string& detail) {
    ExperimentSpec spec;
    spec.generator = GeneratorSpec{.kind = "uniform", .k = 4, .n = 2000, .seed = 3};
    spec.setup = Setup::discard;
    spec.noise = NoiseSpec{.kind = NoiseSpec::Kind::flip_each_zero, .prob = 0.2, .seed = 9};
    spec.policies = {"lru", "mark", "mark0", "mark-predict"};
    spec.trials = 5;
    spec.base_seed = 11;
    spec.bounds = {{"mark0", {.alpha = 1.0, .beta = 2.0 * harmonic(4), .gamma = 1.0, .b = 8.0}}};
    std::ostringstream a, b;
    write_results_csv(run_experiment(spec), a);
    write_results_csv(run_experiment(spec), b);
    if (a.str() != b.str() || a.str().empty()) {
        detail = "CSV outputs differ for identical base_seed";
        return false;
    }

    Trace t = block_instance(5, 20, 0, 7);
    t.setup = Setup::phase;
    std::ostringstream first;
    write_trace(t, first);
    std::istringstream in(first.str());
    Trace back = read_trace(in, "mem");
    std::ostringstream second;
    write_trace(back, second);
    if (first.str() != second.str() || back.requests != t.requests ||
        back.predictions != t.predictions || back.setup != t.setup) {
        detail = "trace round trip not exact";
        return false;
    }
    detail = "CSV byte-identical across reruns; trace round trip exact";
    return true;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        bool (*run)(std::string&);
    };
    const Criterion criteria[] = {
        {"LFD equals exhaustive optimum on 10^4 random traces", criterion_1},
        {"flush-on-all-zero with perfect discard bits within OPT + 2k", criterion_2},
        {"flush-on-all-zero (1, k-1, 1, 2k) bound on the flip grid", criterion_3},
        {"mark0 (1, 2H_k, 1, 2k) bound on the flip grid", criterion_4},
        {"mark-predict exact cost sum(c_i) under perfect phase bits", criterion_5},
        {"mark-predict (2, H_k, 1, 2k) bound on the flip grid", criterion_6},
        {"mark-predict large-eta1 logarithmic refinement", criterion_7},
        {"adaptive adversary forces LRU to ratio k", criterion_8},
        {"uniform instance phase length, fault rate and eta0/OPT", criterion_9},
        {"block instance error structure and Mark lower bound", criterion_10},
        {"three-page rounds: OPT, eta1 and universal m/3 lower bound", criterion_11},
        {"z = c - l identity on non-first phases", criterion_12},
        {"seeded determinism and exact trace round trip", criterion_13},
    };

    int failures = 0;
    int index = 0;
    for (const Criterion& c : criteria) {
        ++index;
        std::string detail;
        bool pass = false;
        try {
            pass = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        if (!pass) ++failures;
        std::printf("[%2d] %s  %s%s%s\n", index, pass ? "PASS" : "FAIL", c.name,
                    detail.empty() ? "" : " -- ", detail.c_str());
        std::fflush(stdout);
    }
    if (failures) std::printf("%d of 13 criteria failed\n", failures);
    return failures;
}
