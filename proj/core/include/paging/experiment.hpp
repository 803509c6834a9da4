#ifndef PAGING_EXPERIMENT_HPP
#define PAGING_EXPERIMENT_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "paging/adversary.hpp"
#include "paging/model.hpp"
#include "paging/prediction_lab.hpp"

namespace paging {

/// Synthetic trace source for an experiment.
struct GeneratorSpec {
    std::string kind;  // uniform | blocks | rounds | adaptive
    int k = 2;
    std::uint64_t n = 0;              // uniform, adaptive
    std::uint64_t m = 0;              // rounds
    std::uint64_t phases = 0;         // blocks
    std::uint64_t block_repeats = 0;  // blocks; 0 = default k+1
    std::uint64_t seed = 0;
    Bit bit = 0;
    std::string policy = "lru";  // adaptive target
};

Trace generate_trace(const GeneratorSpec& spec);

struct ExperimentSpec {
    std::string trace_file;                // empty when generator is set
    std::optional<GeneratorSpec> generator;
    Setup setup = Setup::none;
    std::optional<NoiseSpec> noise;
    std::vector<std::string> policies;
    std::uint64_t trials = 1;
    std::uint64_t base_seed = 0;
    std::vector<std::pair<std::string, BoundParams>> bounds;
};

struct TrialResult {
    std::uint64_t trial = 0;
    std::uint64_t seed = 0;
    std::uint64_t faults = 0;
    std::uint64_t evictions = 0;
};

struct PolicyAggregate {
    std::string policy;
    double mean_cost = 0.0;
    double std_error = 0.0;
    std::vector<TrialResult> trials;
};

/// Evaluation of ALG <= alpha*OPT + beta*eta0 + gamma*eta1 + b on trial means.
struct BoundCheck {
    std::string policy;
    BoundParams params;
    double mean_alg_cost = 0.0;
    double opt_cost = 0.0;
    std::uint64_t eta0 = 0;
    std::uint64_t eta1 = 0;
    double std_error = 0.0;
    double slack = 0.0;
    bool satisfied = false;
    bool inconclusive = false;  // slack > 0 but within 3 standard errors
    std::optional<double> normalized_ratio;
};

BoundCheck check_bound(const std::string& policy, double mean_alg_cost, double std_error,
                       double opt_cost, std::uint64_t eta0, std::uint64_t eta1,
                       const BoundParams& params);

/// gamma(x) = 2/x * (ln(2x+1) + 1), the large-eta1 refinement coefficient.
double gamma_refinement(double x);

struct ExperimentResult {
    std::string trace_label;
    Setup setup = Setup::none;
    int cache_size = 0;
    std::uint64_t num_requests = 0;
    std::uint64_t base_seed = 0;
    std::uint64_t opt_cost = 0;
    std::optional<std::uint64_t> brute_force_cost;  // when within oracle limits
    std::uint64_t eta0 = 0;
    std::uint64_t eta1 = 0;
    std::vector<PolicyAggregate> policies;
    std::vector<BoundCheck> checks;
};

/// Runs every policy for the configured number of trials on one trace.
/// Trial t of a policy uses derive_seed(base_seed, policy, t). Ground truth
/// and OPT are computed once; predictions come from the noise spec when
/// present, from the trace otherwise.
ExperimentResult run_experiment(const ExperimentSpec& spec);
ExperimentResult run_experiment(const ExperimentSpec& spec, const Trace& trace);

/// CSV: one row per trial per policy, fixed header
/// trace,policy,trial,seed,faults,evictions,opt,eta0,eta1,slack
void write_results_csv(const ExperimentResult& result, std::ostream& out);
void write_results_json(const ExperimentResult& result, std::ostream& out);

std::string results_to_json_string(const ExperimentResult& result);

}  // namespace paging

#endif
