#include "paging/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "paging/offline.hpp"
#include "paging/policy.hpp"
#include "paging/rng.hpp"
#include "paging/trace_io.hpp"

namespace paging {

Trace generate_trace(const GeneratorSpec& spec) {
    if (spec.kind == "uniform")
        return uniform_random_instance(spec.k, spec.n, spec.seed, spec.bit);
    if (spec.kind == "blocks")
        return block_instance(spec.k, spec.phases, spec.block_repeats, spec.seed);
    if (spec.kind == "rounds") return three_page_round_instance(spec.k, spec.m, spec.seed);
    if (spec.kind == "adaptive") {
        auto policy =
            make_policy(spec.policy, spec.k, static_cast<std::size_t>(spec.k) + 1, spec.seed);
        return adaptive_adversary_run(*policy, spec.k, spec.n, spec.bit).trace;
    }
    throw std::invalid_argument("unknown generator kind: " + spec.kind);
}

double gamma_refinement(double x) {
    if (x <= 0.0) throw std::invalid_argument("gamma_refinement: x must be positive");
    return 2.0 / x * (std::log(2.0 * x + 1.0) + 1.0);
}

BoundCheck check_bound(const std::string& policy, double mean_alg_cost, double std_error,
                       double opt_cost, std::uint64_t eta0, std::uint64_t eta1,
                       const BoundParams& params) {
    BoundCheck check;
    check.policy = policy;
    check.params = params;
    check.mean_alg_cost = mean_alg_cost;
    check.std_error = std_error;
    check.opt_cost = opt_cost;
    check.eta0 = eta0;
    check.eta1 = eta1;
    const double rhs = params.alpha * opt_cost + params.beta * static_cast<double>(eta0) +
                       params.gamma * static_cast<double>(eta1) + params.b;
    check.slack = mean_alg_cost - rhs;
    check.satisfied = check.slack <= 0.0;
    check.inconclusive = !check.satisfied && check.slack <= 3.0 * std_error;
    if (opt_cost > 0.0) check.normalized_ratio = (mean_alg_cost - params.b) / opt_cost;
    return check;
}

ExperimentResult run_experiment(const ExperimentSpec& spec) {
    Trace trace;
    if (spec.generator)
        trace = generate_trace(*spec.generator);
    else if (!spec.trace_file.empty())
        trace = read_trace_file(spec.trace_file);
    else
        throw std::invalid_argument("experiment needs a trace file or a generator");
    return run_experiment(spec, trace);
}

ExperimentResult run_experiment(const ExperimentSpec& spec, const Trace& trace) {
    require_valid(trace);
    if (spec.trials < 1) throw std::invalid_argument("experiment needs at least one trial");
    if (spec.policies.empty()) throw std::invalid_argument("experiment needs at least one policy");
    for (const std::string& id : spec.policies)
        if (!is_known_policy(id)) throw std::invalid_argument("unknown policy: " + id);
    for (const auto& [id, params] : spec.bounds) {
        if (!is_known_policy(id)) throw std::invalid_argument("unknown policy in bound: " + id);
        if (!(params.alpha >= 0 && params.beta >= 0 && params.gamma >= 0 && params.b >= 0) ||
            !std::isfinite(params.alpha + params.beta + params.gamma + params.b))
            throw std::invalid_argument("bound parameters must be finite and non-negative");
    }

    ExperimentResult result;
    result.trace_label = trace.label;
    result.setup = spec.setup;
    result.cache_size = trace.cache_size;
    result.num_requests = trace.size();
    result.base_seed = spec.base_seed;

    // Ground truth, predictions and OPT are shared across all trials.
    std::vector<Bit> predictions = trace.predictions;
    if (spec.setup != Setup::none) {
        GroundTruth truth = spec.setup == Setup::discard ? ground_truth_discard(trace)
                                                         : ground_truth_phase(trace);
        if (spec.noise) predictions = apply_noise(truth, *spec.noise);
        ErrorReport errors = count_errors(predictions, truth, spec.setup);
        result.eta0 = errors.eta0;
        result.eta1 = errors.eta1;
    } else {
        for (const std::string& id : spec.policies)
            if (policy_uses_predictions(id))
                throw std::invalid_argument("policy " + id +
                                            " needs a prediction setup (got setup=none)");
        if (spec.noise)
            throw std::invalid_argument("noise requires a prediction setup (got setup=none)");
    }
    result.opt_cost = lfd_run(trace).first.opt_cost;
    {
        BruteForceLimits limits;
        if (trace.size() <= limits.max_requests && trace.num_pages() <= limits.max_pages &&
            trace.cache_size <= limits.max_k)
            result.brute_force_cost = brute_force_opt(trace, limits);
    }

    for (const std::string& id : spec.policies) {
        PolicyAggregate agg;
        agg.policy = id;
        double sum = 0.0, sumsq = 0.0;
        for (std::uint64_t t = 0; t < spec.trials; ++t) {
            const std::uint64_t seed = derive_seed(spec.base_seed, id, t);
            auto policy = make_policy(id, trace.cache_size, trace.num_pages(), seed);
            RunReport report = run_policy(*policy, trace, predictions, /*keep_log=*/false);
            sum += static_cast<double>(report.faults);
            sumsq += static_cast<double>(report.faults) * static_cast<double>(report.faults);
            agg.trials.push_back({t, seed, report.faults, report.evictions});
        }
        const double n = static_cast<double>(spec.trials);
        agg.mean_cost = sum / n;
        if (spec.trials > 1) {
            const double var = std::max(0.0, (sumsq - sum * sum / n) / (n - 1.0));
            agg.std_error = std::sqrt(var / n);
        }
        result.policies.push_back(std::move(agg));
    }

    for (const auto& [id, params] : spec.bounds) {
        for (const PolicyAggregate& agg : result.policies)
            if (agg.policy == id)
                result.checks.push_back(check_bound(id, agg.mean_cost, agg.std_error,
                                                    static_cast<double>(result.opt_cost),
                                                    result.eta0, result.eta1, params));
    }
    return result;
}

namespace {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

const BoundCheck* bound_for(const ExperimentResult& result, const std::string& policy) {
    for (const BoundCheck& check : result.checks)
        if (check.policy == policy) return &check;
    return nullptr;
}

}  // namespace

void write_results_csv(const ExperimentResult& result, std::ostream& out) {
    out << "trace,policy,trial,seed,faults,evictions,opt,eta0,eta1,slack\n";
    for (const PolicyAggregate& agg : result.policies) {
        const BoundCheck* check = bound_for(result, agg.policy);
        for (const TrialResult& trial : agg.trials) {
            out << result.trace_label << ',' << agg.policy << ',' << trial.trial << ','
                << trial.seed << ',' << trial.faults << ',' << trial.evictions << ','
                << result.opt_cost << ',' << result.eta0 << ',' << result.eta1 << ',';
            if (check) {
                const double rhs = check->params.alpha * static_cast<double>(result.opt_cost) +
                                   check->params.beta * static_cast<double>(result.eta0) +
                                   check->params.gamma * static_cast<double>(result.eta1) +
                                   check->params.b;
                out << format_double(static_cast<double>(trial.faults) - rhs);
            }
            out << '\n';
        }
    }
}

namespace {

nlohmann::json to_json(const ExperimentResult& result) {
    nlohmann::json j;
    j["trace"] = result.trace_label;
    j["setup"] = to_string(result.setup);
    j["k"] = result.cache_size;
    j["requests"] = result.num_requests;
    j["base_seed"] = result.base_seed;
    j["opt"] = result.opt_cost;
    if (result.brute_force_cost) j["brute_force_opt"] = *result.brute_force_cost;
    j["eta0"] = result.eta0;
    j["eta1"] = result.eta1;
    j["policies"] = nlohmann::json::array();
    for (const PolicyAggregate& agg : result.policies) {
        nlohmann::json p;
        p["policy"] = agg.policy;
        p["mean_cost"] = agg.mean_cost;
        p["std_error"] = agg.std_error;
        p["trials"] = nlohmann::json::array();
        for (const TrialResult& t : agg.trials)
            p["trials"].push_back({{"trial", t.trial},
                                   {"seed", t.seed},
                                   {"faults", t.faults},
                                   {"evictions", t.evictions}});
        j["policies"].push_back(std::move(p));
    }
    j["checks"] = nlohmann::json::array();
    for (const BoundCheck& check : result.checks) {
        nlohmann::json c;
        c["policy"] = check.policy;
        c["alpha"] = check.params.alpha;
        c["beta"] = check.params.beta;
        c["gamma"] = check.params.gamma;
        c["b"] = check.params.b;
        c["mean_alg_cost"] = check.mean_alg_cost;
        c["opt"] = check.opt_cost;
        c["eta0"] = check.eta0;
        c["eta1"] = check.eta1;
        c["std_error"] = check.std_error;
        c["slack"] = check.slack;
        c["satisfied"] = check.satisfied;
        c["inconclusive"] = check.inconclusive;
        if (check.normalized_ratio) c["normalized_ratio"] = *check.normalized_ratio;
        j["checks"].push_back(std::move(c));
    }
    return j;
}

}  // namespace

void write_results_json(const ExperimentResult& result, std::ostream& out) {
    out << to_json(result).dump(2) << '\n';
}

std::string results_to_json_string(const ExperimentResult& result) {
    return to_json(result).dump(2) + "\n";
}

}  // namespace paging
