// pagelab: trace generation, ground-truth/noise tooling, batch simulation and
// (alpha, beta, gamma)-competitiveness checking for one-bit-prediction paging.
//
// Exit codes: 0 success, 1 bound check violated (with --strict), 2 input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "paging/experiment.hpp"
#include "paging/offline.hpp"
#include "paging/policy.hpp"
#include "paging/trace_io.hpp"

namespace {

using nlohmann::json;
using namespace paging;

void write_text(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error(path + ": cannot open for writing");
    out << content;
}

Setup parse_setup(const std::string& s) {
    auto setup = setup_from_string(s);
    if (!setup) throw std::runtime_error("setup must be discard, phase or none: " + s);
    return *setup;
}

std::vector<std::string> split_csv_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

json load_json_arg(const std::string& arg) {
    if (!arg.empty() && arg.front() == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw std::runtime_error(arg.substr(1) + ": cannot open spec file");
        return json::parse(in);
    }
    if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) return json::parse(arg);
    std::ifstream in(arg);
    if (!in) throw std::runtime_error(arg + ": cannot open spec file");
    return json::parse(in);
}

NoiseSpec noise_spec_from_json(const json& j) {
    NoiseSpec spec;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "flip-each-zero")
        spec.kind = NoiseSpec::Kind::flip_each_zero;
    else if (kind == "flip-each-one")
        spec.kind = NoiseSpec::Kind::flip_each_one;
    else if (kind == "flip-exactly")
        spec.kind = NoiseSpec::Kind::flip_exactly;
    else if (kind == "constant")
        spec.kind = NoiseSpec::Kind::constant;
    else if (kind == "replace-all")
        spec.kind = NoiseSpec::Kind::replace_all;
    else
        throw std::runtime_error("unknown noise kind: " + kind);
    spec.prob = j.value("prob", 0.0);
    spec.count0 = j.value("count0", std::uint64_t{0});
    spec.count1 = j.value("count1", std::uint64_t{0});
    spec.bit = static_cast<Bit>(j.value("bit", 0));
    spec.seed = j.value("seed", std::uint64_t{0});
    if (j.contains("bits"))
        for (int b : j.at("bits")) spec.bits.push_back(static_cast<Bit>(b));
    return spec;
}

GeneratorSpec generator_spec_from_json(const json& j) {
    GeneratorSpec g;
    g.kind = j.at("kind").get<std::string>();
    g.k = j.at("k").get<int>();
    g.n = j.value("n", std::uint64_t{0});
    g.m = j.value("m", std::uint64_t{0});
    g.phases = j.value("phases", std::uint64_t{0});
    g.block_repeats = j.value("block_repeats", std::uint64_t{0});
    g.seed = j.value("seed", std::uint64_t{0});
    g.bit = static_cast<Bit>(j.value("bit", 0));
    g.policy = j.value("policy", std::string("lru"));
    return g;
}

ExperimentSpec experiment_spec_from_json(const json& j) {
    ExperimentSpec spec;
    if (j.contains("trace")) spec.trace_file = j.at("trace").get<std::string>();
    if (j.contains("generator")) spec.generator = generator_spec_from_json(j.at("generator"));
    spec.setup = parse_setup(j.value("setup", std::string("none")));
    if (j.contains("noise")) spec.noise = noise_spec_from_json(j.at("noise"));
    for (const auto& p : j.at("policies")) spec.policies.push_back(p.get<std::string>());
    spec.trials = j.value("trials", std::uint64_t{1});
    spec.base_seed = j.value("base_seed", std::uint64_t{0});
    if (j.contains("bounds"))
        for (const auto& b : j.at("bounds"))
            spec.bounds.emplace_back(b.at("policy").get<std::string>(),
                                     BoundParams{b.at("alpha").get<double>(),
                                                 b.at("beta").get<double>(),
                                                 b.at("gamma").get<double>(),
                                                 b.value("b", 0.0)});
    return spec;
}

ExperimentResult result_from_json(const json& j) {
    ExperimentResult r;
    r.trace_label = j.at("trace").get<std::string>();
    r.setup = parse_setup(j.at("setup").get<std::string>());
    r.cache_size = j.at("k").get<int>();
    r.num_requests = j.at("requests").get<std::uint64_t>();
    r.base_seed = j.at("base_seed").get<std::uint64_t>();
    r.opt_cost = j.at("opt").get<std::uint64_t>();
    if (j.contains("brute_force_opt"))
        r.brute_force_cost = j.at("brute_force_opt").get<std::uint64_t>();
    r.eta0 = j.at("eta0").get<std::uint64_t>();
    r.eta1 = j.at("eta1").get<std::uint64_t>();
    for (const auto& p : j.at("policies")) {
        PolicyAggregate agg;
        agg.policy = p.at("policy").get<std::string>();
        agg.mean_cost = p.at("mean_cost").get<double>();
        agg.std_error = p.at("std_error").get<double>();
        for (const auto& t : p.at("trials"))
            agg.trials.push_back({t.at("trial").get<std::uint64_t>(),
                                  t.at("seed").get<std::uint64_t>(),
                                  t.at("faults").get<std::uint64_t>(),
                                  t.at("evictions").get<std::uint64_t>()});
        r.policies.push_back(std::move(agg));
    }
    if (j.contains("checks"))
        for (const auto& c : j.at("checks")) {
            BoundCheck check = check_bound(
                c.at("policy").get<std::string>(), c.at("mean_alg_cost").get<double>(),
                c.at("std_error").get<double>(), c.at("opt").get<double>(),
                c.at("eta0").get<std::uint64_t>(), c.at("eta1").get<std::uint64_t>(),
                BoundParams{c.at("alpha").get<double>(), c.at("beta").get<double>(),
                            c.at("gamma").get<double>(), c.at("b").get<double>()});
            r.checks.push_back(std::move(check));
        }
    return r;
}

void print_checks(const ExperimentResult& result) {
    for (const BoundCheck& check : result.checks) {
        std::cout << check.policy << ": mean=" << check.mean_alg_cost
                  << " opt=" << check.opt_cost << " eta0=" << check.eta0
                  << " eta1=" << check.eta1 << " slack=" << check.slack << " -> "
                  << (check.satisfied ? "satisfied"
                                      : (check.inconclusive ? "inconclusive" : "violated"));
        if (check.normalized_ratio)
            std::cout << " (normalized ratio " << *check.normalized_ratio << ")";
        std::cout << "\n";
    }
}

bool any_violated(const ExperimentResult& result) {
    for (const BoundCheck& check : result.checks)
        if (!check.satisfied && !check.inconclusive) return true;
    return false;
}

std::string results_csv_string(const ExperimentResult& result) {
    std::ostringstream out;
    write_results_csv(result, out);
    return out.str();
}

int run_main(int argc, char** argv) {
    CLI::App app{"one-bit-prediction paging lab"};
    app.require_subcommand(1);

    // ---- gen
    auto* gen = app.add_subcommand("gen", "generate a trace");
    GeneratorSpec gspec;
    std::string gen_out;
    gen->add_option("kind", gspec.kind, "uniform|blocks|rounds|adaptive")->required();
    gen->add_option("--k", gspec.k, "cache size")->required();
    gen->add_option("--n", gspec.n, "request count (uniform, adaptive)");
    gen->add_option("--m", gspec.m, "round count (rounds)");
    gen->add_option("--phases", gspec.phases, "phase count (blocks)");
    gen->add_option("--block-repeats", gspec.block_repeats, "block repeats (blocks; 0 = k+1)");
    gen->add_option("--seed", gspec.seed, "generator seed");
    int gen_bit = 0;
    gen->add_option("--bit", gen_bit, "constant prediction bit (uniform, adaptive)");
    gen->add_option("--policy", gspec.policy, "target policy (adaptive)");
    gen->add_option("--out", gen_out, "output trace file (default stdout)");

    // ---- truth
    auto* truth = app.add_subcommand("truth", "replace predictions by ground truth");
    std::string truth_setup, truth_trace, truth_out;
    truth->add_option("setup", truth_setup, "discard|phase")->required();
    truth->add_option("--trace", truth_trace, "input trace file")->required();
    truth->add_option("--out", truth_out, "output trace file (default stdout)");

    // ---- noise
    auto* noise = app.add_subcommand("noise", "apply a noise spec to ground truth");
    std::string noise_spec_arg, noise_trace, noise_setup, noise_out;
    noise->add_option("--spec", noise_spec_arg, "noise spec JSON (inline or @file)")->required();
    noise->add_option("--trace", noise_trace, "input trace file")->required();
    noise->add_option("--setup", noise_setup, "discard|phase")->required();
    noise->add_option("--out", noise_out, "output trace file (default stdout)");

    // ---- run / check (same engine)
    auto add_run_options = [](CLI::App* cmd, std::string& spec_file, std::string& trace_file,
                              std::string& setup, std::string& policies, std::uint64_t& trials,
                              std::uint64_t& seed, std::string& out, std::string& format,
                              bool& strict) {
        cmd->add_option("--spec", spec_file, "experiment spec JSON (inline or @file)");
        cmd->add_option("--trace", trace_file, "trace file");
        cmd->add_option("--setup", setup, "discard|phase|none");
        cmd->add_option("--policies", policies, "comma-separated policy ids");
        cmd->add_option("--trials", trials, "trials per policy");
        cmd->add_option("--seed", seed, "base seed");
        cmd->add_option("--out", out, "output file (default stdout)");
        cmd->add_option("--format", format, "csv|json");
        cmd->add_flag("--strict", strict, "exit 1 when a bound check is violated");
    };

    auto* run = app.add_subcommand("run", "run a batch experiment");
    std::string run_spec, run_trace, run_setup = "none", run_policies, run_out,
                run_format = "json";
    std::uint64_t run_trials = 1, run_seed = 0;
    bool run_strict = false;
    double run_alpha = -1, run_beta = 0, run_gamma = 0, run_b = -1;
    add_run_options(run, run_spec, run_trace, run_setup, run_policies, run_trials, run_seed,
                    run_out, run_format, run_strict);
    run->add_option("--alpha", run_alpha, "bound alpha (attach a bound to every policy)");
    run->add_option("--beta", run_beta, "bound beta");
    run->add_option("--gamma", run_gamma, "bound gamma");
    run->add_option("--b", run_b, "bound additive constant (default 2k)");

    auto* chk = app.add_subcommand("check", "run and evaluate a competitiveness bound");
    std::string chk_spec, chk_trace, chk_setup = "none", chk_policies, chk_out,
                chk_format = "json";
    std::uint64_t chk_trials = 1, chk_seed = 0;
    bool chk_strict = false;
    double chk_alpha = 0, chk_beta = 0, chk_gamma = 0, chk_b = -1;
    add_run_options(chk, chk_spec, chk_trace, chk_setup, chk_policies, chk_trials, chk_seed,
                    chk_out, chk_format, chk_strict);
    chk->add_option("--alpha", chk_alpha, "bound alpha")->required();
    chk->add_option("--beta", chk_beta, "bound beta")->required();
    chk->add_option("--gamma", chk_gamma, "bound gamma")->required();
    chk->add_option("--b", chk_b, "bound additive constant (default 2k)");

    // ---- report
    auto* report = app.add_subcommand("report", "re-emit a result file");
    std::string report_in, report_format = "csv", report_out;
    report->add_option("--in", report_in, "results JSON produced by run")->required();
    report->add_option("--format", report_format, "csv|json")->required();
    report->add_option("--out", report_out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (gen->parsed()) {
        gspec.bit = static_cast<Bit>(gen_bit);
        std::ostringstream out;
        write_trace(generate_trace(gspec), out);
        write_text(gen_out, out.str());
        return 0;
    }

    if (truth->parsed()) {
        Trace trace = read_trace_file(truth_trace);
        const Setup setup = parse_setup(truth_setup);
        GroundTruth gt =
            setup == Setup::discard ? ground_truth_discard(trace) : ground_truth_phase(trace);
        trace.predictions = gt.bits;
        trace.setup = setup;
        std::ostringstream out;
        write_trace(trace, out);
        write_text(truth_out, out.str());
        return 0;
    }

    if (noise->parsed()) {
        Trace trace = read_trace_file(noise_trace);
        const Setup setup = parse_setup(noise_setup);
        GroundTruth gt =
            setup == Setup::discard ? ground_truth_discard(trace) : ground_truth_phase(trace);
        trace.predictions = apply_noise(gt, noise_spec_from_json(load_json_arg(noise_spec_arg)));
        trace.setup = setup;
        std::ostringstream out;
        write_trace(trace, out);
        write_text(noise_out, out.str());
        return 0;
    }

    auto run_engine = [&](const std::string& spec_arg, const std::string& trace_file,
                          const std::string& setup, const std::string& policies,
                          std::uint64_t trials, std::uint64_t seed, double alpha, double beta,
                          double gamma, double b, bool have_bound, const std::string& out,
                          const std::string& format, bool strict) -> int {
        ExperimentSpec spec;
        if (!spec_arg.empty()) {
            spec = experiment_spec_from_json(load_json_arg(spec_arg));
        } else {
            spec.trace_file = trace_file;
            spec.setup = parse_setup(setup);
            spec.policies = split_csv_list(policies);
            spec.trials = trials;
            spec.base_seed = seed;
        }
        if (have_bound) {
            double b_eff = b;
            if (b_eff < 0) {  // default additive constant: 2k
                if (!spec.trace_file.empty())
                    b_eff = 2.0 * read_trace_file(spec.trace_file).cache_size;
                else if (spec.generator)
                    b_eff = 2.0 * spec.generator->k;
                else
                    throw std::runtime_error("cannot derive default b: no trace or generator");
            }
            for (const std::string& id : spec.policies)
                spec.bounds.emplace_back(id, BoundParams{alpha, beta, gamma, b_eff});
        }
        if (format != "csv" && format != "json")
            throw std::runtime_error("format must be csv or json");
        ExperimentResult result = run_experiment(spec);
        write_text(out, format == "csv" ? results_csv_string(result)
                                        : results_to_json_string(result));
        const bool payload_on_stdout = out.empty() || out == "-";
        if (!result.checks.empty() && !payload_on_stdout) print_checks(result);
        if (strict && any_violated(result)) return 1;
        return 0;
    };

    if (run->parsed())
        return run_engine(run_spec, run_trace, run_setup, run_policies, run_trials, run_seed,
                          run_alpha, run_beta, run_gamma, run_b, run_alpha >= 0, run_out,
                          run_format, run_strict);

    if (chk->parsed())
        return run_engine(chk_spec, chk_trace, chk_setup, chk_policies, chk_trials, chk_seed,
                          chk_alpha, chk_beta, chk_gamma, chk_b, true, chk_out, chk_format,
                          chk_strict);

    if (report->parsed()) {
        ExperimentResult result = result_from_json(load_json_arg(report_in));
        if (report_format == "csv")
            write_text(report_out, results_csv_string(result));
        else if (report_format == "json")
            write_text(report_out, results_to_json_string(result));
        else
            throw std::runtime_error("format must be csv or json");
        return 0;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run_main(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
