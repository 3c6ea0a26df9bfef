// ffopt — benchmark driver for the firefly optimizer and its PSO/GA
// baselines. Subcommands: run (one seeded run), bench (seeded trial
// matrix with a comparison table), table (re-render a summary file),
// trace (per-generation firefly positions for 2-D problems).

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "ffopt/objectives.hpp"
#include "ffopt/report.hpp"
#include "ffopt/settings.hpp"

namespace fs = std::filesystem;
using namespace ffopt;

namespace {

struct CommonArgs {
    std::string config_path;
    std::vector<std::string> sets;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> runs;
    std::optional<std::string> out_dir;
    std::optional<std::string> format;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--config", args.config_path, "config file (flat key=value)");
    cmd->add_option("--set", args.sets, "override KEY=VALUE (repeatable)")
        ->take_all();
    cmd->add_option("--seed", args.seed, "base random seed");
    cmd->add_option("--runs", args.runs, "number of seeded runs");
    cmd->add_option("--out", args.out_dir, "output directory");
    cmd->add_option("--format", args.format, "csv, tsv, or pretty")
        ->check(CLI::IsMember({"csv", "tsv", "pretty"}));
}

// defaults < config file < --set pairs < dedicated flags
Settings build_settings(const CommonArgs& args) {
    Settings s = default_settings();
    if (!args.config_path.empty()) load_config_file(s, args.config_path);
    for (const auto& pair : args.sets) apply_set_arg(s, pair);
    if (args.seed) s.seed = *args.seed;
    if (args.runs) {
        if (*args.runs < 1) throw std::invalid_argument("--runs must be >= 1");
        s.runs = *args.runs;
    }
    if (args.out_dir) s.out_dir = *args.out_dir;
    if (args.format) s.format = *args.format;
    return s;
}

char sep_for(const std::string& format) { return format == "tsv" ? '\t' : ','; }

std::string table_ext(const std::string& format) {
    return format == "tsv" ? ".tsv" : ".csv";
}

std::ofstream open_out(const fs::path& path) {
    std::ofstream os(path, std::ios::binary);  // LF line endings everywhere
    if (!os) throw std::invalid_argument("cannot write '" + path.string() + "'");
    return os;
}

RunRecord single_run(const Settings& s, Algorithm alg, const Objective& objective,
                     RandomSource& rng, const GenerationObserver& observer = {}) {
    const std::uint64_t cap = s.evaluation_cap != 0
                                  ? s.evaluation_cap
                                  : default_evaluation_cap(alg, objective.name);
    switch (alg) {
        case Algorithm::FA: {
            FaConfig cfg = s.fa;
            cfg.max_evaluations = cap;
            return fa_run(objective, cfg, rng, s.stop, observer);
        }
        case Algorithm::PSO: {
            PsoConfig cfg = s.pso;
            cfg.max_evaluations = cap;
            return pso_run(objective, cfg, rng, s.stop);
        }
        case Algorithm::GA: {
            GaConfig cfg = s.ga;
            cfg.max_evaluations = cap;
            return ga_run(objective, cfg, rng, s.stop);
        }
    }
    throw std::logic_error("unreachable");
}

int cmd_run(const CommonArgs& args) {
    const Settings s = build_settings(args);
    const Algorithm alg = parse_algorithm(s.algorithm);
    Objective objective = make_objective(s.objective, s.dim);
    objective.success_tolerance = s.success_tolerance;

    RandomSource rng(s.seed);
    const RunRecord rec = single_run(s, alg, objective, rng);

    if (s.format == "pretty") {
        std::cout << "algorithm:   " << to_string(rec.algorithm) << '\n'
                  << "objective:   " << rec.objective_name << " (d="
                  << objective.space.dim << ")\n"
                  << "seed:        " << rec.seed << '\n'
                  << "evaluations: " << rec.evaluations_used << '\n'
                  << "generations: " << rec.trace.size() - 1 << '\n'
                  << "best_value:  " << format_double(rec.best_value) << '\n';
        std::cout << "best_point:  (";
        for (std::size_t k = 0; k < rec.best_point.size(); ++k) {
            if (k) std::cout << ", ";
            std::cout << format_double(rec.best_point[k]);
        }
        std::cout << ")\n";
        if (objective.known_best_value)
            std::cout << "success:     " << (rec.success ? "true" : "false") << '\n';
        else
            std::cout << "success:     n/a (no known optimum at this dimension)\n";
    } else {
        write_runs(std::cout, {rec}, sep_for(s.format));
    }
    return 0;
}

int cmd_bench(const CommonArgs& args) {
    const Settings s = build_settings(args);

    std::vector<SummaryRow> rows;
    std::vector<RunRecord> all_records;
    for (const auto& obj_name : s.objectives) {
        for (const auto& alg_name : s.algorithms) {
            const TrialPlan plan = s.plan_for(parse_algorithm(alg_name), obj_name);
            TrialResult result = run_trials(plan);
            rows.push_back(result.summary);
            all_records.insert(all_records.end(), result.records.begin(),
                               result.records.end());
        }
    }

    fs::create_directories(s.out_dir);
    const fs::path summary_path = fs::path(s.out_dir) / ("summary" + table_ext(s.format));
    const fs::path runs_path = fs::path(s.out_dir) / ("runs" + table_ext(s.format));
    {
        auto os = open_out(summary_path);
        write_summary(os, rows, sep_for(s.format));
    }
    {
        auto os = open_out(runs_path);
        write_runs(os, all_records, sep_for(s.format));
    }

    if (s.format == "pretty")
        std::cout << emit_table(rows);
    else
        write_summary(std::cout, rows, sep_for(s.format));
    std::cerr << "wrote " << summary_path.string() << " and " << runs_path.string()
              << '\n';
    return 0;
}

int cmd_table(const std::string& summary_file) {
    std::ifstream is(summary_file, std::ios::binary);
    if (!is)
        throw std::invalid_argument("cannot open summary file '" + summary_file + "'");
    const auto rows = read_summary(is);
    std::cout << emit_table(rows);
    return 0;
}

int cmd_trace(const CommonArgs& args) {
    const Settings s = build_settings(args);
    const Algorithm alg = parse_algorithm(s.algorithm);
    if (alg != Algorithm::FA)
        throw std::invalid_argument(
            "trace dumps firefly positions; use --set algorithm=fa");

    Objective objective = make_objective(s.objective, s.dim);
    objective.success_tolerance = s.success_tolerance;
    if (objective.space.dim != 2)
        throw std::invalid_argument("trace needs a 2-D objective; '" + s.objective +
                                    "' has dimension " +
                                    std::to_string(objective.space.dim) +
                                    " here (try --set dim=2)");

    std::vector<TraceRow> trace_rows;
    auto observer = [&](std::size_t gen, const FireflyState& state) {
        for (std::size_t i = 0; i < state.positions.size(); ++i)
            trace_rows.push_back({gen, i, state.positions[i],
                                  -state.intensities[i]});
    };

    RandomSource rng(s.seed);
    single_run(s, alg, objective, rng, observer);

    fs::create_directories(s.out_dir);
    const fs::path trace_path = fs::path(s.out_dir) / ("trace" + table_ext(s.format));
    {
        auto os = open_out(trace_path);
        write_trace(os, trace_rows, objective.space.dim, sep_for(s.format));
    }
    std::cerr << "wrote " << trace_path.string() << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"firefly / PSO / GA benchmark driver"};
    app.require_subcommand(1);

    CommonArgs run_args, bench_args, trace_args;
    std::string summary_file;

    CLI::App* run = app.add_subcommand("run", "one seeded run, report the result");
    add_common(run, run_args);

    CLI::App* bench = app.add_subcommand(
        "bench", "seeded trial matrix (algorithms x objectives), comparison table");
    add_common(bench, bench_args);

    CLI::App* table =
        app.add_subcommand("table", "render a summary file as a comparison table");
    table->add_option("summary", summary_file, "summary csv/tsv written by bench")
        ->required();

    CLI::App* trace = app.add_subcommand(
        "trace", "dump per-generation firefly positions for a 2-D objective");
    add_common(trace, trace_args);

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return cmd_run(run_args);
        if (bench->parsed()) return cmd_bench(bench_args);
        if (table->parsed()) return cmd_table(summary_file);
        if (trace->parsed()) return cmd_trace(trace_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
