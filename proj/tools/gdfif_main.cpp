// Command-line front end: validate, run, eval, render.

#include "gdfif/pipeline.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>

namespace {

struct Overrides {
    std::optional<std::size_t> resolution;
    std::optional<double> tol;
    std::optional<std::size_t> max_iters;
    std::optional<std::size_t> generations;
    std::optional<double> dedup;
    std::optional<std::size_t> chaos_points;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> mode;
    std::optional<std::string> out_dir;
};

void add_overrides(CLI::App* cmd, Overrides& o) {
    cmd->add_option("--resolution", o.resolution, "samples per interval");
    cmd->add_option("--tol", o.tol, "fixed-point stopping tolerance");
    cmd->add_option("--max-iters", o.max_iters, "fixed-point iteration limit");
    cmd->add_option("--generations", o.generations, "attractor generations");
    cmd->add_option("--dedup", o.dedup, "attractor deduplication tolerance");
    cmd->add_option("--chaos-points", o.chaos_points, "chaos-game emissions (0 disables)");
    cmd->add_option("--seed", o.seed, "chaos-game seed");
    cmd->add_option("--mode", o.mode, "paper-strict | used-edges-only");
    cmd->add_option("--out", o.out_dir, "output directory (overrides GDFIF_OUTPUT_DIR)");
}

gdfif::ProjectConfig load(const std::string& path, const Overrides& o) {
    gdfif::ProjectConfig cfg = gdfif::load_config(path);
    if (o.resolution) cfg.solver.resolution = *o.resolution;
    if (o.tol) cfg.solver.tol = *o.tol;
    if (o.max_iters) cfg.solver.max_iters = *o.max_iters;
    if (o.generations) cfg.attractor.generations = *o.generations;
    if (o.dedup) cfg.attractor.dedup_tolerance = *o.dedup;
    if (o.chaos_points) cfg.attractor.chaos_points = *o.chaos_points;
    if (o.seed) cfg.attractor.seed = *o.seed;
    if (o.mode) cfg.mode = gdfif::condition3_mode_from_string(*o.mode);
    if (o.out_dir) {
        cfg.outputs.dir = *o.out_dir;
    } else if (const char* env = std::getenv("GDFIF_OUTPUT_DIR"); env && *env) {
        cfg.outputs.dir = env;
    }
    return cfg;
}

int emit(const gdfif::CommandResult& result) {
    std::cout << result.report.dump(2) << "\n";
    return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Graph-directed fractal interpolation"};
    app.require_subcommand(1);

    std::string config;
    Overrides overrides;

    auto* validate = app.add_subcommand("validate", "check data sets and wiring; JSON report on stdout");
    validate->add_option("config", config, "config file")->required();
    add_overrides(validate, overrides);

    auto* run = app.add_subcommand("run", "solve, iterate the attractor and write all outputs");
    run->add_option("config", config, "config file")->required();
    add_overrides(run, overrides);

    auto* render = app.add_subcommand("render", "solve and write only the SVG/PGM plots");
    render->add_option("config", config, "config file")->required();
    add_overrides(render, overrides);

    std::size_t vertex = 1;
    double x = 0.0;
    std::size_t depth = 30;
    auto* eval = app.add_subcommand("eval", "evaluate one interpolant by recursive pull-back");
    eval->add_option("config", config, "config file")->required();
    eval->add_option("--vertex", vertex, "one-based vertex")->required();
    eval->add_option("--x", x, "abscissa")->required();
    eval->add_option("--depth", depth, "recursion depth")->check(CLI::PositiveNumber);
    add_overrides(eval, overrides);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : gdfif::exit_code::structural;
    }

    try {
        const gdfif::ProjectConfig cfg = load(config, overrides);
        if (*validate) return emit(gdfif::cmd_validate(cfg));
        if (*run) return emit(gdfif::cmd_run(cfg, gdfif::RunOutputs::all));
        if (*render) return emit(gdfif::cmd_run(cfg, gdfif::RunOutputs::render_only));
        if (*eval) return emit(gdfif::cmd_eval(cfg, vertex, x, depth));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return gdfif::exit_code::structural;
    }
    return gdfif::exit_code::structural;
}
