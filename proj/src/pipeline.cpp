#include "gdfif/pipeline.hpp"

#include <algorithm>
#include <cmath>

namespace gdfif {

std::vector<Point> graph_points(const SampledFunction& fn, double spacing) {
    std::vector<Point> out;
    for (std::size_t k = 0; k + 1 < fn.size(); ++k) {
        const double x0 = fn.grid()[k], x1 = fn.grid()[k + 1];
        const double y0 = fn.values()[k], y1 = fn.values()[k + 1];
        const auto pieces = spacing > 0.0 ? std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil((x1 - x0) / spacing))) : 1;
        for (std::size_t s = 0; s < pieces; ++s) {
            const double t = static_cast<double>(s) / static_cast<double>(pieces);
            out.push_back({x0 + t * (x1 - x0), y0 + t * (y1 - y0)});
        }
    }
    out.push_back({fn.grid().back(), fn.values().back()});
    return out;
}

double default_dedup_tolerance(const ProjectConfig& cfg) {
    const auto n = static_cast<double>(std::max<std::size_t>(cfg.datasets.size(), 1));
    const double panel_px = std::max(1.0, static_cast<double>(cfg.plot.width) / n - 2.0 * cfg.plot.margin);
    double narrowest = cfg.datasets.front().span();
    for (const auto& d : cfg.datasets) narrowest = std::min(narrowest, d.span());
    return 0.5 * narrowest / panel_px;
}

nlohmann::ordered_json report_json(const ValidationReport& report) {
    nlohmann::ordered_json j;
    j["ok"] = report.ok;
    j["condition3_mode"] = to_string(report.mode);
    j["strongly_connected"] = report.strongly_connected;
    j["violations"] = nlohmann::ordered_json::array();
    for (const auto& v : report.violations) {
        j["violations"].push_back({{"code", v.code}, {"message", v.message}, {"indices", v.indices}});
    }
    return j;
}

CommandResult cmd_validate(const ProjectConfig& cfg) {
    CommandResult result;
    try {
        const ValidationReport report = validate(cfg.datasets, cfg.plan, cfg.mode);
        result.report = report_json(report);
        result.report["edge_counts"] = edge_counts(cfg.plan);
        result.exit_code = report.ok ? exit_code::ok : exit_code::validation;
    } catch (const StructuralError& e) {
        result.report = {{"ok", false}, {"error", e.what()}};
        result.exit_code = exit_code::structural;
    }
    return result;
}

namespace {

std::filesystem::path artifact(const ProjectConfig& cfg, const std::string& suffix) {
    return cfg.outputs.dir / (cfg.outputs.prefix + suffix);
}

}  // namespace

CommandResult cmd_run(const ProjectConfig& cfg, RunOutputs outputs) {
    CommandResult result = cmd_validate(cfg);
    if (result.exit_code != exit_code::ok) return result;

    const GifsSystem sys = build_system(cfg.datasets, cfg.plan, cfg.mode);
    const FixedPointResult fp = fixed_point(sys, cfg.solver.resolution, cfg.solver.tol, cfg.solver.max_iters);

    nlohmann::ordered_json summary;
    summary["r"] = sys.contraction_factor();
    summary["iterations"] = fp.iterations;
    summary["converged"] = fp.converged;
    summary["final_delta"] = fp.final_delta;
    summary["error_bound"] = fp.error_bound;
    if (!fp.converged) {
        summary["error"] = "fixed point did not reach tol " + std::to_string(cfg.solver.tol) + " within " +
                           std::to_string(cfg.solver.max_iters) + " iterations";
        summary["deltas"] = fp.deltas;
        result.report = std::move(summary);
        result.exit_code = exit_code::convergence;
        return result;
    }

    const double dedup = cfg.attractor.dedup_tolerance.value_or(default_dedup_tolerance(cfg));
    const CloudFamily clouds = iterate_attractor(sys, {cfg.attractor.generations, dedup, cfg.attractor.point_cap});
    CloudFamily chaos;
    if (cfg.attractor.chaos_points > 0) {
        chaos = chaos_game(sys, cfg.attractor.chaos_points, cfg.attractor.burn_in, cfg.attractor.seed);
    }

    summary["interpolation_residual"] = interpolation_residual(sys, fp.family);
    summary["posterior_bound"] = posterior_error_bound(sys, fp.family);
    summary["endpoint_residual"] = endpoint_residuals(sys);
    summary["dedup_tolerance"] = dedup;
    summary["edge_counts"] = edge_counts(sys.plan());
    summary["strongly_connected"] = result.report["strongly_connected"];
    summary["condition3_mode"] = to_string(cfg.mode);

    double worst = 0.0;
    nlohmann::ordered_json per_vertex = nlohmann::ordered_json::array();
    for (std::size_t alpha = 0; alpha < sys.vertex_count(); ++alpha) {
        const auto graph = graph_points(fp.family[alpha], dedup);
        const double h = hausdorff_distance(clouds[alpha].points, graph);
        worst = std::max(worst, h);
        nlohmann::ordered_json v;
        v["vertex"] = alpha + 1;
        v["knots"] = sys.datasets()[alpha].size();
        v["samples"] = fp.family[alpha].size();
        v["attractor_points"] = clouds[alpha].points.size();
        v["hausdorff"] = h;
        if (!chaos.empty() && !chaos[alpha].points.empty()) {
            v["chaos_points"] = chaos[alpha].points.size();
            v["chaos_to_attractor"] = directed_hausdorff(chaos[alpha].points, clouds[alpha].points);
        }
        per_vertex.push_back(std::move(v));
    }
    summary["hausdorff"] = worst;
    summary["per_vertex"] = std::move(per_vertex);

    auto emit = [&](const std::string& suffix, auto&& writer) {
        const auto path = artifact(cfg, suffix);
        writer(path);
        result.artifacts.push_back(path);
    };
    const bool all = outputs == RunOutputs::all;
    if (all && cfg.outputs.csv) {
        emit("_function.csv", [&](const auto& p) { export_csv(fp.family, p); });
        emit("_attractor.csv", [&](const auto& p) { export_csv(clouds, p); });
        if (!chaos.empty()) emit("_chaos.csv", [&](const auto& p) { export_csv(chaos, p); });
    }
    if (cfg.outputs.svg) {
        emit("_function.svg", [&](const auto& p) { render_svg(fp.family, sys.datasets(), cfg.plot, p); });
        emit("_attractor.svg", [&](const auto& p) { render_svg(clouds, sys.datasets(), cfg.plot, p); });
    }
    if (cfg.outputs.pgm) emit("_attractor.pgm", [&](const auto& p) { render_pgm(clouds, cfg.plot, p); });

    nlohmann::ordered_json names = nlohmann::ordered_json::array();
    for (const auto& p : result.artifacts) names.push_back(p.filename().string());
    if (all && cfg.outputs.summary) names.push_back(artifact(cfg, "_summary.json").filename().string());
    summary["artifacts"] = std::move(names);

    if (all && cfg.outputs.summary) {
        const auto path = artifact(cfg, "_summary.json");
        write_file(path, summary.dump(2) + "\n");
        result.artifacts.push_back(path);
    }
    result.report = std::move(summary);
    result.exit_code = exit_code::ok;
    return result;
}

CommandResult cmd_eval(const ProjectConfig& cfg, std::size_t vertex, double x, std::size_t depth) {
    CommandResult result = cmd_validate(cfg);
    if (result.exit_code != exit_code::ok) return result;
    const GifsSystem sys = build_system(cfg.datasets, cfg.plan, cfg.mode);
    if (vertex < 1 || vertex > sys.vertex_count()) throw std::out_of_range("vertex must lie in 1.." + std::to_string(sys.vertex_count()));
    nlohmann::ordered_json j;
    j["vertex"] = vertex;
    j["x"] = x;
    j["depth"] = depth;
    j["value"] = evaluate_exact(sys, vertex - 1, x, depth);
    j["error_bound"] = exact_error_bound(sys, depth);
    result.report = std::move(j);
    return result;
}

}  // namespace gdfif
