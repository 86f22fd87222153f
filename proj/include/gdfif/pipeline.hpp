#pragma once

#include "gdfif/attractor.hpp"
#include "gdfif/config.hpp"
#include "gdfif/funcspace.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace gdfif {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int validation = 1;
inline constexpr int structural = 2;
inline constexpr int convergence = 3;
}  // namespace exit_code

struct CommandResult {
    int exit_code = exit_code::ok;
    nlohmann::ordered_json report;
    std::vector<std::filesystem::path> artifacts;
};

/// Points on the piecewise-linear graph of `fn`, spaced at most `spacing`
/// apart in x (all samples included).
std::vector<Point> graph_points(const SampledFunction& fn, double spacing);

/// Half the data-unit width of one pixel in the narrowest panel.
double default_dedup_tolerance(const ProjectConfig& cfg);

nlohmann::ordered_json report_json(const ValidationReport& report);

/// Exit 0 when valid, 1 on violations, 2 on structural errors.
CommandResult cmd_validate(const ProjectConfig& cfg);

enum class RunOutputs { all, render_only };

/// validate -> build -> fixed point -> attractor (-> chaos game) -> outputs.
/// The report is the JSON summary. Exit 3 if the fixed point does not
/// converge; nothing is written in that case.
CommandResult cmd_run(const ProjectConfig& cfg, RunOutputs outputs = RunOutputs::all);

/// Exact evaluation of one interpolant; `vertex` is one-based.
CommandResult cmd_eval(const ProjectConfig& cfg, std::size_t vertex, double x, std::size_t depth);

}  // namespace gdfif
