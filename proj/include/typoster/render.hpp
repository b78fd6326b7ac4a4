#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "typoster/core_model.hpp"
#include "typoster/evolution.hpp"

namespace typoster {

// SVG 1.1 document sized to the poster, one <text> per box.
std::string render_poster_svg(const PosterGenotype& g, const LayoutSolution& layout, const ColorScheme& colors);

// Series names accepted by plot_run_stats: the ten metric names plus
// "objective" and "penalty".
std::vector<std::string> plottable_series();

// Line chart over generations with a solid line for the best individual and
// a lighter one for the population mean of each selected series. Throws
// EmptyStats (fewer than two rows) or UnknownMetric.
std::string plot_run_stats(const RunStats& stats, const std::vector<std::string>& selection,
                           std::string_view title = {});

// Escapes &, <, >, " and ' for XML text and attribute values.
std::string xml_escape(std::string_view text);

}  // namespace typoster
