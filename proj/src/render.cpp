#include "typoster/render.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "typoster/errors.hpp"
#include "typoster/text_util.hpp"

namespace typoster {

namespace {

std::string rgb(const Rgb& c) {
  auto channel = [](double v) { return std::to_string(static_cast<int>(std::lround(std::clamp(v, 0.0, 255.0)))); };
  return "rgb(" + channel(c.r) + "," + channel(c.g) + "," + channel(c.b) + ")";
}

std::string num(double v) { return format_number(v, 3); }

// Qualitative palette for chart series.
constexpr std::array<std::string_view, 12> kPalette{"#1f3a93", "#2e8b57", "#8e44ad", "#d35db3", "#17a2b8", "#e67e22",
                                                    "#c0392b", "#7f8c8d", "#b8860b", "#16a085", "#34495e", "#e84393"};

struct Series {
  std::string name;
  std::vector<double> best;
  std::vector<double> mean;
  bool penalty = false;
};

}  // namespace

std::string xml_escape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      case '\'':
        out += "&apos;";
        break;
      default:
        out.push_back(c);
    }
  }
  return out;
}

std::string render_poster_svg(const PosterGenotype& g, const LayoutSolution& layout, const ColorScheme& colors) {
  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(g.size.width) + "\" height=\"" +
         num(g.size.height) + "\" viewBox=\"0 0 " + num(g.size.width) + " " + num(g.size.height) + "\">\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"" + num(g.size.width) + "\" height=\"" + num(g.size.height) + "\" fill=\"" +
         rgb(colors.background) + "\"/>\n";
  for (std::size_t i = 0; i < layout.boxes.size() && i < g.textboxes.size(); ++i) {
    const auto& box = layout.boxes[i];
    const auto& gene = g.textboxes[i];
    double x = box.x;
    std::string_view anchor = "start";
    if (gene.alignment == Alignment::center) {
      x = box.x + box.cell_width / 2.0;
      anchor = "middle";
    } else if (gene.alignment == Alignment::right) {
      x = box.x + box.cell_width;
      anchor = "end";
    }
    const double y = box.y + box.cell_height / 2.0;
    svg += "<text x=\"" + num(x) + "\" y=\"" + num(y) + "\" font-family=\"" + xml_escape(gene.typeface) +
           "\" font-size=\"" + num(gene.size) + "\" font-weight=\"" + num(gene.weight) + "\" font-stretch=\"" +
           num(gene.stretch) + "%\" text-anchor=\"" + std::string(anchor) +
           "\" dominant-baseline=\"central\" fill=\"" + rgb(colors.foreground) + "\">" + xml_escape(gene.content) +
           "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

std::vector<std::string> plottable_series() {
  std::vector<std::string> names{"objective", "penalty"};
  for (auto id : kAllMetrics) {
    names.emplace_back(to_string(id));
  }
  return names;
}

std::string plot_run_stats(const RunStats& stats, const std::vector<std::string>& selection, std::string_view title) {
  if (stats.rows.size() < 2) {
    throw EmptyStats("a chart needs at least two generations of statistics");
  }
  std::vector<Series> series;
  for (const auto& name : selection) {
    Series s;
    s.name = name;
    if (name == "objective") {
      for (const auto& r : stats.rows) {
        s.best.push_back(r.best_objective);
        s.mean.push_back(r.mean_objective);
      }
    } else if (name == "penalty") {
      s.penalty = true;
      for (const auto& r : stats.rows) {
        s.best.push_back(r.best_penalty);
        s.mean.push_back(r.mean_penalty);
      }
    } else if (const auto id = parse_metric(name)) {
      const auto m = static_cast<std::size_t>(*id);
      for (const auto& r : stats.rows) {
        s.best.push_back(r.best_metrics[m]);
        s.mean.push_back(r.mean_metrics[m]);
      }
    } else {
      std::string valid;
      for (const auto& v : plottable_series()) {
        valid += (valid.empty() ? "" : ", ") + v;
      }
      throw UnknownMetric("unknown series '" + name + "'; valid names: " + valid);
    }
    series.push_back(std::move(s));
  }

  constexpr double kWidth = 640.0;
  constexpr double kHeight = 400.0;
  constexpr double kLeft = 50.0;
  constexpr double kRight = 170.0;
  constexpr double kTop = 30.0;
  constexpr double kBottom = 40.0;
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  const double first_gen = stats.rows.front().generation;
  const double last_gen = std::max(first_gen + 1.0, static_cast<double>(stats.rows.back().generation));
  auto px = [&](double gen) { return kLeft + (gen - first_gen) / (last_gen - first_gen) * plot_w; };
  auto py = [&](double v) { return kTop + (1.0 - std::clamp(v, 0.0, 1.0)) * plot_h; };

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(kWidth) + "\" height=\"" +
         num(kHeight) + "\" viewBox=\"0 0 " + num(kWidth) + " " + num(kHeight) + "\" font-family=\"sans-serif\">\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"" + num(kWidth) + "\" height=\"" + num(kHeight) + "\" fill=\"#ffffff\"/>\n";
  if (!title.empty()) {
    svg += "<text x=\"" + num(kLeft) + "\" y=\"18\" font-size=\"13\">" + xml_escape(title) + "</text>\n";
  }
  // Axes and gridlines.
  svg += "<g stroke=\"#cccccc\" stroke-width=\"0.5\">\n";
  for (int t = 0; t <= 4; ++t) {
    const double y = py(t / 4.0);
    svg += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(y) + "\" x2=\"" + num(kLeft + plot_w) + "\" y2=\"" + num(y) +
           "\"/>\n";
  }
  svg += "</g>\n";
  svg += "<g font-size=\"10\" fill=\"#333333\">\n";
  for (int t = 0; t <= 4; ++t) {
    svg += "<text x=\"" + num(kLeft - 6) + "\" y=\"" + num(py(t / 4.0) + 3) + "\" text-anchor=\"end\">" +
           format_number(t / 4.0, 2) + "</text>\n";
  }
  for (int t = 0; t <= 4; ++t) {
    const double gen = first_gen + (last_gen - first_gen) * t / 4.0;
    svg += "<text x=\"" + num(px(gen)) + "\" y=\"" + num(kTop + plot_h + 14) + "\" text-anchor=\"middle\">" +
           format_number(gen, 0) + "</text>\n";
  }
  svg += "<text x=\"" + num(kLeft + plot_w / 2) + "\" y=\"" + num(kHeight - 6) +
         "\" text-anchor=\"middle\">generation</text>\n";
  svg += "</g>\n";
  svg += "<rect x=\"" + num(kLeft) + "\" y=\"" + num(kTop) + "\" width=\"" + num(plot_w) + "\" height=\"" +
         num(plot_h) + "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"1\"/>\n";

  auto points = [&](const std::vector<double>& values) {
    std::string p;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i > 0) {
        p.push_back(' ');
      }
      p += num(px(stats.rows[i].generation)) + "," + num(py(values[i]));
    }
    return p;
  };

  std::size_t colour = 0;
  for (std::size_t i = 0; i < series.size(); ++i) {
    const auto& s = series[i];
    const std::string stroke = s.penalty ? "#000000" : std::string(kPalette[colour++ % kPalette.size()]);
    const std::string dash = s.penalty ? " stroke-dasharray=\"5,3\"" : "";
    svg += "<g class=\"series\" data-name=\"" + xml_escape(s.name) + "\">\n";
    svg += "<polyline class=\"mean\" fill=\"none\" stroke=\"" + stroke + "\" stroke-opacity=\"0.35\" stroke-width=\"1\"" +
           dash + " points=\"" + points(s.mean) + "\"/>\n";
    svg += "<polyline class=\"best\" fill=\"none\" stroke=\"" + stroke + "\" stroke-width=\"1.8\"" + dash +
           " points=\"" + points(s.best) + "\"/>\n";
    svg += "</g>\n";
    // Legend entry.
    const double ly = kTop + 10.0 + 16.0 * static_cast<double>(i);
    const double lx = kLeft + plot_w + 12.0;
    svg += "<g class=\"legend\"><line x1=\"" + num(lx) + "\" y1=\"" + num(ly) + "\" x2=\"" + num(lx + 18) + "\" y2=\"" +
           num(ly) + "\" stroke=\"" + stroke + "\" stroke-width=\"1.8\"" + dash + "/><text x=\"" + num(lx + 24) +
           "\" y=\"" + num(ly + 3.5) + "\" font-size=\"10\">" + xml_escape(s.name) + "</text></g>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace typoster
