#include "typoster/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "typoster/errors.hpp"
#include "typoster/text_util.hpp"

namespace typoster {

namespace {

constexpr std::array<std::string_view, kMetricCount> kMetricNames{
    "text_legibility", "grid_appropriateness", "alignment",        "regularity",      "balance",
    "justification",   "typeface_pairing",     "negative_space",   "semantic_layout", "semantic_typography"};

constexpr double kFitTolerance = 1e-9;

double clamp01(double v) {
  if (std::isnan(v)) {
    return 0.0;
  }
  return std::clamp(v, 0.0, 1.0);
}

double mean(const std::vector<double>& v) {
  if (v.empty()) {
    return 1.0;
  }
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

void require_profile(const EmotionProfile& profile, std::size_t boxes) {
  if (profile.lines.size() != boxes) {
    throw ProfileMismatch("emotion profile has " + std::to_string(profile.lines.size()) + " lines but poster has " +
                          std::to_string(boxes) + " text boxes");
  }
}

}  // namespace

std::string_view to_string(MetricId id) { return kMetricNames[static_cast<std::size_t>(id)]; }

std::optional<MetricId> parse_metric(std::string_view name) {
  for (std::size_t i = 0; i < kMetricNames.size(); ++i) {
    if (kMetricNames[i] == name) {
      return static_cast<MetricId>(i);
    }
  }
  return std::nullopt;
}

std::string_view to_string(LayoutMode m) { return m == LayoutMode::fixed ? "fixed" : "relative"; }

std::optional<LayoutMode> parse_layout_mode(std::string_view s) {
  if (s == "fixed" || s == "Fixed") return LayoutMode::fixed;
  if (s == "relative" || s == "Relative") return LayoutMode::relative;
  return std::nullopt;
}

std::string_view to_string(Stage s) {
  switch (s) {
    case Stage::S1:
      return "S1";
    case Stage::S2:
      return "S2";
    case Stage::S3:
      return "S3";
  }
  return "S3";
}

std::optional<Stage> parse_stage(std::string_view s) {
  if (s == "S1" || s == "s1") return Stage::S1;
  if (s == "S2" || s == "s2") return Stage::S2;
  if (s == "S3" || s == "s3") return Stage::S3;
  return std::nullopt;
}

void MetricParams::validate() const {
  if (!(falloff > 0.0)) {
    throw ConfigError("alignment/regularity constant must be positive");
  }
  if (!(justification_factor >= 1.0)) {
    throw ConfigError("justification factor must be >= 1");
  }
  if (!(optimal_negative_space > 0.0 && optimal_negative_space < 100.0)) {
    throw ConfigError("optimal negative space must lie in (0, 100)");
  }
  if (!(typography_threshold > 0.0 && typography_threshold < 1.0)) {
    throw ConfigError("typography threshold must lie in (0, 1)");
  }
  if (std::abs(alignment_width_weight + alignment_uniformity_weight - 1.0) > 1e-9) {
    throw ConfigError("alignment weights must sum to 1");
  }
}

void ObjectiveWeights::validate() const {
  const auto& a = aesthetic;
  const double aesthetic_sum =
      a.alignment + a.regularity + a.balance + a.negative_space + a.justification + a.typeface_pairing;
  if (std::abs(aesthetic_sum - 1.0) > 1e-9) {
    throw ConfigError("aesthetic weights sum to " + format_number(aesthetic_sum, 6) + ", expected 1");
  }
  if (std::abs(semantic.layout + semantic.typography - 1.0) > 1e-9) {
    throw ConfigError("semantic weights must sum to 1");
  }
}

std::pair<double, double> stage_weights(Stage stage) {
  switch (stage) {
    case Stage::S1:
      return {1.0, 0.0};
    case Stage::S2:
      return {0.0, 1.0};
    case Stage::S3:
      return {0.5, 0.5};
  }
  return {0.5, 0.5};
}

nlohmann::ordered_json to_json(const EvalReport& report) {
  nlohmann::ordered_json doc;
  for (auto id : kAllMetrics) {
    doc[std::string(to_string(id))] = report.score(id);
  }
  doc["aesthetic_objective"] = report.aesthetic_objective;
  doc["semantic_objective"] = report.semantic_objective;
  doc["objective"] = report.objective;
  doc["penalty"] = report.penalty;
  return doc;
}

double text_legibility(const LayoutSolution& layout) {
  std::vector<double> scores;
  scores.reserve(layout.boxes.size());
  for (const auto& box : layout.boxes) {
    if (box.text_width <= layout.available_width) {
      scores.push_back(1.0);
    } else {
      scores.push_back(std::max(0.0, 1.0 - (box.text_width - layout.available_width) / layout.available_width));
    }
  }
  return clamp01(mean(scores));
}

double grid_appropriateness(const LayoutSolution& layout, const PosterGenotype& g) {
  const double vertical = margin_px(g, g.margins.top) + margin_px(g, g.margins.bottom);
  const double horizontal = margin_px(g, g.margins.left) + margin_px(g, g.margins.right);
  const bool fits_height = layout.grid_height + vertical <= g.size.height + kFitTolerance;
  const bool fits_width = layout.available_width + horizontal <= g.size.width + kFitTolerance;
  return fits_height && fits_width ? 1.0 : 0.0;
}

double alignment(const LayoutSolution& layout, const PosterGenotype& g, const MetricParams& params) {
  double d = 0.0;
  if (layout.boxes.size() > 1) {
    for (std::size_t i = 0; i + 1 < layout.boxes.size(); ++i) {
      d += std::abs(layout.boxes[i].text_width - layout.boxes[i + 1].text_width);
    }
    d /= static_cast<double>(layout.boxes.size() - 1);
  }
  const double width_score = params.falloff / (params.falloff + d);
  std::set<Alignment> alignments;
  for (const auto& box : g.textboxes) {
    alignments.insert(box.alignment);
  }
  const double uniformity = alignments.empty() ? 1.0 : 1.0 / static_cast<double>(alignments.size());
  return clamp01(params.alignment_width_weight * width_score + params.alignment_uniformity_weight * uniformity);
}

double regularity(const LayoutSolution& layout, const MetricParams& params) {
  const auto& boxes = layout.boxes;
  if (boxes.size() <= 2) {
    return 1.0;
  }
  double d = 0.0;
  for (std::size_t i = 0; i + 2 < boxes.size(); ++i) {
    const double pitch = boxes[i + 1].y - boxes[i].y;
    const double next = boxes[i + 2].y - boxes[i + 1].y;
    d += std::abs(pitch - next);
  }
  d /= static_cast<double>(boxes.size() - 2);
  return clamp01(params.falloff / (params.falloff + d));
}

double optical_density(const Rgb& p) {
  const double luminance = 0.2126 * p.r + 0.7152 * p.g + 0.0722 * p.b;
  return std::log10(std::max(1.0, luminance));
}

namespace {

double anchor_x(Alignment a, double left, double width) {
  switch (a) {
    case Alignment::left:
      return left;
    case Alignment::center:
      return left + width / 2.0;
    case Alignment::right:
      return left + width;
  }
  return left;
}

double anchor_y(VerticalAlignment v, double top, double height) {
  switch (v) {
    case VerticalAlignment::top:
      return top;
    case VerticalAlignment::middle:
      return top + height / 2.0 - height / 12.0;
    case VerticalAlignment::bottom:
      return top + height;
  }
  return top;
}

}  // namespace

std::vector<BoxMass> box_masses(const LayoutSolution& layout, const PosterGenotype& g) {
  std::vector<BoxMass> masses;
  masses.reserve(layout.boxes.size());
  for (std::size_t i = 0; i < layout.boxes.size(); ++i) {
    const auto& box = layout.boxes[i];
    const double cov = box.ink_coverage;
    const Rgb mean_pixel{cov * box.foreground.r + (1.0 - cov) * box.background.r,
                         cov * box.foreground.g + (1.0 - cov) * box.background.g,
                         cov * box.foreground.b + (1.0 - cov) * box.background.b};
    BoxMass m;
    m.area = std::max(0.0, box.area());
    m.optical_density = optical_density(mean_pixel);
    m.visual_weight = m.area * m.optical_density;
    const auto align = i < g.textboxes.size() ? g.textboxes[i].alignment : Alignment::left;
    m.centre_x = anchor_x(align, box.x, box.cell_width);
    m.centre_y = anchor_y(g.vertical_alignment, box.y, box.cell_height);
    masses.push_back(m);
  }
  return masses;
}

std::pair<double, double> expected_balance_centre(const PosterGenotype& g) {
  const auto first = g.textboxes.empty() ? Alignment::left : g.textboxes.front().alignment;
  return {anchor_x(first, 0.0, g.size.width), anchor_y(g.vertical_alignment, 0.0, g.size.height)};
}

double balance_score(double wx, double wy, double cx, double cy, double width, double height) {
  const double dx = (wx - cx) / width;
  const double dy = (wy - cy) / height;
  return clamp01(1.0 - std::sqrt((dx * dx + dy * dy) / 2.0));
}

double balance(const LayoutSolution& layout, const PosterGenotype& g) {
  const auto masses = box_masses(layout, g);
  if (masses.empty()) {
    return 1.0;
  }
  double total = 0.0;
  double wx = 0.0;
  double wy = 0.0;
  for (const auto& m : masses) {
    total += m.visual_weight;
    wx += m.centre_x * m.visual_weight;
    wy += m.centre_y * m.visual_weight;
  }
  if (total > 0.0) {
    wx /= total;
    wy /= total;
  } else {
    // Massless design: fall back to the unweighted centroid of the anchors.
    wx = 0.0;
    wy = 0.0;
    for (const auto& m : masses) {
      wx += m.centre_x;
      wy += m.centre_y;
    }
    wx /= static_cast<double>(masses.size());
    wy /= static_cast<double>(masses.size());
  }
  const auto [cx, cy] = expected_balance_centre(g);
  return balance_score(wx, wy, cx, cy, g.size.width, g.size.height);
}

double justification(const LayoutSolution& layout, const MetricParams& params) {
  std::vector<double> scores;
  scores.reserve(layout.boxes.size());
  for (const auto& box : layout.boxes) {
    double diff = std::abs(box.text_width - layout.available_width);
    if (box.text_width <= layout.available_width) {
      diff /= params.justification_factor;
    }
    scores.push_back(std::max(0.0, 1.0 - diff / layout.available_width));
  }
  return clamp01(mean(scores));
}

double typeface_pairing(const PosterGenotype& g, const FontCatalog& fonts) {
  std::set<std::string> typefaces;
  std::set<FontCategory> categories;
  for (const auto& box : g.textboxes) {
    typefaces.insert(box.typeface);
    categories.insert(fonts.face(box.typeface).category);
  }
  const auto used = static_cast<double>(typefaces.size());
  if (used <= 1.0) {
    return 1.0;
  }
  return clamp01((used - static_cast<double>(categories.size())) / (used - 1.0));
}

double negative_space_fraction(const LayoutSolution& layout, const PosterGenotype& g, const MetricParams& params) {
  double ink = 0.0;
  for (const auto& box : layout.boxes) {
    ink += box.ink_coverage * std::max(0.0, box.area());
  }
  const double background = 100.0 * (1.0 - ink / (g.size.width * g.size.height));
  const double optimal = params.optimal_negative_space;
  return clamp01(1.0 - std::abs(background - optimal) / optimal);
}

double semantic_layout(const LayoutSolution& layout, const EmotionProfile& profile, const MetricParams& params) {
  require_profile(profile, layout.boxes.size());
  if (layout.boxes.empty()) {
    return 1.0;
  }
  std::vector<double> optimal = profile.optimal_heights.size() == layout.boxes.size()
                                    ? profile.optimal_heights
                                    : optimal_layout(profile);
  double reference = layout.available_height;
  if (params.layout_mode == LayoutMode::relative) {
    reference = layout.grid_height;
    const double total = std::accumulate(optimal.begin(), optimal.end(), 0.0);
    if (total > 0.0) {
      for (auto& h : optimal) {
        h = 100.0 * h / total;
      }
    }
  }
  if (!(reference > 0.0)) {
    return 0.0;
  }
  std::vector<double> scores;
  scores.reserve(layout.boxes.size());
  for (std::size_t i = 0; i < layout.boxes.size(); ++i) {
    const double actual = 100.0 * layout.boxes[i].cell_height / reference;
    scores.push_back(clamp01(1.0 - std::abs(actual - optimal[i]) / 100.0));
  }
  return clamp01(mean(scores));
}

TypographyBreakdown semantic_typography_breakdown(const PosterGenotype& g, const FontCatalog& fonts,
                                                  const EmotionProfile& profile, const MetricParams& params) {
  require_profile(profile, g.textboxes.size());
  TypographyBreakdown out;
  const auto& boxes = g.textboxes;
  if (boxes.empty()) {
    return out;
  }
  const auto charges = profile.charges();
  const auto [min_it, max_it] = std::minmax_element(charges.begin(), charges.end());
  const int charge_min = *min_it;
  const int charge_max = *max_it;
  const auto ref = static_cast<std::size_t>(std::distance(charges.begin(), min_it));
  const auto& ref_face = fonts.face(boxes[ref].typeface);

  auto feature = [&](auto value_of, const AxisRange& axis, double& emphasis) {
    double lo = value_of(boxes[0]);
    double hi = lo;
    for (const auto& b : boxes) {
      lo = std::min(lo, value_of(b));
      hi = std::max(hi, value_of(b));
    }
    const double span = hi - lo;
    const double range = axis.span();
    const double ref_value = value_of(boxes[ref]);
    double score_sum = 0.0;
    double emphasis_sum = 0.0;
    for (std::size_t i = 0; i < boxes.size(); ++i) {
      const double expected =
          charge_max == charge_min
              ? 0.0
              : span * static_cast<double>(charges[i] - charge_min) / static_cast<double>(charge_max - charge_min);
      const double current = std::abs(value_of(boxes[i]) - ref_value);
      score_sum += range > 0.0 ? clamp01(1.0 - std::abs(current - expected) / range) : 1.0;
      emphasis_sum += range > 0.0 ? current / range : 0.0;
    }
    const auto n = static_cast<double>(boxes.size());
    emphasis = emphasis_sum / n;
    return score_sum / n;
  };
  out.weight_score = feature([](const TextBoxGene& b) { return b.weight; }, ref_face.weight, out.emphasis[0]);
  out.stretch_score = feature([](const TextBoxGene& b) { return b.stretch; }, ref_face.stretch, out.emphasis[1]);

  // Each charge level is bound to the first typeface used at that level; a
  // typeface already bound to another level leaves this level undefined.
  std::map<int, std::optional<std::string>> expected;
  std::map<std::string, int> owner;
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    const int level = charges[i];
    if (expected.contains(level)) {
      continue;
    }
    const auto& face = boxes[i].typeface;
    if (const auto it = owner.find(face); it != owner.end() && it->second != level) {
      expected[level] = std::nullopt;
    } else {
      expected[level] = face;
      owner[face] = level;
    }
  }
  std::size_t deviant = 0;
  std::size_t differs_from_ref = 0;
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    const auto& want = expected[charges[i]];
    if (want && *want != boxes[i].typeface) {
      ++deviant;
    }
    if (boxes[i].typeface != boxes[ref].typeface) {
      ++differs_from_ref;
    }
  }
  const auto n = static_cast<double>(boxes.size());
  out.type_design_score = 1.0 - static_cast<double>(deviant) / n;
  out.emphasis[2] = static_cast<double>(differs_from_ref) / n;

  out.overall = std::max({out.weight_score, out.stretch_score, out.type_design_score});
  out.features_over_threshold = static_cast<int>(
      std::count_if(out.emphasis.begin(), out.emphasis.end(), [&](double e) { return e > params.typography_threshold; }));
  if (out.features_over_threshold >= 2) {
    out.overall /= out.features_over_threshold;
  }
  out.overall = clamp01(out.overall);
  return out;
}

double semantic_typography(const PosterGenotype& g, const FontCatalog& fonts, const EmotionProfile& profile,
                           const MetricParams& params) {
  return semantic_typography_breakdown(g, fonts, profile, params).overall;
}

EvalReport aggregate(const MetricScores& scores, const ObjectiveWeights& weights, Stage stage) {
  EvalReport report;
  report.scores = scores;
  auto s = [&](MetricId id) { return scores[static_cast<std::size_t>(id)]; };
  const auto& a = weights.aesthetic;
  report.aesthetic_objective = a.alignment * s(MetricId::alignment) + a.regularity * s(MetricId::regularity) +
                               a.balance * s(MetricId::balance) + a.negative_space * s(MetricId::negative_space) +
                               a.justification * s(MetricId::justification) +
                               a.typeface_pairing * s(MetricId::typeface_pairing);
  report.semantic_objective = weights.semantic.layout * s(MetricId::semantic_layout) +
                              weights.semantic.typography * s(MetricId::semantic_typography);
  const auto [w_semantic, w_aesthetic] = stage_weights(stage);
  report.objective = w_semantic * report.semantic_objective + w_aesthetic * report.aesthetic_objective;
  report.penalty = 1.0 - (s(MetricId::text_legibility) + s(MetricId::grid_appropriateness)) / 2.0;
  return report;
}

EvalReport evaluate(const PosterGenotype& g, const LayoutSolution& layout, const EmotionProfile& profile,
                    const FontCatalog& fonts, const ObjectiveWeights& weights, const MetricParams& params,
                    Stage stage) {
  MetricScores scores{};
  auto set = [&](MetricId id, double v) { scores[static_cast<std::size_t>(id)] = v; };
  set(MetricId::text_legibility, text_legibility(layout));
  set(MetricId::grid_appropriateness, grid_appropriateness(layout, g));
  set(MetricId::alignment, alignment(layout, g, params));
  set(MetricId::regularity, regularity(layout, params));
  set(MetricId::balance, balance(layout, g));
  set(MetricId::justification, justification(layout, params));
  set(MetricId::typeface_pairing, typeface_pairing(g, fonts));
  set(MetricId::negative_space, negative_space_fraction(layout, g, params));
  set(MetricId::semantic_layout, semantic_layout(layout, profile, params));
  set(MetricId::semantic_typography, semantic_typography(g, fonts, profile, params));
  return aggregate(scores, weights, stage);
}

}  // namespace typoster
