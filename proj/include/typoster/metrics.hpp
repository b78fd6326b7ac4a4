#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "typoster/core_model.hpp"
#include "typoster/emotion.hpp"
#include "typoster/font_metrics.hpp"

namespace typoster {

enum class MetricId {
  text_legibility,
  grid_appropriateness,
  alignment,
  regularity,
  balance,
  justification,
  typeface_pairing,
  negative_space,
  semantic_layout,
  semantic_typography,
};

inline constexpr std::size_t kMetricCount = 10;

// Fixed order used by reports, CSV columns and charts.
inline constexpr std::array<MetricId, kMetricCount> kAllMetrics{
    MetricId::text_legibility, MetricId::grid_appropriateness, MetricId::alignment,
    MetricId::regularity,      MetricId::balance,              MetricId::justification,
    MetricId::typeface_pairing, MetricId::negative_space,      MetricId::semantic_layout,
    MetricId::semantic_typography};

std::string_view to_string(MetricId id);
std::optional<MetricId> parse_metric(std::string_view name);

enum class LayoutMode { fixed, relative };
enum class Stage { S1, S2, S3 };

std::string_view to_string(LayoutMode m);
std::optional<LayoutMode> parse_layout_mode(std::string_view s);
std::string_view to_string(Stage s);
std::optional<Stage> parse_stage(std::string_view s);

struct MetricParams {
  double falloff = 10.0;                 // A in A / (A + d), alignment and regularity
  double justification_factor = 3.0;    // J
  double optimal_negative_space = 50.0;  // percent
  LayoutMode layout_mode = LayoutMode::fixed;
  double typography_threshold = 0.2;
  double alignment_width_weight = 0.8;
  double alignment_uniformity_weight = 0.2;

  // Throws ConfigError.
  void validate() const;
};

struct AestheticWeights {
  double alignment = 0.10;
  double regularity = 0.10;
  double balance = 0.20;
  double negative_space = 0.20;
  double justification = 0.30;
  double typeface_pairing = 0.10;
};

struct SemanticWeights {
  double layout = 0.50;
  double typography = 0.50;
};

struct ObjectiveWeights {
  AestheticWeights aesthetic;
  SemanticWeights semantic;

  // Throws ConfigError unless each group sums to 1.
  void validate() const;
};

// (semantic, aesthetic) share of the scalar objective.
std::pair<double, double> stage_weights(Stage stage);

using MetricScores = std::array<double, kMetricCount>;

struct EvalReport {
  MetricScores scores{};
  double aesthetic_objective = 0.0;
  double semantic_objective = 0.0;
  double objective = 0.0;
  double penalty = 0.0;

  double score(MetricId id) const { return scores[static_cast<std::size_t>(id)]; }
  bool feasible() const { return penalty == 0.0; }
};

nlohmann::ordered_json to_json(const EvalReport& report);

struct BoxMass {
  double area = 0.0;
  double optical_density = 0.0;
  double visual_weight = 0.0;
  double centre_x = 0.0;
  double centre_y = 0.0;
};

// Legibility.
double text_legibility(const LayoutSolution& layout);
double grid_appropriateness(const LayoutSolution& layout, const PosterGenotype& g);

// Aesthetics.
double alignment(const LayoutSolution& layout, const PosterGenotype& g, const MetricParams& params);
double regularity(const LayoutSolution& layout, const MetricParams& params);
double balance(const LayoutSolution& layout, const PosterGenotype& g);
double justification(const LayoutSolution& layout, const MetricParams& params);
double typeface_pairing(const PosterGenotype& g, const FontCatalog& fonts);
double negative_space_fraction(const LayoutSolution& layout, const PosterGenotype& g, const MetricParams& params);

// Semantics. Both throw ProfileMismatch when the profile's line count differs from the box count.
double semantic_layout(const LayoutSolution& layout, const EmotionProfile& profile, const MetricParams& params);
double semantic_typography(const PosterGenotype& g, const FontCatalog& fonts, const EmotionProfile& profile,
                           const MetricParams& params);

// Optical density of a box's mean pixel: log10 of its relative luminance, floored at 1.
double optical_density(const Rgb& mean_pixel);
std::vector<BoxMass> box_masses(const LayoutSolution& layout, const PosterGenotype& g);
// Expected balance centre of the whole poster.
std::pair<double, double> expected_balance_centre(const PosterGenotype& g);
// 1 - sqrt((((wx - cx) / width)^2 + ((wy - cy) / height)^2) / 2), clamped to [0, 1].
double balance_score(double wx, double wy, double cx, double cy, double width, double height);

struct TypographyBreakdown {
  double weight_score = 1.0;
  double stretch_score = 1.0;
  double type_design_score = 1.0;
  std::array<double, 3> emphasis{};  // weight, stretch, type design
  int features_over_threshold = 0;
  double overall = 1.0;
};

TypographyBreakdown semantic_typography_breakdown(const PosterGenotype& g, const FontCatalog& fonts,
                                                  const EmotionProfile& profile, const MetricParams& params);

// Weighted objectives and constraint penalty from already computed metric scores.
EvalReport aggregate(const MetricScores& scores, const ObjectiveWeights& weights, Stage stage);

EvalReport evaluate(const PosterGenotype& g, const LayoutSolution& layout, const EmotionProfile& profile,
                    const FontCatalog& fonts, const ObjectiveWeights& weights, const MetricParams& params,
                    Stage stage);

}  // namespace typoster
