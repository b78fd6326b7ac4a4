#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "typoster/core_model.hpp"
#include "typoster/emotion.hpp"
#include "typoster/evolution.hpp"
#include "typoster/font_metrics.hpp"
#include "typoster/metrics.hpp"
#include "typoster/textsplit.hpp"

namespace typoster {

// Bundled data directory: $TYPOSTER_DATA_DIR if set, else the compiled-in path.
std::filesystem::path default_data_dir();

struct EmotionConfig {
  std::string language = "en";
  std::filesystem::path resources_dir;  // contractions.json, stopwords.<lang>.txt, ...
  std::filesystem::path lexicon;        // word<TAB>emotion<TAB>flag
};

struct ColorConfig {
  Rgb foreground{0, 0, 0};
  Rgb background{255, 255, 255};
  double min_contrast = 2.5;
};

struct AppConfig {
  std::vector<FontSource> fonts;
  ColorConfig colors;
  EvolutionConfig evolution;
  PosterTemplate poster;
  LayoutParams layout;
  MetricParams metrics;
  ObjectiveWeights weights;
  EmotionConfig emotion;
  LineRange split;

  // Bundled fonts and resources with the published parameter table.
  static AppConfig defaults();

  // Throws ConfigError (contrast, weights, ranges).
  void validate() const;
  ColorScheme color_scheme() const;
};

// Layers a JSON document over defaults(). Relative paths resolve against
// `base_dir`. Unknown sections or keys are ConfigError.
AppConfig parse_config(std::string_view json_text, const std::filesystem::path& base_dir);
AppConfig load_config(const std::filesystem::path& path);

// Command-line values; each set field beats the config file.
struct ConfigOverrides {
  std::optional<std::uint64_t> seed;
  std::optional<Stage> stage;
  std::optional<int> generations;
  std::optional<int> population;
  std::optional<int> threads;
  std::optional<std::string> language;
};

void apply_overrides(AppConfig& config, const ConfigOverrides& overrides);

nlohmann::ordered_json to_json(const AppConfig& config);

}  // namespace typoster
