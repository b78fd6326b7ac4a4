#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "typoster/font_metrics.hpp"

namespace typoster {

enum class VerticalAlignment { top, middle, bottom };
enum class Alignment { left, center, right };

std::string_view to_string(VerticalAlignment v);
std::string_view to_string(Alignment a);
std::optional<VerticalAlignment> parse_vertical_alignment(std::string_view s);
std::optional<Alignment> parse_alignment(std::string_view s);

struct PosterSize {
  double width = 141.0;
  double height = 100.0;
};

// Percentages. Like CSS box margins, all four resolve against the poster width.
struct Margins {
  double left = 5.0;
  double top = 5.0;
  double right = 5.0;
  double bottom = 5.0;
};

struct TextBoxGene {
  std::string content;
  std::string typeface;
  double weight = 400.0;
  double stretch = 100.0;
  double size = 12.0;
  Alignment alignment = Alignment::left;

  bool operator==(const TextBoxGene&) const = default;
};

struct PosterGenotype {
  PosterSize size;
  Margins margins;
  VerticalAlignment vertical_alignment = VerticalAlignment::top;
  std::vector<TextBoxGene> textboxes;

  bool operator==(const PosterGenotype& other) const;
};

struct GenotypeLimits {
  double min_font_size = 6.0;
  double max_font_size = 60.0;
};

// Throws SchemaError, RangeError or UnknownTypeface.
void validate_genotype(const PosterGenotype& g, const FontCatalog& fonts, const GenotypeLimits& limits);

PosterGenotype parse_genotype(std::string_view json_text, const FontCatalog& fonts, const GenotypeLimits& limits);

// Canonical form: schema key order, no whitespace, numbers with at most four decimals.
std::string serialize_genotype(const PosterGenotype& g);

struct Rgb {
  double r = 0.0;
  double g = 0.0;
  double b = 0.0;

  bool operator==(const Rgb&) const = default;
};

// WCAG 2 contrast ratio between two sRGB colours with channels in [0, 255].
double contrast_ratio(const Rgb& a, const Rgb& b);

struct ColorScheme {
  Rgb foreground{0, 0, 0};
  Rgb background{255, 255, 255};

  // Throws ConfigError when the contrast ratio is below `min_contrast`.
  static ColorScheme checked(Rgb foreground, Rgb background, double min_contrast = 2.5);
};

struct LayoutParams {
  double line_height_factor = 1.2;
};

struct LayoutBox {
  double x = 0.0;
  double y = 0.0;
  double cell_width = 0.0;
  double cell_height = 0.0;
  double text_width = 0.0;
  double font_size = 0.0;
  double ink_coverage = 0.0;
  Rgb foreground;
  Rgb background;

  double area() const { return cell_width * cell_height; }
};

struct LayoutSolution {
  std::vector<LayoutBox> boxes;
  double available_width = 0.0;
  double available_height = 0.0;
  double grid_height = 0.0;
  double content_top = 0.0;
};

// Margin in px for a percentage (resolved against the poster width).
double margin_px(const PosterGenotype& g, double percent);

// Fraction of a cell covered by glyph ink, from an analytic stroke model.
double estimate_ink_coverage(double text_width, double font_size, double normalized_weight, double cell_width,
                             double cell_height);

LayoutSolution resolve_layout(const PosterGenotype& g, const FontCatalog& fonts, const ColorScheme& colors,
                              const LayoutParams& params = {});

}  // namespace typoster
