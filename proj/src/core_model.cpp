#include "typoster/core_model.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"
#include "typoster/errors.hpp"
#include "typoster/text_util.hpp"

namespace typoster {

using nlohmann::json;

std::string_view to_string(VerticalAlignment v) {
  switch (v) {
    case VerticalAlignment::top:
      return "top";
    case VerticalAlignment::middle:
      return "middle";
    case VerticalAlignment::bottom:
      return "bottom";
  }
  return "top";
}

std::string_view to_string(Alignment a) {
  switch (a) {
    case Alignment::left:
      return "left";
    case Alignment::center:
      return "center";
    case Alignment::right:
      return "right";
  }
  return "left";
}

std::optional<VerticalAlignment> parse_vertical_alignment(std::string_view s) {
  if (s == "top") return VerticalAlignment::top;
  if (s == "middle") return VerticalAlignment::middle;
  if (s == "bottom") return VerticalAlignment::bottom;
  return std::nullopt;
}

std::optional<Alignment> parse_alignment(std::string_view s) {
  if (s == "left") return Alignment::left;
  if (s == "center") return Alignment::center;
  if (s == "right") return Alignment::right;
  return std::nullopt;
}

bool PosterGenotype::operator==(const PosterGenotype& o) const {
  return size.width == o.size.width && size.height == o.size.height && margins.left == o.margins.left &&
         margins.top == o.margins.top && margins.right == o.margins.right && margins.bottom == o.margins.bottom &&
         vertical_alignment == o.vertical_alignment && textboxes == o.textboxes;
}

namespace {

const json& member(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) {
    throw SchemaError(where + " must be an object");
  }
  const auto it = obj.find(key);
  if (it == obj.end()) {
    throw SchemaError(where + " is missing key \"" + key + "\"");
  }
  return *it;
}

double number(const json& obj, const char* key, const std::string& where) {
  const auto& v = member(obj, key, where);
  if (!v.is_number()) {
    throw SchemaError(where + "." + key + " must be a number");
  }
  const double d = v.get<double>();
  if (!std::isfinite(d)) {
    throw SchemaError(where + "." + key + " must be finite");
  }
  return d;
}

std::string string(const json& obj, const char* key, const std::string& where) {
  const auto& v = member(obj, key, where);
  if (!v.is_string()) {
    throw SchemaError(where + "." + key + " must be a string");
  }
  return v.get<std::string>();
}

void exact_keys(const json& obj, std::initializer_list<const char*> keys, const std::string& where) {
  for (const auto& [k, v] : obj.items()) {
    if (std::none_of(keys.begin(), keys.end(), [&](const char* allowed) { return k == allowed; })) {
      throw SchemaError(where + " has unexpected key \"" + k + "\"");
    }
  }
}

std::string quoted(const std::string& s) { return json(s).dump(-1, ' ', false, json::error_handler_t::replace); }

}  // namespace

void validate_genotype(const PosterGenotype& g, const FontCatalog& fonts, const GenotypeLimits& limits) {
  if (!(g.size.width > 0.0) || !(g.size.height > 0.0)) {
    throw RangeError("poster width and height must be positive");
  }
  for (double m : {g.margins.left, g.margins.top, g.margins.right, g.margins.bottom}) {
    if (!(m >= 0.0 && m < 50.0)) {
      throw RangeError("margin " + format_number(m) + "% outside [0, 50)");
    }
  }
  if (g.textboxes.empty()) {
    throw SchemaError("genotype needs at least one text box");
  }
  for (std::size_t i = 0; i < g.textboxes.size(); ++i) {
    const auto& box = g.textboxes[i];
    const auto where = "textboxes[" + std::to_string(i) + "]";
    const auto& face = fonts.face(box.typeface);
    if (!face.weight.contains(box.weight)) {
      throw RangeError(where + ": weight " + format_number(box.weight) + " outside axis of '" + face.id + "'");
    }
    if (!face.stretch.contains(box.stretch)) {
      throw RangeError(where + ": stretch " + format_number(box.stretch) + " outside axis of '" + face.id + "'");
    }
    if (!(box.size >= limits.min_font_size && box.size <= limits.max_font_size)) {
      throw RangeError(where + ": size " + format_number(box.size) + " outside [" +
                       format_number(limits.min_font_size) + ", " + format_number(limits.max_font_size) + "]");
    }
  }
}

PosterGenotype parse_genotype(std::string_view json_text, const FontCatalog& fonts, const GenotypeLimits& limits) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("malformed genotype JSON: ") + e.what());
  }
  PosterGenotype g;
  if (!doc.is_object()) {
    throw SchemaError("genotype must be a JSON object");
  }
  exact_keys(doc, {"size", "margins", "verticalAlignment", "textboxes"}, "genotype");
  const auto& size = member(doc, "size", "genotype");
  exact_keys(size, {"width", "height"}, "size");
  g.size.width = number(size, "width", "size");
  g.size.height = number(size, "height", "size");

  const auto& margins = member(doc, "margins", "genotype");
  exact_keys(margins, {"left", "top", "right", "bottom"}, "margins");
  g.margins.left = number(margins, "left", "margins");
  g.margins.top = number(margins, "top", "margins");
  g.margins.right = number(margins, "right", "margins");
  g.margins.bottom = number(margins, "bottom", "margins");

  const auto valign = string(doc, "verticalAlignment", "genotype");
  const auto parsed_valign = parse_vertical_alignment(valign);
  if (!parsed_valign) {
    throw SchemaError("verticalAlignment must be top, middle or bottom, got \"" + valign + "\"");
  }
  g.vertical_alignment = *parsed_valign;

  const auto& boxes = member(doc, "textboxes", "genotype");
  if (!boxes.is_array()) {
    throw SchemaError("textboxes must be an array");
  }
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    const auto where = "textboxes[" + std::to_string(i) + "]";
    const auto& b = boxes[i];
    if (!b.is_object()) {
      throw SchemaError(where + " must be an object");
    }
    exact_keys(b, {"content", "typeface", "weight", "stretch", "size", "alignment"}, where);
    TextBoxGene gene;
    gene.content = string(b, "content", where);
    gene.typeface = string(b, "typeface", where);
    gene.weight = number(b, "weight", where);
    gene.stretch = number(b, "stretch", where);
    gene.size = number(b, "size", where);
    const auto align = string(b, "alignment", where);
    const auto parsed_align = parse_alignment(align);
    if (!parsed_align) {
      throw SchemaError(where + ".alignment must be left, center or right, got \"" + align + "\"");
    }
    gene.alignment = *parsed_align;
    g.textboxes.push_back(std::move(gene));
  }
  validate_genotype(g, fonts, limits);
  return g;
}

std::string serialize_genotype(const PosterGenotype& g) {
  std::string out;
  out.reserve(128 + 128 * g.textboxes.size());
  out += "{\"size\":{\"width\":" + format_number(g.size.width) + ",\"height\":" + format_number(g.size.height) + "}";
  out += ",\"margins\":{\"left\":" + format_number(g.margins.left) + ",\"top\":" + format_number(g.margins.top) +
         ",\"right\":" + format_number(g.margins.right) + ",\"bottom\":" + format_number(g.margins.bottom) + "}";
  out += ",\"verticalAlignment\":\"" + std::string(to_string(g.vertical_alignment)) + "\"";
  out += ",\"textboxes\":[";
  for (std::size_t i = 0; i < g.textboxes.size(); ++i) {
    const auto& b = g.textboxes[i];
    if (i > 0) {
      out += ",";
    }
    out += "{\"content\":" + quoted(b.content) + ",\"typeface\":" + quoted(b.typeface) +
           ",\"weight\":" + format_number(b.weight) + ",\"stretch\":" + format_number(b.stretch) +
           ",\"size\":" + format_number(b.size) + ",\"alignment\":\"" + std::string(to_string(b.alignment)) + "\"}";
  }
  out += "]}";
  return out;
}

namespace {

double linear_channel(double c) {
  const double s = c / 255.0;
  return s <= 0.03928 ? s / 12.92 : std::pow((s + 0.055) / 1.055, 2.4);
}

double relative_luminance(const Rgb& c) {
  return 0.2126 * linear_channel(c.r) + 0.7152 * linear_channel(c.g) + 0.0722 * linear_channel(c.b);
}

}  // namespace

double contrast_ratio(const Rgb& a, const Rgb& b) {
  const double la = relative_luminance(a);
  const double lb = relative_luminance(b);
  return (std::max(la, lb) + 0.05) / (std::min(la, lb) + 0.05);
}

ColorScheme ColorScheme::checked(Rgb foreground, Rgb background, double min_contrast) {
  for (double c : {foreground.r, foreground.g, foreground.b, background.r, background.g, background.b}) {
    if (!(c >= 0.0 && c <= 255.0)) {
      throw ConfigError("colour channel " + format_number(c) + " outside [0, 255]");
    }
  }
  const double ratio = contrast_ratio(foreground, background);
  if (ratio < min_contrast) {
    throw ConfigError("colour contrast " + format_number(ratio, 3) + " below minimum " + format_number(min_contrast));
  }
  return {foreground, background};
}

double margin_px(const PosterGenotype& g, double percent) { return g.size.width * percent / 100.0; }

double estimate_ink_coverage(double text_width, double font_size, double normalized_weight, double cell_width,
                             double cell_height) {
  const double cell = cell_width * cell_height;
  if (!(cell > 0.0)) {
    return 0.0;
  }
  const double ink = text_width * 0.7 * font_size * (0.2 + 0.4 * normalized_weight);
  return std::clamp(ink / cell, 0.0, 1.0);
}

LayoutSolution resolve_layout(const PosterGenotype& g, const FontCatalog& fonts, const ColorScheme& colors,
                              const LayoutParams& params) {
  LayoutSolution layout;
  const double left = margin_px(g, g.margins.left);
  const double top = margin_px(g, g.margins.top);
  layout.available_width = g.size.width - left - margin_px(g, g.margins.right);
  layout.available_height = g.size.height - top - margin_px(g, g.margins.bottom);

  layout.boxes.reserve(g.textboxes.size());
  for (const auto& gene : g.textboxes) {
    const auto& face = fonts.face(gene.typeface);
    const FaceInstance instance(face, gene.weight, gene.stretch);
    LayoutBox box;
    box.x = left;
    box.cell_width = layout.available_width;
    box.cell_height = gene.size * params.line_height_factor;
    box.font_size = gene.size;
    box.text_width = measure_text(gene.content, instance, gene.size);
    box.ink_coverage = estimate_ink_coverage(box.text_width, gene.size, face.weight.normalize(gene.weight),
                                             box.cell_width, box.cell_height);
    box.foreground = colors.foreground;
    box.background = colors.background;
    layout.grid_height += box.cell_height;
    layout.boxes.push_back(box);
  }

  const double slack = layout.available_height - layout.grid_height;
  switch (g.vertical_alignment) {
    case VerticalAlignment::top:
      layout.content_top = top;
      break;
    case VerticalAlignment::middle:
      layout.content_top = top + slack / 2.0;
      break;
    case VerticalAlignment::bottom:
      layout.content_top = top + slack;
      break;
  }
  double y = layout.content_top;
  for (auto& box : layout.boxes) {
    box.y = y;
    y += box.cell_height;
  }
  return layout;
}

}  // namespace typoster
