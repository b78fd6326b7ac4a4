#include "typoster/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "typoster/errors.hpp"

#ifndef TYPOSTER_DATA_DIR
#define TYPOSTER_DATA_DIR "data"
#endif

namespace typoster {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// Reads keys out of one JSON object and complains about leftovers.
class Section {
 public:
  Section(const json& node, std::string name) : node_(node), name_(std::move(name)) {
    if (!node_.is_object()) {
      throw ConfigError("section '" + name_ + "' must be an object");
    }
  }

  const json* get(const std::string& key) {
    seen_.insert(key);
    auto it = node_.find(key);
    return it == node_.end() ? nullptr : &*it;
  }

  template <typename T>
  void read(const std::string& key, T& out) {
    if (const json* v = get(key)) {
      try {
        out = v->get<T>();
      } catch (const json::exception&) {
        throw ConfigError(name_ + "." + key + " has the wrong type");
      }
    }
  }

  void finish() const {
    for (const auto& [key, value] : node_.items()) {
      if (!seen_.contains(key)) {
        throw ConfigError("unknown key '" + name_ + "." + key + "'");
      }
    }
  }

  const std::string& name() const { return name_; }

 private:
  const json& node_;
  std::string name_;
  std::set<std::string> seen_;
};

Rgb parse_rgb(const json& v, const std::string& where) {
  if (v.is_array() && v.size() == 3 && std::all_of(v.begin(), v.end(), [](const json& c) { return c.is_number(); })) {
    return Rgb{v[0].get<double>(), v[1].get<double>(), v[2].get<double>()};
  }
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s.size() == 7 && s[0] == '#' && std::all_of(s.begin() + 1, s.end(), [](char c) { return std::isxdigit(static_cast<unsigned char>(c)); })) {
      auto channel = [&](std::size_t at) { return static_cast<double>(std::stoi(s.substr(at, 2), nullptr, 16)); };
      return Rgb{channel(1), channel(3), channel(5)};
    }
  }
  throw ConfigError(where + " must be \"#rrggbb\" or [r, g, b]");
}

std::string hex(const Rgb& c) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out = "#";
  for (double v : {c.r, c.g, c.b}) {
    const int n = std::clamp(static_cast<int>(std::lround(v)), 0, 255);
    out.push_back(kDigits[n / 16]);
    out.push_back(kDigits[n % 16]);
  }
  return out;
}

fs::path resolve(const fs::path& base, const std::string& p) {
  fs::path path(p);
  return path.is_absolute() ? path : (base / path).lexically_normal();
}

std::vector<FontSource> bundled_fonts(const fs::path& data_dir) {
  std::vector<FontSource> sources;
  const fs::path dir = data_dir / "fonts";
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(dir, ec)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      sources.push_back(FontSource{entry.path(), std::nullopt, std::nullopt});
    }
  }
  // directory_iterator order is unspecified; catalog order feeds the RNG.
  std::sort(sources.begin(), sources.end(), [](const FontSource& a, const FontSource& b) { return a.path < b.path; });
  return sources;
}

}  // namespace

fs::path default_data_dir() {
  if (const char* env = std::getenv("TYPOSTER_DATA_DIR"); env != nullptr && *env != '\0') {
    return fs::path(env);
  }
  return fs::path(TYPOSTER_DATA_DIR);
}

AppConfig AppConfig::defaults() {
  AppConfig c;
  const fs::path data = default_data_dir();
  c.fonts = bundled_fonts(data);
  c.emotion.resources_dir = data / "emotion";
  c.emotion.lexicon = data / "emotion" / "lexicon.tsv";
  return c;
}

void AppConfig::validate() const {
  if (fonts.empty()) {
    throw ConfigError("no fonts configured");
  }
  evolution.validate();
  metrics.validate();
  weights.validate();
  (void)color_scheme();
  if (poster.size.width <= 0.0 || poster.size.height <= 0.0) {
    throw ConfigError("poster size must be positive");
  }
  for (double m : {poster.margins.left, poster.margins.top, poster.margins.right, poster.margins.bottom}) {
    if (!(m >= 0.0 && m < 50.0)) {
      throw ConfigError("margins must lie in [0, 50) percent");
    }
  }
  if (!(layout.line_height_factor > 0.0)) {
    throw ConfigError("line_height_factor must be positive");
  }
  if (split.min_chars == 0 || split.min_chars > split.max_chars) {
    throw ConfigError("split range must satisfy 0 < min_chars <= max_chars");
  }
}

ColorScheme AppConfig::color_scheme() const {
  return ColorScheme::checked(colors.foreground, colors.background, colors.min_contrast);
}

AppConfig parse_config(std::string_view json_text, const fs::path& base_dir) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  AppConfig c = AppConfig::defaults();
  Section top(root, "config");

  if (const json* node = top.get("fonts")) {
    if (!node->is_array() || node->empty()) {
      throw ConfigError("fonts must be a non-empty array");
    }
    c.fonts.clear();
    for (const auto& item : *node) {
      FontSource src;
      if (item.is_string()) {
        src.path = resolve(base_dir, item.get<std::string>());
      } else if (item.is_object()) {
        Section s(item, "fonts[]");
        std::string path;
        s.read("path", path);
        if (path.empty()) {
          throw ConfigError("fonts[].path is required");
        }
        src.path = resolve(base_dir, path);
        if (const json* id = s.get("id")) {
          src.id = id->get<std::string>();
        }
        if (const json* cat = s.get("category")) {
          auto parsed = parse_font_category(cat->get<std::string>());
          if (!parsed) {
            throw ConfigError("unknown font category '" + cat->get<std::string>() + "'");
          }
          src.category = *parsed;
        }
        s.finish();
      } else {
        throw ConfigError("fonts entries must be paths or objects");
      }
      c.fonts.push_back(std::move(src));
    }
  }

  if (const json* node = top.get("colors")) {
    Section s(*node, "colors");
    if (const json* v = s.get("foreground")) c.colors.foreground = parse_rgb(*v, "colors.foreground");
    if (const json* v = s.get("background")) c.colors.background = parse_rgb(*v, "colors.background");
    s.read("min_contrast", c.colors.min_contrast);
    s.finish();
  }

  if (const json* node = top.get("evolution")) {
    Section s(*node, "evolution");
    auto& e = c.evolution;
    s.read("generations", e.generations);
    s.read("population_size", e.population_size);
    s.read("elite_size", e.elite_size);
    s.read("crossover_probability", e.crossover_probability);
    s.read("mutation_probability", e.mutation_probability);
    s.read("tournament_size", e.tournament_size);
    s.read("stochastic_ranking_pf", e.stochastic_ranking_pf);
    s.read("min_font_size", e.font_size_range.min_font_size);
    s.read("max_font_size", e.font_size_range.max_font_size);
    s.read("size_delta_min", e.size_delta.min);
    s.read("size_delta_max", e.size_delta.max);
    s.read("seed", e.seed);
    s.read("threads", e.threads);
    if (const json* v = s.get("stage")) {
      auto st = v->is_string() ? parse_stage(v->get<std::string>()) : std::nullopt;
      if (!st) throw ConfigError("evolution.stage must be S1, S2 or S3");
      e.stage = *st;
    }
    s.read("poster_width", c.poster.size.width);
    s.read("poster_height", c.poster.size.height);
    if (const json* v = s.get("margins")) {
      if (!v->is_array() || v->size() != 4) {
        throw ConfigError("evolution.margins must be [left, top, right, bottom]");
      }
      c.poster.margins = Margins{(*v)[0].get<double>(), (*v)[1].get<double>(), (*v)[2].get<double>(),
                                 (*v)[3].get<double>()};
    }
    s.read("line_height_factor", c.layout.line_height_factor);
    s.finish();
  }

  if (const json* node = top.get("metrics")) {
    Section s(*node, "metrics");
    auto& m = c.metrics;
    s.read("falloff", m.falloff);
    s.read("justification_factor", m.justification_factor);
    s.read("optimal_negative_space", m.optimal_negative_space);
    s.read("typography_threshold", m.typography_threshold);
    s.read("alignment_width_weight", m.alignment_width_weight);
    s.read("alignment_uniformity_weight", m.alignment_uniformity_weight);
    if (const json* v = s.get("layout_mode")) {
      auto mode = v->is_string() ? parse_layout_mode(v->get<std::string>()) : std::nullopt;
      if (!mode) throw ConfigError("metrics.layout_mode must be fixed or relative");
      m.layout_mode = *mode;
    }
    if (const json* v = s.get("aesthetic_weights")) {
      Section w(*v, "metrics.aesthetic_weights");
      auto& a = c.weights.aesthetic;
      w.read("alignment", a.alignment);
      w.read("regularity", a.regularity);
      w.read("balance", a.balance);
      w.read("negative_space", a.negative_space);
      w.read("justification", a.justification);
      w.read("typeface_pairing", a.typeface_pairing);
      w.finish();
    }
    if (const json* v = s.get("semantic_weights")) {
      Section w(*v, "metrics.semantic_weights");
      w.read("layout", c.weights.semantic.layout);
      w.read("typography", c.weights.semantic.typography);
      w.finish();
    }
    s.finish();
  }

  if (const json* node = top.get("emotion")) {
    Section s(*node, "emotion");
    s.read("language", c.emotion.language);
    std::string dir;
    std::string lexicon;
    s.read("resources_dir", dir);
    s.read("lexicon", lexicon);
    if (!dir.empty()) c.emotion.resources_dir = resolve(base_dir, dir);
    if (!lexicon.empty()) c.emotion.lexicon = resolve(base_dir, lexicon);
    s.finish();
  }

  if (const json* node = top.get("split")) {
    Section s(*node, "split");
    s.read("min_chars", c.split.min_chars);
    s.read("max_chars", c.split.max_chars);
    s.finish();
  }

  top.finish();
  c.validate();
  return c;
}

AppConfig load_config(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ConfigError("cannot read config file " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path.parent_path());
}

void apply_overrides(AppConfig& config, const ConfigOverrides& o) {
  if (o.seed) config.evolution.seed = *o.seed;
  if (o.stage) config.evolution.stage = *o.stage;
  if (o.generations) config.evolution.generations = *o.generations;
  if (o.population) config.evolution.population_size = *o.population;
  if (o.threads) config.evolution.threads = *o.threads;
  if (o.language) config.emotion.language = *o.language;
  config.validate();
}

nlohmann::ordered_json to_json(const AppConfig& c) {
  nlohmann::ordered_json j;
  auto& fonts = j["fonts"] = nlohmann::ordered_json::array();
  for (const auto& f : c.fonts) {
    nlohmann::ordered_json entry;
    entry["path"] = f.path.generic_string();
    if (f.id) entry["id"] = *f.id;
    if (f.category) entry["category"] = std::string(to_string(*f.category));
    fonts.push_back(entry);
  }
  j["colors"] = {{"foreground", hex(c.colors.foreground)},
                 {"background", hex(c.colors.background)},
                 {"min_contrast", c.colors.min_contrast}};
  const auto& e = c.evolution;
  j["evolution"] = {{"generations", e.generations},
                    {"population_size", e.population_size},
                    {"elite_size", e.elite_size},
                    {"crossover_probability", e.crossover_probability},
                    {"mutation_probability", e.mutation_probability},
                    {"tournament_size", e.tournament_size},
                    {"stage", std::string(to_string(e.stage))},
                    {"stochastic_ranking_pf", e.stochastic_ranking_pf},
                    {"min_font_size", e.font_size_range.min_font_size},
                    {"max_font_size", e.font_size_range.max_font_size},
                    {"size_delta_min", e.size_delta.min},
                    {"size_delta_max", e.size_delta.max},
                    {"seed", e.seed},
                    {"threads", e.threads},
                    {"poster_width", c.poster.size.width},
                    {"poster_height", c.poster.size.height},
                    {"margins",
                     {c.poster.margins.left, c.poster.margins.top, c.poster.margins.right, c.poster.margins.bottom}},
                    {"line_height_factor", c.layout.line_height_factor}};
  const auto& m = c.metrics;
  const auto& a = c.weights.aesthetic;
  j["metrics"] = {{"falloff", m.falloff},
                  {"justification_factor", m.justification_factor},
                  {"optimal_negative_space", m.optimal_negative_space},
                  {"layout_mode", std::string(to_string(m.layout_mode))},
                  {"typography_threshold", m.typography_threshold},
                  {"alignment_width_weight", m.alignment_width_weight},
                  {"alignment_uniformity_weight", m.alignment_uniformity_weight},
                  {"aesthetic_weights",
                   {{"alignment", a.alignment},
                    {"regularity", a.regularity},
                    {"balance", a.balance},
                    {"negative_space", a.negative_space},
                    {"justification", a.justification},
                    {"typeface_pairing", a.typeface_pairing}}},
                  {"semantic_weights",
                   {{"layout", c.weights.semantic.layout}, {"typography", c.weights.semantic.typography}}}};
  j["emotion"] = {{"language", c.emotion.language},
                  {"resources_dir", c.emotion.resources_dir.generic_string()},
                  {"lexicon", c.emotion.lexicon.generic_string()}};
  j["split"] = {{"min_chars", c.split.min_chars}, {"max_chars", c.split.max_chars}};
  return j;
}

}  // namespace typoster
