#include "typoster/font_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iterator>
#include <limits>

#include "json.hpp"
#include "typoster/errors.hpp"
#include "typoster/text_util.hpp"

namespace typoster {

namespace {

constexpr std::array<std::pair<FontCategory, std::string_view>, 6> kCategoryNames{{
    {FontCategory::serif, "serif"},
    {FontCategory::sans_serif, "sans-serif"},
    {FontCategory::mono_space, "mono-space"},
    {FontCategory::display, "display"},
    {FontCategory::script, "script"},
    {FontCategory::other, "other"},
}};

constexpr std::array<std::pair<Corner, std::string_view>, 4> kCornerKeys{{
    {Corner::wmin_smin, "corner:wMin,sMin"},
    {Corner::wmax_smin, "corner:wMax,sMin"},
    {Corner::wmin_smax, "corner:wMin,sMax"},
    {Corner::wmax_smax, "corner:wMax,sMax"},
}};

AxisRange parse_axis(const nlohmann::json& doc, const char* key, double fallback, const std::string& id,
                     std::vector<std::string>* warnings) {
  if (!doc.contains(key)) {
    if (warnings != nullptr) {
      warnings->push_back("face '" + id + "': missing " + key + ", using degenerate axis at " +
                          format_number(fallback));
    }
    return {fallback, fallback, fallback};
  }
  const auto& arr = doc.at(key);
  if (!arr.is_array() || arr.size() != 3 || !arr[0].is_number() || !arr[1].is_number() || !arr[2].is_number()) {
    throw ParseError("face '" + id + "': " + key + " must be [min, default, max]");
  }
  AxisRange axis{arr[0].get<double>(), arr[1].get<double>(), arr[2].get<double>()};
  if (!(axis.min <= axis.def && axis.def <= axis.max)) {
    throw ParseError("face '" + id + "': " + key + " is not ordered min <= default <= max");
  }
  return axis;
}

AdvanceTable parse_advances(const nlohmann::json& obj, const std::string& id, std::string_view corner) {
  if (!obj.is_object()) {
    throw ParseError("face '" + id + "': " + std::string(corner) + " must be an object");
  }
  if (!obj.contains("default") || !obj.at("default").is_number()) {
    throw ParseError("face '" + id + "': " + std::string(corner) + " lacks a numeric \"default\" advance");
  }
  AdvanceTable table(obj.at("default").get<double>());
  for (const auto& [key, value] : obj.items()) {
    if (!value.is_number() || value.get<double>() < 0.0) {
      throw ParseError("face '" + id + "': advance for '" + key + "' must be a non-negative number");
    }
    if (key == "default") {
      continue;
    }
    const auto cps = utf8_decode(key);
    if (cps.size() != 1) {
      throw ParseError("face '" + id + "': advance key '" + key + "' is not a single character");
    }
    table.set(cps[0], value.get<double>());
  }
  if (table.fallback() < 0.0) {
    throw ParseError("face '" + id + "': negative default advance");
  }
  return table;
}

}  // namespace

std::string_view to_string(FontCategory category) {
  for (const auto& [c, name] : kCategoryNames) {
    if (c == category) {
      return name;
    }
  }
  return "other";
}

std::optional<FontCategory> parse_font_category(std::string_view name) {
  for (const auto& [c, n] : kCategoryNames) {
    if (n == name) {
      return c;
    }
  }
  if (name == "sans_serif" || name == "sans") {
    return FontCategory::sans_serif;
  }
  if (name == "mono_space" || name == "monospace" || name == "mono") {
    return FontCategory::mono_space;
  }
  return std::nullopt;
}

double AxisRange::clamp(double v) const { return std::clamp(v, min, max); }

double AxisRange::normalize(double v) const {
  if (degenerate()) {
    return 0.0;
  }
  return std::clamp((v - min) / (max - min), 0.0, 1.0);
}

void AdvanceTable::set(char32_t cp, double advance) {
  if (cp < kDenseLimit) {
    if (dense_.empty()) {
      dense_.assign(kDenseLimit, std::numeric_limits<double>::quiet_NaN());
    }
    dense_[cp] = advance;
  } else {
    sparse_[cp] = advance;
  }
}

bool AdvanceTable::contains(char32_t cp) const {
  if (cp < kDenseLimit) {
    return !dense_.empty() && !std::isnan(dense_[cp]);
  }
  return sparse_.contains(cp);
}

double AdvanceTable::lookup(char32_t cp) const {
  if (cp < kDenseLimit) {
    if (!dense_.empty() && !std::isnan(dense_[cp])) {
      return dense_[cp];
    }
    return fallback_;
  }
  const auto it = sparse_.find(cp);
  return it == sparse_.end() ? fallback_ : it->second;
}

std::size_t AdvanceTable::size() const {
  const auto dense = static_cast<std::size_t>(
      std::count_if(dense_.begin(), dense_.end(), [](double v) { return !std::isnan(v); }));
  return dense + sparse_.size();
}

FaceInstance::FaceInstance(const FaceRecord& face, double weight, double stretch)
    : face_(&face),
      weight_(weight),
      stretch_(stretch),
      tw_(face.weight.normalize(weight)),
      ts_(face.stretch.normalize(stretch)) {}

double FaceInstance::advance_units(char32_t cp) const {
  const double a00 = face_->corner(Corner::wmin_smin).lookup(cp);
  if (tw_ == 0.0 && ts_ == 0.0) {
    return a00;
  }
  const double a10 = face_->corner(Corner::wmax_smin).lookup(cp);
  const double a01 = face_->corner(Corner::wmin_smax).lookup(cp);
  const double a11 = face_->corner(Corner::wmax_smax).lookup(cp);
  return (1.0 - tw_) * (1.0 - ts_) * a00 + tw_ * (1.0 - ts_) * a10 + (1.0 - tw_) * ts_ * a01 + tw_ * ts_ * a11;
}

double measure_text(std::string_view text, const FaceInstance& instance, double size) {
  double units = 0.0;
  for (char32_t cp : utf8_decode(text)) {
    units += instance.advance_units(cp);
  }
  return units * size / instance.face().units_per_em;
}

void FontCatalog::add(FaceRecord face) {
  if (index_.contains(face.id)) {
    throw DuplicateId("duplicate typeface id '" + face.id + "'");
  }
  index_.emplace(face.id, faces_.size());
  faces_.push_back(std::move(face));
}

const FaceRecord& FontCatalog::face(std::string_view id) const {
  const auto* f = find(id);
  if (f == nullptr) {
    throw UnknownTypeface("unknown typeface '" + std::string(id) + "'");
  }
  return *f;
}

const FaceRecord* FontCatalog::find(std::string_view id) const {
  const auto it = index_.find(id);
  return it == index_.end() ? nullptr : &faces_[it->second];
}

FaceRecord parse_sidecar(std::string_view json_text, std::vector<std::string>* warnings) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed metrics sidecar: ") + e.what());
  }
  if (!doc.is_object()) {
    throw ParseError("metrics sidecar must be a JSON object");
  }
  FaceRecord face;
  if (!doc.contains("id") || !doc.at("id").is_string() || doc.at("id").get<std::string>().empty()) {
    throw ParseError("metrics sidecar lacks a string \"id\"");
  }
  face.id = doc.at("id").get<std::string>();
  if (!doc.contains("category") || !doc.at("category").is_string()) {
    throw ParseError("face '" + face.id + "': missing \"category\"");
  }
  const auto category = parse_font_category(doc.at("category").get<std::string>());
  if (!category) {
    throw ParseError("face '" + face.id + "': unknown category '" + doc.at("category").get<std::string>() + "'");
  }
  face.category = *category;
  if (!doc.contains("unitsPerEm") || !doc.at("unitsPerEm").is_number_integer() ||
      doc.at("unitsPerEm").get<int>() <= 0) {
    throw ParseError("face '" + face.id + "': \"unitsPerEm\" must be a positive integer");
  }
  face.units_per_em = doc.at("unitsPerEm").get<int>();
  face.weight = parse_axis(doc, "weightAxis", 400.0, face.id, warnings);
  face.stretch = parse_axis(doc, "stretchAxis", 100.0, face.id, warnings);

  if (!doc.contains("advances") || !doc.at("advances").is_object()) {
    throw ParseError("face '" + face.id + "': missing \"advances\"");
  }
  const auto& advances = doc.at("advances");
  std::array<bool, 4> present{};
  for (const auto& [corner, key] : kCornerKeys) {
    if (advances.contains(key)) {
      face.corner(corner) = parse_advances(advances.at(key), face.id, key);
      present[static_cast<std::size_t>(corner)] = true;
    }
  }
  for (const auto& [key, value] : advances.items()) {
    const bool known = std::any_of(kCornerKeys.begin(), kCornerKeys.end(),
                                   [&](const auto& entry) { return entry.second == key; });
    if (!known) {
      throw ParseError("face '" + face.id + "': unknown advance table '" + key + "'");
    }
  }
  // A corner may be omitted only when it coincides with a present one along a degenerate axis.
  auto fill = [&](Corner target, Corner source) {
    auto t = static_cast<std::size_t>(target);
    auto s = static_cast<std::size_t>(source);
    if (!present[t] && present[s]) {
      face.corners[t] = face.corners[s];
      present[t] = true;
    }
  };
  for (int pass = 0; pass < 2; ++pass) {
    if (face.weight.degenerate()) {
      fill(Corner::wmax_smin, Corner::wmin_smin);
      fill(Corner::wmin_smin, Corner::wmax_smin);
      fill(Corner::wmax_smax, Corner::wmin_smax);
      fill(Corner::wmin_smax, Corner::wmax_smax);
    }
    if (face.stretch.degenerate()) {
      fill(Corner::wmin_smax, Corner::wmin_smin);
      fill(Corner::wmin_smin, Corner::wmin_smax);
      fill(Corner::wmax_smax, Corner::wmax_smin);
      fill(Corner::wmax_smin, Corner::wmax_smax);
    }
  }
  for (const auto& [corner, key] : kCornerKeys) {
    if (!present[static_cast<std::size_t>(corner)]) {
      throw ParseError("face '" + face.id + "': missing advance table '" + std::string(key) + "'");
    }
  }
  return face;
}

namespace {

std::vector<std::byte> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot open font source '" + path.string() + "'");
  }
  std::vector<char> raw((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::vector<std::byte> bytes(raw.size());
  std::transform(raw.begin(), raw.end(), bytes.begin(), [](char c) { return static_cast<std::byte>(c); });
  return bytes;
}

}  // namespace

FontCatalog load_catalog(std::span<const FontSource> sources) {
  FontCatalog catalog;
  for (const auto& source : sources) {
    std::vector<std::string> warnings;
    const auto bytes = read_file(source.path);
    FaceRecord face;
    try {
      if (source.path.extension() == ".json") {
        const std::string text(reinterpret_cast<const char*>(bytes.data()), bytes.size());
        face = parse_sidecar(text, &warnings);
      } else {
        face = parse_font_binary(bytes, &warnings);
      }
    } catch (const ParseError& e) {
      throw ParseError(source.path.string() + ": " + e.what());
    }
    if (source.id) {
      face.id = *source.id;
    }
    if (source.category) {
      face.category = *source.category;
    }
    for (auto& w : warnings) {
      catalog.warn(source.path.string() + ": " + w);
    }
    catalog.add(std::move(face));
  }
  if (catalog.empty()) {
    throw EmptyCatalog("no typefaces loaded");
  }
  return catalog;
}

FontCatalog load_catalog(std::span<const std::filesystem::path> paths) {
  std::vector<FontSource> sources;
  sources.reserve(paths.size());
  for (const auto& p : paths) {
    sources.push_back({p, std::nullopt, std::nullopt});
  }
  return load_catalog(sources);
}

}  // namespace typoster
