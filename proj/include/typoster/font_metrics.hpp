#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace typoster {

enum class FontCategory { serif, sans_serif, mono_space, display, script, other };

std::string_view to_string(FontCategory category);
// Accepts the hyphenated names used in files ("sans-serif", "mono-space").
std::optional<FontCategory> parse_font_category(std::string_view name);

struct AxisRange {
  double min = 0.0;
  double def = 0.0;
  double max = 0.0;

  double span() const { return max - min; }
  bool degenerate() const { return max <= min; }
  bool contains(double v) const { return v >= min && v <= max; }
  double clamp(double v) const;
  // Position in [0, 1] along the axis; 0 for a degenerate axis.
  double normalize(double v) const;
};

// Advance widths in font units for one corner of the (weight, stretch) design space.
class AdvanceTable {
 public:
  AdvanceTable() = default;
  explicit AdvanceTable(double fallback) : fallback_(fallback) {}

  void set(char32_t cp, double advance);
  void set_fallback(double advance) { fallback_ = advance; }
  double fallback() const { return fallback_; }
  bool contains(char32_t cp) const;
  double lookup(char32_t cp) const;
  std::size_t size() const;

 private:
  static constexpr char32_t kDenseLimit = 0x250;
  double fallback_ = 0.0;
  std::vector<double> dense_;  // NaN marks an absent entry
  std::unordered_map<char32_t, double> sparse_;
};

enum class Corner : std::size_t { wmin_smin = 0, wmax_smin = 1, wmin_smax = 2, wmax_smax = 3 };

struct FaceRecord {
  std::string id;
  FontCategory category = FontCategory::other;
  int units_per_em = 1000;
  AxisRange weight;
  AxisRange stretch;
  std::array<AdvanceTable, 4> corners;

  const AdvanceTable& corner(Corner c) const { return corners[static_cast<std::size_t>(c)]; }
  AdvanceTable& corner(Corner c) { return corners[static_cast<std::size_t>(c)]; }
};

// A typeface resolved at a concrete (weight, stretch) point.
class FaceInstance {
 public:
  FaceInstance(const FaceRecord& face, double weight, double stretch);

  const FaceRecord& face() const { return *face_; }
  double weight() const { return weight_; }
  double stretch() const { return stretch_; }

  // Bilinear blend of the four corner tables, in font units.
  double advance_units(char32_t cp) const;
  // Advance as a fraction of the em.
  double advance(char32_t cp) const { return advance_units(cp) / face_->units_per_em; }

 private:
  const FaceRecord* face_;
  double weight_;
  double stretch_;
  double tw_;
  double ts_;
};

// Rendered width in px of `text` (advance sum, no kerning).
double measure_text(std::string_view text, const FaceInstance& instance, double size);

// Immutable after loading; faces keep their load order.
class FontCatalog {
 public:
  void add(FaceRecord face);

  const FaceRecord& face(std::string_view id) const;
  const FaceRecord* find(std::string_view id) const;
  bool contains(std::string_view id) const { return find(id) != nullptr; }

  const std::vector<FaceRecord>& faces() const { return faces_; }
  std::size_t size() const { return faces_.size(); }
  bool empty() const { return faces_.empty(); }

  const std::vector<std::string>& warnings() const { return warnings_; }
  void warn(std::string message) { warnings_.push_back(std::move(message)); }

 private:
  std::vector<FaceRecord> faces_;
  std::map<std::string, std::size_t, std::less<>> index_;
  std::vector<std::string> warnings_;
};

struct FontSource {
  std::filesystem::path path;
  std::optional<std::string> id;               // overrides the id found in the file
  std::optional<FontCategory> category;        // overrides the detected category
};

// Sidecar JSON (see README for the schema).
FaceRecord parse_sidecar(std::string_view json_text, std::vector<std::string>* warnings = nullptr);

// OpenType / TrueType binary. Variable fonts contribute their wght/wdth axes
// and HVAR advance deltas; static fonts get degenerate axes.
FaceRecord parse_font_binary(std::span<const std::byte> data, std::vector<std::string>* warnings = nullptr);

// Loads every source; files ending in .json are sidecars, everything else is
// treated as a font binary. Throws ParseError, DuplicateId, EmptyCatalog.
FontCatalog load_catalog(std::span<const FontSource> sources);
FontCatalog load_catalog(std::span<const std::filesystem::path> paths);

}  // namespace typoster
