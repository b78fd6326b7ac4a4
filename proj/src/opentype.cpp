// Minimal OpenType reader: enough of head/hhea/hmtx/cmap/name/OS2/post/fvar/HVAR
// to recover advance widths at the corners of the wght x wdth design space.

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "typoster/errors.hpp"
#include "typoster/font_metrics.hpp"
#include "typoster/text_util.hpp"

namespace typoster {

namespace {

class Reader {
 public:
  explicit Reader(std::span<const std::byte> data) : data_(data) {}

  std::size_t size() const { return data_.size(); }

  void need(std::size_t offset, std::size_t len) const {
    if (offset > data_.size() || len > data_.size() - offset) {
      throw ParseError("font data truncated");
    }
  }
  std::uint8_t u8(std::size_t off) const {
    need(off, 1);
    return static_cast<std::uint8_t>(data_[off]);
  }
  std::uint16_t u16(std::size_t off) const {
    need(off, 2);
    return static_cast<std::uint16_t>((static_cast<unsigned>(data_[off]) << 8) | static_cast<unsigned>(data_[off + 1]));
  }
  std::int16_t i16(std::size_t off) const { return static_cast<std::int16_t>(u16(off)); }
  std::uint32_t u32(std::size_t off) const {
    return (static_cast<std::uint32_t>(u16(off)) << 16) | u16(off + 2);
  }
  std::int32_t i32(std::size_t off) const { return static_cast<std::int32_t>(u32(off)); }
  double fixed(std::size_t off) const { return i32(off) / 65536.0; }
  double f2dot14(std::size_t off) const { return i16(off) / 16384.0; }
  std::string tag(std::size_t off) const {
    need(off, 4);
    std::string t(4, ' ');
    for (std::size_t i = 0; i < 4; ++i) {
      t[i] = static_cast<char>(data_[off + i]);
    }
    return t;
  }

 private:
  std::span<const std::byte> data_;
};

struct Table {
  std::size_t offset = 0;
  std::size_t length = 0;
};

std::map<std::string, Table> read_directory(const Reader& r) {
  const auto version = r.u32(0);
  if (version != 0x00010000 && version != 0x4F54544F /* OTTO */ && version != 0x74727565 /* true */) {
    throw ParseError("not an OpenType/TrueType font");
  }
  const auto num_tables = r.u16(4);
  std::map<std::string, Table> tables;
  for (std::size_t i = 0; i < num_tables; ++i) {
    const std::size_t rec = 12 + 16 * i;
    Table t{r.u32(rec + 8), r.u32(rec + 12)};
    r.need(t.offset, t.length);
    tables[r.tag(rec)] = t;
  }
  return tables;
}

const Table& require(const std::map<std::string, Table>& tables, const char* tag) {
  const auto it = tables.find(tag);
  if (it == tables.end()) {
    throw ParseError(std::string("font lacks required table '") + tag + "'");
  }
  return it->second;
}

// codepoint -> glyph id
std::map<char32_t, std::uint16_t> read_cmap(const Reader& r, const Table& cmap) {
  const auto base = cmap.offset;
  const auto count = r.u16(base + 2);
  std::optional<std::size_t> fmt12;
  std::optional<std::size_t> fmt4;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t rec = base + 4 + 8 * i;
    const auto platform = r.u16(rec);
    const auto encoding = r.u16(rec + 2);
    const std::size_t sub = base + r.u32(rec + 4);
    const bool unicode = platform == 0 || (platform == 3 && (encoding == 1 || encoding == 10));
    if (!unicode) {
      continue;
    }
    const auto format = r.u16(sub);
    if (format == 12 && !fmt12) {
      fmt12 = sub;
    } else if (format == 4 && !fmt4) {
      fmt4 = sub;
    }
  }
  std::map<char32_t, std::uint16_t> out;
  if (fmt12) {
    const auto groups = r.u32(*fmt12 + 12);
    for (std::size_t g = 0; g < groups; ++g) {
      const std::size_t rec = *fmt12 + 16 + 12 * g;
      const auto start = r.u32(rec);
      const auto end = r.u32(rec + 4);
      const auto glyph = r.u32(rec + 8);
      if (end < start || end - start > 0x10FFFF) {
        throw ParseError("corrupt cmap format 12 group");
      }
      for (std::uint32_t cp = start; cp <= end; ++cp) {
        out[cp] = static_cast<std::uint16_t>(glyph + (cp - start));
      }
    }
    return out;
  }
  if (fmt4) {
    const std::size_t sub = *fmt4;
    const std::size_t seg_count = r.u16(sub + 6) / 2;
    const std::size_t ends = sub + 14;
    const std::size_t starts = ends + 2 * seg_count + 2;
    const std::size_t deltas = starts + 2 * seg_count;
    const std::size_t range_offsets = deltas + 2 * seg_count;
    for (std::size_t s = 0; s < seg_count; ++s) {
      const auto end = r.u16(ends + 2 * s);
      const auto start = r.u16(starts + 2 * s);
      const auto delta = r.u16(deltas + 2 * s);
      const auto ro = r.u16(range_offsets + 2 * s);
      if (start > end) {
        throw ParseError("corrupt cmap format 4 segment");
      }
      for (std::uint32_t cp = start; cp <= end && cp != 0xFFFF; ++cp) {
        std::uint16_t glyph = 0;
        if (ro == 0) {
          glyph = static_cast<std::uint16_t>(cp + delta);
        } else {
          const std::size_t addr = range_offsets + 2 * s + ro + 2 * (cp - start);
          glyph = r.u16(addr);
          if (glyph != 0) {
            glyph = static_cast<std::uint16_t>(glyph + delta);
          }
        }
        if (glyph != 0) {
          out[cp] = glyph;
        }
      }
    }
    return out;
  }
  throw ParseError("font has no Unicode cmap (format 4 or 12)");
}

std::string read_family_name(const Reader& r, const std::map<std::string, Table>& tables) {
  const auto it = tables.find("name");
  if (it == tables.end()) {
    return {};
  }
  const auto base = it->second.offset;
  const auto count = r.u16(base + 2);
  const std::size_t strings = base + r.u16(base + 4);
  std::map<int, std::string> best;  // nameID -> decoded, preferring Windows English
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t rec = base + 6 + 12 * i;
    const auto platform = r.u16(rec);
    const auto language = r.u16(rec + 4);
    const auto name_id = r.u16(rec + 6);
    const auto length = r.u16(rec + 8);
    const auto offset = r.u16(rec + 10);
    if (name_id != 1 && name_id != 16) {
      continue;
    }
    std::string decoded;
    if (platform == 3 || platform == 0) {
      for (std::size_t k = 0; k + 1 < length; k += 2) {
        utf8_append(decoded, r.u16(strings + offset + k));
      }
      if (platform == 3 && language != 0x409 && best.contains(name_id)) {
        continue;
      }
    } else if (platform == 1) {
      if (best.contains(name_id)) {
        continue;
      }
      for (std::size_t k = 0; k < length; ++k) {
        decoded.push_back(static_cast<char>(r.u8(strings + offset + k)));
      }
    } else {
      continue;
    }
    best[name_id] = decoded;
  }
  if (best.contains(16)) {
    return best[16];
  }
  return best.contains(1) ? best[1] : std::string{};
}

FontCategory detect_category(const Reader& r, const std::map<std::string, Table>& tables) {
  if (const auto post = tables.find("post"); post != tables.end() && post->second.length >= 16) {
    if (r.u32(post->second.offset + 12) != 0) {
      return FontCategory::mono_space;
    }
  }
  const auto os2 = tables.find("OS/2");
  if (os2 == tables.end() || os2->second.length < 42) {
    return FontCategory::other;
  }
  const std::size_t panose = os2->second.offset + 32;
  const auto family = r.u8(panose);
  const auto serif_style = r.u8(panose + 1);
  const auto proportion = r.u8(panose + 3);
  if (family == 2 && proportion == 9) {
    return FontCategory::mono_space;
  }
  switch (family) {
    case 2:
      if (serif_style >= 11 && serif_style <= 13) {
        return FontCategory::sans_serif;
      }
      if (serif_style >= 2 && serif_style <= 10) {
        return FontCategory::serif;
      }
      return FontCategory::other;
    case 3:
      return FontCategory::script;
    case 4:
      return FontCategory::display;
    default:
      return FontCategory::other;
  }
}

double width_class_to_percent(int width_class) {
  static constexpr double kPercent[] = {100, 50, 62.5, 75, 87.5, 100, 112.5, 125, 150, 200};
  return (width_class >= 1 && width_class <= 9) ? kPercent[width_class] : 100.0;
}

struct Axis {
  double min = 0.0;
  double def = 0.0;
  double max = 0.0;
  std::size_t index = 0;
};

double region_scalar(const Reader& r, std::size_t region, std::size_t axis_count, const std::vector<double>& coords) {
  double scalar = 1.0;
  for (std::size_t a = 0; a < axis_count; ++a) {
    const std::size_t rec = region + 6 * a;
    const double start = r.f2dot14(rec);
    const double peak = r.f2dot14(rec + 2);
    const double end = r.f2dot14(rec + 4);
    const double c = a < coords.size() ? coords[a] : 0.0;
    if (start > peak || peak > end || (start < 0.0 && end > 0.0) || peak == 0.0) {
      continue;
    }
    if (c < start || c > end) {
      return 0.0;
    }
    if (c == peak) {
      continue;
    }
    scalar *= c < peak ? (c - start) / (peak - start) : (end - c) / (end - peak);
  }
  return scalar;
}

// Advance delta for (outer, inner) at normalized coordinates.
double item_delta(const Reader& r, std::size_t store, std::uint16_t outer, std::uint16_t inner,
                  const std::vector<double>& coords) {
  const std::size_t regions = store + r.u32(store + 2);
  const auto data_count = r.u16(store + 6);
  if (outer >= data_count) {
    return 0.0;
  }
  const std::size_t data = store + r.u32(store + 8 + 4 * outer);
  const auto item_count = r.u16(data);
  if (inner >= item_count) {
    return 0.0;
  }
  const auto word_field = r.u16(data + 2);
  const bool long_words = (word_field & 0x8000) != 0;
  const std::size_t word_count = word_field & 0x7FFF;
  const std::size_t region_index_count = r.u16(data + 4);
  const std::size_t word_size = long_words ? 4 : 2;
  const std::size_t short_size = long_words ? 2 : 1;
  const std::size_t row_size = word_count * word_size + (region_index_count - word_count) * short_size;
  const std::size_t row = data + 6 + 2 * region_index_count + row_size * inner;

  const std::size_t axis_count = r.u16(regions);
  const std::size_t region_count = r.u16(regions + 2);
  double delta = 0.0;
  std::size_t pos = row;
  for (std::size_t k = 0; k < region_index_count; ++k) {
    double d = 0.0;
    if (k < word_count) {
      d = long_words ? r.i32(pos) : r.i16(pos);
      pos += word_size;
    } else {
      d = long_words ? r.i16(pos) : static_cast<std::int8_t>(r.u8(pos));
      pos += short_size;
    }
    const auto region_index = r.u16(data + 6 + 2 * k);
    if (region_index >= region_count) {
      throw ParseError("HVAR region index out of range");
    }
    const std::size_t region = regions + 4 + region_index * axis_count * 6;
    delta += d * region_scalar(r, region, axis_count, coords);
  }
  return delta;
}

}  // namespace

FaceRecord parse_font_binary(std::span<const std::byte> data, std::vector<std::string>* warnings) {
  const Reader r(data);
  if (r.size() < 12) {
    throw ParseError("font data truncated");
  }
  const auto tables = read_directory(r);
  const auto& head = require(tables, "head");
  const auto& hhea = require(tables, "hhea");
  const auto& hmtx = require(tables, "hmtx");
  const auto& maxp = require(tables, "maxp");
  const auto& cmap = require(tables, "cmap");

  FaceRecord face;
  face.units_per_em = r.u16(head.offset + 18);
  if (face.units_per_em <= 0) {
    throw ParseError("font declares zero unitsPerEm");
  }
  const std::size_t num_glyphs = r.u16(maxp.offset + 4);
  const std::size_t num_metrics = r.u16(hhea.offset + 34);
  if (num_metrics == 0 || num_metrics > num_glyphs) {
    throw ParseError("corrupt hhea numberOfHMetrics");
  }
  r.need(hmtx.offset, 4 * num_metrics);
  auto default_advance = [&](std::size_t glyph) -> double {
    const std::size_t g = std::min(glyph, num_metrics - 1);
    return r.u16(hmtx.offset + 4 * g);
  };

  face.id = read_family_name(r, tables);
  if (face.id.empty()) {
    face.id = "unnamed";
  }
  face.category = detect_category(r, tables);

  double weight_class = 400.0;
  double width_percent = 100.0;
  if (const auto os2 = tables.find("OS/2"); os2 != tables.end() && os2->second.length >= 8) {
    weight_class = r.u16(os2->second.offset + 4);
    width_percent = width_class_to_percent(r.u16(os2->second.offset + 6));
  }

  std::vector<Axis> axes;
  std::optional<Axis> wght;
  std::optional<Axis> wdth;
  if (const auto fvar = tables.find("fvar"); fvar != tables.end()) {
    const auto base = fvar->second.offset;
    const std::size_t axes_offset = base + r.u16(base + 4);
    const std::size_t axis_count = r.u16(base + 8);
    const std::size_t axis_size = r.u16(base + 10);
    for (std::size_t a = 0; a < axis_count; ++a) {
      const std::size_t rec = axes_offset + axis_size * a;
      Axis axis{r.fixed(rec + 4), r.fixed(rec + 8), r.fixed(rec + 12), a};
      if (!(axis.min <= axis.def && axis.def <= axis.max)) {
        throw ParseError("fvar axis is not ordered min <= default <= max");
      }
      const auto tag = r.tag(rec);
      if (tag == "wght") {
        wght = axis;
      } else if (tag == "wdth") {
        wdth = axis;
      }
      axes.push_back(axis);
    }
  }
  if (wght) {
    face.weight = {wght->min, wght->def, wght->max};
  } else {
    face.weight = {weight_class, weight_class, weight_class};
    if (warnings != nullptr) {
      warnings->push_back("no wght axis; degenerate weight axis at " + format_number(weight_class));
    }
  }
  if (wdth) {
    face.stretch = {wdth->min, wdth->def, wdth->max};
  } else {
    face.stretch = {width_percent, width_percent, width_percent};
    if (warnings != nullptr) {
      warnings->push_back("no wdth axis; degenerate stretch axis at " + format_number(width_percent));
    }
  }

  const auto codepoints = read_cmap(r, cmap);

  std::optional<std::size_t> store;
  std::optional<std::size_t> mapping;
  if (const auto hvar = tables.find("HVAR"); hvar != tables.end()) {
    const auto base = hvar->second.offset;
    store = base + r.u32(base + 4);
    if (const auto m = r.u32(base + 8); m != 0) {
      mapping = base + m;
    }
  } else if (!axes.empty() && (wght || wdth) && warnings != nullptr) {
    warnings->push_back("variable font without HVAR; using default advances at every axis corner");
  }

  auto delta_indices = [&](std::size_t glyph) -> std::pair<std::uint16_t, std::uint16_t> {
    if (!mapping) {
      return {0, static_cast<std::uint16_t>(glyph)};
    }
    const auto format = r.u8(*mapping);
    const auto entry_format = r.u8(*mapping + 1);
    const std::size_t count = format == 0 ? r.u16(*mapping + 2) : r.u32(*mapping + 2);
    const std::size_t data_start = *mapping + (format == 0 ? 4 : 6);
    const std::size_t entry_size = ((entry_format & 0x30) >> 4) + 1;
    const unsigned inner_bits = (entry_format & 0x0F) + 1;
    if (count == 0) {
      return {0, 0};
    }
    const std::size_t idx = std::min(glyph, count - 1);
    std::uint32_t entry = 0;
    for (std::size_t b = 0; b < entry_size; ++b) {
      entry = (entry << 8) | r.u8(data_start + idx * entry_size + b);
    }
    return {static_cast<std::uint16_t>(entry >> inner_bits),
            static_cast<std::uint16_t>(entry & ((1u << inner_bits) - 1))};
  };

  auto normalized = [](const std::optional<Axis>& axis, bool at_max) -> double {
    if (!axis) {
      return 0.0;
    }
    if (at_max) {
      return axis->max > axis->def ? 1.0 : 0.0;
    }
    return axis->min < axis->def ? -1.0 : 0.0;
  };

  for (std::size_t c = 0; c < 4; ++c) {
    const bool w_max = (c & 1) != 0;
    const bool s_max = (c & 2) != 0;
    std::vector<double> coords(axes.size(), 0.0);
    if (wght) {
      coords[wght->index] = normalized(wght, w_max);
    }
    if (wdth) {
      coords[wdth->index] = normalized(wdth, s_max);
    }
    auto advance = [&](std::size_t glyph) {
      double a = default_advance(glyph);
      if (store) {
        const auto [outer, inner] = delta_indices(glyph);
        a += item_delta(r, *store, outer, inner, coords);
      }
      return std::max(0.0, a);
    };
    AdvanceTable table(advance(0));
    for (const auto& [cp, glyph] : codepoints) {
      if (glyph < num_glyphs) {
        table.set(cp, advance(glyph));
      }
    }
    face.corners[c] = std::move(table);
  }
  return face;
}

}  // namespace typoster
