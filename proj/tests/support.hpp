#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "typoster/config.hpp"
#include "typoster/core_model.hpp"
#include "typoster/font_metrics.hpp"
#include "typoster/rng.hpp"

namespace test_support {

inline std::filesystem::path fixtures() { return std::filesystem::path(TYPOSTER_TEST_DIR) / "fixtures"; }
inline std::filesystem::path fixture_font(const std::string& name) { return fixtures() / "fonts" / name; }
inline std::filesystem::path data_dir() { return std::filesystem::path(TYPOSTER_DATA_DIR); }

// TestMono, TestSerif, TestSans, TestDisplay in that order.
inline typoster::FontCatalog test_catalog() {
  std::vector<std::filesystem::path> paths{fixture_font("test_mono.json"), fixture_font("test_serif.json"),
                                           fixture_font("test_sans.json"), fixture_font("test_display.json")};
  return typoster::load_catalog(paths);
}

inline typoster::FontCatalog mono_catalog() {
  std::vector<std::filesystem::path> paths{fixture_font("test_mono.json")};
  return typoster::load_catalog(paths);
}

inline typoster::FontCatalog bundled_catalog() {
  return typoster::load_catalog(typoster::AppConfig::defaults().fonts);
}

inline typoster::TextBoxGene box(std::string content, double size, typoster::Alignment a = typoster::Alignment::left,
                                 std::string face = "TestMono", double weight = 400, double stretch = 100) {
  typoster::TextBoxGene g;
  g.content = std::move(content);
  g.typeface = std::move(face);
  g.weight = weight;
  g.stretch = stretch;
  g.size = size;
  g.alignment = a;
  return g;
}

inline typoster::PosterGenotype poster(std::vector<typoster::TextBoxGene> boxes,
                                       typoster::VerticalAlignment v = typoster::VerticalAlignment::top) {
  typoster::PosterGenotype g;
  g.vertical_alignment = v;
  g.textboxes = std::move(boxes);
  return g;
}

// Random genotype over the catalog with up to `max_boxes` boxes.
inline typoster::PosterGenotype random_genotype(const typoster::FontCatalog& fonts, typoster::Rng& rng,
                                                std::size_t max_boxes, bool allow_empty_content = true) {
  static const std::vector<std::string> kWords{"", "A", "AB BA", "poster", "Hello world", "é à ç", "WWWWWWWWWWWW",
                                               "i", "la vie est belle", "x y z", "ÀÉÎÕÜ", "typography matters"};
  typoster::PosterGenotype g;
  g.size.width = 50.0 + rng.uniform01() * 250.0;
  g.size.height = 50.0 + rng.uniform01() * 250.0;
  g.margins = {rng.uniform01() * 20.0, rng.uniform01() * 20.0, rng.uniform01() * 20.0, rng.uniform01() * 20.0};
  g.vertical_alignment = static_cast<typoster::VerticalAlignment>(rng.index(3));
  const std::size_t n = 1 + rng.index(max_boxes);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& face = fonts.faces()[rng.index(fonts.size())];
    typoster::TextBoxGene b;
    std::string content = kWords[rng.index(kWords.size())];
    if (!allow_empty_content && content.empty()) content = "x";
    b.content = content;
    b.typeface = face.id;
    b.weight = face.weight.min + rng.uniform01() * face.weight.span();
    b.stretch = face.stretch.min + rng.uniform01() * face.stretch.span();
    b.size = static_cast<double>(rng.uniform_int(6, 60));
    b.alignment = static_cast<typoster::Alignment>(rng.index(3));
    g.textboxes.push_back(b);
  }
  return g;
}

}  // namespace test_support
