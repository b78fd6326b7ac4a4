#include <cmath>

#include "doctest.h"
#include "oracle/metric_oracle.hpp"
#include "support.hpp"
#include "typoster/errors.hpp"
#include "typoster/metrics.hpp"

using namespace typoster;
using test_support::box;
using test_support::poster;

namespace {

// Hand-built layout on a 100-wide available area.
LayoutSolution widths(std::vector<double> text_widths, double available = 100.0) {
  LayoutSolution L;
  L.available_width = available;
  L.available_height = 100.0;
  double y = 0;
  for (double w : text_widths) {
    LayoutBox b;
    b.y = y;
    b.cell_width = available;
    b.cell_height = 10;
    b.text_width = w;
    y += 10;
    L.grid_height += 10;
    L.boxes.push_back(b);
  }
  return L;
}

LayoutSolution pitches(std::vector<double> tops) {
  LayoutSolution L = widths(std::vector<double>(tops.size(), 50.0));
  for (std::size_t i = 0; i < tops.size(); ++i) L.boxes[i].y = tops[i];
  return L;
}

std::map<std::string, oracle::Face> oracle_faces() {
  std::map<std::string, oracle::Face> faces;
  for (auto n : {"test_mono.json", "test_serif.json", "test_sans.json", "test_display.json"}) {
    auto f = oracle::load_face(test_support::fixture_font(n));
    faces[f.id] = f;
  }
  return faces;
}

}  // namespace

TEST_CASE("text legibility") {
  CHECK(text_legibility(widths({10, 100})) == 1.0);
  CHECK(text_legibility(widths({200})) == 0.0);
  CHECK(text_legibility(widths({150})) == doctest::Approx(0.5));
  CHECK(text_legibility(widths({150, 50})) == doctest::Approx(0.75));
  CHECK(text_legibility(widths({500})) == 0.0);
}

TEST_CASE("grid appropriateness is a boundary-inclusive height test") {
  const auto fonts = test_support::mono_catalog();
  PosterGenotype g = poster({box("a", 10)});
  g.margins = {0, 0, 0, 0};
  LayoutSolution L = widths({1});
  L.available_width = 141;
  L.grid_height = 100;
  CHECK(grid_appropriateness(L, g) == 1.0);
  L.grid_height = 101;
  CHECK(grid_appropriateness(L, g) == 0.0);
  g.margins = {5, 5, 5, 5};
  L.available_width = 126.9;
  L.grid_height = 85.9;
  CHECK(grid_appropriateness(L, g) == 1.0);
  L.grid_height = 86.9;
  CHECK(grid_appropriateness(L, g) == 0.0);
}

TEST_CASE("alignment") {
  MetricParams p;
  auto g1 = poster({box("a", 10), box("b", 10)});
  CHECK(alignment(widths({40, 40}), g1, p) == doctest::Approx(1.0));
  CHECK(alignment(widths({40, 50}), g1, p) == doctest::Approx(0.6));
  auto g3 = poster({box("a", 10, Alignment::left), box("b", 10, Alignment::center), box("c", 10, Alignment::right)});
  CHECK(alignment(widths({40, 40, 40}), g3, p) == doctest::Approx(0.8 + 0.2 / 3.0));
  auto single = poster({box("a", 10)});
  CHECK(alignment(widths({77}), single, p) == doctest::Approx(1.0));
}

TEST_CASE("regularity uses second-order pitch differences") {
  MetricParams p;
  CHECK(regularity(pitches({0, 10, 20, 30}), p) == doctest::Approx(1.0));
  CHECK(regularity(pitches({0, 10, 30, 40}), p) == doctest::Approx(0.5));
  CHECK(regularity(pitches({0, 50}), p) == 1.0);
  // invariant under vertical translation
  CHECK(regularity(pitches({5, 17, 40, 41}), p) == doctest::Approx(regularity(pitches({105, 117, 140, 141}), p)));
}

TEST_CASE("justification") {
  MetricParams p;
  CHECK(justification(widths({100}), p) == doctest::Approx(1.0));
  CHECK(justification(widths({200}), p) == 0.0);
  CHECK(justification(widths({40}), p) == doctest::Approx(0.8));
  CHECK(justification(widths({150}), p) == doctest::Approx(0.5));
}

TEST_CASE("typeface pairing") {
  const auto fonts = test_support::test_catalog();
  CHECK(typeface_pairing(poster({box("a", 10), box("b", 10)}), fonts) == 1.0);
  CHECK(typeface_pairing(poster({box("a", 10, Alignment::left, "TestMono"), box("b", 10, Alignment::left, "TestSerif"),
                                 box("c", 10, Alignment::left, "TestSans", 400, 100)}),
                         fonts) == 0.0);
  // three faces, two categories
  std::vector<std::filesystem::path> paths{test_support::fixture_font("test_mono.json"),
                                           test_support::fixture_font("test_serif.json"),
                                           test_support::fixture_font("TestStatic.ttf")};
  const auto mixed = load_catalog(paths);
  CHECK(typeface_pairing(poster({box("a", 10, Alignment::left, "TestMono"), box("b", 10, Alignment::left, "TestSerif"),
                                 box("c", 10, Alignment::left, "Test Static", 700, 100)}),
                         mixed) == doctest::Approx(0.5));
}

TEST_CASE("negative space") {
  MetricParams p;
  PosterGenotype g = poster({box("a", 10)});
  g.size = {100, 100};
  LayoutSolution L = widths({10});
  L.boxes[0].cell_width = 100;
  L.boxes[0].cell_height = 100;
  L.boxes[0].ink_coverage = 0.5;
  CHECK(negative_space_fraction(L, g, p) == doctest::Approx(1.0));
  L.boxes[0].ink_coverage = 0.0;
  CHECK(negative_space_fraction(L, g, p) == 0.0);
  L.boxes[0].ink_coverage = 0.25;
  CHECK(negative_space_fraction(L, g, p) == doctest::Approx(0.5));
}

TEST_CASE("balance closed forms") {
  PosterGenotype g = poster({box("a", 10, Alignment::center)}, VerticalAlignment::middle);
  g.size = {120, 120};
  // box whose anchor lands exactly on the expected centre
  LayoutSolution L;
  LayoutBox b;
  b.x = 10;
  b.cell_width = 100;
  b.cell_height = 12;
  b.y = 45;  // anchor at y + h/2 - h/12 = 50, the expected centre
  b.ink_coverage = 0.3;
  b.background = {255, 255, 255};
  L.boxes.push_back(b);
  const auto [cx, cy] = expected_balance_centre(g);
  CHECK(cx == doctest::Approx(60));
  CHECK(cy == doctest::Approx(50));
  CHECK(balance(L, g) == doctest::Approx(1.0));
  CHECK(balance_score(60 + 60, 50 + 60, 60, 50, 120, 120) == doctest::Approx(0.5));
  CHECK(optical_density({255, 255, 255}) == doctest::Approx(std::log10(255.0)));
  CHECK(optical_density({0, 0, 0}) == 0.0);
}

TEST_CASE("balance is scale invariant") {
  const auto fonts = test_support::test_catalog();
  Rng rng(4);
  for (int i = 0; i < 50; ++i) {
    auto g = test_support::random_genotype(fonts, rng, 5);
    const auto L = resolve_layout(g, fonts, ColorScheme{});
    auto g2 = g;
    g2.size.width *= 3;
    g2.size.height *= 3;
    auto L2 = L;
    for (auto& b : L2.boxes) {
      b.x *= 3;
      b.y *= 3;
      b.cell_width *= 3;
      b.cell_height *= 3;
    }
    CHECK(std::abs(balance(L, g) - balance(L2, g2)) < 1e-9);
  }
}

TEST_CASE("semantic layout modes") {
  MetricParams fixed;
  MetricParams relative;
  relative.layout_mode = LayoutMode::relative;
  LayoutSolution L = widths({1, 1});
  L.available_height = 100;
  L.boxes[0].cell_height = 25;
  L.boxes[1].cell_height = 25;
  L.grid_height = 50;
  const auto equal = profile_from_charges({0, 0});
  CHECK(semantic_layout(L, equal, fixed) == doctest::Approx(0.75));
  CHECK(semantic_layout(L, equal, relative) == doctest::Approx(1.0));
  L.boxes[0].cell_height = 50;
  L.boxes[1].cell_height = 50;
  L.grid_height = 100;
  CHECK(semantic_layout(L, equal, fixed) == doctest::Approx(1.0));
  // proportions match regardless of fill in relative mode
  const auto skew = profile_from_charges({0, 1});
  L.boxes[0].cell_height = 5;
  L.boxes[1].cell_height = 10;
  L.grid_height = 15;
  CHECK(semantic_layout(L, skew, relative) == doctest::Approx(1.0));
  CHECK_THROWS_AS(semantic_layout(L, profile_from_charges({0}), fixed), ProfileMismatch);
}

TEST_CASE("semantic typography") {
  const auto fonts = test_support::test_catalog();
  MetricParams p;
  auto same = poster({box("a", 10), box("b", 10), box("c", 10)});
  CHECK(semantic_typography(same, fonts, profile_from_charges({1, 1, 1}), p) == doctest::Approx(1.0));
  // charges [0, 5]: the emotional box carries the full weight span
  auto two = poster({box("a", 10, Alignment::left, "TestMono", 300), box("b", 10, Alignment::left, "TestMono", 700)});
  const auto br = semantic_typography_breakdown(two, fonts, profile_from_charges({0, 5}), p);
  CHECK(br.weight_score == doctest::Approx(1.0));
  CHECK(br.overall == doctest::Approx(1.0));
  CHECK(br.emphasis[0] == doctest::Approx(0.25));
  CHECK(br.features_over_threshold == 1);
  CHECK_THROWS_AS(semantic_typography(two, fonts, profile_from_charges({0}), p), ProfileMismatch);
}

TEST_CASE("semantic typography threshold divides by the count of emphasised features") {
  const auto fonts = test_support::test_catalog();
  MetricParams p;
  // weight and stretch both move far on an unexpected box; type design differs too
  auto g = poster({box("a", 10, Alignment::left, "TestMono", 100, 75),
                   box("b", 10, Alignment::left, "TestSerif", 900, 200),
                   box("c", 10, Alignment::left, "TestMono", 900, 125)});
  const auto br = semantic_typography_breakdown(g, fonts, profile_from_charges({0, 0, 0}), p);
  CHECK(br.features_over_threshold == 3);
  const double best = std::max({br.weight_score, br.stretch_score, br.type_design_score});
  CHECK(br.overall == doctest::Approx(best / 3.0));
  const auto faces = oracle_faces();
  CHECK(std::abs(br.overall - oracle::semantic_typography(g, faces, {0, 0, 0})) < 1e-12);
}

TEST_CASE("aggregation weights and stages") {
  MetricScores s{};
  s.fill(1.0);
  ObjectiveWeights w;
  auto r = aggregate(s, w, Stage::S3);
  CHECK(r.objective == doctest::Approx(1.0));
  CHECK(r.penalty == 0.0);
  s[static_cast<std::size_t>(MetricId::grid_appropriateness)] = 0.0;
  CHECK(aggregate(s, w, Stage::S3).penalty == doctest::Approx(0.5));
  MetricScores half{};
  half.fill(0.5);
  CHECK(aggregate(half, w, Stage::S2).objective == doctest::Approx(0.5));
  MetricScores mixed{};
  mixed[static_cast<std::size_t>(MetricId::semantic_layout)] = 1.0;
  CHECK(aggregate(mixed, w, Stage::S1).objective == doctest::Approx(0.5));
  CHECK(aggregate(mixed, w, Stage::S2).objective == 0.0);
  CHECK(aggregate(mixed, w, Stage::S3).objective == doctest::Approx(0.25));
}

TEST_CASE("weight validation") {
  ObjectiveWeights w;
  CHECK_NOTHROW(w.validate());
  w.aesthetic.balance = 0.5;
  CHECK_THROWS_AS(w.validate(), ConfigError);
  MetricParams p;
  CHECK_NOTHROW(p.validate());
  p.justification_factor = 0.5;
  CHECK_THROWS_AS(p.validate(), ConfigError);
}

TEST_CASE("metrics agree with the oracle on random posters") {
  const auto fonts = test_support::test_catalog();
  const auto faces = oracle_faces();
  const ColorScheme colors{{20, 30, 120}, {250, 240, 200}};
  MetricParams relative;
  relative.layout_mode = LayoutMode::relative;
  Rng rng(2024);
  for (int i = 0; i < 200; ++i) {
    const auto g = test_support::random_genotype(fonts, rng, 5);
    std::vector<int> charges;
    for (std::size_t k = 0; k < g.textboxes.size(); ++k) charges.push_back(static_cast<int>(rng.uniform_int(0, 4)));
    const auto profile = profile_from_charges(charges);
    const auto L = resolve_layout(g, fonts, colors);
    const auto O = oracle::layout(g, faces);
    const auto r = evaluate(g, L, profile, fonts, ObjectiveWeights{}, MetricParams{}, Stage::S3);
    CHECK(std::abs(r.score(MetricId::text_legibility) - oracle::legibility(O)) < 1e-9);
    CHECK(std::abs(r.score(MetricId::grid_appropriateness) - oracle::grid(O, g)) < 1e-9);
    CHECK(std::abs(r.score(MetricId::alignment) - oracle::alignment(O, g)) < 1e-9);
    CHECK(std::abs(r.score(MetricId::regularity) - oracle::regularity(O)) < 1e-9);
    CHECK(std::abs(r.score(MetricId::balance) - oracle::balance(O, g, colors.foreground, colors.background)) < 1e-9);
    CHECK(std::abs(r.score(MetricId::justification) - oracle::justification(O)) < 1e-9);
    CHECK(std::abs(r.score(MetricId::typeface_pairing) - oracle::pairing(g, faces)) < 1e-9);
    CHECK(std::abs(r.score(MetricId::negative_space) - oracle::negative_space(O, g)) < 1e-9);
    CHECK(std::abs(r.score(MetricId::semantic_layout) - oracle::semantic_layout(O, charges)) < 1e-9);
    CHECK(std::abs(semantic_layout(L, profile, relative) - oracle::semantic_layout(O, charges, true)) < 1e-9);
    CHECK(std::abs(r.score(MetricId::semantic_typography) - oracle::semantic_typography(g, faces, charges)) < 1e-9);
  }
}

TEST_CASE("report JSON has the fixed key order") {
  MetricScores s{};
  const auto j = to_json(aggregate(s, ObjectiveWeights{}, Stage::S1));
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  REQUIRE(keys.size() == 14);
  CHECK(keys.front() == "text_legibility");
  CHECK(keys[9] == "semantic_typography");
  CHECK(keys.back() == "penalty");
}
