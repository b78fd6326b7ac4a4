#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "support.hpp"
#include "typoster/errors.hpp"
#include "typoster/evolution.hpp"

using namespace typoster;
using test_support::box;
using test_support::poster;

namespace {

std::vector<RankKey> random_keys(Rng& rng, std::size_t n) {
  std::vector<RankKey> keys(n);
  for (auto& k : keys) {
    // coarse values produce ties on both fields
    k.objective = static_cast<double>(rng.uniform_int(0, 10)) / 10.0;
    k.penalty = rng.chance(0.4) ? 0.0 : static_cast<double>(rng.uniform_int(1, 4)) / 4.0;
  }
  return keys;
}

EvaluationContext mono_context(const FontCatalog& fonts, std::size_t lines) {
  EvaluationContext ctx;
  ctx.fonts = &fonts;
  ctx.profile = profile_from_charges(std::vector<int>(lines, 0));
  return ctx;
}

}  // namespace

TEST_CASE("lexicographic order") {
  std::vector<RankKey> keys{{0.9, 0.5}, {0.1, 0.0}, {0.5, 0.0}, {0.99, 0.25}};
  CHECK(lexicographic_order(keys) == std::vector<std::size_t>{2, 1, 3, 0});
}

TEST_CASE("stochastic ranking with pf = 0 equals the lexicographic sort") {
  Rng data(1);
  for (int trial = 0; trial < 100; ++trial) {
    const auto keys = random_keys(data, 30);
    Rng rng(static_cast<std::uint64_t>(trial));
    CHECK(stochastic_rank(keys, 0.0, rng) == lexicographic_order(keys));
  }
}

TEST_CASE("stochastic ranking with pf = 1 sorts by objective only") {
  Rng data(2);
  for (int trial = 0; trial < 100; ++trial) {
    const auto keys = random_keys(data, 30);
    std::vector<std::size_t> expect(keys.size());
    std::iota(expect.begin(), expect.end(), 0);
    std::stable_sort(expect.begin(), expect.end(),
                     [&](std::size_t a, std::size_t b) { return keys[a].objective > keys[b].objective; });
    Rng rng(static_cast<std::uint64_t>(trial));
    CHECK(stochastic_rank(keys, 1.0, rng) == expect);
  }
}

TEST_CASE("stochastic ranking with all feasible is an objective sort for any pf") {
  std::vector<RankKey> keys{{0.2, 0}, {0.8, 0}, {0.5, 0}};
  Rng rng(3);
  CHECK(stochastic_rank(keys, 0.45, rng) == std::vector<std::size_t>{1, 2, 0});
}

TEST_CASE("tournament selection") {
  Rng rng(5);
  for (int i = 0; i < 1000; ++i) {
    CHECK(tournament_select(10, 3, rng) < 10);
  }
  // k = 1 is uniform
  std::vector<int> counts(5, 0);
  for (int i = 0; i < 10000; ++i) counts[tournament_select(5, 1, rng)]++;
  for (int c : counts) CHECK(std::abs(c - 2000) < 200);
  // k = n picks rank 0 with probability 1 - (1 - 1/n)^n
  const std::size_t n = 10;
  int zero = 0;
  for (int i = 0; i < 10000; ++i) zero += tournament_select(n, n, rng) == 0 ? 1 : 0;
  const double expected = 1.0 - std::pow(1.0 - 1.0 / n, static_cast<double>(n));
  CHECK(std::abs(zero / 10000.0 - expected) < 0.02);
}

TEST_CASE("init_population builds valid genotypes") {
  const auto fonts = test_support::test_catalog();
  EvolutionConfig cfg;
  Rng rng(1);
  const auto pop = init_population({"one", "two", "three"}, {}, cfg, fonts, rng);
  CHECK(pop.size() == 30);
  for (const auto& ind : pop) {
    CHECK_NOTHROW(validate_genotype(ind.genotype(), fonts, cfg.font_size_range));
    CHECK(ind.genotype().textboxes[2].content == "three");
  }
  Rng again(1);
  const auto pop2 = init_population({"one", "two", "three"}, {}, cfg, fonts, again);
  for (std::size_t i = 0; i < pop.size(); ++i) CHECK(pop[i].genotype() == pop2[i].genotype());

  const auto mono = test_support::mono_catalog();
  Rng r3(2);
  for (const auto& ind : init_population({"x"}, {}, cfg, mono, r3)) {
    CHECK(ind.genotype().textboxes[0].typeface == "TestMono");
  }
  FontCatalog empty;
  CHECK_THROWS_AS(init_population({"x"}, {}, cfg, empty, r3), EmptyCatalog);
}

TEST_CASE("crossover") {
  auto a = poster({box("l1", 10), box("l2", 12)}, VerticalAlignment::top);
  auto b = poster({box("l1", 30, Alignment::right), box("l2", 40, Alignment::center)}, VerticalAlignment::bottom);
  Rng rng(1);
  CHECK(crossover(a, a, rng) == a);
  int from_a = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto c = crossover(a, b, rng);
    for (std::size_t k = 0; k < 2; ++k) {
      const bool is_a = c.textboxes[k] == a.textboxes[k];
      CHECK((is_a || c.textboxes[k] == b.textboxes[k]));
      from_a += is_a ? 1 : 0;
    }
  }
  CHECK(std::abs(from_a / 2000.0 - 0.5) < 0.05);
  auto other = poster({box("different", 10), box("l2", 12)});
  CHECK_THROWS_AS(crossover(a, other, rng), MismatchedLines);
  auto shorter = poster({box("l1", 10)});
  CHECK_THROWS_AS(crossover(a, shorter, rng), MismatchedLines);
}

TEST_CASE("mutation") {
  const auto fonts = test_support::test_catalog();
  EvolutionConfig cfg;
  cfg.mutation_probability = 0.0;
  auto g = poster({box("x", 10)});
  Rng rng(1);
  CHECK_FALSE(mutate(g, cfg, fonts, rng));
  CHECK(g == poster({box("x", 10)}));

  cfg.mutation_probability = 1.0;
  cfg.size_delta = {-5, -5};
  g = poster({box("x", 10)});
  mutate(g, cfg, fonts, rng);
  CHECK(g.textboxes[0].size == 6);  // clamped at the lower bound
  CHECK(g.textboxes[0].typeface != "TestMono");

  // closed over the valid space
  cfg.size_delta = {-5, 5};
  Rng r2(9);
  for (int i = 0; i < 500; ++i) {
    auto h = test_support::random_genotype(fonts, r2, 4);
    for (auto& b : h.textboxes) b.size = std::clamp(b.size, 6.0, 60.0);
    const auto content = h.textboxes;
    mutate(h, cfg, fonts, r2);
    CHECK_NOTHROW(validate_genotype(h, fonts, cfg.font_size_range));
    for (std::size_t k = 0; k < h.textboxes.size(); ++k) CHECK(h.textboxes[k].content == content[k].content);
  }
}

TEST_CASE("typeface mutation clamps to the new face's axes") {
  // TestDisplay: weight [700, 900], stretch [50, 100].
  std::vector<std::filesystem::path> paths{test_support::fixture_font("test_mono.json"),
                                           test_support::fixture_font("test_display.json")};
  const auto fonts = load_catalog(paths);
  EvolutionConfig cfg;
  cfg.mutation_probability = 1.0;
  cfg.size_delta = {0, 0};
  Rng rng(4);
  for (int i = 0; i < 100; ++i) {
    auto g = poster({box("x", 10, Alignment::left, "TestMono", 100, 75)});
    mutate(g, cfg, fonts, rng);
    const auto& b = g.textboxes[0];
    CHECK(b.typeface == "TestDisplay");
    CHECK(b.weight >= 700);
    CHECK(b.stretch <= 100);
  }
}

TEST_CASE("evolve: sizes, stats rows, determinism and elitism") {
  const auto fonts = test_support::test_catalog();
  const std::vector<std::string> lines{"Fear the", "storm. Love", "the calm."};
  EvolutionConfig cfg;
  cfg.generations = 25;
  cfg.seed = 3;
  const auto ctx = mono_context(fonts, lines.size());
  const auto r1 = evolve(lines, {}, cfg, ctx);
  const auto r2 = evolve(lines, {}, cfg, ctx);
  CHECK(r1.stats.rows.size() == 26);
  CHECK(r1.population.size() == 30);
  CHECK(r1.stats.to_csv() == r2.stats.to_csv());
  CHECK(serialize_genotype(r1.best.genotype()) == serialize_genotype(r2.best.genotype()));
  for (std::size_t i = 1; i < r1.stats.rows.size(); ++i) {
    const auto& prev = r1.stats.rows[i - 1];
    const auto& cur = r1.stats.rows[i];
    CHECK_FALSE(lexicographically_better({prev.best_objective, prev.best_penalty}, {cur.best_objective, cur.best_penalty}));
  }
  // threads do not change the outcome
  cfg.threads = 4;
  CHECK(evolve(lines, {}, cfg, ctx).stats.to_csv() == r1.stats.to_csv());
}

TEST_CASE("evolve with zero generations returns the best initial individual") {
  const auto fonts = test_support::test_catalog();
  EvolutionConfig cfg;
  cfg.generations = 0;
  const auto r = evolve({"a", "b"}, {}, cfg, mono_context(fonts, 2));
  CHECK(r.stats.rows.size() == 1);
  CHECK(r.best.penalty() == r.stats.rows[0].best_penalty);
  CHECK(r.best.objective() == r.stats.rows[0].best_objective);
}

TEST_CASE("config validation") {
  EvolutionConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.elite_size = 30;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg = {};
  cfg.tournament_size = 31;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg = {};
  cfg.mutation_probability = 1.5;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
}

TEST_CASE("run stats CSV round trip") {
  RunStats s;
  GenerationStats a;
  a.generation = 0;
  a.best_objective = 0.123456;
  a.mean_penalty = 0.5;
  a.feasible_count = 3;
  a.best_metrics.fill(0.25);
  s.rows.push_back(a);
  a.generation = 1;
  s.rows.push_back(a);
  const auto csv = s.to_csv();
  CHECK(csv.rfind("generation,best_objective,mean_objective,best_penalty,mean_penalty,feasible_count,best_text_legibility,mean_text_legibility", 0) == 0);
  const auto back = RunStats::from_csv(csv);
  CHECK(back.to_csv() == csv);
  CHECK_THROWS_AS(RunStats::from_csv("bad header\n"), SchemaError);
}
