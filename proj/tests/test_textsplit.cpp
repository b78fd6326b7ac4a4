#include "doctest.h"
#include "typoster/errors.hpp"
#include "typoster/text_util.hpp"
#include "typoster/textsplit.hpp"

using namespace typoster;
using Lines = std::vector<std::string>;

TEST_CASE("sentence splitting") {
  CHECK(split_sentences("Hello. World.") == Lines{"Hello.", "World."});
  CHECK(split_sentences("Dr. Smith left. He ran.") == Lines{"Dr. Smith left.", "He ran."});
  CHECK(split_sentences("no terminal punctuation") == Lines{"no terminal punctuation"});
  CHECK(split_sentences("J. R. Tolkien wrote. Really?! Yes…") == Lines{"J. R. Tolkien wrote.", "Really?!", "Yes…"});
  CHECK(split_sentences("It costs 3.50 now. 42 is next.") == Lines{"It costs 3.50 now.", "42 is next."});
  CHECK(split_sentences("lower. case stays").size() == 1);
  CHECK(split_sentences("   ").empty());
  CHECK(split_sentences("").empty());
}

TEST_CASE("division passes short sentences through") {
  Rng rng(1);
  CHECK(divide_lines({"short"}, {8, 16}, rng) == Lines{"short"});
}

TEST_CASE("division of a 40-char sentence") {
  const std::string sentence = "The quick brown fox jumps over a lazy do";
  REQUIRE(sentence.size() == 40);
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    Rng rng(seed);
    const auto lines = divide_lines({sentence}, {8, 16}, rng);
    CHECK(lines.size() >= 3);
    CHECK(lines.size() <= 4);
    std::string joined;
    for (const auto& l : lines) {
      CHECK(utf8_length(l) <= 16);
      joined += (joined.empty() ? "" : " ") + l;
    }
    CHECK(joined == sentence);
  }
}

TEST_CASE("unsplittable words stay whole") {
  Rng rng(1);
  const std::string word(30, 'x');
  CHECK(divide_lines({word}, {8, 16}, rng) == Lines{word});
  const auto lines = divide_lines({"a " + word + " b"}, {8, 16}, rng);
  CHECK(std::find(lines.begin(), lines.end(), word) != lines.end());
}

TEST_CASE("degenerate ranges") {
  Rng rng(1);
  CHECK_THROWS_AS(divide_lines({"x"}, {0, 16}, rng), DegenerateRange);
  CHECK_THROWS_AS(divide_lines({"x"}, {17, 16}, rng), DegenerateRange);
}

TEST_CASE("division is deterministic and lossless over random texts") {
  Rng text_rng(77);
  const std::vector<std::string> words{"a", "poster", "typography", "é", "layout", "the", "colour", "variable",
                                       "x", "emotion", "de", "saudade", "lumière"};
  for (int i = 0; i < 1000; ++i) {
    std::string text;
    const auto n = 1 + text_rng.index(12);
    for (std::size_t k = 0; k < n; ++k) {
      text += (k ? " " : "") + words[text_rng.index(words.size())];
    }
    Rng a(static_cast<std::uint64_t>(i));
    Rng b(static_cast<std::uint64_t>(i));
    const auto la = divide_lines({text}, {8, 16}, a);
    CHECK(la == divide_lines({text}, {8, 16}, b));
    std::string joined;
    for (const auto& l : la) {
      joined += (joined.empty() ? "" : " ") + l;
      CHECK((utf8_length(l) <= 16 || split_whitespace(l).size() == 1));
    }
    CHECK(joined == text);
  }
}
