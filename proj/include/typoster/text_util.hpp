#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace typoster {

// Decodes UTF-8; malformed bytes decode to U+FFFD one byte at a time.
std::u32string utf8_decode(std::string_view text);
std::string utf8_encode(std::u32string_view text);
void utf8_append(std::string& out, char32_t cp);

// Number of code points.
std::size_t utf8_length(std::string_view text);

// Lowercases ASCII, Latin-1 and Latin Extended-A letters.
char32_t to_lower(char32_t cp);
char32_t to_upper(char32_t cp);
std::string to_lower(std::string_view text);
bool is_upper(char32_t cp);
bool is_letter(char32_t cp);
bool is_space(char32_t cp);

std::string trim(std::string_view text);
std::vector<std::string> split_whitespace(std::string_view text);

// Fixed-point formatting with at most `decimals` places and trailing zeros
// stripped ("12", "7.05", "-0.5"). Negative zero prints as "0".
std::string format_number(double value, int decimals = 4);

}  // namespace typoster
