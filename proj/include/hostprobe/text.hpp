#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hostprobe {

// Decode the next UTF-8 codepoint at position i; advances i.
// Invalid sequences yield U+FFFD and advance by one byte.
uint32_t utf8_next(std::string_view s, size_t& i);

void utf8_append(std::string& out, uint32_t cp);

// Alphanumeric under the normalization rules: ASCII [a-z0-9] after lowering,
// plus any non-ASCII codepoint outside the known punctuation/symbol ranges.
bool is_word_codepoint(uint32_t cp);

// ASCII + Latin-1 lowercase; other codepoints pass through.
uint32_t lower_codepoint(uint32_t cp);

std::string trim(std::string_view s);
std::string collapse_whitespace(std::string_view s);
std::vector<std::string> split_whitespace(std::string_view s);
std::string join(const std::vector<std::string>& parts, const std::string& sep);
std::string ascii_lower(std::string_view s);

}  // namespace hostprobe
