#include "hostprobe/text.hpp"

#include <algorithm>
#include <cctype>

namespace hostprobe {

uint32_t utf8_next(std::string_view s, size_t& i) {
    const auto b = [&](size_t k) { return static_cast<uint8_t>(s[k]); };
    uint8_t c = b(i);
    if (c < 0x80) {
        ++i;
        return c;
    }
    auto cont = [&](size_t k) { return k < s.size() && (b(k) & 0xc0) == 0x80; };
    if ((c & 0xe0) == 0xc0 && cont(i + 1)) {
        uint32_t cp = (uint32_t(c & 0x1f) << 6) | (b(i + 1) & 0x3f);
        i += 2;
        return cp < 0x80 ? 0xFFFD : cp;
    }
    if ((c & 0xf0) == 0xe0 && cont(i + 1) && cont(i + 2)) {
        uint32_t cp = (uint32_t(c & 0x0f) << 12) | (uint32_t(b(i + 1) & 0x3f) << 6) |
                      (b(i + 2) & 0x3f);
        i += 3;
        return cp < 0x800 || (cp >= 0xD800 && cp <= 0xDFFF) ? 0xFFFD : cp;
    }
    if ((c & 0xf8) == 0xf0 && cont(i + 1) && cont(i + 2) && cont(i + 3)) {
        uint32_t cp = (uint32_t(c & 0x07) << 18) | (uint32_t(b(i + 1) & 0x3f) << 12) |
                      (uint32_t(b(i + 2) & 0x3f) << 6) | (b(i + 3) & 0x3f);
        i += 4;
        return cp < 0x10000 || cp > 0x10FFFF ? 0xFFFD : cp;
    }
    ++i;
    return 0xFFFD;
}

void utf8_append(std::string& out, uint32_t cp) {
    if (cp < 0x80) {
        out += static_cast<char>(cp);
    } else if (cp < 0x800) {
        out += static_cast<char>(0xc0 | (cp >> 6));
        out += static_cast<char>(0x80 | (cp & 0x3f));
    } else if (cp < 0x10000) {
        out += static_cast<char>(0xe0 | (cp >> 12));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3f));
        out += static_cast<char>(0x80 | (cp & 0x3f));
    } else {
        out += static_cast<char>(0xf0 | (cp >> 18));
        out += static_cast<char>(0x80 | ((cp >> 12) & 0x3f));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3f));
        out += static_cast<char>(0x80 | (cp & 0x3f));
    }
}

namespace {

struct Range {
    uint32_t lo, hi;
};

// Punctuation and symbol blocks treated as delimiters. Codepoints outside
// these ranges (and outside ASCII non-alnum) count as word characters, so
// letters of any script survive normalization.
constexpr Range kPunctRanges[] = {
    {0x0080, 0x00BF},  // Latin-1 punctuation and symbols
    {0x00D7, 0x00D7},  // multiplication sign
    {0x00F7, 0x00F7},  // division sign
    {0x02B9, 0x02DF},  // modifier marks
    {0x2000, 0x206F},  // general punctuation (incl. curly quotes, dashes)
    {0x2070, 0x209F},  // super/subscripts
    {0x20A0, 0x20CF},  // currency symbols
    {0x2100, 0x214F},  // letterlike symbols (tm, (c))
    {0x2190, 0x2BFF},  // arrows, math, box drawing, misc symbols
    {0x2E00, 0x2E7F},  // supplemental punctuation
    {0x3000, 0x303F},  // CJK symbols and punctuation
    {0xFE30, 0xFE4F},  // CJK compatibility forms
    {0xFE50, 0xFE6F},  // small form variants
    {0xFF01, 0xFF0F},  // fullwidth punctuation
    {0xFF1A, 0xFF20},
    {0xFF3B, 0xFF40},
    {0xFF5B, 0xFF65},
    {0xFFFD, 0xFFFD},  // replacement char from bad decodes
    {0x1F300, 0x1FAFF},  // emoji
};

}  // namespace

bool is_word_codepoint(uint32_t cp) {
    if (cp < 0x80) {
        return std::isalnum(static_cast<int>(cp));
    }
    for (const auto& r : kPunctRanges)
        if (cp >= r.lo && cp <= r.hi) return false;
    return true;
}

uint32_t lower_codepoint(uint32_t cp) {
    if (cp < 0x80) return static_cast<uint32_t>(std::tolower(static_cast<int>(cp)));
    if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;  // Latin-1 capitals
    return cp;
}

std::string trim(std::string_view s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

std::string collapse_whitespace(std::string_view s) {
    std::string out;
    bool in_ws = true;  // also trims leading whitespace
    for (char c : s) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            if (!in_ws) out += ' ';
            in_ws = true;
        } else {
            out += c;
            in_ws = false;
        }
    }
    if (!out.empty() && out.back() == ' ') out.pop_back();
    return out;
}

std::vector<std::string> split_whitespace(std::string_view s) {
    std::vector<std::string> out;
    size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
        if (j > i) out.emplace_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

std::string ascii_lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return out;
}

}  // namespace hostprobe
