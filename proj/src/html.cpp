#include "hostprobe/html.hpp"

#include <algorithm>
#include <cctype>

#include "hostprobe/text.hpp"
#include "hostprobe/url.hpp"

namespace hostprobe {

const char* mechanism_name(RedirectMechanism m) {
    switch (m) {
        case RedirectMechanism::http_status: return "http_status";
        case RedirectMechanism::meta_refresh: return "meta_refresh";
        case RedirectMechanism::script_location: return "script_location";
    }
    return "http_status";
}

std::optional<RedirectMechanism> mechanism_from_name(const std::string& name) {
    if (name == "http_status") return RedirectMechanism::http_status;
    if (name == "meta_refresh") return RedirectMechanism::meta_refresh;
    if (name == "script_location") return RedirectMechanism::script_location;
    return std::nullopt;
}

namespace {

bool starts_with_ci(std::string_view s, size_t pos, std::string_view prefix) {
    if (pos + prefix.size() > s.size()) return false;
    for (size_t i = 0; i < prefix.size(); ++i) {
        if (std::tolower(static_cast<unsigned char>(s[pos + i])) !=
            std::tolower(static_cast<unsigned char>(prefix[i])))
            return false;
    }
    return true;
}

size_t find_ci(std::string_view s, std::string_view needle, size_t from = 0) {
    if (needle.empty()) return std::string_view::npos;
    for (size_t i = from; i + needle.size() <= s.size(); ++i) {
        if (starts_with_ci(s, i, needle)) return i;
    }
    return std::string_view::npos;
}

std::string strip_html_comments(const std::string& html) {
    std::string out;
    out.reserve(html.size());
    size_t i = 0;
    while (i < html.size()) {
        if (html.compare(i, 4, "<!--") == 0) {
            auto end = html.find("-->", i + 4);
            i = end == std::string::npos ? html.size() : end + 3;
            continue;
        }
        out += html[i++];
    }
    return out;
}

// Decode text as declared; unknown charsets fall back to UTF-8 with
// replacement (re-encoding invalid sequences as U+FFFD).
std::string decode_to_utf8(const std::string& text,
                           const std::optional<std::string>& charset) {
    std::string cs = charset ? ascii_lower(*charset) : "utf-8";
    cs.erase(std::remove_if(cs.begin(), cs.end(),
                            [](unsigned char c) { return c == ' ' || c == '"' || c == '\''; }),
             cs.end());
    if (cs == "iso-8859-1" || cs == "latin-1" || cs == "latin1" || cs == "windows-1252" ||
        cs == "cp1252") {
        // windows-1252 superset mapping for the 0x80-0x9f range
        static const uint32_t cp1252[32] = {
            0x20AC, 0x81,   0x201A, 0x0192, 0x201E, 0x2026, 0x2020, 0x2021,
            0x02C6, 0x2030, 0x0160, 0x2039, 0x0152, 0x8D,   0x017D, 0x8F,
            0x90,   0x2018, 0x2019, 0x201C, 0x201D, 0x2022, 0x2013, 0x2014,
            0x02DC, 0x2122, 0x0161, 0x203A, 0x0153, 0x9D,   0x017E, 0x0178};
        std::string out;
        out.reserve(text.size());
        for (unsigned char c : text) {
            if (c < 0x80) {
                out += static_cast<char>(c);
            } else if (c < 0xa0) {
                utf8_append(out, cp1252[c - 0x80]);
            } else {
                utf8_append(out, c);
            }
        }
        return out;
    }
    // utf-8, us-ascii, and everything else: validate as UTF-8
    std::string out;
    out.reserve(text.size());
    size_t i = 0;
    while (i < text.size()) {
        uint32_t cp = utf8_next(text, i);
        utf8_append(out, cp);
    }
    return out;
}

std::string decode_entities(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    size_t i = 0;
    while (i < s.size()) {
        if (s[i] != '&') {
            out += s[i++];
            continue;
        }
        auto semi = s.find(';', i + 1);
        if (semi == std::string::npos || semi - i > 12) {
            out += s[i++];
            continue;
        }
        std::string ent = s.substr(i + 1, semi - i - 1);
        uint32_t cp = 0;
        if (!ent.empty() && ent[0] == '#') {
            try {
                cp = ent.size() > 1 && (ent[1] == 'x' || ent[1] == 'X')
                         ? static_cast<uint32_t>(std::stoul(ent.substr(2), nullptr, 16))
                         : static_cast<uint32_t>(std::stoul(ent.substr(1)));
            } catch (...) {
                cp = 0;
            }
        } else {
            std::string name = ascii_lower(ent);
            if (name == "amp") cp = '&';
            else if (name == "lt") cp = '<';
            else if (name == "gt") cp = '>';
            else if (name == "quot") cp = '"';
            else if (name == "apos") cp = '\'';
            else if (name == "nbsp") cp = ' ';
            else if (name == "ndash") cp = 0x2013;
            else if (name == "mdash") cp = 0x2014;
            else if (name == "copy") cp = 0xA9;
            else if (name == "reg") cp = 0xAE;
            else if (name == "trade") cp = 0x2122;
        }
        if (cp == 0 || cp > 0x10FFFF) {
            out += s[i++];
            continue;
        }
        utf8_append(out, cp);
        i = semi + 1;
    }
    return out;
}

struct Tag {
    std::string name;       // lowercase
    std::string attr_text;  // raw text between name and '>'
    size_t end = 0;         // index just past '>'
};

std::optional<Tag> next_tag(const std::string& html, size_t from,
                            const std::string& name) {
    size_t pos = from;
    while (true) {
        pos = find_ci(html, "<" + name, pos);
        if (pos == std::string::npos) return std::nullopt;
        size_t after = pos + 1 + name.size();
        if (after < html.size() &&
            (std::isspace(static_cast<unsigned char>(html[after])) || html[after] == '>' ||
             html[after] == '/')) {
            auto close = html.find('>', after);
            if (close == std::string::npos) return std::nullopt;
            Tag t;
            t.name = name;
            t.attr_text = html.substr(after, close - after);
            t.end = close + 1;
            return t;
        }
        pos = after;
    }
}

// Attribute value lookup tolerant of quoting styles.
std::optional<std::string> attr_value(const std::string& attr_text,
                                      const std::string& attr_name) {
    size_t pos = 0;
    while (pos < attr_text.size()) {
        pos = find_ci(attr_text, attr_name, pos);
        if (pos == std::string::npos) return std::nullopt;
        // must be a word boundary
        if (pos > 0 && (std::isalnum(static_cast<unsigned char>(attr_text[pos - 1])) ||
                        attr_text[pos - 1] == '-')) {
            pos += attr_name.size();
            continue;
        }
        size_t p = pos + attr_name.size();
        while (p < attr_text.size() && std::isspace(static_cast<unsigned char>(attr_text[p])))
            ++p;
        if (p >= attr_text.size() || attr_text[p] != '=') {
            pos = p;
            continue;
        }
        ++p;
        while (p < attr_text.size() && std::isspace(static_cast<unsigned char>(attr_text[p])))
            ++p;
        if (p >= attr_text.size()) return std::string();
        if (attr_text[p] == '"' || attr_text[p] == '\'') {
            char q = attr_text[p++];
            auto end = attr_text.find(q, p);
            return attr_text.substr(p, end == std::string::npos ? end : end - p);
        }
        size_t end = p;
        while (end < attr_text.size() &&
               !std::isspace(static_cast<unsigned char>(attr_text[end])) &&
               attr_text[end] != '"' && attr_text[end] != '\'')
            ++end;
        return attr_text.substr(p, end - p);
    }
    return std::nullopt;
}

}  // namespace

std::optional<std::string> charset_from_content_type(const std::string& content_type) {
    auto pos = find_ci(content_type, "charset=");
    if (pos == std::string::npos) return std::nullopt;
    size_t p = pos + 8;
    std::string out;
    while (p < content_type.size() && content_type[p] != ';' && content_type[p] != ' ') {
        if (content_type[p] != '"' && content_type[p] != '\'') out += content_type[p];
        ++p;
    }
    if (out.empty()) return std::nullopt;
    return ascii_lower(out);
}

std::optional<std::string> charset_from_meta(const std::string& html) {
    size_t pos = 0;
    while (true) {
        auto tag = next_tag(html, pos, "meta");
        if (!tag) return std::nullopt;
        if (auto cs = attr_value(tag->attr_text, "charset")) {
            if (!cs->empty()) return ascii_lower(*cs);
        }
        auto equiv = attr_value(tag->attr_text, "http-equiv");
        if (equiv && ascii_lower(*equiv) == "content-type") {
            if (auto content = attr_value(tag->attr_text, "content")) {
                if (auto cs = charset_from_content_type(*content)) return cs;
            }
        }
        pos = tag->end;
    }
}

std::string extract_title(const std::string& html,
                          const std::optional<std::string>& declared_charset) {
    std::string doc = strip_html_comments(html);
    auto open = next_tag(doc, 0, "title");
    if (!open) return "";
    auto close = find_ci(doc, "</title", open->end);
    std::string raw =
        doc.substr(open->end, close == std::string::npos ? close : close - open->end);
    std::string decoded = decode_entities(decode_to_utf8(raw, declared_charset));
    return collapse_whitespace(decoded);
}

namespace {

std::optional<std::string> parse_meta_refresh_content(const std::string& content,
                                                      int refresh_delay_max_s) {
    // "N" | "N; url=TARGET" with flexible spacing/quoting
    size_t p = 0;
    while (p < content.size() && std::isspace(static_cast<unsigned char>(content[p]))) ++p;
    size_t digits = p;
    while (digits < content.size() &&
           (std::isdigit(static_cast<unsigned char>(content[digits])) ||
            content[digits] == '.'))
        ++digits;
    if (digits == p) return std::nullopt;
    double delay = 0;
    try {
        delay = std::stod(content.substr(p, digits - p));
    } catch (...) {
        return std::nullopt;
    }
    if (delay > refresh_delay_max_s) return std::nullopt;  // non-navigational reload
    auto upos = find_ci(content, "url", digits);
    if (upos == std::string::npos) return std::nullopt;  // refresh without target
    auto eq = content.find('=', upos);
    if (eq == std::string::npos) return std::nullopt;
    std::string target = trim(content.substr(eq + 1));
    if (target.size() >= 2 && (target.front() == '"' || target.front() == '\'')) {
        char q = target.front();
        auto end = target.find(q, 1);
        target = target.substr(1, end == std::string::npos ? end : end - 1);
    }
    target = trim(target);
    if (target.empty()) return std::nullopt;
    return target;
}

std::string strip_js_comments(const std::string& js) {
    std::string out;
    out.reserve(js.size());
    size_t i = 0;
    char in_str = 0;  // "//" inside string literals (https://...) is not a comment
    while (i < js.size()) {
        char c = js[i];
        if (in_str) {
            out += c;
            if (c == '\\' && i + 1 < js.size()) {
                out += js[i + 1];
                i += 2;
                continue;
            }
            if (c == in_str) in_str = 0;
            ++i;
            continue;
        }
        if (c == '"' || c == '\'') {
            in_str = c;
            out += c;
            ++i;
            continue;
        }
        if (js.compare(i, 2, "/*") == 0) {
            auto end = js.find("*/", i + 2);
            i = end == std::string::npos ? js.size() : end + 2;
            continue;
        }
        if (js.compare(i, 2, "//") == 0) {
            auto end = js.find('\n', i + 2);
            i = end == std::string::npos ? js.size() : end + 1;
            continue;
        }
        out += c;
        ++i;
    }
    return out;
}

std::optional<std::string> script_location_target(const std::string& js_in) {
    const std::string js = strip_js_comments(js_in);
    static const std::string patterns[] = {
        "location.href", "location.replace", "window.location", "document.location",
        "location.assign",
    };
    size_t best = std::string::npos;
    for (const auto& pat : patterns) {
        size_t from = 0;
        while (true) {
            auto pos = find_ci(js, pat, from);
            if (pos == std::string::npos) break;
            size_t p = pos + pat.size();
            // optional ".href" after window./document. forms
            if (starts_with_ci(js, p, ".href")) p += 5;
            while (p < js.size() && std::isspace(static_cast<unsigned char>(js[p]))) ++p;
            bool call = p < js.size() && js[p] == '(';
            bool assign = p < js.size() && js[p] == '=' &&
                          (p + 1 >= js.size() || js[p + 1] != '=');
            if (call || assign) {
                ++p;
                while (p < js.size() && std::isspace(static_cast<unsigned char>(js[p]))) ++p;
                if (p < js.size() && (js[p] == '"' || js[p] == '\'')) {
                    if (pos < best) best = pos;
                }
            }
            from = pos + 1;
        }
    }
    if (best == std::string::npos) return std::nullopt;
    // re-extract the literal at the best position
    size_t p = js.find_first_of("\"'", best);
    char q = js[p];
    auto end = js.find(q, p + 1);
    if (end == std::string::npos) return std::nullopt;
    std::string target = js.substr(p + 1, end - p - 1);
    return target.empty() ? std::nullopt : std::optional(target);
}

}  // namespace

std::optional<HtmlRedirect> detect_html_redirect(const std::string& html,
                                                 const std::string& base_url,
                                                 int refresh_delay_max_s) {
    auto base = Url::parse(base_url);
    if (!base) return std::nullopt;
    std::string doc = strip_html_comments(html);

    // (1) meta refresh
    size_t pos = 0;
    while (true) {
        auto tag = next_tag(doc, pos, "meta");
        if (!tag) break;
        auto equiv = attr_value(tag->attr_text, "http-equiv");
        if (equiv && ascii_lower(*equiv) == "refresh") {
            if (auto content = attr_value(tag->attr_text, "content")) {
                if (auto target = parse_meta_refresh_content(*content, refresh_delay_max_s)) {
                    if (auto abs = resolve_reference(*base, *target)) {
                        return HtmlRedirect{abs->serialize(), RedirectMechanism::meta_refresh};
                    }
                }
            }
        }
        pos = tag->end;
    }

    // (2) script location assignment
    pos = 0;
    while (true) {
        auto tag = next_tag(doc, pos, "script");
        if (!tag) break;
        auto close = find_ci(doc, "</script", tag->end);
        std::string body =
            doc.substr(tag->end, close == std::string::npos ? close : close - tag->end);
        if (auto target = script_location_target(body)) {
            if (auto abs = resolve_reference(*base, *target)) {
                return HtmlRedirect{abs->serialize(), RedirectMechanism::script_location};
            }
        }
        pos = close == std::string::npos ? doc.size() : close + 1;
        if (pos >= doc.size()) break;
    }
    return std::nullopt;
}

}  // namespace hostprobe
