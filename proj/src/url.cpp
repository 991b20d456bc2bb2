#include "hostprobe/url.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace hostprobe {

namespace {

std::string to_lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return s;
}

// Remove "." and ".." segments per the usual merge rules.
std::string remove_dot_segments(const std::string& path) {
    std::vector<std::string> out;
    size_t i = 0;
    bool trailing_slash = false;
    while (i < path.size()) {
        size_t j = path.find('/', i);
        std::string seg = path.substr(i, j == std::string::npos ? j : j - i);
        i = j == std::string::npos ? path.size() : j + 1;
        if (seg == ".") {
            trailing_slash = true;
            continue;
        }
        if (seg == "..") {
            if (!out.empty()) out.pop_back();
            trailing_slash = true;
            continue;
        }
        if (seg.empty() && i < path.size()) continue;  // collapse duplicate '/'
        if (seg.empty()) {
            trailing_slash = true;
            continue;
        }
        out.push_back(seg);
        trailing_slash = j != std::string::npos && i >= path.size();
    }
    std::string joined = "/";
    for (size_t k = 0; k < out.size(); ++k) {
        joined += out[k];
        if (k + 1 < out.size()) joined += "/";
    }
    if (trailing_slash && joined.back() != '/') joined += "/";
    return joined;
}

}  // namespace

int Url::effective_port() const {
    if (port != 0) return port;
    if (scheme == "https") return 443;
    return 80;
}

std::optional<Url> Url::parse(const std::string& text) {
    auto sep = text.find("://");
    if (sep == std::string::npos || sep == 0) return std::nullopt;
    Url u;
    u.scheme = to_lower(text.substr(0, sep));
    if (u.scheme != "http" && u.scheme != "https") return std::nullopt;

    size_t auth_start = sep + 3;
    size_t auth_end = text.find_first_of("/?#", auth_start);
    std::string authority = text.substr(
        auth_start, auth_end == std::string::npos ? auth_end : auth_end - auth_start);
    if (auto at = authority.rfind('@'); at != std::string::npos)
        authority = authority.substr(at + 1);
    if (authority.empty()) return std::nullopt;

    std::string port_str;
    if (authority[0] == '[') {  // IPv6 literal
        auto close = authority.find(']');
        if (close == std::string::npos) return std::nullopt;
        u.host = to_lower(authority.substr(1, close - 1));
        if (close + 1 < authority.size()) {
            if (authority[close + 1] != ':') return std::nullopt;
            port_str = authority.substr(close + 2);
        }
    } else {
        auto colon = authority.rfind(':');
        if (colon != std::string::npos) {
            u.host = to_lower(authority.substr(0, colon));
            port_str = authority.substr(colon + 1);
        } else {
            u.host = to_lower(authority);
        }
    }
    if (u.host.empty()) return std::nullopt;
    if (!port_str.empty()) {
        for (char c : port_str)
            if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
        try {
            u.port = std::stoi(port_str);
        } catch (...) {
            return std::nullopt;
        }
        if (u.port <= 0 || u.port > 65535) return std::nullopt;
        if (u.port == (u.scheme == "https" ? 443 : 80)) u.port = 0;
    }

    std::string rest =
        auth_end == std::string::npos ? std::string() : text.substr(auth_end);
    if (auto hash = rest.find('#'); hash != std::string::npos) rest = rest.substr(0, hash);
    if (auto q = rest.find('?'); q != std::string::npos) {
        u.query = rest.substr(q + 1);
        rest = rest.substr(0, q);
    }
    u.path = rest.empty() ? "/" : rest;
    return u;
}

std::string Url::serialize() const {
    std::string s = scheme + "://";
    s += host_is_ipv6() ? "[" + host + "]" : host;
    if (port != 0) s += ":" + std::to_string(port);
    s += path.empty() ? "/" : path;
    if (!query.empty()) s += "?" + query;
    return s;
}

std::optional<Url> resolve_reference(const Url& base, const std::string& ref_in) {
    std::string ref = ref_in;
    // Trim surrounding whitespace and control characters.
    auto is_ws = [](unsigned char c) { return c <= ' '; };
    while (!ref.empty() && is_ws(static_cast<unsigned char>(ref.front()))) ref.erase(0, 1);
    while (!ref.empty() && is_ws(static_cast<unsigned char>(ref.back()))) ref.pop_back();
    if (ref.empty()) return std::nullopt;

    if (auto abs = Url::parse(ref)) return abs;
    if (ref.find("://") != std::string::npos) return std::nullopt;  // non-http scheme
    // Other scheme forms without "//": javascript:, mailto:, data:
    auto colon = ref.find(':');
    auto slash = ref.find('/');
    if (colon != std::string::npos && (slash == std::string::npos || colon < slash)) {
        std::string head = to_lower(ref.substr(0, colon));
        bool scheme_like = !head.empty() &&
                           std::all_of(head.begin(), head.end(), [](unsigned char c) {
                               return std::isalpha(c) || std::isdigit(c) || c == '+' ||
                                      c == '-' || c == '.';
                           }) &&
                           std::isalpha(static_cast<unsigned char>(head[0]));
        if (scheme_like) return std::nullopt;
    }

    Url out = base;
    if (ref.rfind("//", 0) == 0) {  // protocol-relative
        return Url::parse(base.scheme + ":" + ref);
    }
    if (auto hash = ref.find('#'); hash != std::string::npos) ref = ref.substr(0, hash);
    if (ref.empty()) return std::nullopt;  // fragment-only: same document
    out.query.clear();
    if (ref[0] == '?') {
        out.query = ref.substr(1);
        return out;
    }
    std::string path = ref;
    if (auto q = path.find('?'); q != std::string::npos) {
        out.query = path.substr(q + 1);
        path = path.substr(0, q);
    }
    if (!path.empty() && path[0] == '/') {
        out.path = remove_dot_segments(path);
    } else {
        std::string dir = base.path.substr(0, base.path.rfind('/') + 1);
        out.path = remove_dot_segments(dir + path);
    }
    return out;
}

std::string normalize_url(const std::string& text) {
    auto u = Url::parse(text);
    if (!u) return text;
    return u->serialize();
}

}  // namespace hostprobe
