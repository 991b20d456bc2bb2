#pragma once

#include <optional>
#include <string>

namespace hostprobe {

// Minimal absolute-URL model: scheme://host[:port]/path[?query]
// Fragments are parsed and dropped on serialization.
struct Url {
    std::string scheme;   // lowercase
    std::string host;     // lowercase; IPv6 literals without brackets
    int port = 0;         // 0 = scheme default
    std::string path;     // starts with "/" (empty input path becomes "/")
    std::string query;    // without leading "?"

    static std::optional<Url> parse(const std::string& text);

    // scheme://host[:port]path[?query], port omitted when default
    std::string serialize() const;

    bool host_is_ipv6() const { return host.find(':') != std::string::npos; }
    int effective_port() const;
};

// Resolve a (possibly relative) reference against an absolute base.
// Returns nullopt when the result is not an http(s) URL.
std::optional<Url> resolve_reference(const Url& base, const std::string& ref);

// Canonical comparison form used for loop detection and replay keys.
std::string normalize_url(const std::string& text);

}  // namespace hostprobe
