#include "hostprobe/url_prep.hpp"

#include <algorithm>
#include <cctype>

#include "hostprobe/ip.hpp"
#include "hostprobe/matcher.hpp"
#include "hostprobe/text.hpp"
#include "hostprobe/url.hpp"

namespace hostprobe {

bool valid_hostname(const std::string& host) {
    if (host.empty() || host.size() > 253) return false;
    size_t label_start = 0;
    for (size_t i = 0; i <= host.size(); ++i) {
        if (i == host.size() || host[i] == '.') {
            size_t len = i - label_start;
            if (len == 0 || len > 63) return false;
            for (size_t k = label_start; k < i; ++k) {
                unsigned char c = static_cast<unsigned char>(host[k]);
                if (!(std::isalnum(c) || c == '-')) return false;
            }
            if (host[label_start] == '-' || host[i - 1] == '-') return false;
            label_start = i + 1;
        }
    }
    return true;
}

namespace {

StartingUrl make_starting(const std::string& scheme, bool www, const std::string& domain) {
    StartingUrl u;
    u.scheme = scheme;
    u.www_prefixed = www || domain.rfind("www.", 0) == 0;
    u.source_domain = domain;
    u.url = scheme + "://" + (www ? "www." : "") + domain;
    return u;
}

}  // namespace

Expanded expand_domain(const std::string& line) {
    Expanded out;
    std::string entry = trim(line);
    if (entry.empty()) {
        out.error = "empty input line";
        return out;
    }

    if (entry.find("://") != std::string::npos) {
        // Full URL passthrough, single starting URL.
        auto u = Url::parse(entry);
        if (!u || (!u->host_is_ipv6() && !valid_hostname(u->host) &&
                   !IpAddress::parse(u->host))) {
            out.error = "invalid URL: " + entry;
            return out;
        }
        StartingUrl s;
        s.scheme = u->scheme;
        s.www_prefixed = u->host.rfind("www.", 0) == 0;
        s.source_domain = u->host;
        s.url = entry;
        out.urls.push_back(std::move(s));
        return out;
    }

    std::string host = ascii_lower(entry);
    if (!host.empty() && host.back() == '.') host.pop_back();
    bool is_ip = IpAddress::parse(host).has_value() ||
                 (host.size() > 1 && host.front() == '[' && host.back() == ']');
    if (!is_ip && !valid_hostname(host)) {
        out.error = "invalid hostname: " + entry;
        return out;
    }

    bool skip_www = is_ip || host.rfind("www.", 0) == 0;
    if (skip_www) {
        out.urls.push_back(make_starting("http", false, host));
        out.urls.push_back(make_starting("https", false, host));
    } else {
        out.urls.push_back(make_starting("http", false, host));
        out.urls.push_back(make_starting("http", true, host));
        out.urls.push_back(make_starting("https", false, host));
        out.urls.push_back(make_starting("https", true, host));
    }
    return out;
}

std::optional<Esld> extract_esld(const std::string& hostname, const PublicSuffixList& psl,
                                 EsldError* err) {
    auto fail = [&](EsldError e) -> std::optional<Esld> {
        if (err) *err = e;
        return std::nullopt;
    };

    std::string host = ascii_lower(trim(hostname));
    if (!host.empty() && host.back() == '.') host.pop_back();
    if (host.size() > 1 && host.front() == '[' && host.back() == ']')
        host = host.substr(1, host.size() - 2);
    if (IpAddress::parse(host)) return fail(EsldError::ip_literal);
    if (!valid_hostname(host)) return fail(EsldError::invalid_hostname);
    if (host.find('.') == std::string::npos) return fail(EsldError::single_label);

    std::string suffix = psl.public_suffix(host);
    if (suffix.size() >= host.size()) return fail(EsldError::public_suffix_only);

    std::string rest = host.substr(0, host.size() - suffix.size() - 1);
    auto dot = rest.rfind('.');
    Esld esld;
    esld.value = dot == std::string::npos ? rest : rest.substr(dot + 1);
    esld.public_suffix = suffix;
    if (esld.value.empty()) return fail(EsldError::public_suffix_only);
    return esld;
}

std::vector<std::string> esld_tokens(const std::string& value, const FrequencyTable& freq,
                                     const StopWords& stops) {
    // Punctuation split first (hyphenated domains), then per-chunk
    // segmentation, then the shared stop-word filter.
    Normalized base = normalize(value, stops);
    std::vector<std::string> segmented;
    {
        // Chunks before stop-word removal: re-split the raw value so a
        // stand-alone stop word chunk still reaches the segmenter intact.
        std::string spaced;
        size_t i = 0;
        while (i < value.size()) {
            uint32_t cp = utf8_next(value, i);
            if (is_word_codepoint(cp)) {
                utf8_append(spaced, lower_codepoint(cp));
            } else {
                spaced += ' ';
            }
        }
        for (const auto& chunk : split_whitespace(spaced)) {
            for (auto& word : segment_word(chunk, freq)) segmented.push_back(word);
        }
    }
    std::vector<std::string> tokens;
    for (auto& t : segmented) {
        if (!stops.contains(t)) tokens.push_back(std::move(t));
    }
    if (tokens.empty() && !base.clean.empty()) tokens.push_back(base.clean);
    if (tokens.empty() && !value.empty()) tokens.push_back(ascii_lower(value));
    return tokens;
}

OwnershipEvidence build_evidence(const std::string& title_raw,
                                 const std::optional<std::string>& esld_value,
                                 const std::vector<std::string>& rdap_strings,
                                 const FrequencyTable& freq, const StopWords& stops) {
    OwnershipEvidence ev;
    auto title = normalize(title_raw, stops);
    ev.title_clean = std::move(title.clean);
    ev.title_tokens = std::move(title.tokens);
    if (esld_value) {
        ev.esld_clean = normalize(*esld_value, stops).clean;
        ev.esld_tokens = esld_tokens(*esld_value, freq, stops);
    }
    ev.rdap_strings = rdap_strings;
    for (const auto& s : ev.rdap_strings) {
        for (auto& tok : split_whitespace(s)) {
            if (std::find(ev.rdap_tokens.begin(), ev.rdap_tokens.end(), tok) ==
                ev.rdap_tokens.end()) {
                ev.rdap_tokens.push_back(std::move(tok));
            }
        }
    }
    return ev;
}

}  // namespace hostprobe
