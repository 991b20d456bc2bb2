#include "hostprobe/matcher.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <stdexcept>

#include "hostprobe/rdap.hpp"
#include "hostprobe/text.hpp"

namespace hostprobe {

std::shared_ptr<const StopWords> StopWords::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open stop word list: " + path);
    std::vector<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        words.push_back(ascii_lower(line));
    }
    return from_words(std::move(words));
}

std::shared_ptr<const StopWords> StopWords::from_words(std::vector<std::string> words) {
    auto sw = std::make_shared<StopWords>();
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    sw->words_ = std::move(words);
    return sw;
}

bool StopWords::contains(const std::string& word) const {
    return std::binary_search(words_.begin(), words_.end(), word);
}

Normalized normalize(const std::string& s, const StopWords& stops) {
    // Punctuation -> space and lowercase in one codepoint pass.
    std::string spaced;
    spaced.reserve(s.size());
    size_t i = 0;
    while (i < s.size()) {
        uint32_t cp = utf8_next(s, i);
        if (is_word_codepoint(cp)) {
            utf8_append(spaced, lower_codepoint(cp));
        } else {
            spaced += ' ';
        }
    }
    Normalized out;
    for (auto& tok : split_whitespace(spaced)) {
        if (!stops.contains(tok)) out.tokens.push_back(std::move(tok));
    }
    out.clean = join(out.tokens, " ");
    return out;
}

const char* check_name(Check c) {
    switch (c) {
        case Check::title_in_rdap: return "title_in_rdap";
        case Check::esld_in_rdap: return "esld_in_rdap";
        case Check::rdap_in_title: return "rdap_in_title";
        case Check::rdap_in_esld: return "rdap_in_esld";
        case Check::title_token_overlap: return "title_token_overlap";
        case Check::esld_token_overlap: return "esld_token_overlap";
        case Check::none: return "none";
    }
    return "none";
}

namespace {

bool contains_substr(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

// needle-in-any-rdap-string
bool value_in_rdap(const std::string& value, const std::vector<std::string>& rdap,
                   size_t min_len) {
    if (value.size() < min_len) return false;
    return std::any_of(rdap.begin(), rdap.end(),
                       [&](const std::string& r) { return contains_substr(r, value); });
}

// any-rdap-string-in-value
bool rdap_in_value(const std::vector<std::string>& rdap, const std::string& value,
                   size_t min_len) {
    return std::any_of(rdap.begin(), rdap.end(), [&](const std::string& r) {
        return r.size() >= min_len && contains_substr(value, r);
    });
}

std::optional<double> token_overlap(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b) {
    std::set<std::string> sa(a.begin(), a.end());
    std::set<std::string> sb(b.begin(), b.end());
    size_t shortest = std::min(sa.size(), sb.size());
    if (shortest == 0) return std::nullopt;
    size_t common = 0;
    for (const auto& t : sa) common += sb.count(t);
    return static_cast<double>(common) / static_cast<double>(shortest);
}

}  // namespace

MatchResult match_ownership(const OwnershipEvidence& ev, size_t min_match_len) {
    MatchResult res;
    auto record = [&](Check c, bool fired, std::optional<double> ratio = std::nullopt) {
        res.trace.push_back({c, fired, ratio});
        if (fired && !res.matched) {
            res.matched = true;
            res.fired_check = c;
            res.overlap_ratio = ratio;
        }
    };

    record(Check::title_in_rdap,
           value_in_rdap(ev.title_clean, ev.rdap_strings, min_match_len));
    record(Check::esld_in_rdap,
           value_in_rdap(ev.esld_clean, ev.rdap_strings, min_match_len));
    record(Check::rdap_in_title,
           rdap_in_value(ev.rdap_strings, ev.title_clean, min_match_len));
    record(Check::rdap_in_esld,
           rdap_in_value(ev.rdap_strings, ev.esld_clean, min_match_len));

    auto title_ratio = token_overlap(ev.title_tokens, ev.rdap_tokens);
    record(Check::title_token_overlap, title_ratio && *title_ratio >= 0.5, title_ratio);
    auto esld_ratio = token_overlap(ev.esld_tokens, ev.rdap_tokens);
    record(Check::esld_token_overlap, esld_ratio && *esld_ratio >= 0.5, esld_ratio);

    return res;
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::SelfHosted: return "SelfHosted";
        case Verdict::ThirdParty: return "ThirdParty";
        case Verdict::Unknown: return "Unknown";
    }
    return "Unknown";
}

std::optional<Verdict> verdict_from_name(const std::string& name) {
    if (name == "SelfHosted") return Verdict::SelfHosted;
    if (name == "ThirdParty") return Verdict::ThirdParty;
    if (name == "Unknown") return Verdict::Unknown;
    return std::nullopt;
}

HostingVerdict classify(const OwnershipEvidence& ev, const RdapRecord& rdap,
                        size_t min_match_len) {
    HostingVerdict out;
    if (rdap.status == RdapStatus::no_info_available) {
        out.verdict = Verdict::Unknown;
        out.reason = "rdap_no_info_available";
        return out;
    }
    if (ev.title_clean.empty() && ev.esld_clean.empty()) {
        out.verdict = Verdict::Unknown;
        out.reason = "empty_page_evidence";
        return out;
    }
    out.match = match_ownership(ev, min_match_len);
    if (out.match->matched && !rdap.owner_strings.empty()) {
        out.verdict = Verdict::SelfHosted;
        out.reason = check_name(out.match->fired_check);
    } else {
        out.verdict = Verdict::ThirdParty;
        out.reason = "no_check_fired";
    }
    return out;
}

}  // namespace hostprobe
