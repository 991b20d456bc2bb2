#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hostprobe/matcher.hpp"
#include "hostprobe/public_suffix.hpp"
#include "hostprobe/segmenter.hpp"

namespace hostprobe {

struct StartingUrl {
    std::string url;
    std::string scheme;  // "http" or "https"
    bool www_prefixed = false;
    std::string source_domain;
};

struct Esld {
    std::string value;          // registrable label, lowercase, no dots
    std::string public_suffix;  // matched suffix
    std::vector<std::string> tokens;
};

// Hostname validation: LDH labels (1-63 chars, alnum + inner hyphens),
// total length <= 253, ASCII only (IDN accepted in punycode form).
bool valid_hostname(const std::string& host);

struct Expanded {
    std::vector<StartingUrl> urls;
    std::string error;  // non-empty = input rejected, with the offending line
    bool ok() const { return error.empty(); }
};

// Expand one input line into starting URLs:
//   bare domain       -> 4 variants (2 schemes x 2 www forms), order
//                        http, http+www, https, https+www
//   www.* or IP input -> 2 variants (schemes only)
//   full URL input    -> passed through as a single StartingUrl
Expanded expand_domain(const std::string& line);

enum class EsldError {
    single_label,        // no registrable part
    public_suffix_only,  // hostname is itself a public suffix
    ip_literal,
    invalid_hostname,
};

std::optional<Esld> extract_esld(const std::string& hostname, const PublicSuffixList& psl,
                                 EsldError* err = nullptr);

// Tokens for the matcher: punctuation-split chunks of the value, each run
// through segment_word, with stop words removed afterwards. Falls back to
// the cleaned value when everything was filtered away.
std::vector<std::string> esld_tokens(const std::string& value, const FrequencyTable& freq,
                                     const StopWords& stops);

// Assemble matcher evidence from a raw page title, the landing ESLD (when
// one exists) and the already-normalized RDAP owner strings.
OwnershipEvidence build_evidence(const std::string& title_raw,
                                 const std::optional<std::string>& esld_value,
                                 const std::vector<std::string>& rdap_strings,
                                 const FrequencyTable& freq, const StopWords& stops);

}  // namespace hostprobe
