#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hostprobe {

class StopWords {
public:
    static std::shared_ptr<const StopWords> load_file(const std::string& path);
    static std::shared_ptr<const StopWords> from_words(std::vector<std::string> words);

    bool contains(const std::string& word) const;
    size_t size() const { return words_.size(); }

private:
    std::vector<std::string> words_;  // sorted
};

struct Normalized {
    std::string clean;                // tokens joined by single spaces
    std::vector<std::string> tokens;  // stop words removed, may repeat
};

// Trim, replace punctuation with spaces, lowercase, split on whitespace,
// drop stop words; clean is the space-joined token list.
Normalized normalize(const std::string& s, const StopWords& stops);

struct OwnershipEvidence {
    std::string title_clean;
    std::vector<std::string> title_tokens;
    std::string esld_clean;
    std::vector<std::string> esld_tokens;
    std::vector<std::string> rdap_strings;  // already normalized
    std::vector<std::string> rdap_tokens;   // union, deduplicated
};

enum class Check {
    title_in_rdap,
    esld_in_rdap,
    rdap_in_title,
    rdap_in_esld,
    title_token_overlap,
    esld_token_overlap,
    none,
};

const char* check_name(Check c);

struct CheckTrace {
    Check check;
    bool fired = false;
    std::optional<double> ratio;  // token checks only
};

struct MatchResult {
    bool matched = false;
    Check fired_check = Check::none;
    std::optional<double> overlap_ratio;  // set when a token check fired
    std::vector<CheckTrace> trace;        // all six, in evaluation order
};

// The six ownership checks, evaluated in fixed order; the first firing
// check wins. Substring needles shorter than min_match_len are skipped.
MatchResult match_ownership(const OwnershipEvidence& ev, size_t min_match_len = 3);

enum class Verdict { SelfHosted, ThirdParty, Unknown };

const char* verdict_name(Verdict v);
std::optional<Verdict> verdict_from_name(const std::string& name);

struct HostingVerdict {
    Verdict verdict = Verdict::Unknown;
    std::optional<MatchResult> match;
    std::string reason;
};

struct RdapRecord;  // rdap.hpp

// Unknown when RDAP had no information or the page yielded no evidence;
// SelfHosted on a match; ThirdParty otherwise.
HostingVerdict classify(const OwnershipEvidence& ev, const RdapRecord& rdap,
                        size_t min_match_len = 3);

}  // namespace hostprobe
