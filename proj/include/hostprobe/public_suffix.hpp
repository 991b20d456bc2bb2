#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>

namespace hostprobe {

// Public-suffix lookup over a list in the standard text format
// (comment lines with //, wildcard rules *.x, exception rules !x).
class PublicSuffixList {
public:
    static std::shared_ptr<const PublicSuffixList> load_file(const std::string& path);
    static std::shared_ptr<const PublicSuffixList> load_text(const std::string& text);

    // Longest matching public suffix of a lowercase hostname. Falls back to
    // the default "*" rule (rightmost label) when nothing matches.
    std::string public_suffix(const std::string& hostname) const;

    size_t rule_count() const { return rules_.size(); }

private:
    enum class RuleKind { normal, wildcard, exception };
    std::map<std::string, RuleKind> rules_;  // keyed by rule labels without markers
};

}  // namespace hostprobe
