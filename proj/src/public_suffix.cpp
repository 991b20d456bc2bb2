#include "hostprobe/public_suffix.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "hostprobe/text.hpp"

namespace hostprobe {

namespace {

std::vector<std::string> labels_of(const std::string& host) {
    std::vector<std::string> out;
    size_t i = 0;
    while (i <= host.size()) {
        size_t j = host.find('.', i);
        if (j == std::string::npos) {
            out.push_back(host.substr(i));
            break;
        }
        out.push_back(host.substr(i, j - i));
        i = j + 1;
    }
    return out;
}

std::string suffix_from(const std::vector<std::string>& labels, size_t start) {
    std::string s;
    for (size_t i = start; i < labels.size(); ++i) {
        if (i > start) s += ".";
        s += labels[i];
    }
    return s;
}

}  // namespace

std::shared_ptr<const PublicSuffixList> PublicSuffixList::load_file(
    const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open public suffix list: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_text(buf.str());
}

std::shared_ptr<const PublicSuffixList> PublicSuffixList::load_text(
    const std::string& text) {
    auto psl = std::make_shared<PublicSuffixList>();
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (auto c = line.find("//"); c != std::string::npos) line = line.substr(0, c);
        line = trim(line);
        if (line.empty()) continue;
        line = ascii_lower(line);
        RuleKind kind = RuleKind::normal;
        if (line[0] == '!') {
            kind = RuleKind::exception;
            line = line.substr(1);
        } else if (line.rfind("*.", 0) == 0) {
            kind = RuleKind::wildcard;
            line = line.substr(2);
        }
        if (!line.empty()) psl->rules_[line] = kind;
    }
    return psl;
}

std::string PublicSuffixList::public_suffix(const std::string& hostname) const {
    auto labels = labels_of(hostname);
    if (labels.empty()) return hostname;

    // Exception rules win over everything; otherwise the longest match.
    // A wildcard rule "*.x" makes "<label>.x" a public suffix.
    int best_len = 0;  // in labels
    for (size_t start = 0; start < labels.size(); ++start) {
        std::string cand = suffix_from(labels, start);
        auto it = rules_.find(cand);
        if (it == rules_.end()) continue;
        int len = static_cast<int>(labels.size() - start);
        switch (it->second) {
            case RuleKind::exception:
                // Public suffix is the rule minus its leftmost label.
                return suffix_from(labels, start + 1);
            case RuleKind::normal:
                best_len = std::max(best_len, len);
                break;
            case RuleKind::wildcard:
                // "*.x" matched at "x": covers one extra label to the left.
                if (start > 0) best_len = std::max(best_len, len + 1);
                best_len = std::max(best_len, len);
                break;
        }
    }
    if (best_len == 0) best_len = 1;  // default "*" rule
    return suffix_from(labels, labels.size() - static_cast<size_t>(best_len));
}

}  // namespace hostprobe
