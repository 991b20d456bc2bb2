#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace hostprobe {

// Unigram frequency table for maximum-likelihood word segmentation.
// File format: "word<TAB>count" per line, '#' comments.
class FrequencyTable {
public:
    static std::shared_ptr<const FrequencyTable> load_file(const std::string& path);

    double log_prob(const std::string& word) const;  // dictionary words
    bool contains(const std::string& word) const;
    // Length-penalized floor for out-of-dictionary chunks:
    // 1 / (total_count * 10^(len-1)).
    double unknown_log_prob(size_t len) const;

    uint64_t total_count() const { return total_; }
    size_t size() const { return counts_.size(); }
    // Words in descending frequency order (file order).
    const std::vector<std::string>& ranked_words() const { return ranked_; }

private:
    std::unordered_map<std::string, double> counts_;  // word -> log(count/total)
    std::vector<std::string> ranked_;
    uint64_t total_ = 0;
    double log_total_ = 0.0;
};

// Maximum-likelihood split of a lowercase alphanumeric string into words.
// The probability of a split is the product of per-word probabilities,
// with unknown chunks scored by the length-penalized floor. The unsplit
// string is always a candidate, so inputs with no dictionary split come
// back whole. Empty input yields an empty list.
std::vector<std::string> segment_word(const std::string& s, const FrequencyTable& table);

}  // namespace hostprobe
