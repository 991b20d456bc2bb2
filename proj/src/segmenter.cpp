#include "hostprobe/segmenter.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "hostprobe/text.hpp"

namespace hostprobe {

std::shared_ptr<const FrequencyTable> FrequencyTable::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open frequency table: " + path);
    auto table = std::make_shared<FrequencyTable>();
    std::string line;
    std::vector<std::pair<std::string, uint64_t>> entries;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos) continue;
        std::string word = ascii_lower(trim(line.substr(0, tab)));
        uint64_t count = 0;
        try {
            count = std::stoull(trim(line.substr(tab + 1)));
        } catch (...) {
            continue;
        }
        if (word.empty() || count == 0) continue;
        entries.emplace_back(std::move(word), count);
        table->total_ += count;
    }
    if (table->total_ == 0) throw std::runtime_error("empty frequency table: " + path);
    table->log_total_ = std::log(static_cast<double>(table->total_));
    for (auto& [word, count] : entries) {
        if (table->counts_.emplace(word, std::log(static_cast<double>(count)) -
                                             table->log_total_).second) {
            table->ranked_.push_back(word);
        }
    }
    return table;
}

double FrequencyTable::log_prob(const std::string& word) const {
    auto it = counts_.find(word);
    return it == counts_.end() ? unknown_log_prob(word.size()) : it->second;
}

bool FrequencyTable::contains(const std::string& word) const {
    return counts_.count(word) != 0;
}

double FrequencyTable::unknown_log_prob(size_t len) const {
    constexpr double kLog10 = 2.302585092994045684;
    return -log_total_ - static_cast<double>(len ? len - 1 : 0) * kLog10;
}

std::vector<std::string> segment_word(const std::string& s, const FrequencyTable& table) {
    const size_t n = s.size();
    if (n == 0) return {};

    // best[i]: score of the best split of s[0..i), back[i]: start of its last word.
    std::vector<double> best(n + 1, -1e300);
    std::vector<size_t> back(n + 1, 0);
    best[0] = 0.0;
    for (size_t i = 1; i <= n; ++i) {
        for (size_t j = 0; j < i; ++j) {
            double score = best[j] + table.log_prob(s.substr(j, i - j));
            if (score > best[i]) {
                best[i] = score;
                back[i] = j;
            }
        }
    }
    std::vector<std::string> out;
    for (size_t i = n; i > 0; i = back[i]) out.push_back(s.substr(back[i], i - back[i]));
    std::reverse(out.begin(), out.end());
    return out;
}

}  // namespace hostprobe
