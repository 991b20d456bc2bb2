#pragma once

#include <condition_variable>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "hostprobe/ip.hpp"

namespace hostprobe {

class StopWords;

enum class RdapStatus { ok, no_info_available };

struct RdapRecord {
    IpAddress ip;
    std::optional<Cidr> prefix;
    std::map<std::string, std::string> raw_fields;  // field path -> value
    std::vector<std::string> owner_strings;         // post-cleaning
    std::string source_server;
    int64_t fetched_at = 0;  // unix seconds
    RdapStatus status = RdapStatus::no_info_available;
    std::string failure;  // why no_info_available, when applicable
};

// Disk-backed prefix cache: JSONL with a version header, longest-prefix
// match on read, expiry checked at read time. Thread-safe.
class RdapCache {
public:
    // Empty path keeps the cache purely in memory.
    explicit RdapCache(std::string path = {});

    std::optional<RdapRecord> find(const IpAddress& ip, int64_t now) const;
    void insert(const Cidr& prefix, const RdapRecord& record, int64_t expires_at);

    size_t entry_count() const;
    size_t corrupt_lines() const { return corrupt_lines_; }

    static constexpr const char* kFileHeader = "# hostprobe-rdap-cache v1";

private:
    struct Entry {
        Cidr prefix;
        RdapRecord record;
        int64_t expires_at = 0;
    };
    void load();
    void append_to_file(const Entry& e);

    std::string path_;
    std::vector<Entry> entries_;
    size_t corrupt_lines_ = 0;
    mutable std::shared_mutex mu_;
};

// HTTP seam for RDAP queries; the live transport speaks HTTPS, tests and
// replay mode script it.
struct RdapHttpResult {
    int status = 0;
    std::string body;
    std::string error;  // non-empty = network-level failure
    bool ok() const { return error.empty(); }
};

class RdapTransport {
public:
    virtual ~RdapTransport() = default;
    virtual RdapHttpResult fetch(const std::string& url) = 0;
    uint64_t calls() const { return calls_; }

protected:
    uint64_t calls_ = 0;
};

std::unique_ptr<RdapTransport> make_live_rdap_transport(int timeout_s = 30);

// IANA-format bootstrap registry: CIDR prefixes -> authoritative base URL.
class RdapBootstrap {
public:
    static RdapBootstrap load_files(const std::string& v4_path,
                                    const std::string& v6_path);
    static RdapBootstrap from_json_text(const std::string& v4_json,
                                        const std::string& v6_json);

    std::optional<std::string> base_url(const IpAddress& ip) const;

private:
    std::vector<std::pair<Cidr, std::string>> services_;
};

struct RdapPolicy {
    int max_attempts = 3;
    int max_backoff_s = 90;
    int64_t positive_ttl_s = 24 * 3600;
    int64_t negative_ttl_s = 3600;
};

// Ownership strings from a parsed RDAP response: entity names and orgs by
// role precedence registrant > administrative > technical, first non-empty
// tier wins. The network "name" and all remarks are excluded. Each string
// is normalized; the result is deduplicated, order preserving.
std::vector<std::string> clean_rdap_fields(const std::string& response_json,
                                           const StopWords& stops,
                                           std::map<std::string, std::string>* raw_fields =
                                               nullptr);

class RdapClient {
public:
    RdapClient(RdapBootstrap bootstrap, std::shared_ptr<RdapCache> cache,
               std::shared_ptr<RdapTransport> transport,
               std::shared_ptr<const StopWords> stops, RdapPolicy policy = {});

    // Deterministic hooks for tests and replay mode.
    void set_clock(std::function<int64_t()> clock) { clock_ = std::move(clock); }
    void set_sleeper(std::function<void(double seconds)> s) { sleeper_ = std::move(s); }
    void set_backoff_rng(std::function<double()> unit) { unit_rng_ = std::move(unit); }
    void set_fallback_url(std::string url) { fallback_url_ = std::move(url); }

    RdapRecord lookup_ip(const IpAddress& ip);

private:
    RdapRecord fetch_and_parse(const IpAddress& ip);
    RdapRecord parse_response(const IpAddress& ip, const std::string& body,
                              const std::string& server);

    RdapBootstrap bootstrap_;
    std::shared_ptr<RdapCache> cache_;
    std::shared_ptr<RdapTransport> transport_;
    std::shared_ptr<const StopWords> stops_;
    RdapPolicy policy_;
    std::string fallback_url_ = "https://rdap.org/";
    std::function<int64_t()> clock_;
    std::function<void(double)> sleeper_;
    std::function<double()> unit_rng_;

    // Single-flight per IP: concurrent lookups of one address coalesce.
    std::mutex flight_mu_;
    std::condition_variable flight_cv_;
    std::vector<IpAddress> in_flight_;
};

}  // namespace hostprobe
