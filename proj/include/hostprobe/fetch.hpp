#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hostprobe {

struct FetchResponse {
    int status = 0;
    std::map<std::string, std::string> headers;  // lowercase names
    std::string body;
    std::string peer_ip;  // address that served the response
};

struct FetchFailure {
    // dns_failure | connect_timeout | connection_refused | tls_failure |
    // read_timeout | replay_miss | error
    std::string kind;
    std::string detail;
};

struct FetchOutcome {
    std::optional<FetchResponse> response;
    std::optional<FetchFailure> failure;
    bool ok() const { return response.has_value(); }
};

// Seam between the redirect follower and the transport: the reference
// protocol-level backend, the offline replay backend, and any future
// rendering backend all implement this.
class FetchBackend {
public:
    virtual ~FetchBackend() = default;
    virtual FetchOutcome get(const std::string& url, std::chrono::milliseconds timeout) = 0;
    uint64_t calls() const { return calls_.load(); }

protected:
    std::atomic<uint64_t> calls_{0};
};

// Protocol-level backend over an HTTP client. Resolves the host (via the
// injected resolver or a test override), connects to that address so the
// recorded peer IP is exactly the serving one.
class LiveFetchBackend : public FetchBackend {
public:
    struct Options {
        std::string user_agent = "hostprobe/1.0 (+https://localhost/hostprobe)";
        bool tls_verify = false;
        // hostname -> list of address strings; first is used
        std::function<std::vector<std::string>(const std::string& host)> resolve;
        // test seam: hostname -> (address, port) overriding URL port
        std::map<std::string, std::pair<std::string, int>> host_overrides;
    };

    LiveFetchBackend() : LiveFetchBackend(Options()) {}
    explicit LiveFetchBackend(Options opts);
    FetchOutcome get(const std::string& url, std::chrono::milliseconds timeout) override;

private:
    Options opts_;
};

// Offline backend over fixture maps keyed by normalized URL.
class ReplayFetchBackend : public FetchBackend {
public:
    struct Scripted {
        int status = 200;
        std::map<std::string, std::string> headers;
        std::string body;
        std::string peer_ip;
        std::string fail_kind;  // non-empty = scripted network failure
    };

    void add(const std::string& url, Scripted response);
    // fixture file: {"<url>": {"status":..,"headers":{..},"body":"..","peer_ip":".."}}
    void load_fixture_file(const std::string& path);

    FetchOutcome get(const std::string& url, std::chrono::milliseconds timeout) override;

    int max_concurrent() const { return max_concurrent_.load(); }

private:
    std::map<std::string, Scripted> responses_;
    std::atomic<int> concurrent_{0};
    std::atomic<int> max_concurrent_{0};
};

}  // namespace hostprobe
