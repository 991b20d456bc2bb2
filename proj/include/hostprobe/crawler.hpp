#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hostprobe/fetch.hpp"
#include "hostprobe/html.hpp"
#include "hostprobe/url_prep.hpp"

namespace hostprobe {

struct RedirectHop {
    std::string url;  // page that issued the redirect
    RedirectMechanism mechanism = RedirectMechanism::http_status;
    std::optional<int> status_code;
    int64_t elapsed_ms = 0;
};

struct PageFetch {
    StartingUrl starting;
    std::vector<RedirectHop> chain;
    std::string landing_url;
    int landing_status = 0;
    std::string title;
    std::string server_ip;
    std::map<std::string, std::string> headers;  // landing response, lowercase names
    size_t html_size_bytes = 0;
    bool completed = false;
    std::string failure_reason;  // dns_failure | connect_timeout | tls_failure |
                                 // timeout | redirect_loop | hop_limit_exceeded |
                                 // redirect_without_location | landing_status_<n> | ...
};

struct ChainSummary {
    int redirect_count = 0;
    bool domain_changed = false;
    bool protocol_changed = false;
};

struct CrawlerOptions {
    int max_hops = 10;
    int refresh_delay_max_s = 10;
};

// Follow a starting URL to its landing page: HTTP 3xx via Location, then on
// a 2xx HTML page at most one meta-refresh or script-location redirect per
// page. Records every hop and the peer address serving the landing
// response. Network errors, loops, and the hop limit end the chain with
// completed=false; no failure aborts a batch.
PageFetch fetch_page(const StartingUrl& u, int timeout_s, FetchBackend& backend,
                     const CrawlerOptions& opts = {});

// Only defined for completed fetches.
std::optional<ChainSummary> summarize_chain(const PageFetch& f);

}  // namespace hostprobe
