#include "hostprobe/crawler.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "hostprobe/text.hpp"
#include "hostprobe/url.hpp"

namespace hostprobe {

namespace {

bool is_html_content(const std::map<std::string, std::string>& headers) {
    auto it = headers.find("content-type");
    if (it == headers.end()) return true;  // sniff optimistically
    auto lowered = ascii_lower(it->second);
    return lowered.find("html") != std::string::npos ||
           lowered.find("xml") != std::string::npos;
}

std::optional<std::string> location_header(const std::map<std::string, std::string>& h) {
    auto it = h.find("location");
    if (it == h.end() || trim(it->second).empty()) return std::nullopt;
    return it->second;
}

}  // namespace

PageFetch fetch_page(const StartingUrl& u, int timeout_s, FetchBackend& backend,
                     const CrawlerOptions& opts) {
    using clock = std::chrono::steady_clock;
    const auto deadline = clock::now() + std::chrono::seconds(timeout_s);

    PageFetch out;
    out.starting = u;

    std::string current = u.url;
    std::set<std::string> visited{normalize_url(current)};

    while (true) {
        auto remaining = std::chrono::duration_cast<std::chrono::milliseconds>(
            deadline - clock::now());
        if (remaining.count() <= 0) {
            out.failure_reason = "timeout";
            return out;
        }
        auto hop_start = clock::now();
        auto outcome = backend.get(current, remaining);
        auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           clock::now() - hop_start)
                           .count();
        if (!outcome.ok()) {
            out.failure_reason = outcome.failure ? outcome.failure->kind : "error";
            return out;
        }
        const FetchResponse& resp = *outcome.response;

        std::optional<std::string> next;
        RedirectMechanism mech = RedirectMechanism::http_status;

        if (resp.status >= 300 && resp.status < 400) {
            auto loc = location_header(resp.headers);
            if (!loc) {
                out.landing_url = current;
                out.landing_status = resp.status;
                out.failure_reason = "redirect_without_location";
                return out;
            }
            auto base = Url::parse(normalize_url(current));
            auto target = base ? resolve_reference(*base, *loc) : std::nullopt;
            if (!target) {
                out.landing_url = current;
                out.landing_status = resp.status;
                out.failure_reason = "unsupported_redirect_scheme";
                return out;
            }
            next = target->serialize();
        } else if (resp.status >= 200 && resp.status < 300 &&
                   is_html_content(resp.headers)) {
            if (auto html = detect_html_redirect(resp.body, normalize_url(current),
                                                 opts.refresh_delay_max_s)) {
                next = html->target_url;
                mech = html->mechanism;
            }
        }

        if (!next) {  // landing page
            out.landing_url = current;
            out.landing_status = resp.status;
            out.server_ip = resp.peer_ip;
            out.headers = resp.headers;
            out.html_size_bytes = resp.body.size();
            if (is_html_content(resp.headers)) {
                std::optional<std::string> charset;
                if (auto ct = resp.headers.find("content-type"); ct != resp.headers.end())
                    charset = charset_from_content_type(ct->second);
                if (!charset) charset = charset_from_meta(resp.body);
                out.title = extract_title(resp.body, charset);
            }
            if (resp.status >= 200 && resp.status < 300) {
                out.completed = true;
            } else {
                out.failure_reason = "landing_status_" + std::to_string(resp.status);
            }
            return out;
        }

        if (static_cast<int>(out.chain.size()) >= opts.max_hops) {
            out.failure_reason = "hop_limit_exceeded";
            return out;
        }
        RedirectHop hop;
        hop.url = current;
        hop.mechanism = mech;
        hop.status_code = resp.status;
        hop.elapsed_ms = elapsed;
        out.chain.push_back(hop);

        if (!visited.insert(normalize_url(*next)).second) {
            out.failure_reason = "redirect_loop";
            return out;
        }
        current = *next;
    }
}

std::optional<ChainSummary> summarize_chain(const PageFetch& f) {
    if (!f.completed) return std::nullopt;
    ChainSummary s;
    s.redirect_count = static_cast<int>(f.chain.size());
    auto a = Url::parse(f.starting.url);
    auto b = Url::parse(f.landing_url);
    if (a && b) {
        s.domain_changed = a->host != b->host;
        s.protocol_changed = a->scheme != b->scheme;
    }
    return s;
}

}  // namespace hostprobe
