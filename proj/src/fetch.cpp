#include "hostprobe/fetch.hpp"

#include <arpa/inet.h>
#include <netdb.h>
#include <sys/socket.h>

#include <cstring>
#include <fstream>

#include <httplib.h>
#include <json.hpp>

#include "hostprobe/ip.hpp"
#include "hostprobe/text.hpp"
#include "hostprobe/url.hpp"

namespace hostprobe {

namespace {

std::vector<std::string> system_resolve(const std::string& host) {
    std::vector<std::string> out;
    addrinfo hints{};
    hints.ai_family = AF_UNSPEC;
    hints.ai_socktype = SOCK_STREAM;
    addrinfo* res = nullptr;
    if (getaddrinfo(host.c_str(), nullptr, &hints, &res) != 0) return out;
    for (addrinfo* p = res; p; p = p->ai_next) {
        char buf[INET6_ADDRSTRLEN] = {};
        if (p->ai_family == AF_INET) {
            auto* sa = reinterpret_cast<sockaddr_in*>(p->ai_addr);
            inet_ntop(AF_INET, &sa->sin_addr, buf, sizeof(buf));
        } else if (p->ai_family == AF_INET6) {
            auto* sa = reinterpret_cast<sockaddr_in6*>(p->ai_addr);
            inet_ntop(AF_INET6, &sa->sin6_addr, buf, sizeof(buf));
        } else {
            continue;
        }
        out.emplace_back(buf);
    }
    freeaddrinfo(res);
    return out;
}

FetchFailure failure_from_httplib(httplib::Error err) {
    using E = httplib::Error;
    switch (err) {
        case E::Connection: return {"connection_refused", "connection failed"};
        case E::ConnectionTimeout: return {"connect_timeout", "connection timed out"};
        case E::Read: return {"read_timeout", "read failed or timed out"};
        case E::Write: return {"read_timeout", "write failed or timed out"};
        case E::SSLConnection:
        case E::SSLLoadingCerts:
        case E::SSLServerVerification:
            return {"tls_failure", httplib::to_string(err)};
        default: return {"error", httplib::to_string(err)};
    }
}

}  // namespace

LiveFetchBackend::LiveFetchBackend(Options opts) : opts_(std::move(opts)) {}

FetchOutcome LiveFetchBackend::get(const std::string& url_text,
                                   std::chrono::milliseconds timeout) {
    ++calls_;
    FetchOutcome out;
    auto url = Url::parse(url_text);
    if (!url) {
        out.failure = {"error", "unparseable url: " + url_text};
        return out;
    }

    std::string connect_host = url->host;
    int connect_port = url->effective_port();
    std::string peer;

    auto ov = opts_.host_overrides.find(url->host);
    if (ov != opts_.host_overrides.end()) {
        connect_host = ov->second.first;
        connect_port = ov->second.second;
        peer = connect_host;
    } else if (IpAddress::parse(url->host)) {
        peer = url->host;
    } else {
        auto addrs = opts_.resolve ? opts_.resolve(url->host) : system_resolve(url->host);
        if (addrs.empty()) {
            out.failure = {"dns_failure", "no address for " + url->host};
            return out;
        }
        peer = addrs.front();
    }

    bool bracket = connect_host.find(':') != std::string::npos;
    std::string origin = url->scheme + "://" +
                         (bracket ? "[" + connect_host + "]" : connect_host) + ":" +
                         std::to_string(connect_port);
    httplib::Client cli(origin);
    cli.set_follow_location(false);
    auto secs = std::max<int64_t>(1, timeout.count() / 1000);
    auto usecs = (timeout.count() % 1000) * 1000;
    cli.set_connection_timeout(secs, usecs);
    cli.set_read_timeout(secs, usecs);
    cli.set_write_timeout(secs, usecs);
    cli.enable_server_certificate_verification(opts_.tls_verify);
    if (!peer.empty() && ov == opts_.host_overrides.end()) {
        // connect to the resolved address, keep SNI/Host on the hostname
        cli.set_hostname_addr_map({{url->host, peer}});
    }

    httplib::Headers headers = {{"User-Agent", opts_.user_agent},
                                {"Accept", "*/*"}};
    if (ov != opts_.host_overrides.end()) {
        // Host header must carry the logical host, not the override address.
        std::string host_hdr = url->host_is_ipv6() ? "[" + url->host + "]" : url->host;
        if (url->port != 0) host_hdr += ":" + std::to_string(url->port);
        headers.emplace("Host", host_hdr);
    }

    std::string target = url->path;
    if (!url->query.empty()) target += "?" + url->query;
    auto res = cli.Get(target, headers);
    if (!res) {
        out.failure = failure_from_httplib(res.error());
        return out;
    }

    FetchResponse resp;
    resp.status = res->status;
    for (const auto& [k, v] : res->headers) resp.headers[ascii_lower(k)] = v;
    resp.body = res->body;
    resp.peer_ip = peer.empty() ? connect_host : peer;
    out.response = std::move(resp);
    return out;
}

void ReplayFetchBackend::add(const std::string& url, Scripted response) {
    responses_[normalize_url(url)] = std::move(response);
}

void ReplayFetchBackend::load_fixture_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open http fixture: " + path);
    nlohmann::json doc = nlohmann::json::parse(in);
    for (auto& [url, spec] : doc.items()) {
        Scripted s;
        s.status = spec.value("status", 200);
        if (spec.contains("headers")) {
            for (auto& [k, v] : spec["headers"].items())
                s.headers[ascii_lower(k)] = v.get<std::string>();
        }
        s.body = spec.value("body", "");
        s.peer_ip = spec.value("peer_ip", "");
        s.fail_kind = spec.value("fail", "");
        add(url, std::move(s));
    }
}

FetchOutcome ReplayFetchBackend::get(const std::string& url,
                                     std::chrono::milliseconds) {
    ++calls_;
    int cur = ++concurrent_;
    int seen = max_concurrent_.load();
    while (cur > seen && !max_concurrent_.compare_exchange_weak(seen, cur)) {
    }
    FetchOutcome out;
    auto it = responses_.find(normalize_url(url));
    if (it == responses_.end()) {
        out.failure = {"replay_miss", "no fixture for " + normalize_url(url)};
    } else if (!it->second.fail_kind.empty()) {
        out.failure = {it->second.fail_kind, "scripted failure"};
    } else {
        FetchResponse resp;
        resp.status = it->second.status;
        resp.headers = it->second.headers;
        resp.body = it->second.body;
        resp.peer_ip = it->second.peer_ip;
        out.response = std::move(resp);
    }
    --concurrent_;
    return out;
}

}  // namespace hostprobe
