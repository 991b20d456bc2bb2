#pragma once

// In-process HTTP server for crawler tests: serves scripted responses for
// many virtual hosts on one loopback port, dispatching on the Host header.
// Fixture format: {"http://host/path": {"status":N,"headers":{..},"body":".."}}

#include <fstream>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "hostprobe/fetch.hpp"
#include "hostprobe/url.hpp"

namespace hostprobe::testing {

class MockWebServer {
public:
    struct Scripted {
        int status = 200;
        std::map<std::string, std::string> headers;
        std::string body;
    };

    MockWebServer() {
        server_.Get(".*", [this](const httplib::Request& req, httplib::Response& res) {
            handle(req, res);
        });
        port_ = server_.bind_to_any_port("127.0.0.1");
        if (port_ <= 0) throw std::runtime_error("mock web server failed to bind");
        thread_ = std::thread([this] { server_.listen_after_bind(); });
        server_.wait_until_ready();
    }

    ~MockWebServer() {
        server_.stop();
        if (thread_.joinable()) thread_.join();
    }

    void add(const std::string& url, Scripted s) {
        auto u = Url::parse(url);
        if (!u) throw std::runtime_error("bad mock url: " + url);
        hosts_[u->host] = true;
        responses_[u->serialize()] = std::move(s);
    }

    void load_fixture_file(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open mock fixture: " + path);
        nlohmann::json doc = nlohmann::json::parse(in);
        for (auto& [url, spec] : doc.items()) {
            Scripted s;
            s.status = spec.value("status", 200);
            if (spec.contains("headers")) {
                for (auto& [k, v] : spec["headers"].items())
                    s.headers[k] = v.get<std::string>();
            }
            s.body = spec.value("body", "");
            add(url, std::move(s));
        }
    }

    int port() const { return port_; }
    uint64_t requests_served() const { return served_; }

    // Route every scripted host to this server.
    std::map<std::string, std::pair<std::string, int>> host_overrides() const {
        std::map<std::string, std::pair<std::string, int>> out;
        for (const auto& [host, _] : hosts_) out[host] = {"127.0.0.1", port_};
        return out;
    }

    LiveFetchBackend::Options backend_options() const {
        LiveFetchBackend::Options opts;
        opts.host_overrides = host_overrides();
        opts.resolve = [](const std::string&) { return std::vector<std::string>{}; };
        return opts;
    }

private:
    void handle(const httplib::Request& req, httplib::Response& res) {
        ++served_;
        std::string host = req.get_header_value("Host");
        if (auto colon = host.find(':'); colon != std::string::npos)
            host = host.substr(0, colon);
        std::string key = normalize_url("http://" + host + req.path);
        auto it = responses_.find(key);
        if (it == responses_.end()) {
            res.status = 404;
            res.set_content("mock: no fixture for " + key, "text/plain");
            return;
        }
        res.status = it->second.status;
        for (const auto& [k, v] : it->second.headers) res.set_header(k, v);
        std::string type = "text/html";
        if (auto ct = it->second.headers.find("Content-Type");
            ct != it->second.headers.end())
            type = ct->second;
        res.set_content(it->second.body, type);
    }

    httplib::Server server_;
    std::thread thread_;
    int port_ = 0;
    std::map<std::string, bool> hosts_;
    std::map<std::string, Scripted> responses_;
    std::atomic<uint64_t> served_{0};
};

}  // namespace hostprobe::testing
