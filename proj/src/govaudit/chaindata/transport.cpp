// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#include "transport.hpp"

#include <httplib.h>

#include "../common/errors.hpp"

namespace govaudit::chaindata {

namespace {

// splits "http://host:port/path" into (scheme://host:port, /path)
std::pair<std::string, std::string> split_url(const std::string& url) {
    const auto scheme_end = url.find("://");
    if (scheme_end == std::string::npos)
        throw UsageError("endpoint URL must include a scheme: " + url);
    const auto path_start = url.find('/', scheme_end + 3);
    if (path_start == std::string::npos)
        return {url, "/"};
    return {url.substr(0, path_start), url.substr(path_start)};
}

class HttplibTransport : public Transport {
  public:
    std::string get(const std::string& url) override {
        const auto [origin, path] = split_url(url);
        httplib::Client client(origin);
        client.set_read_timeout(30, 0);
        auto res = client.Get(path);
        return unwrap(std::move(res), url);
    }

    std::string post_json(const std::string& url, const std::string& body) override {
        const auto [origin, path] = split_url(url);
        httplib::Client client(origin);
        client.set_read_timeout(30, 0);
        auto res = client.Post(path, body, "application/json");
        return unwrap(std::move(res), url);
    }

  private:
    static std::string unwrap(httplib::Result res, const std::string& url) {
        if (!res)
            throw DataError("transport failure for " + url + ": " + httplib::to_string(res.error()));
        if (res->status < 200 || res->status >= 300)
            throw DataError("HTTP " + std::to_string(res->status) + " from " + url);
        return res->body;
    }
};

}  // namespace

std::unique_ptr<Transport> make_http_transport() {
    return std::make_unique<HttplibTransport>();
}

}  // namespace govaudit::chaindata
