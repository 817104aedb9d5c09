// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <string>

namespace govaudit::chaindata {

/// Minimal HTTP seam so providers can be exercised against scripted
/// transports in tests. Implementations throw DataError on failure.
class Transport {
  public:
    virtual ~Transport() = default;
    virtual std::string get(const std::string& url) = 0;
    virtual std::string post_json(const std::string& url, const std::string& body) = 0;
};

/// cpp-httplib-backed transport for live endpoints.
std::unique_ptr<Transport> make_http_transport();

}  // namespace govaudit::chaindata
