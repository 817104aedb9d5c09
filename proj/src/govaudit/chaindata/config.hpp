// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>

namespace govaudit::chaindata {

struct RetryPolicy {
    unsigned attempts = 3;
    unsigned backoff_ms = 250;  // grows linearly per attempt
};

/// Endpoint and mode configuration. Environment variables fill anything
/// the command line leaves unset: GOVAUDIT_RPC_URL, GOVAUDIT_SCANNER_URL,
/// GOVAUDIT_SCANNER_KEY, GOVAUDIT_SIG_DB_URL, GOVAUDIT_MODE,
/// GOVAUDIT_CACHE_DIR.
struct ProviderConfig {
    std::string rpc_endpoint;
    std::string scanner_endpoint;
    std::string scanner_key;
    std::string sig_db_endpoint;
    std::string mode;  // live|record|replay; empty resolves to live
    std::string cache_dir;
    uint64_t chain_id = 1;
    unsigned max_in_flight = 4;
    RetryPolicy retry;

    /// Reads GOVAUDIT_* variables into any field currently empty.
    void fill_from_env();
};

}  // namespace govaudit::chaindata
