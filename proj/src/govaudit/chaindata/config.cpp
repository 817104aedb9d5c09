// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#include "config.hpp"

#include <cstdlib>

namespace govaudit::chaindata {

namespace {

void fill(std::string& field, const char* var) {
    if (!field.empty())
        return;
    if (const char* value = std::getenv(var))
        field = value;
}

}  // namespace

void ProviderConfig::fill_from_env() {
    fill(rpc_endpoint, "GOVAUDIT_RPC_URL");
    fill(scanner_endpoint, "GOVAUDIT_SCANNER_URL");
    fill(scanner_key, "GOVAUDIT_SCANNER_KEY");
    fill(sig_db_endpoint, "GOVAUDIT_SIG_DB_URL");
    fill(cache_dir, "GOVAUDIT_CACHE_DIR");
    fill(mode, "GOVAUDIT_MODE");
}

}  // namespace govaudit::chaindata
