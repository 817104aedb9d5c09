// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#include "provider.hpp"

namespace govaudit::chaindata {

std::string to_string(CreationKind kind) {
    switch (kind) {
        case CreationKind::Create: return "create";
        case CreationKind::Create2: return "create2";
        case CreationKind::Unknown: return "unknown";
    }
    return "unknown";
}

std::optional<CreationKind> creation_kind_from_string(const std::string& s) {
    if (s == "create") return CreationKind::Create;
    if (s == "create2") return CreationKind::Create2;
    if (s == "unknown") return CreationKind::Unknown;
    return std::nullopt;
}

}  // namespace govaudit::chaindata
