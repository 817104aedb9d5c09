// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace govaudit::report {

// exit-code contract shared by every subcommand
constexpr int kExitClean = 0;
constexpr int kExitFindings = 1;
constexpr int kExitIncomplete = 2;
constexpr int kExitUsage = 64;
constexpr int kExitBadInput = 65;

struct Diagnostic {
    std::string severity;  // info | warning | error
    std::string code;
    std::string message;
};

struct Finding {
    std::string category;
    std::string subject;
    std::string detail;
};

/// The single document a subcommand emits: subject, verdicts, findings
/// and diagnostics, stamped with the provenance mode so replay runs are
/// recognizable.
struct AuditReport {
    static constexpr int kSchemaVersion = 1;

    std::string subject_kind;  // governance | proposal | documentation | similarity
    std::string subject_id;
    std::string provenance_mode = "live";
    nlohmann::ordered_json verdicts = nlohmann::ordered_json::object();
    std::vector<Finding> findings;
    std::vector<Diagnostic> diagnostics;
    bool incomplete = false;

    int exit_code() const;
    size_t finding_count() const { return findings.size(); }

    nlohmann::ordered_json to_json() const;
    std::string to_human() const;
};

}  // namespace govaudit::report
