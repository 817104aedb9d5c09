// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#include "report.hpp"

#include <sstream>

namespace govaudit::report {

using nlohmann::ordered_json;

int AuditReport::exit_code() const {
    if (incomplete)
        return kExitIncomplete;
    return findings.empty() ? kExitClean : kExitFindings;
}

ordered_json AuditReport::to_json() const {
    ordered_json doc;
    doc["schemaVersion"] = kSchemaVersion;
    doc["subject"] = {{"kind", subject_kind}, {"identifier", subject_id}};
    doc["provenanceMode"] = provenance_mode;
    doc["verdicts"] = verdicts;
    doc["findings"] = ordered_json::array();
    for (const auto& f : findings)
        doc["findings"].push_back(
            {{"category", f.category}, {"subject", f.subject}, {"detail", f.detail}});
    doc["diagnostics"] = ordered_json::array();
    for (const auto& d : diagnostics)
        doc["diagnostics"].push_back(
            {{"severity", d.severity}, {"code", d.code}, {"message", d.message}});
    doc["incomplete"] = incomplete;
    return doc;
}

std::string AuditReport::to_human() const {
    std::ostringstream out;
    out << "=== govaudit " << subject_kind << " report ===\n";
    out << "subject:    " << subject_id << "\n";
    out << "provenance: " << provenance_mode << "\n";
    out << "status:     "
        << (incomplete ? "INCOMPLETE" : findings.empty() ? "clean" : "findings") << "\n";

    if (!verdicts.empty()) {
        out << "\nverdicts:\n";
        for (const auto& [key, value] : verdicts.items())
            out << "  " << key << ": " << value.dump() << "\n";
    }
    out << "\nfindings (" << finding_count() << "):\n";
    for (const auto& f : findings)
        out << "  [" << f.category << "] " << f.subject << " — " << f.detail << "\n";
    if (!diagnostics.empty()) {
        out << "\ndiagnostics:\n";
        for (const auto& d : diagnostics)
            out << "  (" << d.severity << ") " << d.code << ": " << d.message << "\n";
    }
    return out.str();
}

}  // namespace govaudit::report
