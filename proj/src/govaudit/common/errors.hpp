// govaudit: static analysis toolkit for DAO governance
// Copyright 2026 The govaudit Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace govaudit {

/// Retriable data-layer failure (transport, provider, missing record).
/// Distinct from a negative audit verdict.
class DataError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Replay-mode cache miss; carries the exact cache key that was requested.
class ReplayMissError : public DataError {
  public:
    explicit ReplayMissError(const std::string& key)
        : DataError("replay cache miss for key: " + key), key_(key) {}
    const std::string& key() const { return key_; }

  private:
    std::string key_;
};

/// Endpoint cannot serve the request at all (e.g. tracing unsupported).
class CapabilityError : public DataError {
  public:
    using DataError::DataError;
};

/// Data that contradicts chain invariants (e.g. a creator cycle).
class IntegrityError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Caller misuse of an API contract.
class UsageError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed user-supplied input file.
class InputError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// An audit could not run to completion; partial results may exist.
class AuditIncompleteError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace govaudit
