// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace coword {

/// Bad or missing configuration (templates, thresholds, file paths).
/// The CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input data (patent pages, Pajek files, CSV).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
    ParseError(const std::string& what, long long record_index)
        : std::runtime_error(what + " (record " + std::to_string(record_index) + ")"),
          record_index_(record_index) {}

    long long record_index() const { return record_index_; }

private:
    long long record_index_ = -1;
};

/// A pipeline stage failed; carries the stage name so partial runs are
/// diagnosable. The CLI maps this to exit code 1.
class StageError : public std::runtime_error {
public:
    StageError(const std::string& stage, const std::string& cause)
        : std::runtime_error(stage + ": " + cause), stage_(stage) {}

    const std::string& stage() const { return stage_; }

private:
    std::string stage_;
};

} // namespace coword
