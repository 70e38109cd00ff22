// Copyright the surzhyk-tools authors. SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace surzhyk {

/// Malformed UTF-8 in a corpus file. byte_offset is the position of the
/// first offending byte within the file.
class DecodeError : public std::runtime_error {
public:
    DecodeError(std::string file_id, std::size_t byte_offset)
        : std::runtime_error("invalid UTF-8 in '" + file_id + "' at byte offset " +
                             std::to_string(byte_offset)),
          file_id_(std::move(file_id)),
          byte_offset_(byte_offset) {}

    const std::string& file_id() const { return file_id_; }
    std::size_t byte_offset() const { return byte_offset_; }

private:
    std::string file_id_;
    std::size_t byte_offset_;
};

class IoError : public std::runtime_error {
public:
    IoError(std::string path, const std::string& detail)
        : std::runtime_error("cannot read '" + path + "': " + detail),
          path_(std::move(path)) {}

    const std::string& path() const { return path_; }

private:
    std::string path_;
};

/// Rule file rejected: JSON syntax, schema violation, or invalid rule.
class RuleFileError : public std::runtime_error {
public:
    explicit RuleFileError(const std::string& message,
                           std::vector<std::string> violations = {})
        : std::runtime_error(message), violations_(std::move(violations)) {}

    const std::vector<std::string>& violations() const { return violations_; }

private:
    std::vector<std::string> violations_;
};

/// Gold label file rejected. row is the 1-based line number in the file.
class GoldFileError : public std::runtime_error {
public:
    GoldFileError(std::size_t row, const std::string& detail)
        : std::runtime_error("gold file row " + std::to_string(row) + ": " + detail),
          row_(row) {}

    std::size_t row() const { return row_; }

private:
    std::size_t row_;
};

} // namespace surzhyk
