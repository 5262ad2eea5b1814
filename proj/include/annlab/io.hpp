#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "annlab/errors.hpp"

namespace annlab {

/// Shortest round-trip decimal form (17 significant digits).
std::string fmt17(double x);

/// Key-value experiment configuration. Files hold `key = value` lines
/// (# starts a comment); command-line overrides replace file values.
class ExperimentConfig {
  public:
    static ExperimentConfig from_file(const std::string& path);
    static ExperimentConfig from_lines(const std::string& text);

    void set(const std::string& key, const std::string& value) { kv_[key] = value; }
    bool has(const std::string& key) const { return kv_.count(key) != 0; }

    std::string get(const std::string& key, const std::string& fallback) const;
    double get_double(const std::string& key, double fallback) const;
    long get_long(const std::string& key, long fallback) const;
    std::uint64_t get_u64(const std::string& key, std::uint64_t fallback) const;

    /// Rejects unknown keys: every key must appear in `allowed`.
    void validate_keys(const std::vector<std::string>& allowed) const;

    /// FNV-1a over the canonical sorted key=value listing.
    std::string hash() const;

    const std::map<std::string, std::string>& entries() const { return kv_; }

  private:
    std::map<std::string, std::string> kv_;
};

/// Tidy CSV with # header comments, fixed column order, fmt17 values.
class CsvWriter {
  public:
    explicit CsvWriter(std::vector<std::string> columns) : columns_(std::move(columns)) {}

    void comment(const std::string& key, const std::string& value);
    void row(const std::vector<double>& values);
    void raw_row(const std::vector<std::string>& values);
    std::string str() const;
    void write_file(const std::string& path) const;

  private:
    std::vector<std::string> columns_;
    std::vector<std::string> comments_;
    std::vector<std::string> rows_;
};

} // namespace annlab
