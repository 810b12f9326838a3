#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace wafomlab::cli {

/// JSON sidecar describing one command run.
struct RunManifest {
  std::string command;
  nlohmann::ordered_json config = nlohmann::ordered_json::object();
  std::uint64_t master_seed = 0;
  std::vector<std::string> outputs;  // file names relative to the manifest
  nlohmann::ordered_json results = nlohmann::ordered_json::object();
  double wall_time_seconds = 0.0;

  nlohmann::ordered_json to_json() const;
};

std::string tool_version();

/// Measures wall time from construction.
class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

/// Numbers in the manifest use 17 significant digits, stored as strings so the
/// printed form is exactly the one used in CSV output.
std::string format_number(double value);

void write_text(const std::filesystem::path& path, const std::string& text);
void write_manifest(const std::filesystem::path& path, const RunManifest& manifest);

}  // namespace wafomlab::cli
