#include "cli/manifest.hpp"

#include <cstdio>
#include <fstream>

#include "wafomlab/errors.hpp"

namespace wafomlab::cli {

nlohmann::ordered_json RunManifest::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["tool"] = "wafomlab";
  j["version"] = tool_version();
  j["master_seed"] = master_seed;
  j["config"] = config;
  j["outputs"] = outputs;
  j["results"] = results;
  j["wall_time_seconds"] = wall_time_seconds;
  return j;
}

std::string tool_version() { return WAFOMLAB_VERSION; }

std::string format_number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
  if (!out) throw Error("write failed for " + path.string());
}

void write_manifest(const std::filesystem::path& path, const RunManifest& manifest) {
  write_text(path, manifest.to_json().dump(2) + "\n");
}

}  // namespace wafomlab::cli
