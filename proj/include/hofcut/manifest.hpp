#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace hofcut {

inline constexpr const char* kToolVersion = "1.0.0";

// FNV-1a 64-bit content fingerprints; used to detect input/output drift
// between runs, not for security.
std::uint64_t fnv1a64(std::string_view data);
std::uint64_t fnv1a64_file(const std::filesystem::path& path);

/// Reproducibility record written next to every file a subcommand
/// produces: the exact invocation, the resolved configuration, and
/// digests of everything read and written.
struct RunManifest {
  std::string command;
  std::vector<std::string> argv;
  std::map<std::string, std::string> config;

  struct Entry {
    std::string path;
    std::string digest;  // "fnv1a64:<hex>"
  };
  std::vector<Entry> inputs;
  std::vector<Entry> outputs;

  void add_input(const std::filesystem::path& path);
  void add_output(const std::filesystem::path& path);

  std::string to_json() const;
  void write(const std::filesystem::path& path) const;
};

}  // namespace hofcut
