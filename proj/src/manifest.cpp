#include "hofcut/manifest.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hofcut/types.hpp"

namespace hofcut {

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::uint64_t fnv1a64_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in.is_open()) {
    throw DataError("cannot open file for digest: " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return fnv1a64(buffer.str());
}

namespace {

std::string digest_string(std::uint64_t hash) {
  std::ostringstream out;
  out << "fnv1a64:" << std::hex << hash;
  return out.str();
}

}  // namespace

void RunManifest::add_input(const std::filesystem::path& path) {
  inputs.push_back(Entry{path.string(), digest_string(fnv1a64_file(path))});
}

void RunManifest::add_output(const std::filesystem::path& path) {
  outputs.push_back(Entry{path.string(), digest_string(fnv1a64_file(path))});
}

std::string RunManifest::to_json() const {
  nlohmann::json doc;
  doc["tool"] = "hofcut";
  doc["version"] = kToolVersion;
  doc["command"] = command;
  doc["argv"] = argv;
  doc["config"] = config;
  auto entry_list = [](const std::vector<Entry>& entries) {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& entry : entries) {
      list.push_back({{"path", entry.path}, {"digest", entry.digest}});
    }
    return list;
  };
  doc["inputs"] = entry_list(inputs);
  doc["outputs"] = entry_list(outputs);
  return doc.dump(2) + "\n";
}

void RunManifest::write(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out.is_open()) {
    throw DataError("cannot write manifest: " + path.string());
  }
  out << to_json();
}

}  // namespace hofcut
