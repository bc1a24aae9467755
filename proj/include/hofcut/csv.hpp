#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <unordered_map>
#include <vector>

namespace hofcut::csv {

/// Streaming reader for comma-delimited files with a header row.
/// Quoted fields (RFC 4180 style, "" escaping, embedded commas/newlines)
/// are supported. A leading UTF-8 BOM and trailing CR are stripped.
class Reader {
 public:
  explicit Reader(const std::filesystem::path& path);

  const std::vector<std::string>& header() const { return header_; }
  std::optional<std::size_t> column(const std::string& name) const;

  /// Reads the next record into `fields`. Returns false at end of file.
  bool next(std::vector<std::string>& fields);

  /// 1-based line number where the most recent record started.
  std::size_t record_line() const { return record_line_; }

  const std::string& file_name() const { return file_name_; }

 private:
  bool read_record(std::vector<std::string>& fields);

  std::ifstream in_;
  std::string file_name_;
  std::vector<std::string> header_;
  std::unordered_map<std::string, std::size_t> columns_;
  std::size_t line_ = 0;         // lines consumed so far
  std::size_t record_line_ = 0;  // line where the last record started
};

std::string escape(const std::string& field);
void write_row(std::ostream& out, const std::vector<std::string>& fields);

/// Replaces invalid UTF-8 byte sequences with U+FFFD so that downstream
/// output is always valid UTF-8.
std::string sanitize_utf8(const std::string& text);

}  // namespace hofcut::csv
