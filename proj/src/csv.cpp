#include "hofcut/csv.hpp"

#include "hofcut/types.hpp"

namespace hofcut::csv {

Reader::Reader(const std::filesystem::path& path)
    : in_(path, std::ios::binary), file_name_(path.filename().string()) {
  if (!in_.is_open()) {
    throw DataError(file_name_ + ": cannot open file (" + path.string() + ")");
  }
  if (!read_record(header_) || header_.empty()) {
    throw DataError(file_name_ + ": missing header row");
  }
  // Strip a UTF-8 BOM from the first header cell.
  if (header_[0].rfind("\xEF\xBB\xBF", 0) == 0) {
    header_[0].erase(0, 3);
  }
  for (std::size_t i = 0; i < header_.size(); ++i) {
    columns_.emplace(header_[i], i);
  }
}

std::optional<std::size_t> Reader::column(const std::string& name) const {
  auto it = columns_.find(name);
  if (it == columns_.end()) return std::nullopt;
  return it->second;
}

bool Reader::next(std::vector<std::string>& fields) {
  return read_record(fields);
}

bool Reader::read_record(std::vector<std::string>& fields) {
  fields.clear();
  std::string line;
  if (!std::getline(in_, line)) return false;
  ++line_;
  record_line_ = line_;

  std::string field;
  bool in_quotes = false;
  std::size_t i = 0;
  while (true) {
    if (i >= line.size()) {
      if (in_quotes) {
        // Quoted field spans a newline; pull in the next physical line.
        if (!std::getline(in_, line)) {
          throw DataError(file_name_ + ":" + std::to_string(record_line_) +
                          ": unterminated quoted field");
        }
        ++line_;
        field.push_back('\n');
        i = 0;
        continue;
      }
      break;
    }
    char c = line[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        field.push_back(c);
      }
    } else if (c == '"' && field.empty()) {
      in_quotes = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else if (c == '\r' && i + 1 == line.size()) {
      // CRLF line ending
    } else {
      field.push_back(c);
    }
    ++i;
  }
  fields.push_back(std::move(field));
  return true;
}

std::string escape(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out.push_back('"');
  return out;
}

void write_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out.put(',');
    out << escape(fields[i]);
  }
  out.put('\n');
}

std::string sanitize_utf8(const std::string& text) {
  static const char kReplacement[] = "\xEF\xBF\xBD";
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  const auto* bytes = reinterpret_cast<const unsigned char*>(text.data());
  while (i < text.size()) {
    unsigned char b = bytes[i];
    std::size_t len = 0;
    if (b < 0x80) len = 1;
    else if ((b & 0xE0) == 0xC0 && b >= 0xC2) len = 2;
    else if ((b & 0xF0) == 0xE0) len = 3;
    else if ((b & 0xF8) == 0xF0 && b <= 0xF4) len = 4;

    bool valid = len > 0 && i + len <= text.size();
    for (std::size_t k = 1; valid && k < len; ++k) {
      valid = (bytes[i + k] & 0xC0) == 0x80;
    }
    if (valid) {
      out.append(text, i, len);
      i += len;
    } else {
      out.append(kReplacement);
      ++i;
    }
  }
  return out;
}

}  // namespace hofcut::csv
