#include "farm/csv.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <ostream>
#include <unordered_set>

namespace farm {

namespace {

std::string trim(const std::string& text) {
  const char* space = " \t\r\n\f\v";
  const std::size_t begin = text.find_first_not_of(space);
  if (begin == std::string::npos) return {};
  const std::size_t end = text.find_last_not_of(space);
  return text.substr(begin, end - begin + 1);
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(trim(line.substr(start)));
      break;
    }
    fields.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
  return fields;
}

bool equals_tid(const std::string& text) {
  if (text.size() != 3) return false;
  return std::tolower(static_cast<unsigned char>(text[0])) == 't' &&
         std::tolower(static_cast<unsigned char>(text[1])) == 'i' &&
         std::tolower(static_cast<unsigned char>(text[2])) == 'd';
}

}  // namespace

RelationalTable load_csv(const std::filesystem::path& path, bool tid_column) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path.string());

  std::string line;
  if (!std::getline(in, line)) throw EmptyInput();

  const std::vector<std::string> header = split_fields(line);
  const bool has_tid = tid_column || (!header.empty() && equals_tid(header[0]));
  std::vector<std::string> names(header.begin() + (has_tid ? 1 : 0),
                                 header.end());
  if (names.empty()) throw ParseError(1, "header names no dimensions");
  std::unordered_set<std::string> seen;
  for (const std::string& name : names) {
    if (name.empty()) throw ParseError(1, "empty dimension name");
    if (!seen.insert(name).second)
      throw ParseError(1, "duplicate dimension name: " + name);
  }

  std::vector<std::string> ids;
  std::vector<RelationalTable::Cell> cells;
  std::size_t line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    const std::vector<std::string> fields = split_fields(line);
    if (fields.size() != header.size())
      throw ParseError(line_number, "expected " +
                                        std::to_string(header.size()) +
                                        " fields, got " +
                                        std::to_string(fields.size()));
    if (has_tid)
      ids.push_back(fields[0]);
    else
      ids.push_back("T" + std::to_string(ids.size() + 1));
    for (std::size_t i = has_tid ? 1 : 0; i < fields.size(); ++i) {
      if (fields[i].empty())
        cells.emplace_back(std::nullopt);
      else
        cells.emplace_back(fields[i]);
    }
  }
  if (ids.empty()) throw EmptyInput();
  return RelationalTable(std::move(ids), std::move(names), std::move(cells));
}

void write_csv(const RelationalTable& table, std::ostream& out) {
  out << "TID";
  for (const std::string& name : table.dimension_names()) out << ',' << name;
  out << '\n';
  for (std::size_t row = 0; row < table.rows(); ++row) {
    out << table.transaction_ids()[row];
    for (std::size_t col = 0; col < table.dims(); ++col) {
      const RelationalTable::Cell& cell = table.cell(row, col);
      out << ',' << (cell ? *cell : std::string());
    }
    out << '\n';
  }
}

}  // namespace farm
