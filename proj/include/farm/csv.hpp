#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "farm/table.hpp"

namespace farm {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& reason)
      : std::runtime_error("line " + std::to_string(line) + ": " + reason),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class EmptyInput : public std::runtime_error {
 public:
  EmptyInput() : std::runtime_error("input holds no transactions") {}
};

/// Reads a comma-separated table. The first line names the dimensions; the
/// first column becomes the transaction ids when tid_column is set or the
/// first header cell equals "TID" (case-insensitive), otherwise ids are
/// T1..Tm. Cells are trimmed; an empty cell is a missing value. No quoting:
/// the delimiter always splits.
RelationalTable load_csv(const std::filesystem::path& path,
                         bool tid_column = false);

/// Inverse of load_csv for comma-free labels: header with a TID column, one
/// line per transaction, missing cells left empty.
void write_csv(const RelationalTable& table, std::ostream& out);

}  // namespace farm
