#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dident {

// Raised when a construction or enumeration outgrows its configured bound.
class BudgetExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
  // column is the 0-based character offset of the offending position.
  ParseError(const std::string& what, std::size_t column)
      : std::runtime_error(what + " at column " + std::to_string(column)), column_(column) {}

  std::size_t column() const { return column_; }

private:
  std::size_t column_;
};

} // namespace dident
