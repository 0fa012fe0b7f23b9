#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sotacheck {

// Input text could not be parsed. Line numbers are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A query carries more than one relevant document under the strict
// single-relevance policy.
class MultiplicityError : public std::runtime_error {
 public:
  explicit MultiplicityError(const std::string& query_id)
      : std::runtime_error("query '" + query_id +
                           "' has more than one relevant document under the "
                           "strict single-relevance policy"),
        query_id_(query_id) {}

  const std::string& query_id() const noexcept { return query_id_; }

 private:
  std::string query_id_;
};

}  // namespace sotacheck
