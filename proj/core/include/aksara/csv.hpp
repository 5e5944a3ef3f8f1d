#pragma once

#include <string>
#include <vector>

#include "aksara/error.hpp"

namespace aksara {
namespace csv {

class ParseError : public Error {
public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

// RFC-4180 parser: quoted fields, doubled-quote escapes, embedded delimiters
// and newlines inside quotes. Works for CSV (',') and TSV ('\t').
std::vector<std::vector<std::string>> parse(const std::string& content, char delimiter);

// Quotes a field when it contains the delimiter, a quote, or a newline.
std::string quote_field(const std::string& field, char delimiter);

std::string write_row(const std::vector<std::string>& fields, char delimiter);

}  // namespace csv
}  // namespace aksara
