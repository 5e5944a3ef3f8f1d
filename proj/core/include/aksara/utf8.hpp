#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "aksara/error.hpp"

namespace aksara {

class EncodingError : public Error {
public:
  explicit EncodingError(const std::string& what) : Error(what) {}
};

namespace utf8 {

// Decodes a UTF-8 string into code points. Throws EncodingError on malformed
// input (overlong forms, truncated sequences, invalid lead bytes).
std::u32string decode(std::string_view text);

// Encodes a single code point as UTF-8.
std::string encode(char32_t cp);

// Encodes a code point sequence as UTF-8.
std::string encode(std::u32string_view text);

// Number of code points in a UTF-8 string.
std::size_t length(std::string_view text);

bool is_valid(std::string_view text);

// ASCII-only lowercasing; non-ASCII bytes pass through untouched.
std::string ascii_lower(std::string_view text);

inline bool is_ascii_letter(char32_t cp) {
  return (cp >= U'a' && cp <= U'z') || (cp >= U'A' && cp <= U'Z');
}

}  // namespace utf8
}  // namespace aksara
