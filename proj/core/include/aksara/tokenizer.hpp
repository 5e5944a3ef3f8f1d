#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "aksara/error.hpp"
#include "aksara/phonology.hpp"
#include "aksara/vocab.hpp"

namespace aksara {

class InvalidTokenId : public Error {
public:
  InvalidTokenId(std::int32_t id, std::size_t vocab_size)
      : Error("token id " + std::to_string(id) + " out of range for vocabulary of " +
              std::to_string(vocab_size) + " entries") {}
};

// Encoded form of a text: parallel id and surface arrays. Surfaces are the
// actual text pieces, so their concatenation reproduces the normalized input
// even where an id fell back to the unknown token.
struct TokenSequence {
  std::vector<std::int32_t> ids;
  std::vector<std::string> surface;

  std::size_t size() const { return ids.size(); }
  bool empty() const { return ids.empty(); }
};

struct EncodeOptions {
  bool lowercase = true;
};

// Syllable tokenization: alphabetic runs are segmented into syllables and
// looked up in the vocabulary; out-of-vocabulary syllables fall back to their
// constituent character symbols. Every non-alphabetic character is its own
// token. Characters missing from the vocabulary map to the unknown id.
TokenSequence encode(const std::string& text, const Vocabulary& vocab,
                     const PhonologyConfig& cfg, const EncodeOptions& opts = {});

// Concatenation of vocabulary strings by id. Throws InvalidTokenId.
std::string decode(const TokenSequence& seq, const Vocabulary& vocab);

// Batch mode: reads UTF-8 lines from `in`, writes one JSON object per line:
// {"ids":[...],"surface":[...]}.
void encode_stream(std::istream& in, std::ostream& out, const Vocabulary& vocab,
                   const PhonologyConfig& cfg, const EncodeOptions& opts = {});

}  // namespace aksara
