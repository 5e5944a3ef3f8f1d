#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "aksara/error.hpp"
#include "aksara/tokenizer.hpp"

namespace aksara {

class MalformedVocab : public Error {
public:
  explicit MalformedVocab(const std::string& what) : Error(what) {}
};

class MalformedMerges : public Error {
public:
  explicit MalformedMerges(const std::string& what) : Error(what) {}
};

class InconsistentModel : public Error {
public:
  explicit InconsistentModel(const std::string& what) : Error(what) {}
};

// Byte-level BPE model in the GPT-2 file format: a JSON token-to-id map plus
// an ordered merge list. Bytes are lifted to printable proxy code points
// before merging, so any byte sequence encodes without error.
class BpeModel {
public:
  static BpeModel load(const std::string& vocab_path, const std::string& merges_path);
  static BpeModel from_strings(const std::string& vocab_json,
                               const std::string& merges_text);

  std::size_t vocab_size() const { return vocab_.size(); }
  std::size_t merge_count() const { return merges_.size(); }

  // Deterministic byte-level BPE encoding with the GPT-2 pre-tokenizer.
  TokenSequence encode(const std::string& text) const;

  // Proxy code point for a byte value.
  char32_t byte_proxy(std::uint8_t byte) const { return byte_encoder_[byte]; }

private:
  BpeModel() = default;

  std::int32_t id_for_symbol(const std::u32string& symbol) const;
  std::vector<std::u32string> apply_merges(std::vector<std::u32string> word) const;

  std::unordered_map<std::string, std::int32_t> vocab_;
  std::vector<std::pair<std::u32string, std::u32string>> merges_;
  std::map<std::pair<std::u32string, std::u32string>, std::size_t> ranks_;
  std::array<char32_t, 256> byte_encoder_{};
  std::unordered_map<char32_t, std::uint8_t> byte_decoder_;
};

inline BpeModel load_bpe(const std::string& vocab_path, const std::string& merges_path) {
  return BpeModel::load(vocab_path, merges_path);
}

inline TokenSequence bpe_encode(const std::string& text, const BpeModel& model) {
  return model.encode(text);
}

}  // namespace aksara
