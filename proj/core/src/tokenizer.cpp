#include "aksara/tokenizer.hpp"

#include <istream>
#include <ostream>

#include <nlohmann/json.hpp>

#include "aksara/segmentation.hpp"
#include "aksara/utf8.hpp"

namespace aksara {

namespace {

void emit(TokenSequence& seq, const Vocabulary& vocab, const std::string& piece) {
  seq.ids.push_back(vocab.id_of(piece));
  seq.surface.push_back(piece);
}

// A syllable either is a token or decomposes into its character symbols.
void emit_syllable(TokenSequence& seq, const Vocabulary& vocab,
                   const std::string& syllable) {
  if (vocab.contains(syllable)) {
    emit(seq, vocab, syllable);
    return;
  }
  for (char32_t cp : utf8::decode(syllable)) emit(seq, vocab, utf8::encode(cp));
}

}  // namespace

TokenSequence encode(const std::string& text, const Vocabulary& vocab,
                     const PhonologyConfig& cfg, const EncodeOptions& opts) {
  std::string normalized = opts.lowercase ? utf8::ascii_lower(text) : text;
  std::u32string cps = utf8::decode(normalized);

  TokenSequence seq;
  std::size_t i = 0;
  while (i < cps.size()) {
    if (!cfg.classifiable(cps[i])) {
      emit(seq, vocab, utf8::encode(cps[i]));
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < cps.size() && cfg.classifiable(cps[i])) ++i;
    std::string run = utf8::encode(std::u32string_view(cps).substr(start, i - start));
    for (const Segment& s : segment(run, cfg)) emit_syllable(seq, vocab, s.surface());
  }
  return seq;
}

std::string decode(const TokenSequence& seq, const Vocabulary& vocab) {
  std::string out;
  for (std::int32_t id : seq.ids) {
    if (id < 0 || static_cast<std::size_t>(id) >= vocab.size()) {
      throw InvalidTokenId(id, vocab.size());
    }
    out += vocab.token(id);
  }
  return out;
}

void encode_stream(std::istream& in, std::ostream& out, const Vocabulary& vocab,
                   const PhonologyConfig& cfg, const EncodeOptions& opts) {
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    TokenSequence seq = encode(line, vocab, cfg, opts);
    nlohmann::json obj;
    obj["ids"] = seq.ids;
    obj["surface"] = seq.surface;
    out << obj.dump() << '\n';
  }
}

}  // namespace aksara
