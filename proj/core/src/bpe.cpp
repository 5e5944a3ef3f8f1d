#include "aksara/bpe.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "aksara/utf8.hpp"

namespace aksara {

namespace {

// Unicode classification for the GPT-2 pre-tokenizer. Covers the major letter
// and digit blocks; anything else lands in the punctuation branch, which is
// harmless because every byte still round-trips through the proxy alphabet.
bool is_letter(char32_t cp) {
  if ((cp >= U'a' && cp <= U'z') || (cp >= U'A' && cp <= U'Z')) return true;
  if (cp == 0x00AA || cp == 0x00B5 || cp == 0x00BA) return true;
  if (cp >= 0x00C0 && cp <= 0x02AF) return cp != 0x00D7 && cp != 0x00F7;
  if (cp == 0x0386 || (cp >= 0x0388 && cp <= 0x03FF)) return true;  // Greek
  if (cp >= 0x0400 && cp <= 0x04FF) return true;                    // Cyrillic
  if ((cp >= 0x0531 && cp <= 0x0556) || (cp >= 0x0561 && cp <= 0x0587)) return true;
  if (cp >= 0x05D0 && cp <= 0x05EA) return true;                    // Hebrew
  if (cp >= 0x0620 && cp <= 0x064A) return true;                    // Arabic
  if (cp >= 0x3041 && cp <= 0x3096) return true;                    // Hiragana
  if ((cp >= 0x30A1 && cp <= 0x30FA) || cp == 0x30FC) return true;  // Katakana
  if (cp >= 0x4E00 && cp <= 0x9FFF) return true;                    // CJK
  if (cp >= 0xAC00 && cp <= 0xD7A3) return true;                    // Hangul
  return false;
}

bool is_digit(char32_t cp) {
  if (cp >= U'0' && cp <= U'9') return true;
  if (cp >= 0x0660 && cp <= 0x0669) return true;
  if (cp >= 0x06F0 && cp <= 0x06F9) return true;
  if (cp >= 0x0966 && cp <= 0x096F) return true;
  if (cp >= 0xFF10 && cp <= 0xFF19) return true;
  return false;
}

bool is_space(char32_t cp) {
  switch (cp) {
    case U' ':
    case U'\t':
    case U'\n':
    case U'\r':
    case 0x0B:
    case 0x0C:
    case 0x85:
    case 0xA0:
    case 0x1680:
    case 0x2028:
    case 0x2029:
    case 0x202F:
    case 0x205F:
    case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

bool is_other(char32_t cp) { return !is_space(cp) && !is_letter(cp) && !is_digit(cp); }

// Splits text exactly like the published GPT-2 regex:
//   's|'t|'re|'ve|'m|'ll|'d| ?\p{L}+| ?\p{N}+| ?[^\s\p{L}\p{N}]+|\s+(?!\S)|\s+
std::vector<std::u32string> pretokenize(const std::u32string& cps) {
  static const std::vector<std::u32string> contractions = {
      U"'s", U"'t", U"'re", U"'ve", U"'m", U"'ll", U"'d"};
  std::vector<std::u32string> out;
  std::size_t i = 0;
  const std::size_t n = cps.size();
  while (i < n) {
    if (cps[i] == U'\'') {
      bool matched = false;
      for (const auto& c : contractions) {
        if (i + c.size() <= n && cps.compare(i, c.size(), c) == 0) {
          out.push_back(c);
          i += c.size();
          matched = true;
          break;
        }
      }
      if (matched) continue;
    }
    std::size_t j = i + (cps[i] == U' ' ? 1 : 0);
    if (j < n && is_letter(cps[j])) {
      std::size_t k = j;
      while (k < n && is_letter(cps[k])) ++k;
      out.push_back(cps.substr(i, k - i));
      i = k;
      continue;
    }
    if (j < n && is_digit(cps[j])) {
      std::size_t k = j;
      while (k < n && is_digit(cps[k])) ++k;
      out.push_back(cps.substr(i, k - i));
      i = k;
      continue;
    }
    if (j < n && is_other(cps[j])) {
      std::size_t k = j;
      while (k < n && is_other(cps[k])) ++k;
      out.push_back(cps.substr(i, k - i));
      i = k;
      continue;
    }
    // Whitespace run: keep the final blank attached to the next token unless
    // the run ends the text.
    std::size_t k = i;
    while (k < n && is_space(cps[k])) ++k;
    if (k == n) {
      out.push_back(cps.substr(i, k - i));
      i = k;
    } else if (k - i >= 2) {
      out.push_back(cps.substr(i, k - i - 1));
      i = k - 1;
    } else {
      out.push_back(cps.substr(i, 1));
      ++i;
    }
  }
  return out;
}

std::array<char32_t, 256> build_byte_encoder() {
  std::array<char32_t, 256> enc{};
  std::array<bool, 256> direct{};
  auto mark = [&](int lo, int hi) {
    for (int b = lo; b <= hi; ++b) {
      enc[static_cast<std::size_t>(b)] = static_cast<char32_t>(b);
      direct[static_cast<std::size_t>(b)] = true;
    }
  };
  mark('!', '~');
  mark(0xA1, 0xAC);
  mark(0xAE, 0xFF);
  int next = 256;
  for (int b = 0; b < 256; ++b) {
    if (!direct[static_cast<std::size_t>(b)]) {
      enc[static_cast<std::size_t>(b)] = static_cast<char32_t>(next++);
    }
  }
  return enc;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

BpeModel BpeModel::from_strings(const std::string& vocab_json,
                                const std::string& merges_text) {
  BpeModel model;
  model.byte_encoder_ = build_byte_encoder();
  for (int b = 0; b < 256; ++b) {
    model.byte_decoder_[model.byte_encoder_[static_cast<std::size_t>(b)]] =
        static_cast<std::uint8_t>(b);
  }

  nlohmann::json parsed;
  try {
    parsed = nlohmann::json::parse(vocab_json);
  } catch (const nlohmann::json::exception& e) {
    throw MalformedVocab(std::string("vocab is not valid JSON: ") + e.what());
  }
  if (!parsed.is_object()) throw MalformedVocab("vocab must be a JSON object");
  std::set<std::int32_t> ids;
  for (const auto& [token, id] : parsed.items()) {
    if (!id.is_number_integer()) {
      throw MalformedVocab("vocab id for '" + token + "' is not an integer");
    }
    std::int32_t value = id.get<std::int32_t>();
    if (!ids.insert(value).second) {
      throw MalformedVocab("duplicate vocab id " + std::to_string(value));
    }
    model.vocab_.emplace(token, value);
  }

  std::istringstream lines(merges_text);
  std::string line;
  bool first = true;
  std::size_t lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (first) {
      first = false;
      if (line.rfind("#", 0) == 0) continue;  // "#version" header
    }
    if (line.empty()) continue;
    auto space = line.find(' ');
    if (space == std::string::npos || space == 0 || space + 1 >= line.size() ||
        line.find(' ', space + 1) != std::string::npos) {
      throw MalformedMerges("line " + std::to_string(lineno) +
                            " is not a space-separated pair: '" + line + "'");
    }
    std::u32string left = utf8::decode(line.substr(0, space));
    std::u32string right = utf8::decode(line.substr(space + 1));
    model.ranks_.emplace(std::make_pair(left, right), model.merges_.size());
    model.merges_.emplace_back(std::move(left), std::move(right));
  }

  for (const auto& [left, right] : model.merges_) {
    std::string product = utf8::encode(left) + utf8::encode(right);
    if (!model.vocab_.count(product)) {
      throw InconsistentModel("merge product '" + product + "' missing from vocab");
    }
  }
  for (int b = 0; b < 256; ++b) {
    std::string proxy = utf8::encode(model.byte_encoder_[static_cast<std::size_t>(b)]);
    if (!model.vocab_.count(proxy)) {
      throw InconsistentModel("byte symbol '" + proxy + "' (byte " + std::to_string(b) +
                              ") missing from vocab");
    }
  }
  return model;
}

BpeModel BpeModel::load(const std::string& vocab_path, const std::string& merges_path) {
  return from_strings(read_file(vocab_path), read_file(merges_path));
}

std::int32_t BpeModel::id_for_symbol(const std::u32string& symbol) const {
  auto it = vocab_.find(utf8::encode(symbol));
  if (it == vocab_.end()) {
    throw InconsistentModel("symbol missing from vocab: '" + utf8::encode(symbol) + "'");
  }
  return it->second;
}

std::vector<std::u32string> BpeModel::apply_merges(std::vector<std::u32string> word) const {
  if (word.size() < 2) return word;
  while (true) {
    std::size_t best_rank = std::numeric_limits<std::size_t>::max();
    std::pair<std::u32string, std::u32string> best;
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
      auto it = ranks_.find(std::make_pair(word[i], word[i + 1]));
      if (it != ranks_.end() && it->second < best_rank) {
        best_rank = it->second;
        best = it->first;
      }
    }
    if (best_rank == std::numeric_limits<std::size_t>::max()) break;

    std::vector<std::u32string> merged;
    merged.reserve(word.size());
    std::size_t i = 0;
    while (i < word.size()) {
      if (i + 1 < word.size() && word[i] == best.first && word[i + 1] == best.second) {
        merged.push_back(best.first + best.second);
        i += 2;
      } else {
        merged.push_back(std::move(word[i]));
        ++i;
      }
    }
    word = std::move(merged);
    if (word.size() == 1) break;
  }
  return word;
}

TokenSequence BpeModel::encode(const std::string& text) const {
  TokenSequence seq;
  if (text.empty()) return seq;
  std::u32string cps = utf8::decode(text);
  for (const std::u32string& piece : pretokenize(cps)) {
    std::string raw = utf8::encode(piece);
    std::vector<std::u32string> word;
    word.reserve(raw.size());
    for (unsigned char byte : raw) {
      word.push_back(std::u32string(1, byte_encoder_[byte]));
    }
    for (const std::u32string& symbol : apply_merges(std::move(word))) {
      seq.ids.push_back(id_for_symbol(symbol));
      // Surface carries the raw bytes so concatenation reproduces the input.
      std::string surface;
      for (char32_t proxy : symbol) {
        surface.push_back(static_cast<char>(byte_decoder_.at(proxy)));
      }
      seq.surface.push_back(std::move(surface));
    }
  }
  return seq;
}

}  // namespace aksara
