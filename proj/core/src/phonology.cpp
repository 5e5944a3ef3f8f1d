#include "aksara/phonology.hpp"

#include <fstream>
#include <sstream>

#include "aksara/hash.hpp"
#include "aksara/utf8.hpp"

namespace aksara {

PhonologyConfig::PhonologyConfig(std::set<char32_t> vowels,
                                 std::set<std::u32string> digraphs,
                                 std::set<char32_t> medials,
                                 std::set<std::u32string> special_codas)
    : vowels_(std::move(vowels)),
      digraphs_(std::move(digraphs)),
      medials_(std::move(medials)),
      special_codas_(std::move(special_codas)) {
  if (vowels_.empty()) throw PhonologyError("vowel set must not be empty");
  for (const auto& d : digraphs_) {
    if (d.size() != 2) {
      throw PhonologyError("digraph must be exactly two characters: '" +
                           utf8::encode(d) + "'");
    }
    for (char32_t c : d) {
      if (vowels_.count(c)) {
        throw PhonologyError("digraph '" + utf8::encode(d) + "' contains a vowel");
      }
      if (!utf8::is_ascii_letter(c)) extra_consonants_.insert(c);
    }
  }
  for (char32_t m : medials_) {
    if (vowels_.count(m)) {
      throw PhonologyError("medial '" + utf8::encode(m) + "' is also a vowel");
    }
    if (!utf8::is_ascii_letter(m)) extra_consonants_.insert(m);
  }
  for (const auto& h : special_codas_) {
    if (h.empty()) throw PhonologyError("special coda must not be empty");
    for (char32_t c : h) {
      if (vowels_.count(c)) {
        throw PhonologyError("special coda '" + utf8::encode(h) + "' contains a vowel");
      }
      if (!utf8::is_ascii_letter(c)) extra_consonants_.insert(c);
    }
    max_coda_length_ = std::max(max_coda_length_, h.size());
  }
}

PhonologyConfig PhonologyConfig::from_utf8(const std::vector<std::string>& vowels,
                                           const std::vector<std::string>& digraphs,
                                           const std::vector<std::string>& medials,
                                           const std::vector<std::string>& special_codas) {
  std::set<char32_t> v;
  for (const auto& s : vowels) {
    std::u32string u = utf8::decode(s);
    if (u.size() != 1) throw PhonologyError("vowel entry must be a single character: '" + s + "'");
    v.insert(u[0]);
  }
  std::set<std::u32string> d;
  for (const auto& s : digraphs) d.insert(utf8::decode(s));
  std::set<char32_t> m;
  for (const auto& s : medials) {
    std::u32string u = utf8::decode(s);
    if (u.size() != 1) throw PhonologyError("medial entry must be a single character: '" + s + "'");
    m.insert(u[0]);
  }
  std::set<std::u32string> h;
  for (const auto& s : special_codas) h.insert(utf8::decode(s));
  return PhonologyConfig(std::move(v), std::move(d), std::move(m), std::move(h));
}

PhonologyConfig PhonologyConfig::indonesian() {
  return from_utf8({"a", "e", "i", "o", "u"},
                   {"ng", "ny", "kh", "sy", "th", "dh"},
                   {"r", "l", "w", "y"},
                   {"ng", "h", "r", "n", "m", "s", "k", "t", "p", "l"});
}

bool PhonologyConfig::is_consonant(char32_t cp) const {
  if (vowels_.count(cp)) return false;
  if (utf8::is_ascii_letter(cp)) return true;
  return extra_consonants_.count(cp) != 0;
}

bool PhonologyConfig::is_digraph(std::u32string_view s) const {
  return digraphs_.count(std::u32string(s)) != 0;
}

bool PhonologyConfig::is_special_coda(std::u32string_view s) const {
  return special_codas_.count(std::u32string(s)) != 0;
}

std::string PhonologyConfig::hash() const {
  std::string canon;
  canon += "V:";
  for (char32_t c : vowels_) canon += utf8::encode(c) + " ";
  canon += "|D:";
  for (const auto& d : digraphs_) canon += utf8::encode(d) + " ";
  canon += "|M:";
  for (char32_t c : medials_) canon += utf8::encode(c) + " ";
  canon += "|H:";
  for (const auto& h : special_codas_) canon += utf8::encode(h) + " ";
  return fnv1a64_hex(canon);
}

PhonologyConfig parse_phonology(const std::string& text) {
  if (!utf8::is_valid(text)) throw PhonologyError("phonology config is not valid UTF-8");
  std::vector<std::string> vowels, digraphs, medials, codas;
  std::vector<std::string>* target = nullptr;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    std::istringstream words(line);
    std::string tok;
    while (words >> tok) {
      if (tok.front() == '[' && tok.back() == ']') {
        std::string name = tok.substr(1, tok.size() - 2);
        if (name == "vowels") target = &vowels;
        else if (name == "digraphs") target = &digraphs;
        else if (name == "medials") target = &medials;
        else if (name == "special_codas") target = &codas;
        else throw PhonologyError("unknown section '" + name + "' at line " + std::to_string(lineno));
      } else {
        if (!target) {
          throw PhonologyError("entry '" + tok + "' before any section at line " +
                               std::to_string(lineno));
        }
        target->push_back(tok);
      }
    }
  }
  return PhonologyConfig::from_utf8(vowels, digraphs, medials, codas);
}

PhonologyConfig load_phonology(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PhonologyError("cannot open phonology config: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_phonology(buf.str());
}

}  // namespace aksara
