#pragma once

#include <set>
#include <string>
#include <vector>

#include "aksara/error.hpp"

namespace aksara {

class PhonologyError : public Error {
public:
  explicit PhonologyError(const std::string& what) : Error(what) {}
};

// Alphabet sets driving syllabic segmentation. A character is classified as a
// vowel or a consonant, never both; consonants are the ASCII letters outside
// the vowel set plus any character mentioned by the digraph/medial/coda sets.
class PhonologyConfig {
public:
  // Validates the set invariants: digraphs are exactly two non-vowel
  // characters, medials are single non-vowel characters, special codas are
  // non-empty non-vowel strings.
  PhonologyConfig(std::set<char32_t> vowels, std::set<std::u32string> digraphs,
                  std::set<char32_t> medials, std::set<std::u32string> special_codas);

  // Convenience constructor from UTF-8 strings.
  static PhonologyConfig from_utf8(const std::vector<std::string>& vowels,
                                   const std::vector<std::string>& digraphs,
                                   const std::vector<std::string>& medials,
                                   const std::vector<std::string>& special_codas);

  // Default config for Indonesian written in the Latin alphabet.
  static PhonologyConfig indonesian();

  bool is_vowel(char32_t cp) const { return vowels_.count(cp) != 0; }
  bool is_consonant(char32_t cp) const;
  bool classifiable(char32_t cp) const { return is_vowel(cp) || is_consonant(cp); }

  bool is_digraph(std::u32string_view s) const;
  bool is_medial(char32_t cp) const { return medials_.count(cp) != 0; }
  bool is_special_coda(std::u32string_view s) const;

  const std::set<char32_t>& vowels() const { return vowels_; }
  const std::set<std::u32string>& digraphs() const { return digraphs_; }
  const std::set<char32_t>& medials() const { return medials_; }
  const std::set<std::u32string>& special_codas() const { return special_codas_; }
  std::size_t max_coda_length() const { return max_coda_length_; }

  // Stable fingerprint of the four sets, for run manifests and vocabulary
  // metadata.
  std::string hash() const;

private:
  std::set<char32_t> vowels_;
  std::set<std::u32string> digraphs_;
  std::set<char32_t> medials_;
  std::set<std::u32string> special_codas_;
  std::set<char32_t> extra_consonants_;  // non-ASCII chars drawn from D/M/H
  std::size_t max_coda_length_ = 0;
};

// Reads a config file: one `[section]` per set (vowels, digraphs, medials,
// special_codas), whitespace-separated entries, '#' comments, UTF-8.
PhonologyConfig load_phonology(const std::string& path);
PhonologyConfig parse_phonology(const std::string& text);

}  // namespace aksara
