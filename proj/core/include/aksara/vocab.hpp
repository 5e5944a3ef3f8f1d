#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "aksara/error.hpp"
#include "aksara/phonology.hpp"

namespace aksara {

class TargetTooSmall : public Error {
public:
  TargetTooSmall(std::size_t base_count, std::size_t target)
      : Error("vocabulary target " + std::to_string(target) +
              " is smaller than the " + std::to_string(base_count) +
              " base character symbols") {}
};

class InsufficientData : public Error {
public:
  explicit InsufficientData(const std::string& what) : Error(what) {}
};

class DegenerateDistribution : public Error {
public:
  explicit DegenerateDistribution(const std::string& what) : Error(what) {}
};

// Occurrence counts of syllable surface forms over a word-list corpus.
struct SyllableCensus {
  std::map<std::string, std::uint64_t> counts;
  std::uint64_t total = 0;
  std::uint64_t skipped_words = 0;  // words dropped for unclassifiable characters
};

SyllableCensus census(const std::vector<std::string>& wordlist,
                      const PhonologyConfig& cfg);

// Reserved unknown token; always id 0.
inline constexpr const char* kUnkToken = "<unk>";
inline constexpr std::int32_t kUnkId = 0;

// Ordered token inventory. Ids are dense and 0-based; id 0 is the reserved
// unknown token. Every single character seen in the training corpus is a
// token, so character fallback is total.
class Vocabulary {
public:
  Vocabulary() = default;
  explicit Vocabulary(std::vector<std::string> tokens);

  std::size_t size() const { return tokens_.size(); }
  const std::vector<std::string>& tokens() const { return tokens_; }
  const std::string& token(std::int32_t id) const;

  // Returns the id for a token string, or kUnkId when absent.
  std::int32_t id_of(const std::string& token) const;
  bool contains(const std::string& token) const;

  std::size_t base_symbol_count() const { return base_symbol_count_; }
  void set_base_symbol_count(std::size_t n) { base_symbol_count_ = n; }

  // Fingerprint over the ordered token list.
  std::string hash() const;

private:
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, std::int32_t> index_;
  std::size_t base_symbol_count_ = 0;
};

// Selects the vocabulary: all base character symbols, all monosyllabic
// lexemes (words that segment into exactly one unit), then the most frequent
// syllables until target_size entries (the unknown sentinel is not counted
// against the budget). Frequency ties break lexicographically.
Vocabulary build_vocabulary(const SyllableCensus& census,
                            const std::vector<std::string>& wordlist,
                            std::size_t target_size, const PhonologyConfig& cfg);

// One token per line; the line number is the token id.
void save_vocabulary(const Vocabulary& vocab, const std::string& path);

// Loads a token-per-line file. If the first line is not the unknown sentinel,
// one is prepended so id 0 is always reserved.
Vocabulary load_vocabulary(const std::string& path);

// Word-list file: UTF-8, one word per line, '#' starts a comment. Words are
// trimmed and lowercased.
std::vector<std::string> load_wordlist(const std::string& path);

struct PowerLawFit {
  double alpha = 0.0;   // exponent of p(x) ~ x^-alpha
  double beta = 0.0;    // rank exponent, 1/(alpha-1)
  double x_min = 0.0;   // smallest count included in the tail
  std::size_t tail_size = 0;
};

// Continuous maximum-likelihood (Hill) estimate of the count-distribution
// exponent over counts >= x_min, where x_min defaults to the smallest
// observed count that is at least 2. Throws InsufficientData with fewer than
// 10 distinct syllables and DegenerateDistribution when the counts carry no
// spread.
PowerLawFit fit_power_law(const SyllableCensus& census);

}  // namespace aksara
