#pragma once

#include <string>
#include <vector>

#include "aksara/error.hpp"
#include "aksara/phonology.hpp"

namespace aksara {

// A character in the input word was neither a vowel nor a consonant under the
// active phonology. Carries the offending character and its code point index.
class InvalidCharacter : public Error {
public:
  InvalidCharacter(const std::string& character, std::size_t position,
                   const std::string& word)
      : Error("invalid character '" + character + "' at position " +
              std::to_string(position) + " in word '" + word + "'"),
        character_(character),
        position_(position) {}

  const std::string& character() const { return character_; }
  std::size_t position() const { return position_; }

private:
  std::string character_;
  std::size_t position_;
};

// One syllabic unit: onset + nucleus + coda. The nucleus is a single vowel or
// empty; onset and coda hold consonant strings and may be empty.
struct Segment {
  std::string onset;
  std::string nucleus;
  std::string coda;

  std::string surface() const { return onset + nucleus + coda; }
  bool has_nucleus() const { return !nucleus.empty(); }

  bool operator==(const Segment&) const = default;
};

// Phase 1: left-to-right scan pairing onsets (single consonants, digraphs, or
// consonant+medial clusters) with following vowels and special codas.
// Consonant material not followed by a vowel becomes an isolated,
// nucleus-less unit for the later phases. Throws InvalidCharacter.
std::vector<Segment> scan(const std::string& word, const PhonologyConfig& cfg);

// Phase 2: backward pass folding a nucleus-less unit into the coda of its
// predecessor when the predecessor carries a nucleus. Chains of nucleus-less
// units are left for cluster_pass.
std::vector<Segment> virama_pass(std::vector<Segment> segments);

// Phase 3: forward pass merging remaining nucleus-less units into the onset
// of the following segment. A trailing nucleus-less unit folds into the coda
// of its predecessor so that any word containing a vowel ends up with
// nucleus-bearing segments only.
std::vector<Segment> cluster_pass(std::vector<Segment> segments);

// Full pipeline: cluster_pass(virama_pass(scan(word))). The concatenated
// surface forms always equal the input word.
std::vector<Segment> segment(const std::string& word, const PhonologyConfig& cfg);

// Surface forms of segment(word, cfg), in order.
std::vector<std::string> segment_surfaces(const std::string& word,
                                          const PhonologyConfig& cfg);

}  // namespace aksara
