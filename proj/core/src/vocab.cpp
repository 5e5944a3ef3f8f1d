#include "aksara/vocab.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>

#include "aksara/hash.hpp"
#include "aksara/segmentation.hpp"
#include "aksara/utf8.hpp"

namespace aksara {

SyllableCensus census(const std::vector<std::string>& wordlist,
                      const PhonologyConfig& cfg) {
  SyllableCensus out;
  for (const std::string& word : wordlist) {
    if (word.empty()) continue;
    std::vector<Segment> segs;
    try {
      segs = segment(word, cfg);
    } catch (const InvalidCharacter&) {
      ++out.skipped_words;
      continue;
    }
    for (const Segment& s : segs) {
      ++out.counts[s.surface()];
      ++out.total;
    }
  }
  return out;
}

Vocabulary::Vocabulary(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
  index_.reserve(tokens_.size());
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    auto [it, inserted] = index_.emplace(tokens_[i], static_cast<std::int32_t>(i));
    if (!inserted) throw Error("duplicate token in vocabulary: '" + tokens_[i] + "'");
  }
}

const std::string& Vocabulary::token(std::int32_t id) const {
  if (id < 0 || static_cast<std::size_t>(id) >= tokens_.size()) {
    throw Error("token id out of range: " + std::to_string(id));
  }
  return tokens_[static_cast<std::size_t>(id)];
}

std::int32_t Vocabulary::id_of(const std::string& token) const {
  auto it = index_.find(token);
  return it == index_.end() ? kUnkId : it->second;
}

bool Vocabulary::contains(const std::string& token) const {
  return index_.count(token) != 0;
}

std::string Vocabulary::hash() const {
  std::string canon;
  for (const auto& t : tokens_) {
    canon += t;
    canon += '\n';
  }
  return fnv1a64_hex(canon);
}

Vocabulary build_vocabulary(const SyllableCensus& cns,
                            const std::vector<std::string>& wordlist,
                            std::size_t target_size, const PhonologyConfig& cfg) {
  // Base symbols: every character of every word that segments cleanly.
  std::set<std::string> base_chars;
  std::set<std::string> monosyllables;
  for (const std::string& word : wordlist) {
    if (word.empty()) continue;
    std::vector<Segment> segs;
    try {
      segs = segment(word, cfg);
    } catch (const InvalidCharacter&) {
      continue;
    }
    for (char32_t cp : utf8::decode(word)) base_chars.insert(utf8::encode(cp));
    if (segs.size() == 1) monosyllables.insert(segs[0].surface());
  }

  if (base_chars.size() > target_size) {
    throw TargetTooSmall(base_chars.size(), target_size);
  }

  std::vector<std::string> tokens;
  tokens.push_back(kUnkToken);
  std::set<std::string> chosen;
  for (const auto& c : base_chars) {
    tokens.push_back(c);
    chosen.insert(c);
  }
  for (const auto& m : monosyllables) {
    if (chosen.insert(m).second) tokens.push_back(m);
  }

  // Fill the remaining budget with the highest-frequency syllables; ties break
  // lexicographically for reproducible builds.
  std::vector<std::pair<std::string, std::uint64_t>> ranked(cns.counts.begin(),
                                                            cns.counts.end());
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  for (const auto& [syllable, count] : ranked) {
    if (chosen.size() >= target_size) break;
    if (chosen.insert(syllable).second) tokens.push_back(syllable);
  }

  Vocabulary vocab(std::move(tokens));
  vocab.set_base_symbol_count(base_chars.size());
  return vocab;
}

void save_vocabulary(const Vocabulary& vocab, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write vocabulary: " + path);
  for (const auto& t : vocab.tokens()) out << t << '\n';
}

Vocabulary load_vocabulary(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open vocabulary: " + path);
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    tokens.push_back(line);
  }
  while (!tokens.empty() && tokens.back().empty()) tokens.pop_back();
  if (tokens.empty() || tokens[0] != kUnkToken) {
    tokens.insert(tokens.begin(), kUnkToken);
  }
  return Vocabulary(std::move(tokens));
}

std::vector<std::string> load_wordlist(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open wordlist: " + path);
  std::vector<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    std::size_t first = line.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) continue;
    std::size_t last = line.find_last_not_of(" \t\r\n");
    words.push_back(utf8::ascii_lower(line.substr(first, last - first + 1)));
  }
  return words;
}

PowerLawFit fit_power_law(const SyllableCensus& cns) {
  if (cns.counts.size() < 10) {
    throw InsufficientData("power-law fit needs at least 10 distinct syllables, got " +
                           std::to_string(cns.counts.size()));
  }
  bool all_equal = true;
  std::uint64_t first = cns.counts.begin()->second;
  std::uint64_t x_min = 0;
  for (const auto& [syl, count] : cns.counts) {
    if (count != first) all_equal = false;
    if (count >= 2 && (x_min == 0 || count < x_min)) x_min = count;
  }
  if (all_equal || x_min == 0) {
    throw DegenerateDistribution("syllable counts carry no spread");
  }

  // Continuous MLE with the standard half-step shift for integer counts.
  double shift = static_cast<double>(x_min) - 0.5;
  double log_sum = 0.0;
  std::size_t n = 0;
  for (const auto& [syl, count] : cns.counts) {
    if (count < x_min) continue;
    log_sum += std::log(static_cast<double>(count) / shift);
    ++n;
  }
  if (n == 0 || log_sum <= 0.0) {
    throw DegenerateDistribution("no spread above x_min = " + std::to_string(x_min));
  }

  PowerLawFit fit;
  fit.alpha = 1.0 + static_cast<double>(n) / log_sum;
  fit.beta = 1.0 / (fit.alpha - 1.0);
  fit.x_min = static_cast<double>(x_min);
  fit.tail_size = n;
  return fit;
}

}  // namespace aksara
