#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "aksara/corpus.hpp"
#include "aksara/error.hpp"
#include "aksara/tokenizer.hpp"

namespace aksara {

class EmptyText : public Error {
public:
  EmptyText() : Error("token-per-character ratio is undefined for empty text") {}
};

class EmptySequence : public Error {
public:
  EmptySequence() : Error("similarity is undefined for an empty token sequence") {}
};

class NoValidSamples : public Error {
public:
  NoValidSamples(const std::string& a, const std::string& b)
      : Error("no sample has non-empty token sequences for pair (" + a + ", " + b + ")") {}
};

class PairMismatch : public Error {
public:
  explicit PairMismatch(const std::string& what) : Error(what) {}
};

// Token per character: sequence length over the code point count of the text
// that was tokenized. Throws EmptyText when original_length is zero.
double tpc(const TokenSequence& seq, std::size_t original_length);

// Local alignment scoring weights.
struct AlignmentParams {
  int match_score = 2;
  int mismatch_score = -1;
  int gap_penalty_per_step = 1;  // subtracted once per skipped token
};

// Smith-Waterman local alignment over token ids with linear gap cost. Returns
// the maximum cell of the scoring matrix (never negative).
std::int64_t smith_waterman(const TokenSequence& a, const TokenSequence& b,
                            const AlignmentParams& params = {});

// Alignment score normalized by the geometric mean of the best attainable
// scores: max(H) / (match_score * sqrt(|a|*|b|)). In [0, 1]; throws
// EmptySequence when either side is empty.
double similarity(const TokenSequence& a, const TokenSequence& b,
                  const AlignmentParams& params = {});

// Mean alignment similarity per unordered language pair over a parallel
// corpus.
struct SimilarityReport {
  std::vector<std::string> languages;
  // Keyed by lexicographically ordered language pair.
  std::map<std::pair<std::string, std::string>, double> pair_means;
  std::size_t sample_count = 0;

  double mean_for(const std::string& a, const std::string& b) const;
};

using TokenizeFn = std::function<TokenSequence(const std::string&)>;

// Tokenizes every sample in every language and averages similarity per
// unordered language pair, skipping samples where either side tokenizes to an
// empty sequence. Throws NoValidSamples if a pair has no usable sample.
SimilarityReport pair_report(const ParallelCorpus& corpus, const TokenizeFn& tokenize,
                             const AlignmentParams& params = {});

// Comparative statistics between two reports covering identical pairs:
// ordinary least squares of `candidate` values on `baseline` values, rank and
// linear correlation, and the per-pair difference (candidate - baseline).
struct ComparisonStats {
  double slope = 0.0;
  double intercept = 0.0;
  double pearson_r = 0.0;
  double spearman_rho = 0.0;
  std::map<std::pair<std::string, std::string>, double> diff;
};

ComparisonStats compare_reports(const SimilarityReport& candidate,
                                const SimilarityReport& baseline);

// JSON serialization of reports (stable key order, 9 significant digits).
std::string report_to_json(const SimilarityReport& report);
SimilarityReport report_from_json(const std::string& text);
void save_report(const SimilarityReport& report, const std::string& path);
SimilarityReport load_report(const std::string& path);

}  // namespace aksara
