#include "aksara/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

namespace aksara {

namespace {

// Round to 9 significant digits so serialized numbers diff cleanly.
double round9(double v) {
  if (v == 0.0 || !std::isfinite(v)) return v;
  std::ostringstream s;
  s.precision(9);
  s << v;
  return std::stod(s.str());
}

std::pair<std::string, std::string> pair_key(const std::string& a, const std::string& b) {
  return a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
}

std::vector<double> average_ranks(const std::vector<double>& values) {
  std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return values[i] < values[j]; });
  std::vector<double> ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
    double rank = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
  std::size_t n = x.size();
  double mx = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(n);
  double my = std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(n);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) {
    throw PairMismatch("correlation undefined: a report has zero variance");
  }
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace

double tpc(const TokenSequence& seq, std::size_t original_length) {
  if (original_length == 0) throw EmptyText();
  return static_cast<double>(seq.size()) / static_cast<double>(original_length);
}

std::int64_t smith_waterman(const TokenSequence& a, const TokenSequence& b,
                            const AlignmentParams& params) {
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  if (n == 0 || m == 0) return 0;

  const std::int64_t gap = params.gap_penalty_per_step;
  std::vector<std::int64_t> prev(m + 1, 0), cur(m + 1, 0);
  std::int64_t best = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    cur[0] = 0;
    for (std::size_t j = 1; j <= m; ++j) {
      std::int64_t sub = a.ids[i - 1] == b.ids[j - 1] ? params.match_score
                                                      : params.mismatch_score;
      std::int64_t score = prev[j - 1] + sub;
      score = std::max(score, prev[j] - gap);
      score = std::max(score, cur[j - 1] - gap);
      score = std::max<std::int64_t>(score, 0);
      cur[j] = score;
      best = std::max(best, score);
    }
    std::swap(prev, cur);
  }
  return best;
}

double similarity(const TokenSequence& a, const TokenSequence& b,
                  const AlignmentParams& params) {
  if (a.empty() || b.empty()) throw EmptySequence();
  std::int64_t score = smith_waterman(a, b, params);
  double denom = static_cast<double>(params.match_score) *
                 std::sqrt(static_cast<double>(a.size()) * static_cast<double>(b.size()));
  return static_cast<double>(score) / denom;
}

double SimilarityReport::mean_for(const std::string& a, const std::string& b) const {
  auto it = pair_means.find(pair_key(a, b));
  if (it == pair_means.end()) {
    throw PairMismatch("pair (" + a + ", " + b + ") missing from report");
  }
  return it->second;
}

SimilarityReport pair_report(const ParallelCorpus& corpus, const TokenizeFn& tokenize,
                             const AlignmentParams& params) {
  if (corpus.languages.size() < 2) {
    throw Error("pair report needs at least two languages");
  }
  if (corpus.rows.empty()) throw Error("pair report needs at least one sample");

  // Tokenize once per (sample, language).
  std::vector<std::vector<TokenSequence>> encoded(corpus.rows.size());
  for (std::size_t r = 0; r < corpus.rows.size(); ++r) {
    encoded[r].reserve(corpus.languages.size());
    for (const std::string& text : corpus.rows[r]) encoded[r].push_back(tokenize(text));
  }

  SimilarityReport report;
  report.languages = corpus.languages;
  report.sample_count = corpus.rows.size();
  for (std::size_t i = 0; i < corpus.languages.size(); ++i) {
    for (std::size_t j = i + 1; j < corpus.languages.size(); ++j) {
      double sum = 0.0;
      std::size_t used = 0;
      for (std::size_t r = 0; r < corpus.rows.size(); ++r) {
        const TokenSequence& a = encoded[r][i];
        const TokenSequence& b = encoded[r][j];
        if (a.empty() || b.empty()) continue;
        sum += similarity(a, b, params);
        ++used;
      }
      if (used == 0) throw NoValidSamples(corpus.languages[i], corpus.languages[j]);
      report.pair_means[pair_key(corpus.languages[i], corpus.languages[j])] =
          sum / static_cast<double>(used);
    }
  }
  return report;
}

ComparisonStats compare_reports(const SimilarityReport& candidate,
                                const SimilarityReport& baseline) {
  if (candidate.pair_means.size() != baseline.pair_means.size()) {
    throw PairMismatch("reports cover different numbers of language pairs");
  }
  std::vector<double> x, y;  // baseline, candidate
  ComparisonStats stats;
  for (const auto& [key, cand_value] : candidate.pair_means) {
    auto it = baseline.pair_means.find(key);
    if (it == baseline.pair_means.end()) {
      throw PairMismatch("pair (" + key.first + ", " + key.second +
                         ") missing from baseline report");
    }
    x.push_back(it->second);
    y.push_back(cand_value);
    stats.diff[key] = cand_value - it->second;
  }
  if (x.size() < 2) throw PairMismatch("need at least two language pairs to compare");

  std::size_t n = x.size();
  double mx = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(n);
  double my = std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(n);
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  if (sxx == 0.0) throw PairMismatch("baseline report has zero variance");
  stats.slope = sxy / sxx;
  stats.intercept = my - stats.slope * mx;
  stats.pearson_r = pearson(x, y);
  stats.spearman_rho = pearson(average_ranks(x), average_ranks(y));
  return stats;
}

std::string report_to_json(const SimilarityReport& report) {
  nlohmann::ordered_json out;
  out["languages"] = report.languages;
  out["sample_count"] = report.sample_count;
  nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
  for (const auto& [key, value] : report.pair_means) {
    pairs.push_back({{"lang_a", key.first}, {"lang_b", key.second}, {"mean", round9(value)}});
  }
  out["pairs"] = pairs;
  return out.dump(2) + "\n";
}

SimilarityReport report_from_json(const std::string& text) {
  nlohmann::json in = nlohmann::json::parse(text);
  SimilarityReport report;
  report.languages = in.at("languages").get<std::vector<std::string>>();
  report.sample_count = in.at("sample_count").get<std::size_t>();
  for (const auto& p : in.at("pairs")) {
    report.pair_means[pair_key(p.at("lang_a").get<std::string>(),
                               p.at("lang_b").get<std::string>())] =
        p.at("mean").get<double>();
  }
  return report;
}

void save_report(const SimilarityReport& report, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write report: " + path);
  out << report_to_json(report);
}

SimilarityReport load_report(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open report: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return report_from_json(buf.str());
}

}  // namespace aksara
