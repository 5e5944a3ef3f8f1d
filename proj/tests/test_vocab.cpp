#include "doctest.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>

#include "aksara/vocab.hpp"

using namespace aksara;

namespace {

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

// Exact draw from a discrete power law p(k) ~ k^-alpha (Devroye's rejection
// method for the zeta distribution).
std::uint64_t zeta_sample(double alpha, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  const double b = std::pow(2.0, alpha - 1.0);
  while (true) {
    double u = uniform(rng);
    double v = uniform(rng);
    double x = std::floor(std::pow(u, -1.0 / (alpha - 1.0)));
    double t = std::pow(1.0 + 1.0 / x, alpha - 1.0);
    if (v * x * (t - 1.0) / (b - 1.0) <= t / b) return static_cast<std::uint64_t>(x);
  }
}

}  // namespace

TEST_CASE("census: counts segment surfaces over all words") {
  auto cfg = PhonologyConfig::indonesian();
  SyllableCensus c = census({"makan", "makan"}, cfg);
  CHECK(c.counts.at("ma") == 2);
  CHECK(c.counts.at("kan") == 2);
  CHECK(c.total == 4);
  CHECK(c.skipped_words == 0);
}

TEST_CASE("census: empty wordlist gives an empty census") {
  auto cfg = PhonologyConfig::indonesian();
  SyllableCensus c = census({}, cfg);
  CHECK(c.counts.empty());
  CHECK(c.total == 0);
}

TEST_CASE("census: single character word") {
  auto cfg = PhonologyConfig::indonesian();
  SyllableCensus c = census({"a"}, cfg);
  CHECK(c.counts.at("a") == 1);
  CHECK(c.total == 1);
}

TEST_CASE("census: words with unclassifiable characters are skipped and counted") {
  auto cfg = PhonologyConfig::indonesian();
  SyllableCensus c = census({"makan", "ma3an", "x9"}, cfg);
  CHECK(c.skipped_words == 2);
  CHECK(c.total == 2);
}

TEST_CASE("build_vocabulary: base chars, monosyllables, then ranked syllables") {
  auto cfg = PhonologyConfig::indonesian();
  std::vector<std::string> words = {"makan", "makan", "makan", "makan", "makan",
                                    "mantra"};
  SyllableCensus c = census(words, cfg);
  // Base chars: a, k, m, n, r, t. Monosyllables: none. Budget 8 leaves two
  // slots for the top-frequency syllables ma (6) and kan (5).
  Vocabulary v = build_vocabulary(c, words, 8, cfg);
  CHECK(v.base_symbol_count() == 6);
  CHECK(v.size() == 9);  // unk + 8
  CHECK(v.tokens()[0] == kUnkToken);
  CHECK(v.contains("ma"));
  CHECK(v.contains("kan"));
  CHECK_FALSE(v.contains("mant"));
  CHECK(v.id_of("<unk>") == kUnkId);
}

TEST_CASE("build_vocabulary: target equal to base chars keeps only base chars") {
  auto cfg = PhonologyConfig::indonesian();
  std::vector<std::string> words = {"makan"};
  SyllableCensus c = census(words, cfg);
  Vocabulary v = build_vocabulary(c, words, 4, cfg);  // base = {a, k, m, n}
  CHECK(v.size() == 5);
  CHECK(v.tokens() == std::vector<std::string>{"<unk>", "a", "k", "m", "n"});
}

TEST_CASE("build_vocabulary: monosyllabic lexemes are always included") {
  auto cfg = PhonologyConfig::indonesian();
  std::vector<std::string> words = {"bab", "makan"};
  SyllableCensus c = census(words, cfg);
  Vocabulary v = build_vocabulary(c, words, 6, cfg);  // base = {a,b,k,m,n} = 5
  CHECK(v.contains("bab"));
}

TEST_CASE("build_vocabulary: rejects a target below the base character count") {
  auto cfg = PhonologyConfig::indonesian();
  std::vector<std::string> words = {"makan"};
  SyllableCensus c = census(words, cfg);
  CHECK_THROWS_AS(build_vocabulary(c, words, 3, cfg), TargetTooSmall);
  CHECK_THROWS_AS(build_vocabulary(c, words, 0, cfg), TargetTooSmall);
}

TEST_CASE("build_vocabulary: deterministic and monotone in target size") {
  auto cfg = PhonologyConfig::indonesian();
  std::vector<std::string> words = {"makan",  "minum", "mandi", "pulang", "datang",
                                    "makan",  "tidur", "kerja", "main",   "jalan",
                                    "pulang", "makan"};
  SyllableCensus c = census(words, cfg);
  Vocabulary small = build_vocabulary(c, words, 20, cfg);
  Vocabulary again = build_vocabulary(c, words, 20, cfg);
  CHECK(small.tokens() == again.tokens());
  Vocabulary large = build_vocabulary(c, words, 26, cfg);
  for (const auto& t : small.tokens()) CHECK(large.contains(t));
}

TEST_CASE("vocabulary: save and load round trip, ids stable") {
  auto cfg = PhonologyConfig::indonesian();
  std::vector<std::string> words = {"makan", "minum"};
  SyllableCensus c = census(words, cfg);
  Vocabulary v = build_vocabulary(c, words, 12, cfg);
  std::string path = temp_path("aksara_vocab_test.txt");
  save_vocabulary(v, path);
  Vocabulary loaded = load_vocabulary(path);
  CHECK(loaded.tokens() == v.tokens());
  std::filesystem::remove(path);
}

TEST_CASE("vocabulary: loader reserves the unknown sentinel") {
  std::string path = temp_path("aksara_vocab_plain.txt");
  {
    std::ofstream out(path);
    out << "ma\nkan\n";
  }
  Vocabulary v = load_vocabulary(path);
  CHECK(v.tokens() == std::vector<std::string>{"<unk>", "ma", "kan"});
  CHECK(v.id_of("ma") == 1);
  CHECK(v.id_of("zzz") == kUnkId);
  std::filesystem::remove(path);
}

TEST_CASE("fit_power_law: beta is 1/(alpha-1)") {
  SyllableCensus c;
  // Counts with a clean spread; 12 distinct syllables.
  std::uint64_t counts[] = {1, 1, 2, 2, 3, 4, 6, 9, 14, 30, 80, 300};
  int k = 0;
  for (std::uint64_t n : counts) c.counts["s" + std::to_string(k++)] = n;
  PowerLawFit fit = fit_power_law(c);
  CHECK(fit.beta == doctest::Approx(1.0 / (fit.alpha - 1.0)).epsilon(1e-12));
  CHECK(fit.x_min == 2.0);
}

TEST_CASE("fit_power_law: insufficient data") {
  SyllableCensus c;
  for (int i = 0; i < 9; ++i) c.counts["s" + std::to_string(i)] = i + 1;
  CHECK_THROWS_AS(fit_power_law(c), InsufficientData);
}

TEST_CASE("fit_power_law: degenerate distribution") {
  SyllableCensus c;
  for (int i = 0; i < 15; ++i) c.counts["s" + std::to_string(i)] = 7;
  CHECK_THROWS_AS(fit_power_law(c), DegenerateDistribution);
  SyllableCensus ones;
  for (int i = 0; i < 15; ++i) ones.counts["s" + std::to_string(i)] = 1;
  CHECK_THROWS_AS(fit_power_law(ones), DegenerateDistribution);
}

TEST_CASE("fit_power_law: recovers a known exponent from synthetic counts") {
  std::mt19937_64 rng(20250815);
  SyllableCensus c;
  const double true_alpha = 1.87;
  for (int i = 0; i < 20000; ++i) {
    c.counts["s" + std::to_string(i)] = zeta_sample(true_alpha, rng);
  }
  PowerLawFit fit = fit_power_law(c);
  CHECK(fit.alpha > true_alpha - 0.1);
  CHECK(fit.alpha < true_alpha + 0.1);
}
