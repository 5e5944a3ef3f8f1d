#pragma once

#include <string>
#include <vector>

#include "aksara/error.hpp"

namespace aksara {

class MissingColumn : public Error {
public:
  explicit MissingColumn(const std::string& what) : Error(what) {}
};

class RowCountMismatch : public Error {
public:
  explicit RowCountMismatch(const std::string& what) : Error(what) {}
};

class UnknownLanguage : public Error {
public:
  explicit UnknownLanguage(const std::string& language)
      : Error("language '" + language + "' is not present in the corpus") {}
};

// Row-aligned multilingual parallel corpus. Every row carries one sentence
// (possibly empty) per declared language.
struct ParallelCorpus {
  std::vector<std::string> languages;
  std::vector<std::vector<std::string>> rows;  // rows[i][j] = sentence for languages[j]

  std::size_t sample_count() const { return rows.size(); }
  std::size_t language_index(const std::string& language) const;
  const std::string& sentence(std::size_t row, const std::string& language) const;
};

// Loads a parallel corpus. `path` is either a single CSV/TSV file whose header
// names the language codes (an `id` column, when present, is used only for
// ordering checks), or a directory of per-language CSV files, each with a
// `text` column, joined on row order (or on an `id` column when present).
ParallelCorpus load_parallel(const std::string& path);

// Single-file form, from any stream. `delimiter` is ',' or '\t'.
ParallelCorpus parse_parallel(const std::string& content, char delimiter);

// Writes the corpus as a single RFC-4180 CSV (or TSV) file; load_parallel on
// the result reproduces every sentence byte for byte.
void save_parallel(const ParallelCorpus& corpus, const std::string& path);

// Count of distinct whitespace-delimited word forms in one language column,
// lowercased, with leading/trailing punctuation stripped.
std::size_t unique_words(const ParallelCorpus& corpus, const std::string& language);

}  // namespace aksara
