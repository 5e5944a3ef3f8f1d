#include "aksara/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "aksara/csv.hpp"
#include "aksara/utf8.hpp"

namespace fs = std::filesystem;

namespace aksara {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open corpus file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string content = buf.str();
  if (!utf8::is_valid(content)) {
    throw EncodingError("corpus file is not valid UTF-8: " + path);
  }
  return content;
}

char delimiter_for(const std::string& path) {
  auto ext = fs::path(path).extension().string();
  return ext == ".tsv" ? '\t' : ',';
}

bool is_punct_cp(char32_t cp) {
  if (cp < 0x80) {
    return !(cp >= U'a' && cp <= U'z') && !(cp >= U'A' && cp <= U'Z') &&
           !(cp >= U'0' && cp <= U'9');
  }
  // General punctuation block plus a few common quote marks.
  return (cp >= 0x2000 && cp <= 0x206F) || cp == 0x00A1 || cp == 0x00BF ||
         cp == 0x00AB || cp == 0x00BB;
}

// Per-language directory layout: every *.csv file holds one language, named by
// the file stem, with a `text` column.
ParallelCorpus load_directory(const std::string& dir) {
  std::vector<std::string> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    auto ext = entry.path().extension().string();
    if (ext == ".csv" || ext == ".tsv") files.push_back(entry.path().string());
  }
  if (files.empty()) throw Error("no CSV/TSV files in corpus directory: " + dir);
  std::sort(files.begin(), files.end());

  ParallelCorpus corpus;
  std::size_t expected_rows = 0;
  std::vector<std::vector<std::string>> columns;
  for (const std::string& file : files) {
    auto table = csv::parse(read_file(file), delimiter_for(file));
    if (table.empty()) throw Error("empty corpus file: " + file);
    const auto& header = table[0];
    auto text_it = std::find(header.begin(), header.end(), "text");
    if (text_it == header.end()) {
      throw MissingColumn("no 'text' column in " + file);
    }
    std::size_t text_col = static_cast<std::size_t>(text_it - header.begin());
    auto id_it = std::find(header.begin(), header.end(), "id");
    std::ptrdiff_t id_col =
        id_it == header.end() ? -1 : id_it - header.begin();

    std::vector<std::pair<std::string, std::string>> entries;  // (id, text)
    for (std::size_t r = 1; r < table.size(); ++r) {
      if (table[r].size() <= text_col) {
        throw MissingColumn("row " + std::to_string(r) + " of " + file +
                            " has no text field");
      }
      std::string id = id_col >= 0 && table[r].size() > static_cast<std::size_t>(id_col)
                           ? table[r][static_cast<std::size_t>(id_col)]
                           : std::to_string(r - 1);
      entries.emplace_back(std::move(id), table[r][text_col]);
    }
    if (id_col >= 0) {
      std::stable_sort(entries.begin(), entries.end(),
                       [](const auto& a, const auto& b) { return a.first < b.first; });
    }

    std::string language = fs::path(file).stem().string();
    if (corpus.languages.empty()) {
      expected_rows = entries.size();
    } else if (entries.size() != expected_rows) {
      throw RowCountMismatch("file " + file + " has " + std::to_string(entries.size()) +
                             " rows, expected " + std::to_string(expected_rows));
    }
    corpus.languages.push_back(language);
    std::vector<std::string> column;
    column.reserve(entries.size());
    for (auto& [id, text] : entries) column.push_back(std::move(text));
    columns.push_back(std::move(column));
  }

  corpus.rows.resize(expected_rows);
  for (std::size_t r = 0; r < expected_rows; ++r) {
    corpus.rows[r].reserve(corpus.languages.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
      corpus.rows[r].push_back(std::move(columns[c][r]));
    }
  }
  return corpus;
}

}  // namespace

std::size_t ParallelCorpus::language_index(const std::string& language) const {
  auto it = std::find(languages.begin(), languages.end(), language);
  if (it == languages.end()) throw UnknownLanguage(language);
  return static_cast<std::size_t>(it - languages.begin());
}

const std::string& ParallelCorpus::sentence(std::size_t row,
                                            const std::string& language) const {
  return rows.at(row)[language_index(language)];
}

ParallelCorpus parse_parallel(const std::string& content, char delimiter) {
  if (!utf8::is_valid(content)) throw EncodingError("corpus is not valid UTF-8");
  auto table = csv::parse(content, delimiter);
  if (table.empty()) throw Error("empty corpus");
  const auto& header = table[0];
  if (header.empty()) throw MissingColumn("corpus header row is empty");

  ParallelCorpus corpus;
  std::vector<std::size_t> keep_cols;
  std::set<std::string> seen;
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (header[c] == "id" || header[c].empty()) continue;  // index column
    if (!seen.insert(header[c]).second) {
      throw Error("duplicate language column '" + header[c] + "'");
    }
    corpus.languages.push_back(header[c]);
    keep_cols.push_back(c);
  }
  if (corpus.languages.empty()) {
    throw MissingColumn("corpus header names no language columns");
  }

  for (std::size_t r = 1; r < table.size(); ++r) {
    if (table[r].size() == 1 && table[r][0].empty()) continue;  // blank line
    std::vector<std::string> row;
    row.reserve(keep_cols.size());
    for (std::size_t c : keep_cols) {
      if (c >= table[r].size()) {
        throw MissingColumn("row " + std::to_string(r) + " is missing column '" +
                            header[c] + "'");
      }
      row.push_back(table[r][c]);
    }
    corpus.rows.push_back(std::move(row));
  }
  return corpus;
}

ParallelCorpus load_parallel(const std::string& path) {
  if (fs::is_directory(path)) return load_directory(path);
  return parse_parallel(read_file(path), delimiter_for(path));
}

void save_parallel(const ParallelCorpus& corpus, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write corpus: " + path);
  char delimiter = delimiter_for(path);
  out << csv::write_row(corpus.languages, delimiter);
  for (const auto& row : corpus.rows) out << csv::write_row(row, delimiter);
}

std::size_t unique_words(const ParallelCorpus& corpus, const std::string& language) {
  std::size_t col = corpus.language_index(language);
  std::set<std::string> words;
  for (const auto& row : corpus.rows) {
    std::istringstream stream(utf8::ascii_lower(row[col]));
    std::string raw;
    while (stream >> raw) {
      std::u32string cps = utf8::decode(raw);
      std::size_t begin = 0, end = cps.size();
      while (begin < end && is_punct_cp(cps[begin])) ++begin;
      while (end > begin && is_punct_cp(cps[end - 1])) --end;
      if (begin < end) {
        words.insert(utf8::encode(std::u32string_view(cps).substr(begin, end - begin)));
      }
    }
  }
  return words.size();
}

}  // namespace aksara
