#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <random>

#include "aksara/corpus.hpp"
#include "aksara/csv.hpp"
#include "aksara/utf8.hpp"

using namespace aksara;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("aksara_corpus_" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name, const std::string& content) const {
    fs::path p = path / name;
    std::ofstream out(p, std::ios::binary);
    out << content;
    return p.string();
  }
};

}  // namespace

TEST_CASE("csv: RFC-4180 quoting") {
  auto rows = csv::parse("a,\"b,c\",\"d\"\"e\"\n\"multi\nline\",x,\n", ',');
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == std::vector<std::string>{"a", "b,c", "d\"e"});
  CHECK(rows[1] == std::vector<std::string>{"multi\nline", "x", ""});
  CHECK_THROWS_AS(csv::parse("\"unterminated", ','), csv::ParseError);
}

TEST_CASE("load_parallel: single TSV with language header") {
  TempDir dir;
  std::string path = dir.file("tiny.tsv", "x\ty\tz\nsatu\tsiji\thiji\ndua\tloro\tdua\n");
  ParallelCorpus corpus = load_parallel(path);
  CHECK(corpus.languages == std::vector<std::string>{"x", "y", "z"});
  CHECK(corpus.sample_count() == 2);
  CHECK(corpus.sentence(0, "y") == "siji");
  CHECK(corpus.sentence(1, "z") == "dua");
}

TEST_CASE("load_parallel: id column is not a language") {
  TempDir dir;
  std::string path = dir.file("c.csv", "id,x,y\n0,aa,bb\n1,cc,dd\n");
  ParallelCorpus corpus = load_parallel(path);
  CHECK(corpus.languages == std::vector<std::string>{"x", "y"});
  CHECK(corpus.sentence(1, "x") == "cc");
}

TEST_CASE("load_parallel: directory of per-language files joined on id") {
  TempDir dir;
  dir.file("ban.csv", "id,text\n0,banone\n1,bantwo\n");
  dir.file("jav.csv", "id,text\n1,javtwo\n0,javone\n");
  ParallelCorpus corpus = load_parallel(dir.path.string());
  CHECK(corpus.languages == std::vector<std::string>{"ban", "jav"});
  REQUIRE(corpus.sample_count() == 2);
  CHECK(corpus.sentence(0, "ban") == "banone");
  CHECK(corpus.sentence(0, "jav") == "javone");
  CHECK(corpus.sentence(1, "jav") == "javtwo");
}

TEST_CASE("load_parallel: row count mismatch across files") {
  TempDir dir;
  dir.file("aa.csv", "id,text\n0,x\n1,y\n");
  dir.file("bb.csv", "id,text\n0,x\n");
  CHECK_THROWS_AS(load_parallel(dir.path.string()), RowCountMismatch);
}

TEST_CASE("load_parallel: missing text column") {
  TempDir dir;
  dir.file("aa.csv", "id,sentence\n0,x\n");
  CHECK_THROWS_AS(load_parallel(dir.path.string()), MissingColumn);
}

TEST_CASE("load_parallel: short row is rejected") {
  TempDir dir;
  std::string path = dir.file("c.csv", "x,y\naa,bb\ncc\n");
  CHECK_THROWS_AS(load_parallel(path), MissingColumn);
}

TEST_CASE("load_parallel: invalid UTF-8 is rejected") {
  TempDir dir;
  std::string path = dir.file("c.csv", std::string("x,y\na,\xFF\xFE\n"));
  CHECK_THROWS_AS(load_parallel(path), EncodingError);
}

TEST_CASE("save/load round trip preserves sentences byte for byte") {
  TempDir dir;
  ParallelCorpus corpus;
  corpus.languages = {"a", "b"};
  corpus.rows.push_back({"plain", "with, comma"});
  corpus.rows.push_back({"with \"quotes\"", "multi\nline"});
  corpus.rows.push_back({"", "trailing space "});
  std::string path = (dir.path / "round.csv").string();
  save_parallel(corpus, path);
  ParallelCorpus back = load_parallel(path);
  CHECK(back.languages == corpus.languages);
  REQUIRE(back.sample_count() == corpus.sample_count());
  for (std::size_t r = 0; r < corpus.rows.size(); ++r) {
    CHECK(back.rows[r] == corpus.rows[r]);
  }
}

TEST_CASE("unique_words: lowercased, punctuation-stripped forms") {
  ParallelCorpus corpus;
  corpus.languages = {"x"};
  corpus.rows.push_back({"a b"});
  corpus.rows.push_back({"b c"});
  CHECK(unique_words(corpus, "x") == 3);

  ParallelCorpus punct;
  punct.languages = {"x"};
  punct.rows.push_back({"Halo, dunia! halo... (dunia)"});
  CHECK(unique_words(punct, "x") == 2);

  ParallelCorpus empty;
  empty.languages = {"x"};
  empty.rows.push_back({""});
  CHECK(unique_words(empty, "x") == 0);

  CHECK_THROWS_AS(unique_words(corpus, "zz"), UnknownLanguage);
}
