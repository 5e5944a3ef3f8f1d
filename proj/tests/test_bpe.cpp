#include "doctest.h"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "aksara/bpe.hpp"
#include "aksara/utf8.hpp"

using namespace aksara;

namespace {

std::string data_path(const std::string& name) {
  return std::string(AKSARA_TEST_DATA_DIR) + "/" + name;
}

std::string full_byte_vocab_json() {
  // Reconstruct the byte-to-proxy map: printable bytes map to themselves,
  // the rest to 256+n in byte order.
  nlohmann::json vocab;
  bool direct[256] = {false};
  auto mark = [&](int lo, int hi) {
    for (int b = lo; b <= hi; ++b) direct[b] = true;
  };
  mark('!', '~');
  mark(0xA1, 0xAC);
  mark(0xAE, 0xFF);
  int id = 0;
  int next = 256;
  std::vector<std::string> proxies(256);
  for (int b = 0; b < 256; ++b) {
    proxies[b] = utf8::encode(direct[b] ? static_cast<char32_t>(b)
                                        : static_cast<char32_t>(next++));
  }
  for (int b = 0; b < 256; ++b) vocab[proxies[b]] = id++;
  return vocab.dump();
}

}  // namespace

TEST_CASE("bpe: empty merges and a 256-byte vocab tokenize every byte separately") {
  BpeModel model = BpeModel::from_strings(full_byte_vocab_json(), "#version: 0.2\n");
  CHECK(model.vocab_size() == 256);
  CHECK(model.merge_count() == 0);
  TokenSequence seq = model.encode("ab c");
  CHECK(seq.size() == 4);  // 'a' 'b' ' c' pretokens, all split to bytes
  std::string joined;
  for (const auto& s : seq.surface) joined += s;
  CHECK(joined == "ab c");
}

TEST_CASE("bpe: empty text encodes to an empty sequence") {
  BpeModel model = BpeModel::from_strings(full_byte_vocab_json(), "");
  CHECK(model.encode("").empty());
}

TEST_CASE("bpe: malformed vocab is rejected") {
  CHECK_THROWS_AS(BpeModel::from_strings("not json", ""), MalformedVocab);
  CHECK_THROWS_AS(BpeModel::from_strings("[1,2]", ""), MalformedVocab);
  CHECK_THROWS_AS(BpeModel::from_strings(R"({"a": 1, "b": 1})", ""), MalformedVocab);
}

TEST_CASE("bpe: malformed merges are rejected") {
  std::string vocab = full_byte_vocab_json();
  CHECK_THROWS_AS(BpeModel::from_strings(vocab, "#version: 0.2\nonefield\n"),
                  MalformedMerges);
  CHECK_THROWS_AS(BpeModel::from_strings(vocab, "#version: 0.2\na b c\n"),
                  MalformedMerges);
}

TEST_CASE("bpe: merge product missing from vocab is inconsistent") {
  std::string vocab = full_byte_vocab_json();
  CHECK_THROWS_AS(BpeModel::from_strings(vocab, "#version: 0.2\na n\n"),
                  InconsistentModel);
}

TEST_CASE("bpe: vocab missing byte symbols is inconsistent") {
  CHECK_THROWS_AS(BpeModel::from_strings(R"({"a": 0})", ""), InconsistentModel);
}

TEST_CASE("bpe: byte-level totality on arbitrary bytes") {
  BpeModel model = BpeModel::load(data_path("bpe/vocab.json"), data_path("bpe/merges.txt"));
  std::string junk;
  for (int b = 0; b < 256; ++b) junk.push_back(static_cast<char>(b));
  TokenSequence seq = model.encode(junk);
  std::string joined;
  for (const auto& s : seq.surface) joined += s;
  CHECK(joined == junk);
}

TEST_CASE("bpe: encoding matches the committed reference fixtures") {
  BpeModel model = BpeModel::load(data_path("bpe/vocab.json"), data_path("bpe/merges.txt"));
  std::ifstream in(data_path("bpe/golden.jsonl"));
  REQUIRE(in.good());
  std::string line;
  std::size_t checked = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    nlohmann::json row = nlohmann::json::parse(line);
    std::string text = row.at("text").get<std::string>();
    std::vector<std::int32_t> expected = row.at("ids").get<std::vector<std::int32_t>>();
    CAPTURE(text);
    TokenSequence seq = model.encode(text);
    CHECK(seq.ids == expected);
    std::string joined;
    for (const auto& s : seq.surface) joined += s;
    CHECK(joined == text);
    ++checked;
  }
  CHECK(checked >= 100);
}

TEST_CASE("bpe: deterministic across repeated calls") {
  BpeModel model = BpeModel::load(data_path("bpe/vocab.json"), data_path("bpe/merges.txt"));
  std::string text = "tokenisasi suku kata dan byte";
  CHECK(model.encode(text).ids == model.encode(text).ids);
}
