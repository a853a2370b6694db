#include <doctest.h>

#include <fstream>
#include <string>
#include <vector>

#include "offlang/preprocess.hpp"

using namespace offlang;

TEST_SUITE_BEGIN("preprocess");

namespace {

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("emoji become space-separated english names") {
  CHECK(demojize("nice \xF0\x9F\x91\x8D") == "nice  thumbs up ");
  CHECK(preprocess("nice \xF0\x9F\x91\x8D") == std::vector<std::string>{"nice", "thumbs", "up"});
  // Unknown non-ascii passes through demojize untouched (strip_noise removes
  // it later).
  CHECK(demojize("caf\xC3\xA9") == "caf\xC3\xA9");
}

TEST_CASE("hashtag segmentation splits on case and digit boundaries") {
  CHECK(segment_hashtags("#BigBoss2") == "Big Boss 2");
  CHECK(segment_hashtags("#LunaticLeft rally") == "Lunatic Left rally");
  CHECK(segment_hashtags("#MAGA2020") == "MAGA 2020");
  CHECK(segment_hashtags("#lowercase") == "lowercase");
  // '#' not followed by an alphanumeric stays.
  CHECK(segment_hashtags("# notatag") == "# notatag");
}

TEST_CASE("contractions expand, keeping negation as its own word") {
  CHECK(expand_contractions("can't stop") == "can not stop");
  CHECK(expand_contractions("I won't and she'll") == "I will not and she will");
  // Curly apostrophes normalize before matching.
  CHECK(expand_contractions("don\xE2\x80\x99t") == "do not");
  // The match ends at a word boundary: "can'tish" is left alone.
  CHECK(expand_contractions("can'tish") == "can'tish");
  // A common misspelling is mapped too.
  CHECK(expand_contractions("waht's up") == "what is up");
}

TEST_CASE("noise stripping: urls, mention caps, entities, non-ascii") {
  CHECK(strip_noise("go here URL now", 3) == "go here now");
  CHECK(strip_noise("@USER @USER @USER @USER @USER hi", 3) == "@USER @USER @USER hi");
  // The run counter resets once a real word appears.
  CHECK(strip_noise("@USER @USER hi @USER @USER", 1) == "@USER hi @USER");
  CHECK(strip_noise("a &amp; b &gt; c", 3) == "a & b > c");
  CHECK(strip_noise("caf\xC3\xA9 bien", 3) == "caf bien");
}

TEST_CASE("tokenization lowercases and deletes punctuation in place") {
  CHECK(tokenize("a-b c") == std::vector<std::string>{"ab", "c"});
  CHECK(tokenize("Hello, WORLD!!") == std::vector<std::string>{"hello", "world"});
  CHECK(tokenize("price4u") == std::vector<std::string>{"price4u"});
  CHECK(tokenize("  spaced\tout \n") == std::vector<std::string>{"spaced", "out"});
  CHECK(tokenize("") == std::vector<std::string>{});
}

TEST_CASE("stopword filter keeps negations, modals and particles") {
  const auto kept = filter_stopwords({"i", "can", "not", "do", "this", "up", "off", "will"});
  CHECK(kept == std::vector<std::string>{"can", "not", "up", "off", "will"});
}

TEST_CASE("lemmatizer handles irregulars, plurals and -ing/-ed") {
  CHECK(lemmatize_token("went") == "go");
  CHECK(lemmatize_token("liars") == "liar");
  CHECK(lemmatize_token("foxes") == "fox");
  CHECK(lemmatize_token("companies") == "company");
  CHECK(lemmatize_token("businesses") == "business");
  CHECK(lemmatize_token("running") == "run");
  CHECK(lemmatize_token("women") == "woman");
  // Chains resolve through the table: "goes" -> "go" in one lookup, and
  // suffix output is re-checked until nothing applies.
  CHECK(lemmatize_token("goes") == "go");
  // The silent e is restored where the bare stem could not end a word.
  CHECK(lemmatize_token("closed") == "close");
  CHECK(lemmatize_token("arguing") == "argue");
  CHECK(lemmatize_token("loved") == "love");
  // Doubled consonants that belong to the word survive.
  CHECK(lemmatize_token("kissed") == "kiss");
  // Words that merely end in -ing are not inflections.
  CHECK(lemmatize_token("everything") == "everything");
  CHECK(lemmatize_token("king") == "king");
  // "left" must stay intact: in these tweets it is the political noun.
  CHECK(lemmatize_token("left") == "left");
  CHECK(lemmatize_token("thumbs") == "thumbs");
}

TEST_CASE("lemmatizer never turns a content word into a stopword") {
  // Every irregular whose value is a stopword must itself be a stopword;
  // otherwise a second pipeline pass would drop a token the first kept.
  const auto& stop = stopword_set();
  for (const auto& [key, value] : irregular_lemmas()) {
    if (stop.count(value)) CHECK_MESSAGE(stop.count(key), key, " -> ", value);
    // Values must be fixed points or the loop could oscillate.
    CHECK_MESSAGE(lemmatize_token(value) == value, value);
  }
}

TEST_CASE("full pipeline matches the hand-checked fixture") {
  const auto inputs = read_lines(std::string(OFFLANG_TEST_DATA_DIR) + "/preprocess_input.txt");
  const auto expected = read_lines(std::string(OFFLANG_TEST_DATA_DIR) + "/preprocess_expected.txt");
  REQUIRE(inputs.size() == expected.size());
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    CAPTURE(i);
    CAPTURE(inputs[i]);
    CHECK(join_tokens(preprocess(inputs[i])) == expected[i]);
  }
}

TEST_CASE("pipeline output is lowercase alphanumeric and idempotent") {
  const auto inputs = read_lines(std::string(OFFLANG_TEST_DATA_DIR) + "/preprocess_input.txt");
  for (const auto& text : inputs) {
    const auto once = preprocess(text);
    for (const auto& token : once) {
      CAPTURE(token);
      CHECK_FALSE(token.empty());
      for (const char c : token) {
        CHECK(((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9')));
      }
    }
    // Feeding the cleaned text back through changes nothing.
    CHECK(preprocess(join_tokens(once)) == once);
  }
}

TEST_CASE("stage toggles bypass exactly their stage") {
  PreprocessConfig config;
  config.filter_stopwords = false;
  CHECK(preprocess("I went home", config) == std::vector<std::string>{"i", "go", "home"});

  config = {};
  config.lemmatize = false;
  CHECK(preprocess("the liars went", config) == std::vector<std::string>{"liars", "went"});

  config = {};
  config.segment_hashtags = false;
  CHECK(preprocess("#LunaticLeft", config) == std::vector<std::string>{"lunaticleft"});

  config = {};
  config.expand_contractions = false;
  // Without expansion the apostrophe is deleted by the tokenizer.
  CHECK(preprocess("can't", config) == std::vector<std::string>{"cant"});
}

TEST_CASE("batched preprocessing equals the single-text path") {
  const auto inputs = read_lines(std::string(OFFLANG_TEST_DATA_DIR) + "/preprocess_input.txt");
  const auto batched = preprocess_all(inputs, {}, 4);
  REQUIRE(batched.size() == inputs.size());
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    CHECK(batched[i] == preprocess(inputs[i]));
  }
}

TEST_SUITE_END();
