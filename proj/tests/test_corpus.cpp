#include <doctest.h>

#include <sstream>

#include "offlang/corpus.hpp"
#include "offlang/errors.hpp"

using namespace offlang;

TEST_SUITE_BEGIN("corpus");

namespace {

const char* kSample =
    "id\ttweet\tsubtask_a\tsubtask_b\tsubtask_c\n"
    "1\t@USER nice day\tNOT\tNULL\tNULL\n"
    "2\tyou are a fool\tOFF\tTIN\tIND\n"
    "3\tugh whatever\tOFF\tUNT\tNULL\n"
    "4\tthose people again\tOFF\tTIN\tGRP\n";

Corpus sample() {
  std::istringstream in(kSample);
  return parse_olid(in);
}

}  // namespace

TEST_CASE("parses rows, header and NULL labels") {
  const Corpus corpus = sample();
  REQUIRE(corpus.size() == 4);
  CHECK(corpus[0].id == "1");
  CHECK(corpus[0].text == "@USER nice day");
  CHECK(corpus[0].label_a == "NOT");
  CHECK_FALSE(corpus[0].label_b.has_value());
  CHECK_FALSE(corpus[0].label_c.has_value());
  CHECK(corpus[1].label_c == "IND");
  CHECK(corpus[2].label_b == "UNT");
  CHECK_FALSE(corpus[2].label_c.has_value());
}

TEST_CASE("parses headerless input too") {
  std::istringstream in("7\thello there\tNOT\tNULL\tNULL\n");
  const Corpus corpus = parse_olid(in);
  REQUIRE(corpus.size() == 1);
  CHECK(corpus[0].id == "7");
}

TEST_CASE("rejects malformed rows and unknown labels") {
  std::istringstream four_fields("1\ttext\tNOT\tNULL\n");
  CHECK_THROWS_AS(parse_olid(four_fields), MalformedRowError);

  std::istringstream bad_label("1\ttext\tMAYBE\tNULL\tNULL\n");
  CHECK_THROWS_AS(parse_olid(bad_label), UnknownLabelError);

  std::istringstream bad_b("1\ttext\tNOT\tIND\tNULL\n");
  CHECK_THROWS_AS(parse_olid(bad_b), UnknownLabelError);
}

TEST_CASE("rejects hierarchy violations") {
  // B label on a non-offensive post.
  std::istringstream b_on_not("1\ttext\tNOT\tTIN\tNULL\n");
  CHECK_THROWS_AS(parse_olid(b_on_not), HierarchyViolationError);

  // C label without a targeted-insult B label.
  std::istringstream c_on_unt("1\ttext\tOFF\tUNT\tIND\n");
  CHECK_THROWS_AS(parse_olid(c_on_unt), HierarchyViolationError);

  std::istringstream c_without_b("1\ttext\tOFF\tNULL\tGRP\n");
  CHECK_THROWS_AS(parse_olid(c_without_b), HierarchyViolationError);
}

TEST_CASE("serialization round-trips") {
  const Corpus corpus = sample();
  std::ostringstream out;
  serialize_olid(corpus, out);
  std::istringstream in(out.str());
  CHECK(parse_olid(in) == corpus);
}

TEST_CASE("reads the bundled fixture") {
  const Corpus corpus = parse_olid_file(std::string(OFFLANG_TEST_DATA_DIR) + "/mini_corpus.tsv");
  REQUIRE(corpus.size() == 12);
  const auto dist = class_distribution(subtask_view(corpus, Level::A).labels);
  CHECK(dist.at("NOT") == 5);
  CHECK(dist.at("OFF") == 7);
}

TEST_CASE("subtask views keep only labeled rows, in order") {
  const Corpus corpus = sample();
  const SubtaskView a = subtask_view(corpus, Level::A);
  CHECK(a.size() == 4);
  const SubtaskView b = subtask_view(corpus, Level::B);
  REQUIRE(b.size() == 3);
  CHECK(b.ids == std::vector<std::string>{"2", "3", "4"});
  CHECK(b.labels == std::vector<std::string>{"TIN", "UNT", "TIN"});
  const SubtaskView c = subtask_view(corpus, Level::C);
  REQUIRE(c.size() == 2);
  CHECK(c.labels == std::vector<std::string>{"IND", "GRP"});
}

TEST_CASE("stratified split hits per-class quotas") {
  // 8 NOT + 2 OFF at 0.8 must yield exactly 6 NOT + 2 OFF in train: the NOT
  // quota is round(8 * 0.8) = 6 and OFF contributes round(2 * 0.8) = 2, which
  // already sums to the overall quota round(10 * 0.8) = 8.
  Corpus corpus;
  for (int i = 0; i < 10; ++i) {
    Post post;
    post.id = std::to_string(i);
    post.text = "text " + std::to_string(i);
    post.label_a = (i < 8) ? "NOT" : "OFF";
    corpus.push_back(post);
  }
  const auto [train, test] = split_stratified(corpus, 0.8, 42, Level::A);
  REQUIRE(train.size() == 8);
  REQUIRE(test.size() == 2);
  const auto train_dist = class_distribution(subtask_view(train, Level::A).labels);
  CHECK(train_dist.at("NOT") == 6);
  CHECK(train_dist.at("OFF") == 2);

  // Same seed, same membership; rows keep their corpus order.
  const auto [train2, test2] = split_stratified(corpus, 0.8, 42, Level::A);
  CHECK(train == train2);
  CHECK(test == test2);
  for (std::size_t i = 1; i < train.size(); ++i) {
    CHECK(std::stoi(train[i - 1].id) < std::stoi(train[i].id));
  }

  // A different seed is allowed to pick a different membership but must keep
  // the same class counts.
  const auto [train3, test3] = split_stratified(corpus, 0.8, 7, Level::A);
  const auto dist3 = class_distribution(subtask_view(train3, Level::A).labels);
  CHECK(dist3.at("NOT") == 6);
  CHECK(dist3.at("OFF") == 2);
}

TEST_CASE("stratified split reconciles rounding drift") {
  // Three classes of 3 at 0.5: per-class round(1.5) = 2 each, sum 6, but the
  // overall quota is round(9 * 0.5) = 5, so one row moves back to test from
  // the largest class (ties broken by label order).
  Corpus corpus;
  const char* labels[] = {"IND", "GRP", "OTH"};
  for (int i = 0; i < 9; ++i) {
    Post post;
    post.id = std::to_string(i);
    post.text = "t";
    post.label_a = "OFF";
    post.label_b = "TIN";
    post.label_c = labels[i % 3];
    corpus.push_back(post);
  }
  const auto [train, test] = split_stratified(corpus, 0.5, 42, Level::C);
  CHECK(train.size() == 5);
  CHECK(test.size() == 4);
}

TEST_CASE("split rejects unlabeled rows and degenerate fractions") {
  Corpus corpus = sample();
  Post unlabeled;
  unlabeled.id = "5";
  unlabeled.text = "no labels";
  corpus.push_back(unlabeled);
  CHECK_THROWS_AS(split_stratified(corpus, 0.8, 42, Level::A), UnknownLabelError);
  CHECK_THROWS_AS(split_stratified(sample(), 1.5, 42, Level::A), ConfigError);
}

TEST_CASE("random split is seeded and sized") {
  const Corpus corpus = parse_olid_file(std::string(OFFLANG_TEST_DATA_DIR) + "/mini_corpus.tsv");
  const auto [train, test] = split_random(corpus, 0.75, 9);
  CHECK(train.size() == 9);
  CHECK(test.size() == 3);
  const auto [train2, test2] = split_random(corpus, 0.75, 9);
  CHECK(train == train2);
}

TEST_SUITE_END();
