#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include "offlang/cascade.hpp"
#include "offlang/errors.hpp"

using namespace offlang;

TEST_SUITE_BEGIN("cascade");

namespace {

std::string fixture(const std::string& name) {
  return std::string(OFFLANG_TEST_DATA_DIR) + "/" + name;
}

Post post(std::string id, std::string text, const char* a, const char* b, const char* c) {
  Post p;
  p.id = std::move(id);
  p.text = std::move(text);
  if (a) p.label_a = a;
  if (b) p.label_b = b;
  if (c) p.label_c = c;
  return p;
}

// Sixteen posts whose vocabularies separate cleanly at every level, so a
// count model has no excuse to wobble.
Corpus toy_corpus() {
  Corpus corpus;
  int next_id = 100;
  const auto add = [&](const std::string& text, const char* a, const char* b, const char* c,
                       int copies) {
    for (int i = 0; i < copies; ++i) {
      corpus.push_back(post(std::to_string(next_id++), text, a, b, c));
    }
  };
  add("happy sunshine friend today", "NOT", nullptr, nullptr, 8);
  add("you utter idiot moron", "OFF", "TIN", "IND", 4);
  add("those people are pure trash", "OFF", "TIN", "GRP", 2);
  add("what a damn awful shambles", "OFF", "UNT", nullptr, 2);
  return corpus;
}

CascadeConfig nb_config() {
  CascadeConfig config;
  for (LevelConfig* level : {&config.level_a, &config.level_b, &config.level_c}) {
    level->kind = ModelKind::kNaiveBayes;
    level->features.min_frequency = 1;
  }
  return config;
}

void check_hierarchy(const HierPrediction& p) {
  if (p.a != "OFF") {
    CHECK_FALSE(p.b.has_value());
    CHECK_FALSE(p.c.has_value());
  }
  if (!p.b || *p.b != "TIN") CHECK_FALSE(p.c.has_value());
  if (p.c) CHECK(*p.b == "TIN");
  if (p.b) CHECK(p.a == "OFF");
}

}  // namespace

TEST_CASE("cascade predictions short-circuit down the hierarchy") {
  const Corpus corpus = toy_corpus();
  const CascadeModel cascade = train_cascade(corpus, nb_config(), 42, 1);

  const HierPrediction clean = predict_cascade(cascade, "happy sunshine friend");
  CHECK(clean.a == "NOT");
  CHECK_FALSE(clean.b.has_value());
  CHECK_FALSE(clean.c.has_value());

  const HierPrediction personal = predict_cascade(cascade, "you idiot moron");
  CHECK(personal.a == "OFF");
  REQUIRE(personal.b.has_value());
  CHECK(*personal.b == "TIN");
  REQUIRE(personal.c.has_value());
  CHECK(*personal.c == "IND");

  const HierPrediction group = predict_cascade(cascade, "those people are trash");
  CHECK(group.a == "OFF");
  REQUIRE(group.c.has_value());
  CHECK(*group.c == "GRP");

  const HierPrediction rant = predict_cascade(cascade, "what a damn shambles");
  CHECK(rant.a == "OFF");
  REQUIRE(rant.b.has_value());
  CHECK(*rant.b == "UNT");
  CHECK_FALSE(rant.c.has_value());
}

TEST_CASE("batch prediction keeps the invariant on every row and thread count") {
  const Corpus corpus = toy_corpus();
  const CascadeModel cascade = train_cascade(corpus, nb_config(), 42, 1);
  std::vector<std::string> texts;
  for (const Post& p : corpus) texts.push_back(p.text);
  texts.push_back("mixed idiot sunshine trash day");
  texts.push_back("");

  const auto serial = predict_cascade_batch(cascade, texts, 1);
  const auto threaded = predict_cascade_batch(cascade, texts, 4);
  REQUIRE(serial.size() == texts.size());
  CHECK(serial == threaded);
  for (const auto& p : serial) check_hierarchy(p);
}

TEST_CASE("training requires labeled rows at every level") {
  Corpus no_c;
  no_c.push_back(post("1", "happy sunshine", "NOT", nullptr, nullptr));
  no_c.push_back(post("2", "what a damn shambles", "OFF", "UNT", nullptr));
  CHECK_THROWS_AS(train_cascade(no_c, nb_config()), EmptyLevelError);
}

TEST_CASE("levels are scored against gold upstream labels, not predictions") {
  const Corpus corpus = toy_corpus();
  const CascadeModel cascade = train_cascade(corpus, nb_config(), 42, 1);

  // Level B must be evaluated on all eight gold-OFF rows even if level A
  // would have filtered some of them.
  const EvalReport level_b = evaluate_cascade_level(cascade, corpus, Level::B, 1);
  CHECK(level_b.n == 8);
  const EvalReport level_c = evaluate_cascade_level(cascade, corpus, Level::C, 1);
  CHECK(level_c.n == 6);
  // In-sample on cleanly separable data, the stages should be exact.
  CHECK(level_b.accuracy == doctest::Approx(1.0));
  CHECK(level_c.accuracy == doctest::Approx(1.0));

  Corpus unlabeled;
  unlabeled.push_back(post("9", "happy sunshine", "NOT", nullptr, nullptr));
  CHECK_THROWS_AS(evaluate_cascade_level(cascade, unlabeled, Level::B, 1), EmptyLevelError);
}

TEST_CASE("cascade works end to end on the corpus fixture") {
  const Corpus corpus = parse_olid_file(fixture("mini_corpus.tsv"));
  const CascadeModel cascade = train_cascade(corpus, nb_config(), 7, 1);
  CHECK(evaluate_cascade_level(cascade, corpus, Level::A, 1).n == 12);
  CHECK(evaluate_cascade_level(cascade, corpus, Level::B, 1).n == 7);
  CHECK(evaluate_cascade_level(cascade, corpus, Level::C, 1).n == 6);
}

TEST_CASE("a saved cascade reloads and predicts identically") {
  const Corpus corpus = toy_corpus();
  const CascadeModel cascade = train_cascade(corpus, nb_config(), 42, 1);

  const auto dir = std::filesystem::temp_directory_path() / "offlang_cascade_roundtrip";
  save_cascade(cascade, dir.string());
  CHECK(std::filesystem::exists(dir / "manifest.json"));
  const CascadeModel loaded = load_cascade(dir.string());

  std::vector<std::string> texts;
  for (const Post& p : corpus) texts.push_back(p.text);
  CHECK(predict_cascade_batch(loaded, texts, 1) == predict_cascade_batch(cascade, texts, 1));
  std::filesystem::remove_all(dir);

  CHECK_THROWS_AS(load_cascade((dir / "missing").string()), IoError);
}

TEST_CASE("hierarchical predictions print with empty trailing fields") {
  HierPrediction none;
  none.a = "NOT";
  CHECK(format_hier_prediction(none) == "NOT,,");

  HierPrediction untargeted;
  untargeted.a = "OFF";
  untargeted.b = "UNT";
  CHECK(format_hier_prediction(untargeted) == "OFF,UNT,");

  HierPrediction full;
  full.a = "OFF";
  full.b = "TIN";
  full.c = "GRP";
  CHECK(format_hier_prediction(full) == "OFF,TIN,GRP");
}

TEST_SUITE_END();
