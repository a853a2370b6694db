#include "offlang/synthetic.hpp"

#include <array>

#include "offlang/rng.hpp"

namespace offlang {
namespace {

const std::array<const char*, 24> kBenign = {
    "weather", "coffee",  "match",   "season", "garden", "train",  "movie", "song",
    "recipe",  "morning", "city",    "book",   "team",   "friend", "road",  "market",
    "puppy",   "dinner",  "bike",    "beach",  "store",  "photo",  "game",  "lake",
};

const std::array<const char*, 12> kBenignVerb = {
    "love", "enjoy", "watch", "share", "visit",  "plan",
    "read", "cook",  "ride",  "play",  "finish", "start",
};

const std::array<const char*, 10> kInsult = {
    "idiot", "moron", "clown", "loser", "fraud",
    "scum",  "trash", "fool",  "creep", "liar",
};

const std::array<const char*, 6> kProfanity = {
    "garbage", "pathetic", "disgusting", "awful", "worthless", "rotten",
};

const std::array<const char*, 5> kGroupWord = {
    "politicians", "fans", "drivers", "bosses", "neighbors",
};

const std::array<const char*, 6> kHashtag = {
    "#MondayMood", "#GameNight", "#CityLife", "#HotTake", "#NoFilter", "#WeekendVibes",
};

const std::array<const char*, 5> kEmoji = {
    "\U0001F602", "\U0001F44D", "\U0001F525", "\U0001F621", "\U0001F644",
};

template <std::size_t N>
const char* pick(std::mt19937_64& g, const std::array<const char*, N>& pool) {
  return pool[uniform_index(g, N)];
}

void append_word(std::string& text, const char* word) {
  if (!text.empty()) text.push_back(' ');
  text.append(word);
}

std::string benign_chunk(std::mt19937_64& g, std::size_t words) {
  std::string text;
  for (std::size_t i = 0; i < words; ++i) {
    append_word(text, uniform01(g) < 0.3 ? pick(g, kBenignVerb) : pick(g, kBenign));
  }
  return text;
}

}  // namespace

std::string synthetic_text(std::uint64_t seed) {
  std::mt19937_64 g(seed);
  std::string text = benign_chunk(g, 3 + uniform_index(g, 8));
  if (uniform01(g) < 0.4) append_word(text, "@USER");
  if (uniform01(g) < 0.3) append_word(text, pick(g, kHashtag));
  if (uniform01(g) < 0.3) append_word(text, pick(g, kEmoji));
  if (uniform01(g) < 0.2) append_word(text, "URL");
  if (uniform01(g) < 0.25) append_word(text, pick(g, kInsult));
  if (uniform01(g) < 0.2) append_word(text, "can't");
  return text;
}

Corpus synthetic_corpus(std::size_t n, std::uint64_t seed) {
  Corpus corpus;
  corpus.reserve(n);
  std::mt19937_64 g(derive_seed(seed, 9000));
  for (std::size_t i = 0; i < n; ++i) {
    Post post;
    post.id = std::to_string(10000 + i);
    std::string text;
    const bool offensive = uniform01(g) < 0.33;
    if (!offensive) {
      text = benign_chunk(g, 4 + uniform_index(g, 8));
      if (uniform01(g) < 0.3) append_word(text, "@USER");
      post.label_a = "NOT";
    } else {
      post.label_a = "OFF";
      const bool targeted = uniform01(g) < 0.7;
      if (targeted) {
        post.label_b = "TIN";
        const double kind = uniform01(g);
        if (kind < 0.5) {
          post.label_c = "IND";
          append_word(text, "@USER");
          append_word(text, "you");
          append_word(text, "are");
          append_word(text, "a");
          append_word(text, pick(g, kInsult));
        } else if (kind < 0.8) {
          post.label_c = "GRP";
          append_word(text, "all");
          append_word(text, pick(g, kGroupWord));
          append_word(text, "are");
          append_word(text, pick(g, kInsult));
          append_word(text, "material");
        } else {
          post.label_c = "OTH";
          append_word(text, "that");
          append_word(text, pick(g, kBenign));
          append_word(text, "is");
          append_word(text, "run");
          append_word(text, "by");
          append_word(text, pick(g, kInsult));
          append_word(text, "types");
        }
      } else {
        post.label_b = "UNT";
        append_word(text, "what");
        append_word(text, "a");
        append_word(text, pick(g, kProfanity));
        append_word(text, pick(g, kBenign));
      }
      text += " " + benign_chunk(g, 2 + uniform_index(g, 5));
    }
    if (uniform01(g) < 0.25) append_word(text, pick(g, kHashtag));
    if (uniform01(g) < 0.25) append_word(text, pick(g, kEmoji));
    if (uniform01(g) < 0.15) append_word(text, "URL");
    post.text = std::move(text);
    corpus.push_back(std::move(post));
  }
  return corpus;
}

}  // namespace offlang
