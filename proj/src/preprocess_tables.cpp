#include <algorithm>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "offlang/preprocess.hpp"

namespace offlang {
namespace {

// Emoji are mapped to short English names written with plain spaces so the
// names pass through tokenization as ordinary words. Variation selector
// (U+FE0F) forms are listed explicitly; the longest byte sequence wins.
std::vector<std::pair<std::string, std::string>> build_emoji() {
  std::vector<std::pair<std::string, std::string>> table = {
      {"\U0001F600", "grinning face"},
      {"\U0001F601", "beaming face"},
      {"\U0001F602", "face with tears of joy"},
      {"\U0001F603", "grinning face with big eyes"},
      {"\U0001F604", "grinning face with smiling eyes"},
      {"\U0001F605", "grinning face with sweat"},
      {"\U0001F606", "grinning squinting face"},
      {"\U0001F607", "smiling face with halo"},
      {"\U0001F608", "smiling face with horns"},
      {"\U0001F609", "winking face"},
      {"\U0001F60A", "smiling face with smiling eyes"},
      {"\U0001F60B", "face savoring food"},
      {"\U0001F60C", "relieved face"},
      {"\U0001F60D", "smiling face with heart eyes"},
      {"\U0001F60E", "smiling face with sunglasses"},
      {"\U0001F60F", "smirking face"},
      {"\U0001F610", "neutral face"},
      {"\U0001F611", "expressionless face"},
      {"\U0001F612", "unamused face"},
      {"\U0001F613", "downcast face with sweat"},
      {"\U0001F614", "pensive face"},
      {"\U0001F615", "confused face"},
      {"\U0001F616", "confounded face"},
      {"\U0001F617", "kissing face"},
      {"\U0001F618", "face blowing a kiss"},
      {"\U0001F619", "kissing face with smiling eyes"},
      {"\U0001F61A", "kissing face with closed eyes"},
      {"\U0001F61B", "face with tongue"},
      {"\U0001F61C", "winking face with tongue"},
      {"\U0001F61D", "squinting face with tongue"},
      {"\U0001F61E", "disappointed face"},
      {"\U0001F61F", "worried face"},
      {"\U0001F620", "angry face"},
      {"\U0001F621", "enraged face"},
      {"\U0001F622", "crying face"},
      {"\U0001F623", "persevering face"},
      {"\U0001F624", "face with steam from nose"},
      {"\U0001F625", "sad but relieved face"},
      {"\U0001F626", "frowning face with open mouth"},
      {"\U0001F627", "anguished face"},
      {"\U0001F628", "fearful face"},
      {"\U0001F629", "weary face"},
      {"\U0001F62A", "sleepy face"},
      {"\U0001F62B", "tired face"},
      {"\U0001F62C", "grimacing face"},
      {"\U0001F62D", "loudly crying face"},
      {"\U0001F62E", "face with open mouth"},
      {"\U0001F62F", "hushed face"},
      {"\U0001F630", "anxious face with sweat"},
      {"\U0001F631", "face screaming in fear"},
      {"\U0001F632", "astonished face"},
      {"\U0001F633", "flushed face"},
      {"\U0001F634", "sleeping face"},
      {"\U0001F635", "dizzy face"},
      {"\U0001F636", "face without mouth"},
      {"\U0001F637", "face with medical mask"},
      {"\U0001F641", "slightly frowning face"},
      {"\U0001F642", "slightly smiling face"},
      {"\U0001F643", "upside down face"},
      {"\U0001F644", "face with rolling eyes"},
      {"\U0001F910", "zipper mouth face"},
      {"\U0001F911", "money mouth face"},
      {"\U0001F912", "face with thermometer"},
      {"\U0001F913", "nerd face"},
      {"\U0001F914", "thinking face"},
      {"\U0001F915", "face with head bandage"},
      {"\U0001F916", "robot"},
      {"\U0001F917", "hugging face"},
      {"\U0001F921", "clown face"},
      {"\U0001F922", "nauseated face"},
      {"\U0001F923", "rolling on the floor laughing"},
      {"\U0001F924", "drooling face"},
      {"\U0001F925", "lying face"},
      {"\U0001F926", "person facepalming"},
      {"\U0001F928", "face with raised eyebrow"},
      {"\U0001F92C", "face with symbols on mouth"},
      {"\U0001F92E", "face vomiting"},
      {"\U0001F92F", "exploding head"},
      {"\U0001F937", "person shrugging"},
      {"\U0001F970", "smiling face with hearts"},
      {"\U0001F971", "yawning face"},
      {"\U0001F973", "partying face"},
      {"\U0001F974", "woozy face"},
      {"\U0001F975", "hot face"},
      {"\U0001F976", "cold face"},
      {"\U0001F97A", "pleading face"},
      {"☹", "frowning face"},
      {"☹️", "frowning face"},
      {"☺", "smiling face"},
      {"☺️", "smiling face"},
      {"\U0001F44D", "thumbs up"},
      {"\U0001F44E", "thumbs down"},
      {"\U0001F44A", "oncoming fist"},
      {"\U0001F44B", "waving hand"},
      {"\U0001F44C", "ok hand"},
      {"\U0001F44F", "clapping hands"},
      {"\U0001F450", "open hands"},
      {"\U0001F64F", "folded hands"},
      {"\U0001F64C", "raising hands"},
      {"\U0001F645", "person gesturing no"},
      {"\U0001F646", "person gesturing ok"},
      {"\U0001F648", "see no evil monkey"},
      {"\U0001F649", "hear no evil monkey"},
      {"\U0001F64A", "speak no evil monkey"},
      {"\U0001F4AA", "flexed biceps"},
      {"\U0001F446", "index pointing up"},
      {"\U0001F447", "index pointing down"},
      {"\U0001F448", "index pointing left"},
      {"\U0001F449", "index pointing right"},
      {"\U0001F595", "middle finger"},
      {"✊", "raised fist"},
      {"✋", "raised hand"},
      {"✌", "victory hand"},
      {"✌️", "victory hand"},
      {"❤", "red heart"},
      {"❤️", "red heart"},
      {"\U0001F494", "broken heart"},
      {"\U0001F495", "two hearts"},
      {"\U0001F496", "sparkling heart"},
      {"\U0001F499", "blue heart"},
      {"\U0001F49A", "green heart"},
      {"\U0001F49B", "yellow heart"},
      {"\U0001F49C", "purple heart"},
      {"\U0001F4A9", "pile of poo"},
      {"\U0001F4A5", "collision"},
      {"\U0001F4AF", "hundred points"},
      {"\U0001F4A2", "anger symbol"},
      {"\U0001F4A6", "sweat droplets"},
      {"\U0001F4A4", "zzz"},
      {"\U0001F525", "fire"},
      {"\U0001F389", "party popper"},
      {"\U0001F3C6", "trophy"},
      {"\U0001F480", "skull"},
      {"☠", "skull and crossbones"},
      {"☠️", "skull and crossbones"},
      {"\U0001F451", "crown"},
      {"\U0001F52B", "pistol"},
      {"\U0001F5E3", "speaking head"},
      {"\U0001F5E3️", "speaking head"},
      {"\U0001F440", "eyes"},
      {"\U0001F4B0", "money bag"},
      {"\U0001F680", "rocket"},
      {"\U0001F926‍♀️", "woman facepalming"},
      {"\U0001F926‍♂️", "man facepalming"},
      {"\U0001F937‍♀️", "woman shrugging"},
      {"\U0001F937‍♂️", "man shrugging"},
      {"\U0001F1FA\U0001F1F8", "flag united states"},
      {"\U0001F1EC\U0001F1E7", "flag united kingdom"},
  };
  std::sort(table.begin(), table.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() > b.first.size();
    return a.first < b.first;
  });
  return table;
}

// Contraction expansions; "can't" deliberately becomes the two words
// "can not" so negation survives as its own token. The "waht's" entry keeps a
// common typo usable.
std::vector<std::pair<std::string, std::string>> build_contractions() {
  std::vector<std::pair<std::string, std::string>> table = {
      {"ain't", "am not"},
      {"aren't", "are not"},
      {"can't've", "can not have"},
      {"can't", "can not"},
      {"'cause", "because"},
      {"couldn't've", "could not have"},
      {"couldn't", "could not"},
      {"could've", "could have"},
      {"didn't", "did not"},
      {"doesn't", "does not"},
      {"don't", "do not"},
      {"hadn't", "had not"},
      {"hasn't", "has not"},
      {"haven't", "have not"},
      {"he'd", "he would"},
      {"he'll", "he will"},
      {"he's", "he is"},
      {"how'd", "how did"},
      {"how'll", "how will"},
      {"how's", "how is"},
      {"i'd", "i would"},
      {"i'll", "i will"},
      {"i'm", "i am"},
      {"i've", "i have"},
      {"isn't", "is not"},
      {"it'd", "it would"},
      {"it'll", "it will"},
      {"it's", "it is"},
      {"let's", "let us"},
      {"ma'am", "madam"},
      {"mightn't", "might not"},
      {"might've", "might have"},
      {"mustn't", "must not"},
      {"must've", "must have"},
      {"needn't", "need not"},
      {"o'clock", "of the clock"},
      {"oughtn't", "ought not"},
      {"shan't", "shall not"},
      {"she'd", "she would"},
      {"she'll", "she will"},
      {"she's", "she is"},
      {"shouldn't", "should not"},
      {"should've", "should have"},
      {"that'd", "that would"},
      {"that's", "that is"},
      {"there'd", "there would"},
      {"there's", "there is"},
      {"they'd", "they would"},
      {"they'll", "they will"},
      {"they're", "they are"},
      {"they've", "they have"},
      {"waht's", "what is"},
      {"wasn't", "was not"},
      {"we'd", "we would"},
      {"we'll", "we will"},
      {"we're", "we are"},
      {"we've", "we have"},
      {"weren't", "were not"},
      {"what'll", "what will"},
      {"what're", "what are"},
      {"what's", "what is"},
      {"what've", "what have"},
      {"when's", "when is"},
      {"where'd", "where did"},
      {"where's", "where is"},
      {"who'll", "who will"},
      {"who's", "who is"},
      {"won't", "will not"},
      {"wouldn't", "would not"},
      {"you'd", "you would"},
      {"you'll", "you will"},
      {"you're", "you are"},
      {"you've", "you have"},
  };
  std::sort(table.begin(), table.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() > b.first.size();
    return a.first < b.first;
  });
  return table;
}

// Function words dropped by the stopword filter. Negations (not, no, nor),
// modals (can, will, should, ...) and phrasal-verb particles (up, off, on, ...)
// are deliberately kept out of this set: they carry signal for this task.
std::unordered_set<std::string> build_stopwords() {
  return {
      "i",       "me",      "my",       "myself",  "we",         "our",
      "ours",    "ourselves", "you",    "your",    "yours",      "yourself",
      "yourselves", "he",   "him",      "his",     "himself",    "she",
      "her",     "hers",    "herself",  "it",      "its",        "itself",
      "they",    "them",    "their",    "theirs",  "themselves", "what",
      "which",   "who",     "whom",     "this",    "that",       "these",
      "those",   "am",      "is",       "are",     "was",        "were",
      "be",      "been",    "being",    "have",    "has",        "had",
      "having",  "do",      "does",     "did",     "doing",      "a",
      "an",      "the",     "and",      "but",     "if",         "or",
      "because", "as",      "until",    "while",   "of",         "at",
      "by",      "for",     "with",     "about",   "against",    "between",
      "into",    "through", "during",   "before",  "after",      "above",
      "below",   "to",      "from",     "in",      "out",        "again",
      "further", "then",    "once",     "here",    "there",      "when",
      "where",   "why",     "how",      "all",     "any",        "both",
      "each",    "few",     "more",     "most",    "other",      "some",
      "such",    "only",    "own",      "same",    "so",         "than",
      "too",     "very",    "just",     "now",
  };
}

// Irregular forms resolved by lookup before the suffix rules run. Values are
// fixed points of the lemmatizer. "left" is intentionally absent: in this
// domain it is nearly always the noun/adjective, not the past of "leave".
// "thumbs" maps to itself so emoji names round-trip unchanged.
std::unordered_map<std::string, std::string> build_irregulars() {
  return {
      {"went", "go"},       {"gone", "go"},       {"goes", "go"},
      {"going", "go"},      {"am", "be"},         {"is", "be"},
      {"are", "be"},        {"was", "be"},        {"were", "be"},
      {"been", "be"},       {"being", "be"},      {"has", "have"},
      {"had", "have"},      {"having", "have"},   {"does", "do"},
      {"did", "do"},        {"doing", "do"},      {"said", "say"},
      {"says", "say"},      {"saying", "say"},    {"made", "make"},
      {"making", "make"},   {"makes", "make"},    {"took", "take"},
      {"taken", "take"},    {"taking", "take"},   {"takes", "take"},
      {"came", "come"},     {"coming", "come"},   {"comes", "come"},
      {"saw", "see"},       {"seen", "see"},      {"sees", "see"},
      {"seeing", "see"},    {"got", "get"},       {"gotten", "get"},
      {"gets", "get"},      {"getting", "get"},   {"gave", "give"},
      {"given", "give"},    {"gives", "give"},    {"giving", "give"},
      {"knew", "know"},     {"known", "know"},    {"knows", "know"},
      {"knowing", "know"},  {"thought", "think"}, {"thinks", "think"},
      {"thinking", "think"}, {"told", "tell"},    {"tells", "tell"},
      {"telling", "tell"},  {"became", "become"}, {"becomes", "become"},
      {"becoming", "become"}, {"found", "find"},  {"finds", "find"},
      {"finding", "find"},  {"felt", "feel"},     {"feels", "feel"},
      {"feeling", "feel"},  {"kept", "keep"},     {"keeps", "keep"},
      {"keeping", "keep"},  {"began", "begin"},   {"begun", "begin"},
      {"begins", "begin"},  {"beginning", "begin"}, {"wrote", "write"},
      {"written", "write"}, {"writes", "write"},  {"writing", "write"},
      {"ran", "run"},       {"runs", "run"},      {"running", "run"},
      {"spoke", "speak"},   {"spoken", "speak"},  {"speaks", "speak"},
      {"speaking", "speak"}, {"men", "man"},      {"women", "woman"},
      {"children", "child"}, {"feet", "foot"},    {"teeth", "tooth"},
      {"mice", "mouse"},    {"thumbs", "thumbs"},
      // Not inflections at all; listed as their own lemmas so the -ing rule
      // leaves them alone.
      {"anything", "anything"}, {"everything", "everything"},
      {"nothing", "nothing"},   {"something", "something"},
  };
}

}  // namespace

const std::vector<std::pair<std::string, std::string>>& emoji_lexicon() {
  static const auto table = build_emoji();
  return table;
}

const std::vector<std::pair<std::string, std::string>>& contraction_table() {
  static const auto table = build_contractions();
  return table;
}

const std::unordered_set<std::string>& stopword_set() {
  static const auto words = build_stopwords();
  return words;
}

const std::unordered_map<std::string, std::string>& irregular_lemmas() {
  static const auto table = build_irregulars();
  return table;
}

}  // namespace offlang
