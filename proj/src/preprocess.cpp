#include "offlang/preprocess.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "offlang/parallel.hpp"

namespace offlang {
namespace {

bool ascii_alnum(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}

bool ascii_lower(char c) { return c >= 'a' && c <= 'z'; }
bool ascii_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool ascii_digit(char c) { return c >= '0' && c <= '9'; }

char to_lower(char c) { return ascii_upper(c) ? static_cast<char>(c + 32) : c; }

// Decodes one UTF-8 code point; invalid bytes decode as U+FFFD of length 1.
std::pair<unsigned, std::size_t> decode_utf8(const std::string& s, std::size_t i) {
  const auto b0 = static_cast<unsigned char>(s[i]);
  if (b0 < 0x80) return {b0, 1};
  auto cont = [&](std::size_t k) {
    return i + k < s.size() && (static_cast<unsigned char>(s[i + k]) & 0xC0) == 0x80;
  };
  if ((b0 & 0xE0) == 0xC0 && cont(1)) {
    return {static_cast<unsigned>((b0 & 0x1Fu) << 6 | (static_cast<unsigned char>(s[i + 1]) & 0x3Fu)), 2};
  }
  if ((b0 & 0xF0) == 0xE0 && cont(1) && cont(2)) {
    return {static_cast<unsigned>((b0 & 0x0Fu) << 12 |
                                  (static_cast<unsigned char>(s[i + 1]) & 0x3Fu) << 6 |
                                  (static_cast<unsigned char>(s[i + 2]) & 0x3Fu)),
            3};
  }
  if ((b0 & 0xF8) == 0xF0 && cont(1) && cont(2) && cont(3)) {
    return {static_cast<unsigned>((b0 & 0x07u) << 18 |
                                  (static_cast<unsigned char>(s[i + 1]) & 0x3Fu) << 12 |
                                  (static_cast<unsigned char>(s[i + 2]) & 0x3Fu) << 6 |
                                  (static_cast<unsigned char>(s[i + 3]) & 0x3Fu)),
            4};
  }
  return {0xFFFDu, 1};
}

// Normalizes curly single quotes and the numeric apostrophe entity to a plain
// apostrophe so contraction keys can match.
std::string normalize_apostrophes(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size();) {
    if (text.compare(i, 5, "&#39;") == 0) {
      out.push_back('\'');
      i += 5;
      continue;
    }
    if (text.compare(i, 6, "&apos;") == 0) {
      out.push_back('\'');
      i += 6;
      continue;
    }
    const auto [cp, len] = decode_utf8(text, i);
    if (cp == 0x2018u || cp == 0x2019u) {
      out.push_back('\'');
    } else {
      out.append(text, i, len);
    }
    i += len;
  }
  return out;
}

bool matches_key_at(const std::string& text, std::size_t pos, const std::string& key) {
  if (pos + key.size() > text.size()) return false;
  for (std::size_t k = 0; k < key.size(); ++k) {
    if (to_lower(text[pos + k]) != key[k]) return false;
  }
  return true;
}

const char* const kMentionToken = "@USER";
const char* const kUrlToken = "URL";

struct SuffixResult {
  bool changed = false;
  std::string value;
};

bool vowel_in(const std::string& s) {
  return s.find_first_of("aeiou") != std::string::npos;
}

// Undoubles a trailing doubled consonant left by -ing/-ed stripping
// (running -> runn -> run). ll/ss/zz stay: fall, pass, buzz.
void undouble(std::string& s) {
  static const std::string kUndouble = "bdgkmnprtv";
  if (s.size() >= 3 && s[s.size() - 1] == s[s.size() - 2] &&
      kUndouble.find(s.back()) != std::string::npos) {
    s.pop_back();
  }
}

// Restores the silent e dropped before -ed/-ing when the bare stem could not
// end an English word (chas -> chase, argu -> argue, lov -> love). Without
// this, stems ending in a lone s would be stripped again by the plural rule
// on the next round (closed -> clos -> clo). Stems that kept a doubled
// consonant (kiss, buzz) never had a silent e.
void restore_e(std::string& s) {
  const std::size_t n = s.size();
  if (n < 2 || s[n - 1] == s[n - 2]) return;
  const char last = s.back();
  if (last == 'c' || last == 'u' || last == 'v' || last == 'z') {
    s.push_back('e');
    return;
  }
  if (last == 's') {
    const char prev = s[n - 2];
    if (prev != 'u' && prev != 'i') s.push_back('e');
  }
}

SuffixResult apply_suffix_rules(const std::string& t) {
  const std::size_t n = t.size();
  auto ends = [&](const char* suffix) {
    const std::size_t len = std::char_traits<char>::length(suffix);
    return n >= len && t.compare(n - len, len, suffix) == 0;
  };

  if (n >= 5 && ends("ies")) return {true, t.substr(0, n - 3) + "y"};
  if (n >= 5 && ends("sses")) return {true, t.substr(0, n - 2)};
  if (n >= 5 && (ends("ches") || ends("shes") || ends("xes") || ends("zes"))) {
    return {true, t.substr(0, n - 2)};
  }
  if (n >= 3 && t.back() == 's' && !ends("ss") && !ends("us") && !ends("is")) {
    return {true, t.substr(0, n - 1)};
  }
  if (n >= 6 && ends("ing")) {
    std::string stem = t.substr(0, n - 3);
    if (vowel_in(stem)) {
      const std::size_t kept = stem.size();
      undouble(stem);
      if (stem.size() == kept) restore_e(stem);
      return {true, stem};
    }
  }
  if (n >= 5 && ends("ed")) {
    std::string stem = t.substr(0, n - 2);
    if (vowel_in(stem)) {
      const std::size_t kept = stem.size();
      undouble(stem);
      if (stem.size() == kept) restore_e(stem);
      return {true, stem};
    }
  }
  return {false, t};
}

}  // namespace

std::string demojize(const std::string& text) {
  const auto& table = emoji_lexicon();
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size();) {
    const auto b = static_cast<unsigned char>(text[i]);
    if (b < 0x80) {
      out.push_back(text[i]);
      ++i;
      continue;
    }
    bool replaced = false;
    for (const auto& [key, name] : table) {
      if (text.compare(i, key.size(), key) == 0) {
        out.push_back(' ');
        out.append(name);
        out.push_back(' ');
        i += key.size();
        replaced = true;
        break;
      }
    }
    if (!replaced) {
      const auto [cp, len] = decode_utf8(text, i);
      (void)cp;
      out.append(text, i, len);
      i += len;
    }
  }
  return out;
}

std::string segment_hashtags(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size();) {
    if (text[i] != '#' || i + 1 >= text.size() || !ascii_alnum(text[i + 1])) {
      out.push_back(text[i]);
      ++i;
      continue;
    }
    std::size_t end = i + 1;
    while (end < text.size() && ascii_alnum(text[end])) ++end;
    // Word boundaries inside the tag: lower->Upper and letter->digit.
    for (std::size_t k = i + 1; k < end; ++k) {
      if (k > i + 1) {
        const char prev = text[k - 1];
        const char cur = text[k];
        if ((ascii_lower(prev) && ascii_upper(cur)) ||
            (!ascii_digit(prev) && ascii_digit(cur))) {
          out.push_back(' ');
        }
      }
      out.push_back(text[k]);
    }
    i = end;
  }
  return out;
}

std::string expand_contractions(const std::string& text) {
  const std::string normalized = normalize_apostrophes(text);
  const auto& table = contraction_table();
  std::string out;
  out.reserve(normalized.size());
  for (std::size_t i = 0; i < normalized.size();) {
    bool replaced = false;
    const char prev = (i == 0) ? ' ' : normalized[i - 1];
    if (!ascii_alnum(prev) && prev != '\'') {
      for (const auto& [key, value] : table) {
        if (!matches_key_at(normalized, i, key)) continue;
        const std::size_t after = i + key.size();
        if (after < normalized.size() &&
            (ascii_alnum(normalized[after]) || normalized[after] == '\'')) {
          continue;
        }
        out.append(value);
        i = after;
        replaced = true;
        break;
      }
    }
    if (!replaced) {
      out.push_back(normalized[i]);
      ++i;
    }
  }
  return out;
}

std::string strip_noise(const std::string& text, int max_mentions) {
  // Pass 1: common HTML entities.
  std::string entity_free;
  entity_free.reserve(text.size());
  static const std::pair<const char*, const char*> kEntities[] = {
      {"&amp;", "&"}, {"&lt;", "<"},   {"&gt;", ">"},
      {"&quot;", "\""}, {"&#39;", "'"}, {"&apos;", "'"}, {"&nbsp;", " "},
  };
  for (std::size_t i = 0; i < text.size();) {
    bool matched = false;
    if (text[i] == '&') {
      for (const auto& [key, value] : kEntities) {
        const std::size_t len = std::char_traits<char>::length(key);
        if (text.compare(i, len, key) == 0) {
          entity_free.append(value);
          i += len;
          matched = true;
          break;
        }
      }
    }
    if (!matched) {
      entity_free.push_back(text[i]);
      ++i;
    }
  }

  // Pass 2: fold fullwidth forms to ASCII, normalize quotes, drop every
  // remaining non-ASCII code point.
  std::string ascii;
  ascii.reserve(entity_free.size());
  for (std::size_t i = 0; i < entity_free.size();) {
    const auto [cp, len] = decode_utf8(entity_free, i);
    if (cp < 0x80u) {
      ascii.push_back(static_cast<char>(cp));
    } else if (cp >= 0xFF01u && cp <= 0xFF5Eu) {
      ascii.push_back(static_cast<char>(cp - 0xFEE0u));
    } else if (cp == 0x2018u || cp == 0x2019u) {
      ascii.push_back('\'');
    } else if (cp == 0x201Cu || cp == 0x201Du) {
      ascii.push_back('"');
    } else if (cp == 0x3000u || cp == 0x00A0u) {
      ascii.push_back(' ');
    }
    i += len;
  }

  // Pass 3: drop URL placeholders, cap runs of mention placeholders, collapse
  // whitespace.
  std::istringstream in(ascii);
  std::string token;
  std::string out;
  int mention_run = 0;
  while (in >> token) {
    if (token == kUrlToken) continue;
    if (token == kMentionToken) {
      ++mention_run;
      if (mention_run > max_mentions) continue;
    } else {
      mention_run = 0;
    }
    if (!out.empty()) out.push_back(' ');
    out.append(token);
  }
  return out;
}

std::vector<std::string> tokenize(const std::string& text) {
  std::vector<std::string> tokens;
  std::string current;
  for (const char raw : text) {
    const auto b = static_cast<unsigned char>(raw);
    const char c = to_lower(raw);
    if (ascii_lower(c) || ascii_digit(c)) {
      current.push_back(c);
    } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f') {
      if (!current.empty()) {
        tokens.push_back(std::move(current));
        current.clear();
      }
    } else {
      // Punctuation and stray non-ASCII bytes vanish without splitting the
      // token: "a-b" becomes "ab".
      (void)b;
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

std::vector<std::string> filter_stopwords(const std::vector<std::string>& tokens) {
  const auto& stop = stopword_set();
  std::vector<std::string> kept;
  kept.reserve(tokens.size());
  for (const auto& t : tokens) {
    if (!stop.count(t)) kept.push_back(t);
  }
  return kept;
}

std::string lemmatize_token(const std::string& token) {
  const auto& irregular = irregular_lemmas();
  const auto& stop = stopword_set();
  std::string current = token;
  for (int round = 0; round < 8; ++round) {
    std::string candidate;
    if (const auto it = irregular.find(current); it != irregular.end()) {
      candidate = it->second;
    } else {
      const auto result = apply_suffix_rules(current);
      if (!result.changed) break;
      candidate = result.value;
    }
    if (candidate == current) break;
    // Never collapse a content word into a function word: that would make a
    // second pipeline pass drop it and break idempotence.
    if (stop.count(candidate) && !stop.count(current)) break;
    current = std::move(candidate);
  }
  return current;
}

std::vector<std::string> lemmatize(const std::vector<std::string>& tokens) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) out.push_back(lemmatize_token(t));
  return out;
}

std::vector<std::string> preprocess(const std::string& text, const PreprocessConfig& config) {
  std::string s = text;
  if (config.demojize) s = demojize(s);
  if (config.segment_hashtags) s = segment_hashtags(s);
  if (config.expand_contractions) s = expand_contractions(s);
  if (config.strip_noise) s = strip_noise(s, config.max_mentions);
  std::vector<std::string> tokens = tokenize(s);
  if (config.filter_stopwords) tokens = filter_stopwords(tokens);
  if (config.lemmatize) tokens = lemmatize(tokens);
  return tokens;
}

std::vector<std::vector<std::string>> preprocess_all(const std::vector<std::string>& texts,
                                                     const PreprocessConfig& config,
                                                     int threads) {
  std::vector<std::vector<std::string>> out(texts.size());
  parallel_for(texts.size(), threads,
               [&](std::size_t i) { out[i] = preprocess(texts[i], config); });
  return out;
}

std::string join_tokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out.push_back(' ');
    out.append(tokens[i]);
  }
  return out;
}

}  // namespace offlang
