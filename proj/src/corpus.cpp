#include "offlang/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "offlang/errors.hpp"
#include "offlang/rng.hpp"

namespace offlang {
namespace {

const char* kHeader = "id\ttweet\tsubtask_a\tsubtask_b\tsubtask_c";

bool valid_label(Level level, const std::string& value) {
  switch (level) {
    case Level::A: return value == "OFF" || value == "NOT";
    case Level::B: return value == "TIN" || value == "UNT";
    case Level::C: return value == "IND" || value == "GRP" || value == "OTH";
  }
  return false;
}

std::optional<std::string> parse_label(Level level, const std::string& raw,
                                       std::size_t line_no) {
  if (raw == "NULL" || raw.empty()) return std::nullopt;
  if (!valid_label(level, raw)) {
    throw UnknownLabelError("line " + std::to_string(line_no) + ": '" + raw +
                            "' is not a valid subtask_" +
                            std::string(1, "abc"[static_cast<int>(level)]) + " label");
  }
  return raw;
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    if (tab == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return fields;
}

}  // namespace

const char* level_name(Level level) {
  switch (level) {
    case Level::A: return "a";
    case Level::B: return "b";
    case Level::C: return "c";
  }
  return "?";
}

Level level_from_name(const std::string& name) {
  if (name == "a" || name == "A") return Level::A;
  if (name == "b" || name == "B") return Level::B;
  if (name == "c" || name == "C") return Level::C;
  throw ConfigError("unknown level '" + name + "' (expected a, b or c)");
}

const std::optional<std::string>& Post::label(Level level) const {
  switch (level) {
    case Level::B: return label_b;
    case Level::C: return label_c;
    default: return label_a;
  }
}

Corpus parse_olid(std::istream& in) {
  Corpus corpus;
  std::string line;
  std::size_t line_no = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (first) {
      first = false;
      const auto fields = split_tabs(line);
      if (fields.size() >= 3 && fields[0] == "id" && fields[2] == "subtask_a") continue;
    }
    if (line.empty()) continue;

    const auto fields = split_tabs(line);
    if (fields.size() != 5) {
      throw MalformedRowError(line_no, "expected 5 tab-separated fields, found " +
                                           std::to_string(fields.size()));
    }
    if (fields[0].empty()) throw MalformedRowError(line_no, "empty id");

    Post post;
    post.id = fields[0];
    post.text = fields[1];
    post.label_a = parse_label(Level::A, fields[2], line_no);
    post.label_b = parse_label(Level::B, fields[3], line_no);
    post.label_c = parse_label(Level::C, fields[4], line_no);

    if (post.label_b && post.label_a != std::optional<std::string>("OFF")) {
      throw HierarchyViolationError("line " + std::to_string(line_no) +
                                    ": subtask_b label requires subtask_a = OFF");
    }
    if (post.label_c && post.label_b != std::optional<std::string>("TIN")) {
      throw HierarchyViolationError("line " + std::to_string(line_no) +
                                    ": subtask_c label requires subtask_b = TIN");
    }
    corpus.push_back(std::move(post));
  }
  return corpus;
}

Corpus parse_olid_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open corpus file: " + path);
  return parse_olid(in);
}

void serialize_olid(const Corpus& corpus, std::ostream& out) {
  out << kHeader << '\n';
  for (const Post& post : corpus) {
    out << post.id << '\t' << post.text << '\t' << post.label_a.value_or("NULL") << '\t'
        << post.label_b.value_or("NULL") << '\t' << post.label_c.value_or("NULL") << '\n';
  }
}

void serialize_olid_file(const Corpus& corpus, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write corpus file: " + path);
  serialize_olid(corpus, out);
}

SubtaskView subtask_view(const Corpus& corpus, Level level) {
  SubtaskView view;
  view.level = level;
  for (const Post& post : corpus) {
    const auto& label = post.label(level);
    if (!label) continue;
    view.ids.push_back(post.id);
    view.texts.push_back(post.text);
    view.labels.push_back(*label);
  }
  return view;
}

std::map<std::string, std::size_t> class_distribution(const std::vector<std::string>& labels) {
  std::map<std::string, std::size_t> counts;
  for (const auto& label : labels) ++counts[label];
  return counts;
}

std::pair<Corpus, Corpus> split_stratified(const Corpus& corpus, double train_fraction,
                                           std::uint64_t seed, Level level) {
  if (train_fraction < 0.0 || train_fraction > 1.0) {
    throw ConfigError("train_fraction must lie in [0, 1]");
  }
  const std::size_t n = corpus.size();
  std::map<std::string, std::vector<std::size_t>> by_class;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& label = corpus[i].label(level);
    if (!label) {
      throw UnknownLabelError("row " + corpus[i].id + " has no subtask_" +
                              level_name(level) + " label; split on its subtask view");
    }
    by_class[*label].push_back(i);
  }

  const auto target_total =
      static_cast<std::size_t>(std::floor(static_cast<double>(n) * train_fraction + 0.5));

  // Per-class quota: round(count * fraction).
  std::map<std::string, std::size_t> quota;
  std::size_t assigned = 0;
  for (const auto& [label, rows] : by_class) {
    quota[label] = static_cast<std::size_t>(
        std::floor(static_cast<double>(rows.size()) * train_fraction + 0.5));
    assigned += quota[label];
  }

  // Rounding drift is absorbed by the largest classes (ties: label ascending).
  std::vector<std::string> order;
  for (const auto& [label, rows] : by_class) order.push_back(label);
  std::sort(order.begin(), order.end(), [&](const std::string& a, const std::string& b) {
    if (by_class[a].size() != by_class[b].size()) return by_class[a].size() > by_class[b].size();
    return a < b;
  });
  std::size_t cursor = 0;
  while (assigned != target_total && !order.empty()) {
    const std::string& label = order[cursor % order.size()];
    if (assigned < target_total) {
      if (quota[label] < by_class[label].size()) {
        ++quota[label];
        ++assigned;
      }
    } else if (quota[label] > 0) {
      --quota[label];
      --assigned;
    }
    ++cursor;
  }

  // One seeded pass decides which rows fill each quota; output keeps corpus order.
  const auto perm = shuffled_indices(n, seed);
  std::map<std::string, std::size_t> taken;
  std::vector<bool> in_train(n, false);
  for (const std::size_t idx : perm) {
    const std::string& label = *corpus[idx].label(level);
    if (taken[label] < quota[label]) {
      in_train[idx] = true;
      ++taken[label];
    }
  }

  std::pair<Corpus, Corpus> result;
  for (std::size_t i = 0; i < n; ++i) {
    (in_train[i] ? result.first : result.second).push_back(corpus[i]);
  }
  return result;
}

std::pair<Corpus, Corpus> split_random(const Corpus& corpus, double train_fraction,
                                       std::uint64_t seed) {
  if (train_fraction < 0.0 || train_fraction > 1.0) {
    throw ConfigError("train_fraction must lie in [0, 1]");
  }
  const std::size_t n = corpus.size();
  const auto target =
      static_cast<std::size_t>(std::floor(static_cast<double>(n) * train_fraction + 0.5));
  const auto perm = shuffled_indices(n, seed);
  std::vector<bool> in_train(n, false);
  for (std::size_t i = 0; i < target; ++i) in_train[perm[i]] = true;

  std::pair<Corpus, Corpus> result;
  for (std::size_t i = 0; i < n; ++i) {
    (in_train[i] ? result.first : result.second).push_back(corpus[i]);
  }
  return result;
}

}  // namespace offlang
