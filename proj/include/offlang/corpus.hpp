#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace offlang {

// The three levels of the annotation hierarchy:
//   A: offensive (OFF) vs not (NOT)
//   B: targeted insult (TIN) vs untargeted (UNT), only for OFF posts
//   C: target is individual (IND), group (GRP) or other (OTH), only for TIN posts
enum class Level { A, B, C };

const char* level_name(Level level);
Level level_from_name(const std::string& name);

struct Post {
  std::string id;
  std::string text;
  std::optional<std::string> label_a;
  std::optional<std::string> label_b;
  std::optional<std::string> label_c;

  const std::optional<std::string>& label(Level level) const;
  bool operator==(const Post&) const = default;
};

using Corpus = std::vector<Post>;

// A materialized per-level slice: only rows that carry a gold label at that
// level, with parallel id/text/label arrays.
struct SubtaskView {
  Level level = Level::A;
  std::vector<std::string> ids;
  std::vector<std::string> texts;
  std::vector<std::string> labels;

  std::size_t size() const { return texts.size(); }
};

// Reads the five-column tab-separated format:
//   id \t tweet \t subtask_a \t subtask_b \t subtask_c
// An optional header row is skipped. "NULL" means the label is absent.
// Throws MalformedRowError / UnknownLabelError / HierarchyViolationError.
Corpus parse_olid(std::istream& in);
Corpus parse_olid_file(const std::string& path);

void serialize_olid(const Corpus& corpus, std::ostream& out);
void serialize_olid_file(const Corpus& corpus, const std::string& path);

SubtaskView subtask_view(const Corpus& corpus, Level level);

std::map<std::string, std::size_t> class_distribution(const std::vector<std::string>& labels);

// Splits so that each class contributes round(count * train_fraction) rows to
// the train side, then moves rows between the largest classes until the train
// side holds exactly round(n * train_fraction) rows overall. Row order within
// each side follows the original corpus. Every row must carry a label at
// `level`.
std::pair<Corpus, Corpus> split_stratified(const Corpus& corpus, double train_fraction,
                                           std::uint64_t seed, Level level = Level::A);

// Plain seeded split without class balancing.
std::pair<Corpus, Corpus> split_random(const Corpus& corpus, double train_fraction,
                                       std::uint64_t seed);

}  // namespace offlang
