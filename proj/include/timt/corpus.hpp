#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace timt {

enum class Difficulty { Easy, Medium, Hard };

const char* difficulty_name(Difficulty d);
std::optional<Difficulty> difficulty_from_name(std::string_view name);

// Easy: boxes <= 2 and tokens <= 16. Hard: boxes > 5 or tokens > 25.
// Medium otherwise; the Easy conjunction and Hard disjunction are disjoint.
Difficulty classify_difficulty(int bbox_count, int token_length);

struct TimtRecord {
  std::string id;
  std::string src_lang;
  std::string tgt_lang;
  std::string source_text;             // ground-truth transcription, reading order
  std::string reference_translation;   // reading order
  int bbox_count = 1;
  int token_length = 0;                // source tokens under the shared tokenizer
  Difficulty difficulty = Difficulty::Easy;
};

class Dataset {
 public:
  explicit Dataset(std::vector<TimtRecord> records);

  const std::vector<TimtRecord>& records() const { return records_; }
  std::size_t size() const { return records_.size(); }
  const TimtRecord* find(std::string_view id) const;
  // throws UnknownId
  const TimtRecord& at(std::string_view id) const;

 private:
  std::vector<TimtRecord> records_;
  std::unordered_map<std::string, std::size_t> index_;
};

// One JSON object per line; ids, token lengths and difficulty are derived
// when absent. Throws Io / Parse / Schema with the offending line number.
Dataset load_dataset(const std::string& path);
std::vector<TimtRecord> parse_dataset_lines(std::string_view content, const std::string& origin);

enum class CurriculumStrategy { Shuffle, Ascend, Descend };

const char* curriculum_name(CurriculumStrategy s);
std::optional<CurriculumStrategy> curriculum_from_name(std::string_view name);

struct CurriculumPlan {
  CurriculumStrategy strategy;
  std::uint64_t seed;
  std::vector<std::string> order;  // permutation of the dataset's ids
};

// Shuffle: seeded uniform permutation. Ascend: Easy, Medium, Hard with a
// seeded shuffle inside each band. Descend: the same bands in reverse order,
// same within-band ordering. Throws InvalidArg on an empty dataset.
CurriculumPlan build_curriculum(const std::vector<TimtRecord>& records,
                                CurriculumStrategy strategy, std::uint64_t seed);

}  // namespace timt
