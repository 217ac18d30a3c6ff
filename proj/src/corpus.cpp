#include "timt/corpus.hpp"

#include <cctype>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "timt/error.hpp"
#include "timt/text.hpp"

namespace timt {

namespace {

using nlohmann::json;

std::string trim_copy(std::string_view text) {
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  return std::string(text.substr(b, e - b));
}

std::string where(const std::string& origin, std::size_t line_no) {
  return origin + ":" + std::to_string(line_no);
}

std::string require_string(const json& obj, const char* key, const std::string& at) {
  auto it = obj.find(key);
  if (it == obj.end())
    throw Error::schema(at + ": missing required field \"" + key + "\"", key);
  if (!it->is_string())
    throw Error::schema(at + ": field \"" + key + "\" must be a string", key);
  return it->get<std::string>();
}

// Fisher-Yates with explicit draws; std::shuffle is not pinned across
// standard libraries
template <typename T>
void seeded_shuffle(std::vector<T>& items, std::mt19937_64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace

const char* difficulty_name(Difficulty d) {
  switch (d) {
    case Difficulty::Easy: return "easy";
    case Difficulty::Medium: return "medium";
    case Difficulty::Hard: return "hard";
  }
  return "?";
}

std::optional<Difficulty> difficulty_from_name(std::string_view name) {
  if (name == "easy") return Difficulty::Easy;
  if (name == "medium") return Difficulty::Medium;
  if (name == "hard") return Difficulty::Hard;
  return std::nullopt;
}

Difficulty classify_difficulty(int bbox_count, int token_length) {
  if (bbox_count <= 2 && token_length <= 16) return Difficulty::Easy;
  if (bbox_count > 5 || token_length > 25) return Difficulty::Hard;
  return Difficulty::Medium;
}

Dataset::Dataset(std::vector<TimtRecord> records) : records_(std::move(records)) {
  for (std::size_t i = 0; i < records_.size(); ++i) {
    auto [it, inserted] = index_.emplace(records_[i].id, i);
    if (!inserted)
      throw Error::schema("duplicate record id \"" + records_[i].id + "\"", "id");
  }
}

const TimtRecord* Dataset::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  return it == index_.end() ? nullptr : &records_[it->second];
}

const TimtRecord& Dataset::at(std::string_view id) const {
  const TimtRecord* rec = find(id);
  if (!rec) throw Error::unknown_id("unknown record id \"" + std::string(id) + "\"", "record_id");
  return *rec;
}

std::vector<TimtRecord> parse_dataset_lines(std::string_view content, const std::string& origin) {
  std::vector<TimtRecord> records;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= content.size()) {
    std::size_t nl = content.find('\n', pos);
    std::string_view line =
        nl == std::string_view::npos ? content.substr(pos) : content.substr(pos, nl - pos);
    pos = nl == std::string_view::npos ? content.size() + 1 : nl + 1;
    ++line_no;
    if (trim_copy(line).empty()) continue;

    const std::string at = where(origin, line_no);
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::exception& e) {
      throw Error::parse(at + ": invalid JSON: " + e.what());
    }
    if (!obj.is_object()) throw Error::parse(at + ": line is not a JSON object");

    TimtRecord rec;
    rec.src_lang = require_string(obj, "src_lang", at);
    rec.tgt_lang = require_string(obj, "tgt_lang", at);
    rec.source_text = require_string(obj, "source_text", at);
    rec.reference_translation = require_string(obj, "reference_translation", at);
    if (trim_copy(rec.source_text).empty())
      throw Error::schema(at + ": field \"source_text\" must be non-empty", "source_text");
    if (trim_copy(rec.reference_translation).empty())
      throw Error::schema(at + ": field \"reference_translation\" must be non-empty",
                          "reference_translation");

    if (auto it = obj.find("id"); it != obj.end()) {
      if (!it->is_string()) throw Error::schema(at + ": field \"id\" must be a string", "id");
      rec.id = it->get<std::string>();
    } else {
      rec.id = "line-" + std::to_string(line_no);
    }

    if (auto it = obj.find("bbox_count"); it != obj.end()) {
      if (!it->is_number_integer() || it->get<long long>() < 0)
        throw Error::schema(at + ": field \"bbox_count\" must be a non-negative integer",
                            "bbox_count");
      rec.bbox_count = it->get<int>();
    } else {
      rec.bbox_count = 1;  // unannotated data: one text region
    }

    if (auto it = obj.find("token_length"); it != obj.end()) {
      if (!it->is_number_integer() || it->get<long long>() < 0)
        throw Error::schema(at + ": field \"token_length\" must be a non-negative integer",
                            "token_length");
      rec.token_length = it->get<int>();
    } else {
      rec.token_length = static_cast<int>(tokenize(rec.source_text, rec.src_lang).tokens.size());
    }

    Difficulty derived = classify_difficulty(rec.bbox_count, rec.token_length);
    if (auto it = obj.find("difficulty"); it != obj.end()) {
      if (!it->is_string())
        throw Error::schema(at + ": field \"difficulty\" must be a string", "difficulty");
      auto given = difficulty_from_name(it->get<std::string>());
      if (!given)
        throw Error::schema(at + ": field \"difficulty\" must be easy|medium|hard", "difficulty");
      if (*given != derived)
        throw Error::schema(at + ": stored difficulty \"" + it->get<std::string>() +
                                "\" disagrees with derived \"" + difficulty_name(derived) + "\"",
                            "difficulty");
      rec.difficulty = *given;
    } else {
      rec.difficulty = derived;
    }
    records.push_back(std::move(rec));
  }
  return records;
}

Dataset load_dataset(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error::io("cannot read dataset file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return Dataset(parse_dataset_lines(buffer.str(), path));
}

const char* curriculum_name(CurriculumStrategy s) {
  switch (s) {
    case CurriculumStrategy::Shuffle: return "shuffle";
    case CurriculumStrategy::Ascend: return "ascend";
    case CurriculumStrategy::Descend: return "descend";
  }
  return "?";
}

std::optional<CurriculumStrategy> curriculum_from_name(std::string_view name) {
  if (name == "shuffle") return CurriculumStrategy::Shuffle;
  if (name == "ascend") return CurriculumStrategy::Ascend;
  if (name == "descend") return CurriculumStrategy::Descend;
  return std::nullopt;
}

CurriculumPlan build_curriculum(const std::vector<TimtRecord>& records,
                                CurriculumStrategy strategy, std::uint64_t seed) {
  if (records.empty()) throw Error::invalid_arg("build_curriculum: empty dataset");

  CurriculumPlan plan;
  plan.strategy = strategy;
  plan.seed = seed;

  if (strategy == CurriculumStrategy::Shuffle) {
    for (const auto& rec : records) plan.order.push_back(rec.id);
    std::mt19937_64 rng(seed);
    seeded_shuffle(plan.order, rng);
    return plan;
  }

  // one band per difficulty; band order is the only thing the two
  // directional strategies disagree on
  std::vector<std::string> bands[3];
  for (const auto& rec : records) bands[static_cast<int>(rec.difficulty)].push_back(rec.id);
  std::mt19937_64 rng(seed);
  for (auto& band : bands) seeded_shuffle(band, rng);

  auto append = [&plan](const std::vector<std::string>& band) {
    plan.order.insert(plan.order.end(), band.begin(), band.end());
  };
  if (strategy == CurriculumStrategy::Ascend) {
    append(bands[0]);
    append(bands[1]);
    append(bands[2]);
  } else {
    append(bands[2]);
    append(bands[1]);
    append(bands[0]);
  }
  return plan;
}

}  // namespace timt
