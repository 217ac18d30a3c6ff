#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "timt/corpus.hpp"
#include "timt/layout.hpp"
#include "timt/metrics.hpp"

namespace timt {

// Which metrics feed the translation reward. Mixed averages all three;
// the single-metric modes exist for the reward-selection comparison.
struct RewardMode {
  std::string name;
  std::vector<Metric> translation_components;

  static RewardMode mixed();
  static RewardMode single(Metric m);
  static std::optional<RewardMode> from_name(std::string_view name);
  static const std::vector<std::string>& known_names();
};

struct RewardBreakdown {
  double format = -3.0;                  // 1 or -3
  std::optional<double> recognition;     // [0,1], absent on format failure or layouts without recognize
  std::optional<double> translation;     // [0,1], absent on format failure
  double final = -3.0;
  std::map<std::string, double> components;  // raw metric scores, unclamped
};

// Mean of the mode's metrics against the reference translation, scored under
// the target language's tokenization.
double translation_reward(std::string_view translate_segment, const TimtRecord& record,
                          const RewardMode& mode);

// (bleu + meteor + token F1 + clamp(1-edit) + clamp(1-cer)) / 5 against the
// ground-truth transcription under the source language's tokenization.
double recognition_reward(std::string_view recognize_segment, const TimtRecord& record);

// -3 on malformed output; otherwise 1 + recognition (when the layout asks for
// it) + translation, with every component score recorded.
RewardBreakdown final_reward(const ParsedResponse& parsed, const TimtRecord& record,
                             const RewardMode& mode);

// Flat JSON object: format/recognition/translation/final plus one key per
// component metric. The wire unit of the scoring service.
std::string breakdown_to_json(const RewardBreakdown& breakdown);

}  // namespace timt
