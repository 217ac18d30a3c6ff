#include "timt/reward.hpp"

#include <algorithm>

#include <json.hpp>

#include "timt/error.hpp"

namespace timt {

namespace {

double clamp01(double x) { return std::min(std::max(x, 0.0), 1.0); }

double metric_against(Metric m, std::string_view hyp, std::string_view ref,
                      std::string_view lang) {
  switch (m) {
    case Metric::Bleu: return bleu(hyp, ref, lang);
    case Metric::ChrFpp: return chrf_pp(hyp, ref);
    case Metric::Meteor: return meteor(hyp, ref, lang);
    case Metric::TokenF1: return token_f1(hyp, ref, lang);
    case Metric::EditDistanceNorm: return edit_distance_norm(hyp, ref, lang);
    case Metric::Cer: return cer(hyp, ref);
  }
  return 0.0;
}

}  // namespace

RewardMode RewardMode::mixed() {
  return {"mixed", {Metric::Bleu, Metric::ChrFpp, Metric::Meteor}};
}

RewardMode RewardMode::single(Metric m) {
  switch (m) {
    case Metric::Bleu: return {"bleu", {Metric::Bleu}};
    case Metric::ChrFpp: return {"chrfpp", {Metric::ChrFpp}};
    case Metric::Meteor: return {"meteor", {Metric::Meteor}};
    default: break;
  }
  throw Error::invalid_arg("reward mode must be built from a translation metric", "mode");
}

std::optional<RewardMode> RewardMode::from_name(std::string_view name) {
  if (name == "mixed") return mixed();
  if (name == "bleu") return single(Metric::Bleu);
  if (name == "chrfpp") return single(Metric::ChrFpp);
  if (name == "meteor") return single(Metric::Meteor);
  return std::nullopt;
}

const std::vector<std::string>& RewardMode::known_names() {
  static const std::vector<std::string> names = {"mixed", "bleu", "chrfpp", "meteor"};
  return names;
}

double translation_reward(std::string_view translate_segment, const TimtRecord& record,
                          const RewardMode& mode) {
  double sum = 0.0;
  for (Metric m : mode.translation_components)
    sum += metric_against(m, translate_segment, record.reference_translation, record.tgt_lang);
  return sum / static_cast<double>(mode.translation_components.size());
}

double recognition_reward(std::string_view recognize_segment, const TimtRecord& record) {
  const std::string_view src = record.source_text;
  const std::string_view lang = record.src_lang;
  double s_bleu = bleu(recognize_segment, src, lang);
  double s_meteor = meteor(recognize_segment, src, lang);
  double s_f1 = token_f1(recognize_segment, src, lang);
  double s_edit = edit_distance_norm(recognize_segment, src, lang);
  double s_cer = cer(recognize_segment, src);
  return (s_bleu + s_meteor + s_f1 + clamp01(1.0 - s_edit) + clamp01(1.0 - s_cer)) / 5.0;
}

RewardBreakdown final_reward(const ParsedResponse& parsed, const TimtRecord& record,
                             const RewardMode& mode) {
  RewardBreakdown out;
  out.format = format_reward(parsed);
  if (!parsed.format_ok) {
    out.final = -3.0;
    return out;
  }

  const TaskLayout& layout = TaskLayout::get(parsed.layout);
  double recognition = 0.0;
  if (layout.has(Tag::Recognize)) {
    const std::string& seg = *parsed.recognize;
    out.components["rec_bleu"] = bleu(seg, record.source_text, record.src_lang);
    out.components["rec_meteor"] = meteor(seg, record.source_text, record.src_lang);
    out.components["rec_token_f1"] = token_f1(seg, record.source_text, record.src_lang);
    out.components["rec_edit_distance"] =
        edit_distance_norm(seg, record.source_text, record.src_lang);
    out.components["rec_cer"] = cer(seg, record.source_text);
    recognition = (out.components["rec_bleu"] + out.components["rec_meteor"] +
                   out.components["rec_token_f1"] +
                   clamp01(1.0 - out.components["rec_edit_distance"]) +
                   clamp01(1.0 - out.components["rec_cer"])) /
                  5.0;
    out.recognition = recognition;
  }

  double translation = 0.0;
  for (Metric m : mode.translation_components) {
    double score = metric_against(m, *parsed.translate, record.reference_translation,
                                  record.tgt_lang);
    out.components[std::string("trans_") + metric_name(m)] = score;
    translation += score;
  }
  translation /= static_cast<double>(mode.translation_components.size());
  out.translation = translation;

  out.final = 1.0 + recognition + translation;
  return out;
}

std::string breakdown_to_json(const RewardBreakdown& breakdown) {
  nlohmann::ordered_json obj;
  obj["format"] = breakdown.format;
  if (breakdown.recognition) obj["recognition"] = *breakdown.recognition;
  if (breakdown.translation) obj["translation"] = *breakdown.translation;
  obj["final"] = breakdown.final;
  for (const auto& [key, value] : breakdown.components) obj[key] = value;
  return obj.dump();
}

}  // namespace timt
