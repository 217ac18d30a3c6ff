#include "timt/layout.hpp"

#include <algorithm>
#include <cctype>

namespace timt {

namespace {

const TaskLayout kLayouts[] = {
    {LayoutKind::FullTasks, {Tag::Recognize, Tag::Think, Tag::Translate}},
    {LayoutKind::NoReasoning, {Tag::Recognize, Tag::Translate}},
    {LayoutKind::NoRecognition, {Tag::Think, Tag::Translate}},
    {LayoutKind::OnlyTimt, {Tag::Translate}},
};

std::string open_literal(Tag tag) { return std::string("<") + tag_name(tag) + ">"; }
std::string close_literal(Tag tag) { return std::string("</") + tag_name(tag) + ">"; }

bool whitespace_only(std::string_view text) {
  for (unsigned char c : text)
    if (!std::isspace(c)) return false;
  return true;
}

std::string trim(std::string_view text) {
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  return std::string(text.substr(b, e - b));
}

struct TagHit {
  std::size_t pos;
  std::size_t len;
  Tag tag;
  bool closing;
};

// every occurrence of any of the six tag literals, in text order
std::vector<TagHit> find_tag_literals(std::string_view raw) {
  std::vector<TagHit> hits;
  for (Tag tag : {Tag::Recognize, Tag::Think, Tag::Translate}) {
    for (bool closing : {false, true}) {
      std::string lit = closing ? close_literal(tag) : open_literal(tag);
      std::size_t pos = raw.find(lit);
      while (pos != std::string_view::npos) {
        hits.push_back({pos, lit.size(), tag, closing});
        pos = raw.find(lit, pos + 1);
      }
    }
  }
  std::sort(hits.begin(), hits.end(), [](const TagHit& a, const TagHit& b) {
    return a.pos != b.pos ? a.pos < b.pos : a.len < b.len;
  });
  return hits;
}

}  // namespace

const TaskLayout& TaskLayout::get(LayoutKind kind) { return kLayouts[static_cast<int>(kind)]; }

bool TaskLayout::has(Tag tag) const {
  for (Tag t : required_tags)
    if (t == tag) return true;
  return false;
}

std::string_view layout_template(LayoutKind kind) {
  switch (kind) {
    case LayoutKind::FullTasks: return kFullTasksTemplate;
    case LayoutKind::NoReasoning: return kNoReasoningTemplate;
    case LayoutKind::NoRecognition: return kNoRecognitionTemplate;
    case LayoutKind::OnlyTimt: return kOnlyTimtTemplate;
  }
  return {};
}

const char* tag_name(Tag tag) {
  switch (tag) {
    case Tag::Recognize: return "recognize";
    case Tag::Think: return "think";
    case Tag::Translate: return "translate";
  }
  return "?";
}

const char* layout_name(LayoutKind kind) {
  switch (kind) {
    case LayoutKind::FullTasks: return "full_tasks";
    case LayoutKind::NoReasoning: return "no_reasoning";
    case LayoutKind::NoRecognition: return "no_recognition";
    case LayoutKind::OnlyTimt: return "only_timt";
  }
  return "?";
}

std::optional<LayoutKind> layout_from_name(std::string_view name) {
  if (name == "full_tasks") return LayoutKind::FullTasks;
  if (name == "no_reasoning") return LayoutKind::NoReasoning;
  if (name == "no_recognition") return LayoutKind::NoRecognition;
  if (name == "only_timt") return LayoutKind::OnlyTimt;
  return std::nullopt;
}

const std::optional<std::string>& ParsedResponse::segment(Tag tag) const {
  switch (tag) {
    case Tag::Recognize: return recognize;
    case Tag::Think: return think;
    case Tag::Translate: return translate;
  }
  return translate;
}

ParsedResponse parse_response(std::string_view raw, LayoutKind layout) {
  ParsedResponse out;
  out.layout = layout;
  const TaskLayout& spec_layout = TaskLayout::get(layout);
  const auto hits = find_tag_literals(raw);

  // the literal sequence must be exactly open/close per required tag, in order
  if (hits.size() != 2 * spec_layout.required_tags.size()) return out;

  std::vector<std::string> segments;
  std::size_t cursor = 0;
  for (std::size_t k = 0; k < spec_layout.required_tags.size(); ++k) {
    Tag tag = spec_layout.required_tags[k];
    const TagHit& open = hits[2 * k];
    const TagHit& close = hits[2 * k + 1];
    if (open.tag != tag || open.closing || close.tag != tag || !close.closing) return out;
    if (close.pos < open.pos + open.len) return out;  // overlap guard
    if (!whitespace_only(raw.substr(cursor, open.pos - cursor))) return out;
    segments.push_back(trim(raw.substr(open.pos + open.len, close.pos - open.pos - open.len)));
    cursor = close.pos + close.len;
  }
  if (!whitespace_only(raw.substr(cursor))) return out;

  out.format_ok = true;
  for (std::size_t k = 0; k < spec_layout.required_tags.size(); ++k) {
    switch (spec_layout.required_tags[k]) {
      case Tag::Recognize: out.recognize = std::move(segments[k]); break;
      case Tag::Think: out.think = std::move(segments[k]); break;
      case Tag::Translate: out.translate = std::move(segments[k]); break;
    }
  }
  return out;
}

double format_reward(const ParsedResponse& parsed) { return parsed.format_ok ? 1.0 : -3.0; }

std::string render_response(LayoutKind layout, std::string_view recognize, std::string_view think,
                            std::string_view translate) {
  std::string text(layout_template(layout));
  auto substitute = [&text](std::string_view slot, std::string_view value) {
    std::size_t pos = text.find(slot);
    if (pos != std::string::npos) text.replace(pos, slot.size(), value);
  };
  substitute("{recognize}", recognize);
  substitute("{think}", think);
  substitute("{translate}", translate);
  return text;
}

}  // namespace timt
