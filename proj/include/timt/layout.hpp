#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace timt {

enum class Tag { Recognize, Think, Translate };

enum class LayoutKind { FullTasks, NoReasoning, NoRecognition, OnlyTimt };

struct TaskLayout {
  LayoutKind kind;
  std::vector<Tag> required_tags;  // translate is always last

  static const TaskLayout& get(LayoutKind kind);
  bool has(Tag tag) const;
};

// Canonical response templates, tag structure byte-for-byte as published;
// {recognize}/{think}/{translate} mark the content slots.
inline constexpr std::string_view kFullTasksTemplate =
    "<recognize> {recognize} </recognize> <think> {think} </think> "
    "<translate> {translate} </translate>";
inline constexpr std::string_view kNoReasoningTemplate =
    "<recognize>{recognize}</recognize> <translate>{translate}</translate>";
inline constexpr std::string_view kNoRecognitionTemplate =
    "<think> {think} </think><translate> {translate} </translate>";
inline constexpr std::string_view kOnlyTimtTemplate = "<translate>{translate}</translate>";

std::string_view layout_template(LayoutKind kind);

const char* tag_name(Tag tag);
const char* layout_name(LayoutKind kind);
std::optional<LayoutKind> layout_from_name(std::string_view name);

struct ParsedResponse {
  LayoutKind layout;
  std::optional<std::string> recognize;
  std::optional<std::string> think;
  std::optional<std::string> translate;
  bool format_ok = false;

  const std::optional<std::string>& segment(Tag tag) const;
};

// Strict extraction: every required tag exactly once, in order, properly
// closed, nothing but whitespace outside the blocks, and no tag literal
// inside a segment. Malformation is reported via format_ok, never thrown.
ParsedResponse parse_response(std::string_view raw, LayoutKind layout);

// +1 on a well-formed response, -3 otherwise.
double format_reward(const ParsedResponse& parsed);

// Fills the layout's template with the given segments. Inverse of
// parse_response for segments free of tag literals and outer whitespace.
std::string render_response(LayoutKind layout, std::string_view recognize, std::string_view think,
                            std::string_view translate);

}  // namespace timt
