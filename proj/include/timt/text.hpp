#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace timt {

enum class TokenScheme { WordLike, PerCharacter };

struct TokenizedText {
  std::vector<std::string> tokens;
  std::string language;
  TokenScheme scheme = TokenScheme::WordLike;
};

// True for language codes naming Chinese ("zh", "zh-CN", "zh_Hant", ...).
bool is_per_character_language(std::string_view language);

// Splits UTF-8 text into codepoint-sized byte strings. Invalid sequences are
// passed through one byte at a time so arbitrary input never throws.
std::vector<std::string> utf8_codepoints(std::string_view text);

// Codepoint count of a UTF-8 string.
std::size_t utf8_length(std::string_view text);

// Chinese: one token per non-whitespace codepoint. Everything else: lowercase
// ASCII, ASCII punctuation split into standalone tokens, words delimited by
// whitespace. Joining tokens with spaces and re-tokenizing is idempotent.
TokenizedText tokenize(std::string_view text, std::string_view language);

}  // namespace timt
