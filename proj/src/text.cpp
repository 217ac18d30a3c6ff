#include "timt/text.hpp"

#include <cctype>

namespace timt {

namespace {

bool is_ascii_space(unsigned char c) { return std::isspace(c) != 0; }

// U+3000 ideographic space, common in Chinese text.
bool is_space_codepoint(const std::string& cp) {
  if (cp.size() == 1) return is_ascii_space(static_cast<unsigned char>(cp[0]));
  return cp == "\xE3\x80\x80";
}

}  // namespace

bool is_per_character_language(std::string_view language) {
  if (language.size() < 2) return false;
  char a = static_cast<char>(std::tolower(static_cast<unsigned char>(language[0])));
  char b = static_cast<char>(std::tolower(static_cast<unsigned char>(language[1])));
  if (a != 'z' || b != 'h') return false;
  return language.size() == 2 || language[2] == '-' || language[2] == '_';
}

std::vector<std::string> utf8_codepoints(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    unsigned char lead = static_cast<unsigned char>(text[i]);
    std::size_t len = 1;
    if (lead >= 0xF0)
      len = 4;
    else if (lead >= 0xE0)
      len = 3;
    else if (lead >= 0xC0)
      len = 2;
    if (i + len > text.size()) len = 1;
    // continuation bytes must match, otherwise fall back to a single byte
    for (std::size_t k = 1; k < len; ++k) {
      if ((static_cast<unsigned char>(text[i + k]) & 0xC0) != 0x80) {
        len = 1;
        break;
      }
    }
    out.emplace_back(text.substr(i, len));
    i += len;
  }
  return out;
}

std::size_t utf8_length(std::string_view text) { return utf8_codepoints(text).size(); }

TokenizedText tokenize(std::string_view text, std::string_view language) {
  TokenizedText result;
  result.language = std::string(language);

  if (is_per_character_language(language)) {
    result.scheme = TokenScheme::PerCharacter;
    for (auto& cp : utf8_codepoints(text)) {
      if (!is_space_codepoint(cp)) result.tokens.push_back(std::move(cp));
    }
    return result;
  }

  result.scheme = TokenScheme::WordLike;
  std::string word;
  auto flush = [&] {
    if (!word.empty()) {
      result.tokens.push_back(word);
      word.clear();
    }
  };
  std::size_t i = 0;
  while (i < text.size()) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (c < 0x80) {
      if (is_ascii_space(c)) {
        flush();
      } else if (std::ispunct(c)) {
        flush();
        result.tokens.emplace_back(1, static_cast<char>(c));
      } else {
        word.push_back(static_cast<char>(std::tolower(c)));
      }
      ++i;
    } else {
      // multi-byte codepoints are word material (accented letters etc.)
      std::size_t start = i;
      unsigned char lead = c;
      std::size_t len = lead >= 0xF0 ? 4 : lead >= 0xE0 ? 3 : lead >= 0xC0 ? 2 : 1;
      if (start + len > text.size()) len = 1;
      std::string cp(text.substr(start, len));
      if (is_space_codepoint(cp)) {
        flush();
      } else {
        word += cp;
      }
      i += len;
    }
  }
  flush();
  return result;
}

}  // namespace timt
