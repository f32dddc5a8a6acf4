#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace zipfkit::unicode {

// Decodes one code point starting at text[pos] and advances pos. Rejects
// overlong forms, surrogates and values above U+10FFFF by throwing
// IngestError with the offset of the offending sequence.
char32_t decode(std::string_view text, std::size_t& pos);

void append_utf8(std::string& out, char32_t cp);

bool is_white_space(char32_t cp);
bool is_punctuation(char32_t cp);
char32_t fold_case(char32_t cp);

// True if the UTF-8 string contains any White_Space code point. Assumes
// valid encoding.
bool contains_white_space(std::string_view text);

}  // namespace zipfkit::unicode
