// Copyright the surzhyk-tools authors. SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace surzhyk::uni {

/// Malformed UTF-8. byte_offset points at the first byte of the offending
/// sequence; callers that know the source file wrap this into DecodeError.
class Utf8Error : public std::runtime_error {
public:
    explicit Utf8Error(std::size_t byte_offset)
        : std::runtime_error("invalid UTF-8 at byte offset " + std::to_string(byte_offset)),
          byte_offset_(byte_offset) {}

    std::size_t byte_offset() const { return byte_offset_; }

private:
    std::size_t byte_offset_;
};

/// Strict decoder: rejects overlong forms, surrogates, values past U+10FFFF
/// and truncated sequences.
std::u32string decode_utf8(std::string_view bytes);

void append_utf8(std::string& out, char32_t cp);
std::string encode_utf8(std::u32string_view cps);

/// Scalar-value count of a valid UTF-8 string ("под" -> 3).
std::size_t count_codepoints(std::string_view utf8);

/// Simple (1:1, locale-independent) lowercase mapping.
char32_t to_lower(char32_t cp);

/// Canonical composition (NFC).
std::u32string compose_nfc(std::u32string_view cps);

bool is_word_char(char32_t cp); // letters, combining marks, numbers
bool is_white_space(char32_t cp);
bool is_apostrophe(char32_t cp); // ' U+0027, ʼ U+02BC, ’ U+2019
bool is_hyphen(char32_t cp);     // - U+002D, ‐ U+2010, ‑ U+2011

} // namespace surzhyk::uni
