// Copyright the surzhyk-tools authors. SPDX-License-Identifier: Apache-2.0
#include "surzhyk/unicode.hpp"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utypes.h>

namespace surzhyk::uni {

std::u32string decode_utf8(std::string_view bytes) {
    std::u32string out;
    out.reserve(bytes.size());
    std::size_t i = 0;
    const auto n = bytes.size();
    while (i < n) {
        const auto b0 = static_cast<unsigned char>(bytes[i]);
        if (b0 < 0x80) {
            out.push_back(b0);
            ++i;
            continue;
        }
        int len;
        char32_t cp;
        char32_t min;
        if ((b0 & 0xE0) == 0xC0) {
            len = 2; cp = b0 & 0x1FU; min = 0x80;
        } else if ((b0 & 0xF0) == 0xE0) {
            len = 3; cp = b0 & 0x0FU; min = 0x800;
        } else if ((b0 & 0xF8) == 0xF0) {
            len = 4; cp = b0 & 0x07U; min = 0x10000;
        } else {
            throw Utf8Error(i); // stray continuation byte or invalid lead
        }
        if (i + len > n) throw Utf8Error(i);
        for (int k = 1; k < len; ++k) {
            const auto bk = static_cast<unsigned char>(bytes[i + k]);
            if ((bk & 0xC0) != 0x80) throw Utf8Error(i);
            cp = (cp << 6) | (bk & 0x3FU);
        }
        if (cp < min) throw Utf8Error(i);                  // overlong
        if (cp >= 0xD800 && cp <= 0xDFFF) throw Utf8Error(i);
        if (cp > 0x10FFFF) throw Utf8Error(i);
        out.push_back(cp);
        i += len;
    }
    return out;
}

void append_utf8(std::string& out, char32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

std::string encode_utf8(std::u32string_view cps) {
    std::string out;
    out.reserve(cps.size());
    for (char32_t cp : cps) append_utf8(out, cp);
    return out;
}

std::size_t count_codepoints(std::string_view utf8) {
    std::size_t count = 0;
    for (char c : utf8) {
        if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) ++count;
    }
    return count;
}

char32_t to_lower(char32_t cp) {
    return static_cast<char32_t>(u_tolower(static_cast<UChar32>(cp)));
}

std::u32string compose_nfc(std::u32string_view cps) {
    if (cps.empty()) return {};
    UErrorCode status = U_ZERO_ERROR;
    const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
    if (U_FAILURE(status)) throw std::runtime_error("ICU NFC instance unavailable");

    icu::UnicodeString input = icu::UnicodeString::fromUTF32(
        reinterpret_cast<const UChar32*>(cps.data()), static_cast<int32_t>(cps.size()));
    icu::UnicodeString normalized = nfc->normalize(input, status);
    if (U_FAILURE(status)) throw std::runtime_error("ICU NFC normalization failed");

    std::u32string out(static_cast<std::size_t>(normalized.countChar32()), U'\0');
    normalized.toUTF32(reinterpret_cast<UChar32*>(out.data()),
                       static_cast<int32_t>(out.size()), status);
    if (U_FAILURE(status)) throw std::runtime_error("ICU UTF-32 conversion failed");
    return out;
}

bool is_word_char(char32_t cp) {
    const auto mask = U_GET_GC_MASK(static_cast<UChar32>(cp));
    return (mask & (U_GC_L_MASK | U_GC_M_MASK | U_GC_N_MASK)) != 0;
}

bool is_white_space(char32_t cp) {
    return u_isUWhiteSpace(static_cast<UChar32>(cp)) != 0;
}

bool is_apostrophe(char32_t cp) {
    return cp == U'\'' || cp == U'ʼ' || cp == U'’';
}

bool is_hyphen(char32_t cp) {
    return cp == U'-' || cp == U'‐' || cp == U'‑';
}

} // namespace surzhyk::uni
