// Copyright the wsnet authors
// SPDX-License-Identifier: Apache-2.0
#include "unicode.hpp"

#include <cstdint>

#include "error.hpp"

namespace wsnet {

namespace {

[[noreturn]] void bad_utf8(size_t offset) {
    throw Error(ErrorCode::Parse,
                "invalid UTF-8 sequence at byte offset " + std::to_string(offset));
}

}  // namespace

std::u32string decode_utf8(std::string_view text) {
    std::u32string out;
    out.reserve(text.size());
    size_t i = 0;
    const size_t n = text.size();
    while (i < n) {
        const auto b0 = static_cast<uint8_t>(text[i]);
        uint32_t cp = 0;
        size_t len = 0;
        if (b0 < 0x80) {
            cp = b0;
            len = 1;
        } else if ((b0 & 0xE0) == 0xC0) {
            cp = b0 & 0x1F;
            len = 2;
        } else if ((b0 & 0xF0) == 0xE0) {
            cp = b0 & 0x0F;
            len = 3;
        } else if ((b0 & 0xF8) == 0xF0) {
            cp = b0 & 0x07;
            len = 4;
        } else {
            bad_utf8(i);
        }
        if (i + len > n) bad_utf8(i);
        for (size_t k = 1; k < len; ++k) {
            const auto bk = static_cast<uint8_t>(text[i + k]);
            if ((bk & 0xC0) != 0x80) bad_utf8(i);
            cp = (cp << 6) | (bk & 0x3F);
        }
        // Reject overlong forms, surrogates and out-of-range values.
        static constexpr uint32_t kMinByLen[5] = {0, 0, 0x80, 0x800, 0x10000};
        if (len > 1 && cp < kMinByLen[len]) bad_utf8(i);
        if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) bad_utf8(i);
        out.push_back(static_cast<char32_t>(cp));
        i += len;
    }
    return out;
}

std::string encode_utf8(std::u32string_view codepoints) {
    std::string out;
    out.reserve(codepoints.size());
    for (char32_t c : codepoints) {
        const auto cp = static_cast<uint32_t>(c);
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
    return out;
}

bool is_unicode_space(char32_t cp) {
    switch (cp) {
        case U'\t': case U'\n': case 0x0B: case 0x0C: case U'\r': case U' ':
        case 0x85: case 0xA0: case 0x1680:
        case 0x2028: case 0x2029: case 0x202F: case 0x205F: case 0x3000:
            return true;
        default:
            return cp >= 0x2000 && cp <= 0x200A;
    }
}

std::string normalize_name(std::string_view raw, const NormalizeOptions& options) {
    std::u32string cps = decode_utf8(raw);
    size_t begin = 0;
    size_t end = cps.size();
    while (begin < end && is_unicode_space(cps[begin])) ++begin;
    while (end > begin && is_unicode_space(cps[end - 1])) --end;
    std::u32string trimmed = cps.substr(begin, end - begin);
    if (options.fold_case) {
        for (char32_t& c : trimmed) {
            if (c >= U'A' && c <= U'Z') c += (U'a' - U'A');
        }
    }
    return encode_utf8(trimmed);
}

}  // namespace wsnet
