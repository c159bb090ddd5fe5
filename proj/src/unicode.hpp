// Copyright the wsnet authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>

namespace wsnet {

/// Decodes UTF-8 into Unicode scalar values. Throws Error(Parse) on
/// malformed sequences (overlong encodings, surrogates, truncation).
std::u32string decode_utf8(std::string_view text);

std::string encode_utf8(std::u32string_view codepoints);

/// True for codepoints with the Unicode White_Space property.
bool is_unicode_space(char32_t cp);

struct NormalizeOptions {
    bool fold_case = false;  // ASCII-only fold; see normalize_name()
};

/// Canonical form of a parameter name: validates UTF-8, strips surrounding
/// whitespace and optionally folds ASCII case. Idempotent. Composition
/// normalization is a pass-through: names in the supported corpora are
/// ASCII identifiers, for which composed and decomposed forms coincide.
std::string normalize_name(std::string_view raw, const NormalizeOptions& options = {});

}  // namespace wsnet
