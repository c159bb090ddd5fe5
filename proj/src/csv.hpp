// Copyright the wsnet authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace wsnet {

/// Minimal CSV reader: comma-separated, double-quoted fields with ""
/// escapes, LF or CRLF line ends. Returns one row per non-empty line.
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

std::string csv_quote(std::string_view field);

}  // namespace wsnet
