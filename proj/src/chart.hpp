// Copyright the wsnet authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>

namespace wsnet {

/// Renders one property column of a sweep CSV as an SVG line chart:
/// threshold on x over [0,1], one series per metric (levenshtein green
/// triangles, jaro red circles, jaro-winkler blue crosses). Empty cells
/// break the series line. Throws Error(Usage) for an unknown property,
/// listing the valid ones.
std::string render_chart(std::string_view sweep_csv, const std::string& property);

void render_chart_file(const std::string& csv_path, const std::string& property,
                       const std::string& svg_path);

}  // namespace wsnet
