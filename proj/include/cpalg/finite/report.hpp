#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace cpalg::finite {

/// One line of the machine-readable report: a JSON object with keys
/// "group", "q", "metric", "value" and optionally "expected" and "status".
/// Rational values are exact "p/q" strings, never floats.
std::string metric_json_line(std::string_view group, std::uint64_t q, std::string_view metric,
                             std::string_view value,
                             std::optional<std::string_view> expected = std::nullopt,
                             std::optional<std::string_view> status = std::nullopt);

}  // namespace cpalg::finite
