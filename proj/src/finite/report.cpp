#include "cpalg/finite/report.hpp"

#include "json.hpp"

namespace cpalg::finite {

std::string metric_json_line(std::string_view group, std::uint64_t q, std::string_view metric,
                             std::string_view value, std::optional<std::string_view> expected,
                             std::optional<std::string_view> status) {
  nlohmann::ordered_json obj;
  obj["group"] = std::string(group);
  obj["q"] = q;
  obj["metric"] = std::string(metric);
  obj["value"] = std::string(value);
  if (expected) obj["expected"] = std::string(*expected);
  if (status) obj["status"] = std::string(*status);
  return obj.dump();
}

}  // namespace cpalg::finite
