#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace cpalg::finite {

class FiniteGroupTable;

/// Isomorphism invariants of a subgroup, cheap to compare. Equal
/// fingerprints do not prove isomorphism; distinct ones refute it.
struct SubgroupFingerprint {
  std::uint64_t order = 0;
  bool abelian = false;
  std::uint64_t center_order = 0;
  std::uint64_t exponent = 0;
  std::uint64_t class_count = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> order_histogram;  // (element order, count)

  friend bool operator==(const SubgroupFingerprint&, const SubgroupFingerprint&) = default;
  friend auto operator<=>(const SubgroupFingerprint&, const SubgroupFingerprint&) = default;
};

/// `members` must be the ascending index list of a subgroup of `t`.
SubgroupFingerprint subgroup_fingerprint(const FiniteGroupTable& t,
                                         const std::vector<std::uint32_t>& members);

/// Largest subgroup order for which the exhaustive isomorphism search runs.
inline constexpr std::size_t kIsomorphismSearchCap = 128;

/// Exhaustive abstract-isomorphism test via generator images and closure.
/// Both subgroups must have the same order, at most kIsomorphismSearchCap.
bool subgroups_isomorphic(const FiniteGroupTable& t, const std::vector<std::uint32_t>& a,
                          const std::vector<std::uint32_t>& b);

}  // namespace cpalg::finite
