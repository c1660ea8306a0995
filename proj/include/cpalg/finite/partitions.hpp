#pragma once

#include <cstdint>
#include <vector>

namespace cpalg::finite {

/// A partition of a group table's element indices. Blocks are sorted by
/// their smallest member, and members inside a block are ascending, so two
/// partitions of the same table compare deterministically.
struct ClassPartition {
  enum class Kind { conjugacy, z, iz, dz };

  Kind kind = Kind::conjugacy;
  std::vector<std::vector<std::uint32_t>> blocks;
  std::vector<std::uint32_t> block_of;  // element index -> block index
  /// iz only: false when a fingerprint tie was merged without running the
  /// exhaustive isomorphism check (subgroups larger than the search cap).
  bool resolved = true;

  std::size_t block_count() const { return blocks.size(); }

  /// True when every block of *this lies inside a single block of
  /// `coarser` (i.e. *this is a refinement).
  bool refines(const ClassPartition& coarser) const;

  static ClassPartition from_blocks(Kind kind, std::vector<std::vector<std::uint32_t>> blocks,
                                    std::size_t element_count);
};

/// Per-element centralizer data from the full commuting scan.
struct CentralizerData {
  std::vector<std::uint32_t> size;    // |Z(g)| per element
  std::vector<std::uint32_t> set_id;  // id of the centralizer as a set
  std::vector<std::vector<std::uint32_t>> sets;  // deduplicated sorted member lists
  std::uint64_t pair_count = 0;                  // sum of |Z(g)| = number of commuting pairs
  std::uint32_t min_size = 0;
};

}  // namespace cpalg::finite
