#include <algorithm>
#include <map>
#include <numeric>
#include <thread>

#include "cpalg/finite/group_table.hpp"
#include "cpalg/finite/subgroup.hpp"

namespace cpalg::finite {

namespace {

ClassPartition blocks_from_groups(ClassPartition::Kind kind,
                                  std::vector<std::vector<std::uint32_t>> blocks,
                                  std::size_t element_count) {
  return ClassPartition::from_blocks(kind, std::move(blocks), element_count);
}

// Union-find over small index sets.
struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) { parent[find(a)] = find(b); }
};

}  // namespace

ClassPartition ClassPartition::from_blocks(Kind kind,
                                           std::vector<std::vector<std::uint32_t>> blocks,
                                           std::size_t element_count) {
  ClassPartition p;
  p.kind = kind;
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  p.blocks = std::move(blocks);
  p.block_of.assign(element_count, 0);
  for (std::uint32_t bi = 0; bi < p.blocks.size(); ++bi)
    for (std::uint32_t e : p.blocks[bi]) p.block_of[e] = bi;
  return p;
}

bool ClassPartition::refines(const ClassPartition& coarser) const {
  if (block_of.size() != coarser.block_of.size()) return false;
  for (const auto& block : blocks) {
    const std::uint32_t target = coarser.block_of[block.front()];
    for (std::uint32_t e : block)
      if (coarser.block_of[e] != target) return false;
  }
  return true;
}

const ClassPartition& FiniteGroupTable::conjugacy_classes() const {
  std::call_once(caches_->conjugacy_once, [this] {
    const std::uint32_t n = order();
    std::vector<bool> visited(n, false);
    std::vector<std::vector<std::uint32_t>> blocks;
    // Orbits of the conjugation action, closed over the generator set.
    for (std::uint32_t e = 0; e < n; ++e) {
      if (visited[e]) continue;
      std::vector<std::uint32_t> orbit = {e};
      visited[e] = true;
      for (std::size_t head = 0; head < orbit.size(); ++head) {
        for (std::uint32_t g : generator_indices_) {
          const std::uint32_t w = conjugate(orbit[head], g);
          if (!visited[w]) {
            visited[w] = true;
            orbit.push_back(w);
          }
        }
      }
      if (n % orbit.size() != 0)
        throw std::logic_error(name() + ": conjugacy class size does not divide the group order");
      blocks.push_back(std::move(orbit));
    }
    caches_->conjugacy = std::make_unique<const ClassPartition>(
        blocks_from_groups(ClassPartition::Kind::conjugacy, std::move(blocks), n));
  });
  return *caches_->conjugacy;
}

namespace {

// Full commuting scan. Row g collects every h with gh = hg, so the row is
// exactly the centralizer of g. Rows are independent, which makes the scan
// embarrassingly parallel and its result independent of thread count.
CentralizerData scan_centralizers(const FiniteGroupTable& t) {
  const std::uint32_t n = t.order();
  const int deg = t.degree();
  const Entry p = t.modulus();
  std::vector<std::vector<std::uint32_t>> rows(n);

  const unsigned hw = std::thread::hardware_concurrency();
  const unsigned workers = n < 4096 ? 1 : std::min(hw == 0 ? 1u : hw, 8u);
  auto work = [&](unsigned tid) {
    for (std::uint32_t g = tid; g < n; g += workers) {
      const Mat& gm = t.element(g);
      auto& row = rows[g];
      for (std::uint32_t h = 0; h < n; ++h)
        if (mat_commute(gm, t.element(h), deg, p)) row.push_back(h);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned tid = 0; tid < workers; ++tid) pool.emplace_back(work, tid);
    for (auto& th : pool) th.join();
  }

  CentralizerData data;
  data.size.resize(n);
  data.set_id.resize(n);
  data.min_size = n;
  std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
  for (std::uint32_t g = 0; g < n; ++g) {
    data.size[g] = static_cast<std::uint32_t>(rows[g].size());
    data.pair_count += rows[g].size();
    data.min_size = std::min(data.min_size, data.size[g]);
    auto [it, inserted] = ids.emplace(std::move(rows[g]), static_cast<std::uint32_t>(data.sets.size()));
    if (inserted) data.sets.push_back(it->first);
    data.set_id[g] = it->second;
  }
  return data;
}

// Two elements are z-equivalent when their centralizers are conjugate
// inside the group. Conjugating Z(g) by x gives Z(x g x^-1), so the
// conjugates of Z(g) are exactly the centralizers of the class of g, and
// two conjugacy classes merge precisely when they share a centralizer set.
ClassPartition build_z(const FiniteGroupTable& t, const ClassPartition& conj,
                       const CentralizerData& cent) {
  const auto nblocks = static_cast<std::uint32_t>(conj.block_count());
  UnionFind uf(nblocks);
  std::vector<std::int64_t> owner(cent.sets.size(), -1);
  for (std::uint32_t bi = 0; bi < nblocks; ++bi) {
    for (std::uint32_t e : conj.blocks[bi]) {
      const std::uint32_t sid = cent.set_id[e];
      if (owner[sid] < 0)
        owner[sid] = bi;
      else
        uf.unite(bi, static_cast<std::uint32_t>(owner[sid]));
    }
  }
  std::map<std::uint32_t, std::vector<std::uint32_t>> merged;
  for (std::uint32_t bi = 0; bi < nblocks; ++bi) {
    auto& dst = merged[uf.find(bi)];
    dst.insert(dst.end(), conj.blocks[bi].begin(), conj.blocks[bi].end());
  }
  std::vector<std::vector<std::uint32_t>> blocks;
  blocks.reserve(merged.size());
  for (auto& [root, members] : merged) blocks.push_back(std::move(members));
  return blocks_from_groups(ClassPartition::Kind::z, std::move(blocks), t.order());
}

// iz merges z-blocks whose centralizer subgroups are isomorphic. The
// fingerprint separates most pairs; ties inside the search cap are settled
// by the exhaustive test, larger ties merge optimistically and mark the
// partition unresolved.
ClassPartition build_iz(const FiniteGroupTable& t, const ClassPartition& z,
                        const CentralizerData& cent) {
  const auto nblocks = static_cast<std::uint32_t>(z.block_count());
  std::vector<const std::vector<std::uint32_t>*> rep_set(nblocks);
  std::vector<SubgroupFingerprint> prints(nblocks);
  std::map<SubgroupFingerprint, std::vector<std::uint32_t>> buckets;
  for (std::uint32_t bi = 0; bi < nblocks; ++bi) {
    rep_set[bi] = &cent.sets[cent.set_id[z.blocks[bi].front()]];
    prints[bi] = subgroup_fingerprint(t, *rep_set[bi]);
    buckets[prints[bi]].push_back(bi);
  }
  UnionFind uf(nblocks);
  bool resolved = true;
  for (const auto& [print, bucket] : buckets) {
    if (bucket.size() < 2) continue;
    if (print.order > kIsomorphismSearchCap) {
      // Tiebreaker skipped for size: merge on the fingerprint alone.
      for (std::size_t i = 1; i < bucket.size(); ++i) uf.unite(bucket[0], bucket[i]);
      resolved = false;
      continue;
    }
    // Compare each block against one representative per established
    // subcluster; isomorphism is transitive, so this suffices.
    std::vector<std::uint32_t> cluster_reps;
    for (std::uint32_t bi : bucket) {
      bool placed = false;
      for (std::uint32_t rep : cluster_reps) {
        if (subgroups_isomorphic(t, *rep_set[rep], *rep_set[bi])) {
          uf.unite(rep, bi);
          placed = true;
          break;
        }
      }
      if (!placed) cluster_reps.push_back(bi);
    }
  }
  std::map<std::uint32_t, std::vector<std::uint32_t>> merged;
  for (std::uint32_t bi = 0; bi < nblocks; ++bi) {
    auto& dst = merged[uf.find(bi)];
    dst.insert(dst.end(), z.blocks[bi].begin(), z.blocks[bi].end());
  }
  std::vector<std::vector<std::uint32_t>> blocks;
  blocks.reserve(merged.size());
  for (auto& [root, members] : merged) blocks.push_back(std::move(members));
  ClassPartition out = blocks_from_groups(ClassPartition::Kind::iz, std::move(blocks), t.order());
  out.resolved = resolved;
  return out;
}

// dz buckets elements by centralizer order, the exact finite stand-in for
// centralizer dimension.
ClassPartition build_dz(const FiniteGroupTable& t, const CentralizerData& cent) {
  std::map<std::uint32_t, std::vector<std::uint32_t>> by_size;
  for (std::uint32_t e = 0; e < t.order(); ++e) by_size[cent.size[e]].push_back(e);
  std::vector<std::vector<std::uint32_t>> blocks;
  blocks.reserve(by_size.size());
  for (auto& [size, members] : by_size) blocks.push_back(std::move(members));
  return blocks_from_groups(ClassPartition::Kind::dz, std::move(blocks), t.order());
}

}  // namespace

const CentralizerAnalysis& FiniteGroupTable::analysis() const {
  std::call_once(caches_->analysis_once, [this] {
    auto out = std::make_unique<CentralizerAnalysis>();
    out->centralizers = scan_centralizers(*this);
    const ClassPartition& conj = conjugacy_classes();

    // Erdos-Turan identity: the commuting-pair count must equal
    // (number of conjugacy classes) * |G|; the two sides come from
    // independent computations (full scan vs orbit closure).
    const std::uint64_t n = order();
    const std::uint64_t k = conj.block_count();
    if (out->centralizers.pair_count != k * n)
      throw std::logic_error(name() + ": commuting pair count " +
                             std::to_string(out->centralizers.pair_count) + " != k*|G| = " +
                             std::to_string(k * n));
    out->probability = Rational(static_cast<std::int64_t>(out->centralizers.pair_count),
                                static_cast<std::int64_t>(n * n));
    if (out->probability != Rational(static_cast<std::int64_t>(k), static_cast<std::int64_t>(n)))
      throw std::logic_error(name() + ": probability routes disagree");

    out->z = build_z(*this, conj, out->centralizers);
    out->iz = build_iz(*this, out->z, out->centralizers);
    out->dz = build_dz(*this, out->centralizers);

    for (std::uint32_t e = 0; e < order(); ++e)
      if (out->centralizers.size[e] == out->centralizers.min_size) out->regular.push_back(e);

    caches_->analysis = std::move(out);
  });
  return *caches_->analysis;
}

const ClassPartition& z_classes(const FiniteGroupTable& t) { return t.analysis().z; }
const ClassPartition& iz_classes(const FiniteGroupTable& t) { return t.analysis().iz; }
const ClassPartition& dz_classes(const FiniteGroupTable& t) { return t.analysis().dz; }
std::vector<std::uint32_t> regular_elements(const FiniteGroupTable& t) {
  return t.analysis().regular;
}

}  // namespace cpalg::finite
