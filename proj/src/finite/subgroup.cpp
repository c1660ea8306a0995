#include "cpalg/finite/subgroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "cpalg/finite/group_table.hpp"
#include "cpalg/finite/matrix.hpp"
#include "cpalg/finite/prime_field.hpp"

namespace cpalg::finite {

namespace {

// A subgroup viewed through local indices 0..|S|-1 with its own Cayley
// table. Local index 0 is the identity.
struct LocalGroup {
  std::vector<std::uint32_t> global;         // local -> global, ascending
  std::vector<std::uint16_t> cayley;         // local mult table, size m*m
  std::vector<std::uint64_t> element_order;  // per local element

  std::size_t size() const { return global.size(); }
  std::uint16_t mul(std::uint16_t a, std::uint16_t b) const { return cayley[a * size() + b]; }
};

std::uint16_t local_of(const std::vector<std::uint32_t>& members, std::uint32_t g) {
  const auto it = std::lower_bound(members.begin(), members.end(), g);
  if (it == members.end() || *it != g)
    throw std::logic_error("subgroup is not closed under multiplication");
  return static_cast<std::uint16_t>(it - members.begin());
}

LocalGroup build_local(const FiniteGroupTable& t, const std::vector<std::uint32_t>& members) {
  LocalGroup lg;
  lg.global = members;
  const std::size_t m = members.size();
  lg.cayley.resize(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      lg.cayley[i * m + j] = local_of(members, t.mul(members[i], members[j]));
  lg.element_order.resize(m);
  for (std::size_t i = 0; i < m; ++i) lg.element_order[i] = t.element_order(members[i]);
  return lg;
}

// Greedy generating sequence: scan elements, keep the ones that enlarge
// the generated subgroup.
std::vector<std::uint16_t> local_generators(const LocalGroup& g) {
  const std::size_t m = g.size();
  std::vector<bool> in_closure(m, false);
  std::vector<std::uint16_t> closure = {0};
  in_closure[0] = true;
  std::vector<std::uint16_t> gens;
  auto close_over = [&]() {
    for (std::size_t head = 0; head < closure.size(); ++head) {
      for (std::uint16_t gen : gens) {
        const std::uint16_t w = g.mul(closure[head], gen);
        if (!in_closure[w]) {
          in_closure[w] = true;
          closure.push_back(w);
        }
      }
    }
  };
  for (std::uint16_t e = 1; e < m; ++e) {
    if (in_closure[e]) continue;
    gens.push_back(e);
    close_over();
    if (closure.size() == m) break;
  }
  return gens;
}

// Attempts to extend gen -> image assignments to a full isomorphism by
// closing the partial map under multiplication.
bool extend_to_isomorphism(const LocalGroup& a, const LocalGroup& b,
                           const std::vector<std::uint16_t>& gens,
                           const std::vector<std::uint16_t>& images) {
  const std::size_t m = a.size();
  std::vector<int> map(m, -1);
  std::vector<bool> used(m, false);
  std::vector<std::uint16_t> known;
  auto assign = [&](std::uint16_t x, std::uint16_t y) {
    if (map[x] >= 0) return map[x] == y;
    if (used[y]) return false;
    map[x] = y;
    used[y] = true;
    known.push_back(x);
    return true;
  };
  if (!assign(0, 0)) return false;
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!assign(gens[i], images[i])) return false;
  // Close: products of known elements must map consistently.
  for (std::size_t head = 0; head < known.size(); ++head) {
    const std::uint16_t x = known[head];
    for (std::size_t j = 0; j < known.size(); ++j) {
      const std::uint16_t y = known[j];
      if (!assign(a.mul(x, y), b.mul(map[x], map[y]))) return false;
      if (!assign(a.mul(y, x), b.mul(map[y], map[x]))) return false;
    }
  }
  return known.size() == m;  // generators reach everything, injectively
}

bool backtrack_images(const LocalGroup& a, const LocalGroup& b,
                      const std::vector<std::uint16_t>& gens, std::vector<std::uint16_t>& images,
                      std::size_t depth) {
  if (depth == gens.size()) return extend_to_isomorphism(a, b, gens, images);
  const std::uint64_t want = a.element_order[gens[depth]];
  for (std::uint16_t cand = 0; cand < b.size(); ++cand) {
    if (b.element_order[cand] != want) continue;  // images preserve order
    images[depth] = cand;
    if (backtrack_images(a, b, gens, images, depth + 1)) return true;
  }
  return false;
}

}  // namespace

SubgroupFingerprint subgroup_fingerprint(const FiniteGroupTable& t,
                                         const std::vector<std::uint32_t>& members) {
  SubgroupFingerprint fp;
  fp.order = members.size();

  // Generators first: abelian and center checks then cost |S| * #gens.
  std::vector<std::uint32_t> gens;
  {
    std::vector<std::uint32_t> closure = {t.identity()};
    std::vector<bool> seen(t.order(), false);
    seen[t.identity()] = true;
    auto close_over = [&]() {
      for (std::size_t head = 0; head < closure.size(); ++head)
        for (std::uint32_t gen : gens) {
          const std::uint32_t w = t.mul(closure[head], gen);
          if (!seen[w]) {
            seen[w] = true;
            closure.push_back(w);
          }
        }
    };
    for (std::uint32_t e : members) {
      if (seen[e]) continue;
      gens.push_back(e);
      close_over();
      if (closure.size() == members.size()) break;
    }
  }

  fp.abelian = true;
  for (std::size_t i = 0; i < gens.size() && fp.abelian; ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (t.mul(gens[i], gens[j]) != t.mul(gens[j], gens[i])) {
        fp.abelian = false;
        break;
      }

  for (std::uint32_t e : members) {
    bool central = true;
    for (std::uint32_t g : gens)
      if (t.mul(e, g) != t.mul(g, e)) {
        central = false;
        break;
      }
    if (central) ++fp.center_order;
  }

  std::map<std::uint64_t, std::uint64_t> histogram;
  std::uint64_t exponent = 1;
  for (std::uint32_t e : members) {
    const std::uint64_t ord = t.element_order(e);
    ++histogram[ord];
    exponent = std::lcm(exponent, ord);
  }
  fp.exponent = exponent;
  fp.order_histogram.assign(histogram.begin(), histogram.end());

  // Conjugation orbits inside the subgroup, driven by its generators.
  {
    std::vector<bool> visited_global(t.order(), false);
    std::uint64_t count = 0;
    for (std::uint32_t e : members) {
      if (visited_global[e]) continue;
      ++count;
      std::vector<std::uint32_t> orbit = {e};
      visited_global[e] = true;
      for (std::size_t head = 0; head < orbit.size(); ++head)
        for (std::uint32_t g : gens) {
          const std::uint32_t w = t.conjugate(orbit[head], g);
          if (!visited_global[w]) {
            visited_global[w] = true;
            orbit.push_back(w);
          }
        }
    }
    fp.class_count = count;
  }
  return fp;
}

bool subgroups_isomorphic(const FiniteGroupTable& t, const std::vector<std::uint32_t>& a,
                          const std::vector<std::uint32_t>& b) {
  if (a.size() != b.size()) return false;
  if (a.size() > kIsomorphismSearchCap)
    throw std::invalid_argument("subgroup exceeds the isomorphism search cap");
  if (a == b) return true;
  const LocalGroup la = build_local(t, a);
  const LocalGroup lb = build_local(t, b);
  {
    // Order multisets must match before searching.
    auto ha = la.element_order;
    auto hb = lb.element_order;
    std::sort(ha.begin(), ha.end());
    std::sort(hb.begin(), hb.end());
    if (ha != hb) return false;
  }
  const std::vector<std::uint16_t> gens = local_generators(la);
  std::vector<std::uint16_t> images(gens.size(), 0);
  return backtrack_images(la, lb, gens, images, 0);
}

}  // namespace cpalg::finite
