#include "cpalg/simple_type.hpp"

#include <algorithm>
#include <stdexcept>

namespace cpalg {

namespace {

constexpr int kMaxClassicalRank = 1'000'000;

const char* family_letter(SimpleFamily f) {
  switch (f) {
    case SimpleFamily::A: return "A";
    case SimpleFamily::B: return "B";
    case SimpleFamily::C: return "C";
    case SimpleFamily::D: return "D";
    case SimpleFamily::E6: return "E";
    case SimpleFamily::E7: return "E";
    case SimpleFamily::E8: return "E";
    case SimpleFamily::F4: return "F";
    case SimpleFamily::G2: return "G";
  }
  return "?";
}

}  // namespace

int min_rank(SimpleFamily family) {
  switch (family) {
    case SimpleFamily::A: return 1;
    case SimpleFamily::B: return 2;
    case SimpleFamily::C: return 3;
    case SimpleFamily::D: return 4;
    default: return fixed_rank(family);
  }
}

int fixed_rank(SimpleFamily family) {
  switch (family) {
    case SimpleFamily::E6: return 6;
    case SimpleFamily::E7: return 7;
    case SimpleFamily::E8: return 8;
    case SimpleFamily::F4: return 4;
    case SimpleFamily::G2: return 2;
    default: return 0;
  }
}

SimpleType SimpleType::make(SimpleFamily family, int rank) {
  const int fixed = fixed_rank(family);
  if (fixed != 0) {
    if (rank != fixed)
      throw std::invalid_argument("exceptional type has fixed rank " + std::to_string(fixed));
    return SimpleType{family, rank};
  }
  if (rank < min_rank(family))
    throw std::invalid_argument(std::string(family_letter(family)) + std::to_string(rank) +
                                " is below the canonical rank range (A>=1, B>=2, C>=3, D>=4)");
  if (rank > kMaxClassicalRank) throw std::invalid_argument("rank too large");
  return SimpleType{family, rank};
}

long long SimpleType::positive_roots() const {
  const long long r = rank;
  switch (family) {
    case SimpleFamily::A: return r * (r + 1) / 2;
    case SimpleFamily::B: return r * r;
    case SimpleFamily::C: return r * r;
    case SimpleFamily::D: return r * (r - 1);
    case SimpleFamily::E6: return 36;
    case SimpleFamily::E7: return 63;
    case SimpleFamily::E8: return 120;
    case SimpleFamily::F4: return 24;
    case SimpleFamily::G2: return 6;
  }
  throw std::logic_error("unknown family");
}

long long SimpleType::dimension() const { return rank + 2 * positive_roots(); }

std::string SimpleType::name() const { return family_letter(family) + std::to_string(rank); }

std::string SimpleType::classical_name() const {
  switch (family) {
    case SimpleFamily::A: return "SL(" + std::to_string(rank + 1) + ")";
    case SimpleFamily::B: return "SO(" + std::to_string(2 * rank + 1) + ")";
    case SimpleFamily::C: return "Sp(" + std::to_string(2 * rank) + ")";
    case SimpleFamily::D: return "SO(" + std::to_string(2 * rank) + ")";
    default: return name();
  }
}

std::vector<SimpleType> simple_types_up_to_rank(int max_rank) {
  std::vector<SimpleType> out;
  const SimpleFamily families[] = {SimpleFamily::A,  SimpleFamily::B,  SimpleFamily::C,
                                   SimpleFamily::D,  SimpleFamily::E6, SimpleFamily::E7,
                                   SimpleFamily::E8, SimpleFamily::F4, SimpleFamily::G2};
  for (SimpleFamily f : families) {
    const int fixed = fixed_rank(f);
    if (fixed != 0) {
      if (fixed <= max_rank) out.push_back(SimpleType::make(f, fixed));
      continue;
    }
    for (int r = min_rank(f); r <= max_rank; ++r) out.push_back(SimpleType::make(f, r));
  }
  std::sort(out.begin(), out.end(), [](const SimpleType& a, const SimpleType& b) {
    if (a.dimension() != b.dimension()) return a.dimension() < b.dimension();
    if (a.family != b.family) return a.family < b.family;
    return a.rank < b.rank;
  });
  return out;
}

}  // namespace cpalg
