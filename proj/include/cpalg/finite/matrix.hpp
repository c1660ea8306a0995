#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

namespace cpalg::finite {

inline constexpr int kMaxDim = 4;

using Entry = std::uint32_t;

/// Row-major matrix with fixed stride kMaxDim; entries beyond the active
/// n x n block stay zero so equality and hashing cover the whole array.
struct Mat {
  std::array<Entry, kMaxDim * kMaxDim> e{};

  Entry at(int i, int j) const { return e[static_cast<size_t>(i) * kMaxDim + j]; }
  void set(int i, int j, Entry v) { e[static_cast<size_t>(i) * kMaxDim + j] = v; }

  friend bool operator==(const Mat&, const Mat&) = default;
};

struct MatHash {
  std::size_t operator()(const Mat& m) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (Entry v : m.e) {
      h ^= v;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

Mat mat_identity(int n);
Mat mat_mul(const Mat& a, const Mat& b, int n, Entry p);
Entry mat_det(const Mat& m, int n, Entry p);
/// Gauss-Jordan inverse mod p; throws std::invalid_argument when singular.
Mat mat_inverse(const Mat& m, int n, Entry p);

/// True when a*b == b*a without materializing the products.
bool mat_commute(const Mat& a, const Mat& b, int n, Entry p);

}  // namespace cpalg::finite
