#include "cpalg/finite/matrix.hpp"

#include <stdexcept>

#include "cpalg/finite/prime_field.hpp"

namespace cpalg::finite {

Mat mat_identity(int n) {
  Mat m;
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Mat mat_mul(const Mat& a, const Mat& b, int n, Entry p) {
  Mat out;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::uint64_t acc = 0;
      for (int k = 0; k < n; ++k) acc += static_cast<std::uint64_t>(a.at(i, k)) * b.at(k, j);
      out.set(i, j, static_cast<Entry>(acc % p));
    }
  }
  return out;
}

bool mat_commute(const Mat& a, const Mat& b, int n, Entry p) {
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::uint64_t ab = 0;
      std::uint64_t ba = 0;
      for (int k = 0; k < n; ++k) {
        ab += static_cast<std::uint64_t>(a.at(i, k)) * b.at(k, j);
        ba += static_cast<std::uint64_t>(b.at(i, k)) * a.at(k, j);
      }
      if (ab % p != ba % p) return false;
    }
  }
  return true;
}

Entry mat_det(const Mat& m, int n, Entry p) {
  Mat w = m;
  std::uint64_t det = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int row = col; row < n; ++row) {
      if (w.at(row, col) % p != 0) {
        pivot = row;
        break;
      }
    }
    if (pivot < 0) return 0;
    if (pivot != col) {
      for (int j = 0; j < n; ++j) {
        Entry t = w.at(col, j);
        w.set(col, j, w.at(pivot, j));
        w.set(pivot, j, t);
      }
      det = det * (p - 1) % p;  // row swap flips the sign
    }
    const Entry lead = w.at(col, col);
    det = det * lead % p;
    const Entry inv = inv_mod(lead, p);
    for (int row = col + 1; row < n; ++row) {
      const Entry factor = static_cast<Entry>(static_cast<std::uint64_t>(w.at(row, col)) * inv % p);
      if (factor == 0) continue;
      for (int j = col; j < n; ++j) {
        const std::uint64_t sub = static_cast<std::uint64_t>(factor) * w.at(col, j) % p;
        w.set(row, j, static_cast<Entry>((w.at(row, j) + p - sub) % p));
      }
    }
  }
  return static_cast<Entry>(det);
}

Mat mat_inverse(const Mat& m, int n, Entry p) {
  Mat w = m;
  Mat inv = mat_identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int row = col; row < n; ++row) {
      if (w.at(row, col) % p != 0) {
        pivot = row;
        break;
      }
    }
    if (pivot < 0) throw std::invalid_argument("mat_inverse: singular matrix");
    if (pivot != col) {
      for (int j = 0; j < n; ++j) {
        Entry t = w.at(col, j);
        w.set(col, j, w.at(pivot, j));
        w.set(pivot, j, t);
        t = inv.at(col, j);
        inv.set(col, j, inv.at(pivot, j));
        inv.set(pivot, j, t);
      }
    }
    const Entry scale = inv_mod(w.at(col, col), p);
    for (int j = 0; j < n; ++j) {
      w.set(col, j, static_cast<Entry>(static_cast<std::uint64_t>(w.at(col, j)) * scale % p));
      inv.set(col, j, static_cast<Entry>(static_cast<std::uint64_t>(inv.at(col, j)) * scale % p));
    }
    for (int row = 0; row < n; ++row) {
      if (row == col) continue;
      const Entry factor = w.at(row, col);
      if (factor == 0) continue;
      for (int j = 0; j < n; ++j) {
        std::uint64_t sub = static_cast<std::uint64_t>(factor) * w.at(col, j) % p;
        w.set(row, j, static_cast<Entry>((w.at(row, j) + p - sub) % p));
        sub = static_cast<std::uint64_t>(factor) * inv.at(col, j) % p;
        inv.set(row, j, static_cast<Entry>((inv.at(row, j) + p - sub) % p));
      }
    }
  }
  return inv;
}

}  // namespace cpalg::finite
