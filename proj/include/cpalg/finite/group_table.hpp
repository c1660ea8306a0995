#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "cpalg/finite/matrix.hpp"
#include "cpalg/finite/partitions.hpp"
#include "cpalg/rational.hpp"

namespace cpalg::finite {

enum class Family { GL, SL, U, B };

const char* family_name(Family f);
Family family_from_name(const std::string& name);

/// Raised when a requested table would exceed the element cap.
class OrderCapError : public std::runtime_error {
 public:
  OrderCapError(std::string group, std::uint64_t order, std::uint64_t cap)
      : std::runtime_error(group + " has order " + std::to_string(order) +
                           ", above the cap " + std::to_string(cap)),
        group_(std::move(group)),
        order_(order),
        cap_(cap) {}
  const std::string& group() const { return group_; }
  std::uint64_t order() const { return order_; }
  std::uint64_t cap() const { return cap_; }

 private:
  std::string group_;
  std::uint64_t order_;
  std::uint64_t cap_;
};

/// Centralizer-derived views of a table, produced by one quadratic scan:
/// the z / iz / dz partitions, the regular elements, and the exact
/// commuting probability checked along two independent routes.
struct CentralizerAnalysis {
  CentralizerData centralizers;
  ClassPartition z;
  ClassPartition iz;
  ClassPartition dz;
  std::vector<std::uint32_t> regular;  // minimal |Z(g)| elements
  Rational probability;                // pair_count / |G|^2 == k / |G|
};

/// A fully materialized finite matrix group over a prime field.
/// Immutable after enumeration; the lazily built analyses are cached
/// behind once-flags, so sharing a table across threads is safe.
class FiniteGroupTable {
 public:
  static constexpr std::uint64_t kDefaultMaxOrder = 2'000'000;

  /// |GL(n,q)| = prod_{i<n} (q^n - q^i), |SL| = |GL|/(q-1),
  /// |U(n,q)| = q^{n(n-1)/2}, |B(n,q)| = (q-1)^n q^{n(n-1)/2}.
  /// Saturates at UINT64_MAX instead of overflowing.
  static std::uint64_t closed_form_order(Family family, int n, std::uint64_t q);

  /// Materializes the group by closing the generator set under
  /// multiplication. Requires n in {2,3,4} and prime q; throws
  /// OrderCapError when the closed-form order exceeds max_order.
  static FiniteGroupTable enumerate(Family family, int n, Entry q,
                                    std::uint64_t max_order = kDefaultMaxOrder);

  Family family() const { return family_; }
  int degree() const { return n_; }
  Entry modulus() const { return q_; }
  std::uint32_t order() const { return static_cast<std::uint32_t>(elements_.size()); }
  std::string name() const;  // "GL(2,3)"

  const Mat& element(std::uint32_t i) const { return elements_[i]; }
  std::uint32_t index_of(const Mat& m) const;
  std::uint32_t identity() const { return 0; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inverse(std::uint32_t a) const { return inverse_[a]; }
  /// x g x^{-1}
  std::uint32_t conjugate(std::uint32_t g, std::uint32_t x) const;
  const std::vector<std::uint32_t>& generators() const { return generator_indices_; }

  /// Order of a single element (repeated squaring against the factored
  /// group order).
  std::uint64_t element_order(std::uint32_t g) const;

  /// Fresh scan {h : hg = gh}; ascending indices.
  std::vector<std::uint32_t> centralizer(std::uint32_t g) const;

  /// Conjugation orbits (cheap; cached). Blocks verified to divide |G|.
  const ClassPartition& conjugacy_classes() const;

  /// The quadratic-scan bundle (cached): z/iz/dz partitions, regular set,
  /// exact probability.
  const CentralizerAnalysis& analysis() const;

  std::uint32_t class_count() const { return static_cast<std::uint32_t>(conjugacy_classes().block_count()); }

  /// Number of ordered commuting pairs; equals class_count * |G|.
  std::uint64_t commuting_pair_count() const { return analysis().centralizers.pair_count; }

  /// Exact commuting probability, computed as pair_count / |G|^2 and
  /// independently as class_count / |G|; the two must agree.
  Rational commuting_probability() const { return analysis().probability; }

 private:
  FiniteGroupTable() = default;

  // Lazy results live behind a stable heap slot so the table itself stays
  // movable.
  struct Caches {
    std::once_flag conjugacy_once;
    std::unique_ptr<const ClassPartition> conjugacy;
    std::once_flag analysis_once;
    std::unique_ptr<const CentralizerAnalysis> analysis;
  };

  Family family_ = Family::GL;
  int n_ = 0;
  Entry q_ = 0;
  std::vector<Mat> elements_;
  std::unordered_map<Mat, std::uint32_t, MatHash> index_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::uint32_t> generator_indices_;
  mutable std::unique_ptr<Caches> caches_;
};

/// Spec-level convenience wrappers.
inline const ClassPartition& conjugacy_classes(const FiniteGroupTable& t) {
  return t.conjugacy_classes();
}
const ClassPartition& z_classes(const FiniteGroupTable& t);
const ClassPartition& iz_classes(const FiniteGroupTable& t);
const ClassPartition& dz_classes(const FiniteGroupTable& t);
std::vector<std::uint32_t> regular_elements(const FiniteGroupTable& t);
inline std::vector<std::uint32_t> centralizer(const FiniteGroupTable& t, std::uint32_t g) {
  return t.centralizer(g);
}
inline Rational commuting_probability_finite(const FiniteGroupTable& t) {
  return t.commuting_probability();
}

}  // namespace cpalg::finite
