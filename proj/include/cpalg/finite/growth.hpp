#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cpalg/finite/group_table.hpp"

namespace cpalg::finite {

enum class Counter { order, class_count };

const char* counter_name(Counter c);

class GrowthError : public std::runtime_error {
 public:
  enum class Kind { insufficient_samples, not_polynomial };
  GrowthError(Kind kind, const std::string& message) : std::runtime_error(message), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Degree of the polynomial in q behind a counting function, measured on
/// concrete tables. The counter is sampled at every listed prime, the
/// exact interpolating polynomial is computed in rational arithmetic, and
/// the fit is validated on a hold-out sample at the next prime above the
/// list. On a hold-out mismatch the fit is retried on the odd primes alone
/// (some class counts depend on the parity of q); a second mismatch raises
/// GrowthError{not_polynomial}. Tables beyond max_order raise
/// OrderCapError, including the hold-out table.
int growth_degree(Family family, int n, Counter counter, std::vector<Entry> primes,
                  std::uint64_t max_order = FiniteGroupTable::kDefaultMaxOrder);

}  // namespace cpalg::finite
