#include "cpalg/finite/growth.hpp"

#include <algorithm>

#include "cpalg/finite/prime_field.hpp"
#include "cpalg/rational.hpp"

namespace cpalg::finite {

const char* counter_name(Counter c) { return c == Counter::order ? "order" : "class_count"; }

namespace {

std::uint64_t sample(Family family, int n, Entry q, Counter counter, std::uint64_t max_order) {
  const FiniteGroupTable t = FiniteGroupTable::enumerate(family, n, q, max_order);
  return counter == Counter::order ? t.order() : t.class_count();
}

// Newton divided differences; exact. The degree of the interpolant is the
// index of the last nonzero coefficient.
struct NewtonFit {
  std::vector<Rational> xs;
  std::vector<Rational> coeffs;

  int degree() const {
    int d = 0;
    for (int i = 0; i < static_cast<int>(coeffs.size()); ++i)
      if (!(coeffs[i] == Rational(0))) d = i;
    return d;
  }

  Rational eval(const Rational& x) const {
    Rational acc(0);
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = coeffs[i] + (x - xs[i]) * acc;
    return acc;
  }
};

NewtonFit fit_points(const std::vector<Entry>& xs, const std::vector<std::uint64_t>& ys) {
  NewtonFit fit;
  fit.xs.reserve(xs.size());
  for (Entry x : xs) fit.xs.emplace_back(static_cast<std::int64_t>(x));
  std::vector<Rational> diffs;
  diffs.reserve(ys.size());
  for (std::uint64_t y : ys) diffs.emplace_back(static_cast<std::int64_t>(y));
  const std::size_t count = diffs.size();
  fit.coeffs.push_back(diffs[0]);
  for (std::size_t level = 1; level < count; ++level) {
    for (std::size_t i = 0; i + level < count; ++i)
      diffs[i] = (diffs[i + 1] - diffs[i]) / (fit.xs[i + level] - fit.xs[i]);
    diffs.pop_back();
    fit.coeffs.push_back(diffs[0]);
  }
  return fit;
}

struct Attempt {
  bool validated = false;
  int degree = 0;
};

Attempt try_fit(Family family, int n, Counter counter, const std::vector<Entry>& primes,
                std::uint64_t max_order) {
  std::vector<std::uint64_t> values;
  values.reserve(primes.size());
  for (Entry q : primes) values.push_back(sample(family, n, q, counter, max_order));
  const NewtonFit fit = fit_points(primes, values);

  const Entry holdout = static_cast<Entry>(next_prime_above(primes.back()));
  const std::uint64_t actual = sample(family, n, holdout, counter, max_order);
  const Rational predicted = fit.eval(Rational(static_cast<std::int64_t>(holdout)));
  Attempt a;
  a.validated = predicted == Rational(static_cast<std::int64_t>(actual));
  a.degree = fit.degree();
  return a;
}

}  // namespace

int growth_degree(Family family, int n, Counter counter, std::vector<Entry> primes,
                  std::uint64_t max_order) {
  for (Entry q : primes)
    if (!is_prime(q)) throw std::invalid_argument(std::to_string(q) + " is not prime");
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  if (primes.size() < 2)
    throw GrowthError(GrowthError::Kind::insufficient_samples,
                      "need at least two sample primes plus the hold-out");

  const Attempt first = try_fit(family, n, counter, primes, max_order);
  if (first.validated) return first.degree;

  // Counters such as SL2 class counts take different polynomial forms on
  // even and odd q; drop q = 2 and retry before giving up.
  std::vector<Entry> odd;
  for (Entry q : primes)
    if (q != 2) odd.push_back(q);
  if (odd.size() != primes.size() && odd.size() >= 2) {
    const Attempt second = try_fit(family, n, counter, odd, max_order);
    if (second.validated) return second.degree;
  }
  throw GrowthError(GrowthError::Kind::not_polynomial,
                    std::string(family_name(family)) + "(" + std::to_string(n) + ") " +
                        counter_name(counter) + " is not polynomial on the sampled primes");
}

}  // namespace cpalg::finite
