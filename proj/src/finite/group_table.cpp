#include "cpalg/finite/group_table.hpp"

#include <deque>

#include "cpalg/finite/prime_field.hpp"

namespace cpalg::finite {

const char* family_name(Family f) {
  switch (f) {
    case Family::GL: return "GL";
    case Family::SL: return "SL";
    case Family::U: return "U";
    case Family::B: return "B";
  }
  return "?";
}

Family family_from_name(const std::string& name) {
  if (name == "GL") return Family::GL;
  if (name == "SL") return Family::SL;
  if (name == "U") return Family::U;
  if (name == "B") return Family::B;
  throw std::invalid_argument("unknown family '" + name + "' (expected GL, SL, U, or B)");
}

std::uint64_t FiniteGroupTable::closed_form_order(Family family, int n, std::uint64_t q) {
  using u128 = unsigned __int128;
  constexpr std::uint64_t kSat = UINT64_MAX;
  auto sat_mul = [](std::uint64_t a, std::uint64_t b) -> std::uint64_t {
    const u128 prod = static_cast<u128>(a) * b;
    return prod > kSat ? kSat : static_cast<std::uint64_t>(prod);
  };
  auto q_pow = [&](int e) {
    std::uint64_t acc = 1;
    for (int i = 0; i < e; ++i) acc = sat_mul(acc, q);
    return acc;
  };
  const std::uint64_t unipotent = q_pow(n * (n - 1) / 2);
  switch (family) {
    case Family::U:
      return unipotent;
    case Family::B: {
      std::uint64_t torus = 1;
      for (int i = 0; i < n; ++i) torus = sat_mul(torus, q - 1);
      return sat_mul(torus, unipotent);
    }
    case Family::GL:
    case Family::SL: {
      std::uint64_t total = 1;
      const std::uint64_t qn = q_pow(n);
      for (int i = 0; i < n; ++i) {
        const std::uint64_t term = qn == kSat ? kSat : qn - q_pow(i);
        total = sat_mul(total, term);
      }
      return family == Family::GL ? total : total / (q - 1);
    }
  }
  throw std::logic_error("unknown family");
}

namespace {

// Elementary transvections generate SL and U over a prime field; adding
// diagonal generators with a primitive root extends to GL and B.
std::vector<Mat> generator_matrices(Family family, int n, Entry q) {
  std::vector<Mat> gens;
  const Mat id = mat_identity(n);
  auto transvection = [&](int i, int j) {
    Mat m = id;
    m.set(i, j, 1);
    return m;
  };
  switch (family) {
    case Family::GL:
    case Family::SL:
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j) gens.push_back(transvection(i, j));
      if (family == Family::GL && q > 2) {
        Mat d = id;
        d.set(0, 0, primitive_root(q));
        gens.push_back(d);
      }
      break;
    case Family::U:
    case Family::B:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) gens.push_back(transvection(i, j));
      if (family == Family::B && q > 2) {
        const Entry g = primitive_root(q);
        for (int i = 0; i < n; ++i) {
          Mat d = id;
          d.set(i, i, g);
          gens.push_back(d);
        }
      }
      break;
  }
  return gens;
}

}  // namespace

FiniteGroupTable FiniteGroupTable::enumerate(Family family, int n, Entry q,
                                             std::uint64_t max_order) {
  if (n < 2 || n > kMaxDim) throw std::invalid_argument("matrix degree must be 2, 3, or 4");
  if (!is_prime(q)) throw std::invalid_argument(std::to_string(q) + " is not prime");
  const std::uint64_t expected = closed_form_order(family, n, q);
  const std::string name =
      std::string(family_name(family)) + "(" + std::to_string(n) + "," + std::to_string(q) + ")";
  if (expected > max_order) throw OrderCapError(name, expected, max_order);

  FiniteGroupTable t;
  t.family_ = family;
  t.n_ = n;
  t.q_ = q;
  t.caches_ = std::make_unique<Caches>();

  const std::vector<Mat> gens = generator_matrices(family, n, q);
  t.elements_.reserve(expected);
  t.index_.reserve(expected * 2);

  t.elements_.push_back(mat_identity(n));
  t.index_.emplace(t.elements_[0], 0);
  // Breadth-first closure under right multiplication by the generators.
  for (std::uint32_t head = 0; head < t.elements_.size(); ++head) {
    const Mat current = t.elements_[head];  // copy: the vector may reallocate
    for (const Mat& g : gens) {
      Mat next = mat_mul(current, g, n, q);
      auto [it, inserted] = t.index_.emplace(next, static_cast<std::uint32_t>(t.elements_.size()));
      if (inserted) t.elements_.push_back(next);
    }
  }
  if (t.elements_.size() != expected)
    throw std::logic_error(name + ": enumeration found " + std::to_string(t.elements_.size()) +
                           " elements, closed form gives " + std::to_string(expected));

  t.inverse_.resize(t.elements_.size());
  for (std::uint32_t i = 0; i < t.elements_.size(); ++i)
    t.inverse_[i] = t.index_.at(mat_inverse(t.elements_[i], n, q));

  t.generator_indices_.reserve(gens.size());
  for (const Mat& g : gens) t.generator_indices_.push_back(t.index_.at(g));
  return t;
}

std::string FiniteGroupTable::name() const {
  return std::string(family_name(family_)) + "(" + std::to_string(n_) + "," + std::to_string(q_) +
         ")";
}

std::uint32_t FiniteGroupTable::index_of(const Mat& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) throw std::out_of_range("matrix is not a group element");
  return it->second;
}

std::uint32_t FiniteGroupTable::mul(std::uint32_t a, std::uint32_t b) const {
  return index_.at(mat_mul(elements_[a], elements_[b], n_, q_));
}

std::uint32_t FiniteGroupTable::conjugate(std::uint32_t g, std::uint32_t x) const {
  return mul(mul(x, g), inverse_[x]);
}

std::uint64_t FiniteGroupTable::element_order(std::uint32_t g) const {
  // ord(g) divides |G|: strip prime factors while the power stays trivial.
  auto power = [this](std::uint32_t base, std::uint64_t e) {
    std::uint32_t acc = identity();
    std::uint32_t b = base;
    while (e > 0) {
      if (e & 1) acc = mul(acc, b);
      b = mul(b, b);
      e >>= 1;
    }
    return acc;
  };
  std::uint64_t ord = order();
  for (std::uint64_t f : distinct_prime_factors(ord)) {
    while (ord % f == 0 && power(g, ord / f) == identity()) ord /= f;
  }
  return ord;
}

std::vector<std::uint32_t> FiniteGroupTable::centralizer(std::uint32_t g) const {
  std::vector<std::uint32_t> out;
  const Mat& gm = elements_[g];
  for (std::uint32_t h = 0; h < order(); ++h)
    if (mat_commute(gm, elements_[h], n_, q_)) out.push_back(h);
  return out;
}

}  // namespace cpalg::finite
