#pragma once

// Exact counts of separating families.
//
//   tau(n, k)   separating families of k arbitrary bipartitions of an n-set
//   sigma(n, k) separating families of k proper bipartitions of an n-set
//
// Each count has two closed forms. The "v1" forms are alternating sums over
// Stirling numbers of the first kind scaled by (n-1)!/k!; the "v2" forms sum
// over i < n with no division. Everything is evaluated in signed big
// integers; the v1 division is performed last and its remainder is reported
// so callers can assert exactness.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sepfam/core.hpp"
#include "sepfam/error.hpp"

namespace sepfam {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

inline BigInt factorial(std::uint64_t k) {
  BigInt r = 1;
  for (std::uint64_t i = 2; i <= k; ++i) r *= i;
  return r;
}

inline BigInt pow2(std::uint64_t e) {
  BigInt r = 1;
  r <<= static_cast<unsigned>(e);
  return r;
}

// C(a, b) for a possibly huge top; 0 when b > a or a < 0.
inline BigInt binomial(const BigInt& a, std::uint64_t b) {
  if (a < 0 || a < b) return 0;
  BigInt r = 1;
  for (std::uint64_t i = 0; i < b; ++i) {
    r *= a - i;
    r /= i + 1;
  }
  return r;
}

// 2^(n-1), the number of bipartitions of an n-set, compared without overflow.
inline bool exceeds_bipartitions(unsigned n, std::uint64_t k) {
  return n - 1 < 64 && k > (std::uint64_t{1} << (n - 1));
}

inline bool reaches_bipartitions(unsigned n, std::uint64_t k) {
  return n - 1 < 64 && k >= (std::uint64_t{1} << (n - 1));
}

enum class StirlingKind { second, first_unsigned };

inline const char* to_string(StirlingKind kind) {
  return kind == StirlingKind::second ? "second" : "first";
}

inline constexpr unsigned kMaxStirlingOrder = 512;

// Triangular table of Stirling numbers for orders 0..max_k, filled from the
// standard recurrences
//   S(k, i) = i S(k-1, i) + S(k-1, i-1)
//   c(k, i) = (k-1) c(k-1, i) + c(k-1, i-1)
class StirlingTable {
 public:
  StirlingTable(StirlingKind kind, unsigned max_k) : kind_(kind), max_k_(max_k) {
    if (max_k > kMaxStirlingOrder) {
      throw CapacityError("Stirling tables are limited to order " +
                          std::to_string(kMaxStirlingOrder));
    }
    entries_.resize(index(max_k, max_k) + 1);
    entries_[0] = 1;
    for (unsigned k = 1; k <= max_k; ++k) {
      const unsigned weight_base = kind == StirlingKind::first_unsigned ? k - 1 : 0;
      for (unsigned i = 1; i <= k; ++i) {
        BigInt v = entries_[index(k - 1, i - 1)];
        if (i <= k - 1) {
          const unsigned w = kind == StirlingKind::second ? i : weight_base;
          v += entries_[index(k - 1, i)] * w;
        }
        entries_[index(k, i)] = std::move(v);
      }
    }
  }

  StirlingKind kind() const { return kind_; }
  unsigned max_k() const { return max_k_; }

  // Zero outside the triangle 0 <= i <= k.
  BigInt at(std::uint64_t k, std::uint64_t i) const {
    if (k > max_k_) {
      throw CapacityError(std::string("Stirling table (") + to_string(kind_) +
                          " kind) covers orders up to " + std::to_string(max_k_) +
                          ", requested " + std::to_string(k));
    }
    if (i > k) return 0;
    return entries_[index(static_cast<unsigned>(k), static_cast<unsigned>(i))];
  }

  // Copy with one entry replaced. Used to check that verification notices a
  // corrupted table.
  StirlingTable with_entry(unsigned k, unsigned i, BigInt value) const {
    if (k > max_k_ || i > k) throw RangeError("entry outside the Stirling table");
    StirlingTable out = *this;
    out.entries_[index(k, i)] = std::move(value);
    return out;
  }

 private:
  static std::size_t index(unsigned k, unsigned i) {
    return static_cast<std::size_t>(k) * (k + 1) / 2 + i;
  }

  StirlingKind kind_;
  unsigned max_k_;
  std::vector<BigInt> entries_;
};

struct Count {
  BigInt value;
  // Zero because the request lies outside the formula's range and no family
  // of the requested kind can exist there.
  bool forced = false;
  // Remainder of the final division in the v1 forms; nonzero means the
  // closed form did not divide exactly.
  BigInt remainder = 0;

  bool exact() const { return remainder == 0; }
};

struct IdentityCheck {
  bool holds;
  BigInt lhs;
  BigInt rhs;
};

inline void require_ground(unsigned n) {
  if (n < 2) {
    throw DomainError("counting formulas need n >= 2, got n = " + std::to_string(n));
  }
}

class Formulas {
 public:
  explicit Formulas(unsigned max_order)
      : first_(StirlingKind::first_unsigned, max_order),
        second_(StirlingKind::second, max_order) {}

  Formulas(StirlingTable first, StirlingTable second)
      : first_(std::move(first)), second_(std::move(second)) {
    if (first_.kind() != StirlingKind::first_unsigned || second_.kind() != StirlingKind::second) {
      throw StructuralError("Formulas expects (first-kind, second-kind) tables");
    }
  }

  const StirlingTable& first_kind() const { return first_; }
  const StirlingTable& second_kind() const { return second_; }

  BigInt stirling2(std::uint64_t k, std::uint64_t i) const { return second_.at(k, i); }
  BigInt stirling1_unsigned(std::uint64_t k, std::uint64_t i) const { return first_.at(k, i); }

  // Sequences of length k over i symbols using every symbol.
  BigInt surjective_sequences(std::uint64_t k, std::uint64_t i) const {
    return factorial(i) * stirling2(k, i);
  }

  // (n-1)!/k! * sum_{i=1..k} (-1)^(k-i) c(k,i) C(2^i - 1, n-1),
  // for 1 <= k <= 2^(n-1).
  Count tau_v1(unsigned n, std::uint64_t k) const {
    require_ground(n);
    if (k == 0 || exceeds_bipartitions(n, k)) return forced_zero();
    return scaled_alternating_sum(n, k, [&](std::uint64_t i) {
      return stirling1_unsigned(k, i);
    });
  }

  // sum_{i=1..n-1} (-1)^(n-1-i) c(n,i+1) C(2^i, k), for 2 <= k < 2^(n-1).
  Count tau_v2(unsigned n, std::uint64_t k) const {
    require_ground(n);
    if (k == 0 || exceeds_bipartitions(n, k)) return forced_zero();
    if (k < 2 || reaches_bipartitions(n, k)) {
      throw DomainError("tau_v2 needs 2 <= k < 2^(n-1); got n = " + std::to_string(n) +
                        ", k = " + std::to_string(k));
    }
    return Count{column_sum(n, k, 0)};
  }

  // (n-1)!/k! * sum_{i=1..k} (-1)^(k-i) c(k+1,i+1) C(2^i - 1, n-1),
  // for 1 <= k < 2^(n-1).
  Count sigma_v1(unsigned n, std::uint64_t k) const {
    require_ground(n);
    if (k == 0 || reaches_bipartitions(n, k)) return forced_zero();
    return scaled_alternating_sum(n, k, [&](std::uint64_t i) {
      return stirling1_unsigned(k + 1, i + 1);
    });
  }

  // sum_{i=1..n-1} (-1)^(n-1-i) c(n,i+1) C(2^i - 1, k), for 1 <= k < 2^(n-1).
  Count sigma_v2(unsigned n, std::uint64_t k) const {
    require_ground(n);
    if (k == 0 || reaches_bipartitions(n, k)) return forced_zero();
    return Count{column_sum(n, k, 1)};
  }

  // sum_{i=1..k} i! S(k,i) tau(n,i) against (2^k-1)(2^k-2)...(2^k-n+1).
  IdentityCheck check_sum_identity(unsigned n, std::uint64_t k) const {
    require_ground(n);
    if (k < 1 || exceeds_bipartitions(n, k)) {
      throw DomainError("sum identity needs 1 <= k <= 2^(n-1)");
    }
    BigInt lhs = 0;
    for (std::uint64_t i = 1; i <= k; ++i) {
      lhs += surjective_sequences(k, i) * tau_v1(n, i).value;
    }
    const BigInt top = pow2(k);
    BigInt rhs = 1;
    for (unsigned j = 1; j < n; ++j) rhs *= top - j;
    return {lhs == rhs, std::move(lhs), std::move(rhs)};
  }

  // sigma(n,k) + sigma(n,k-1) = tau(n,k), with sigma(n, 2^(n-1)) = 0.
  IdentityCheck check_sigma_tau(unsigned n, std::uint64_t k) const {
    require_ground(n);
    if (k < 2 || exceeds_bipartitions(n, k)) {
      throw DomainError("sigma/tau recurrence needs 2 <= k <= 2^(n-1)");
    }
    BigInt lhs = sigma_v1(n, k).value + sigma_v1(n, k - 1).value;
    BigInt rhs = tau_v1(n, k).value;
    return {lhs == rhs, std::move(lhs), std::move(rhs)};
  }

  // sigma(n,k-1) (k-1)! = sigma(k,n-1) (n-1)!.
  IdentityCheck check_transpose_identity(unsigned n, std::uint64_t k) const {
    require_ground(n);
    if (k < 2 || exceeds_bipartitions(n, k)) {
      throw DomainError("transpose identity needs 2 <= k <= 2^(n-1)");
    }
    if (k > kMaxStirlingOrder) throw CapacityError("k too large for the transpose identity");
    BigInt lhs = sigma_v1(n, k - 1).value * factorial(k - 1);
    BigInt rhs = sigma_v1(static_cast<unsigned>(k), n - 1).value * factorial(n - 1);
    return {lhs == rhs, std::move(lhs), std::move(rhs)};
  }

  // c(k+1,i+1) = sum_{j=i..k} (k!/j!) c(j,i), cleared of denominators.
  IdentityCheck check_stirling1_identity(std::uint64_t k, std::uint64_t i) const {
    BigInt lhs = stirling1_unsigned(k + 1, i + 1);
    BigInt rhs = 0;
    BigInt ratio = 1;  // k!/j! for j running down from k
    for (std::uint64_t j = k + 1; j-- > i;) {
      rhs += ratio * stirling1_unsigned(j, i);
      ratio *= j;
    }
    return {lhs == rhs, std::move(lhs), std::move(rhs)};
  }

 private:
  static Count forced_zero() { return Count{0, true}; }

  template <class Coefficient>
  Count scaled_alternating_sum(unsigned n, std::uint64_t k, Coefficient coeff) const {
    BigInt sum = 0;
    // C(2^i - 1, n-1) vanishes while 2^i <= n-1.
    for (std::uint64_t i = std::max<std::uint64_t>(1, ceil_log2(n)); i <= k; ++i) {
      BigInt term = coeff(i) * binomial(pow2(i) - 1, n - 1);
      if ((k - i) % 2 == 0) {
        sum += term;
      } else {
        sum -= term;
      }
    }
    const BigInt numerator = sum * factorial(n - 1);
    const BigInt divisor = factorial(k);
    Count out;
    boost::multiprecision::divide_qr(numerator, divisor, out.value, out.remainder);
    return out;
  }

  BigInt column_sum(unsigned n, std::uint64_t k, unsigned offset) const {
    BigInt sum = 0;
    for (unsigned i = 1; i + 1 <= n; ++i) {
      BigInt term = stirling1_unsigned(n, i + 1) * binomial(pow2(i) - offset, k);
      if ((n - 1 - i) % 2 == 0) {
        sum += term;
      } else {
        sum -= term;
      }
    }
    return sum;
  }

  StirlingTable first_;
  StirlingTable second_;
};

// Table order large enough for every formula evaluated at (n, k).
inline unsigned required_order(std::uint64_t n, std::uint64_t k) {
  const std::uint64_t need = std::max(n, k) + 1;
  if (need > kMaxStirlingOrder) {
    throw CapacityError("arguments need Stirling numbers beyond order " +
                        std::to_string(kMaxStirlingOrder));
  }
  return static_cast<unsigned>(need);
}

inline BigInt stirling2(unsigned k, unsigned i) { return Formulas(k).stirling2(k, i); }
inline BigInt stirling1_unsigned(unsigned k, unsigned i) {
  return Formulas(k).stirling1_unsigned(k, i);
}
inline BigInt surjective_sequences(unsigned k, unsigned i) {
  return Formulas(k).surjective_sequences(k, i);
}

inline Count tau_v1(unsigned n, std::uint64_t k) {
  require_ground(n);
  if (exceeds_bipartitions(n, k)) return Count{0, true};
  return Formulas(required_order(n, k)).tau_v1(n, k);
}
inline Count tau_v2(unsigned n, std::uint64_t k) {
  require_ground(n);
  if (exceeds_bipartitions(n, k)) return Count{0, true};
  return Formulas(required_order(n, 0)).tau_v2(n, k);
}
inline Count sigma_v1(unsigned n, std::uint64_t k) {
  require_ground(n);
  if (reaches_bipartitions(n, k)) return Count{0, true};
  return Formulas(required_order(n, k)).sigma_v1(n, k);
}
inline Count sigma_v2(unsigned n, std::uint64_t k) {
  require_ground(n);
  if (reaches_bipartitions(n, k)) return Count{0, true};
  return Formulas(required_order(n, 0)).sigma_v2(n, k);
}

inline IdentityCheck check_sum_identity(unsigned n, std::uint64_t k) {
  return Formulas(required_order(n, k)).check_sum_identity(n, k);
}
inline IdentityCheck check_sigma_tau(unsigned n, std::uint64_t k) {
  return Formulas(required_order(n, k)).check_sigma_tau(n, k);
}
inline IdentityCheck check_transpose_identity(unsigned n, std::uint64_t k) {
  return Formulas(required_order(n, k)).check_transpose_identity(n, k);
}
inline IdentityCheck check_stirling1_identity(std::uint64_t k, std::uint64_t i) {
  return Formulas(required_order(k, 0)).check_stirling1_identity(k, i);
}

// ceil(log2 n): the fewest bipartitions that can separate an n-set.
inline unsigned min_separating_size(unsigned n) {
  if (n < 1) throw DomainError("n must be positive");
  return ceil_log2(n);
}

// (n-1)!/m! * C(2^m - 1, n-1) with m = ceil(log2 n).
inline BigInt count_min_size_families(unsigned n) {
  require_ground(n);
  const unsigned m = ceil_log2(n);
  return factorial(n - 1) / factorial(m) * binomial(pow2(m) - 1, n - 1);
}

// Smallest ground set admitting a separating family of k arbitrary
// bipartitions, and the number of such families on it.
inline unsigned min_ground_size_arbitrary(std::uint64_t k) {
  if (k < 1) throw DomainError("k must be at least 1");
  return ceil_log2(k) + 1;
}

inline BigInt count_min_ground_arbitrary(std::uint64_t k) {
  if (k < 2) throw DomainError("the minimum-ground count needs k >= 2");
  return binomial(pow2(ceil_log2(k)), k);
}

// Same for k proper bipartitions.
inline unsigned min_ground_size_proper(std::uint64_t k) {
  if (k < 1) throw DomainError("k must be at least 1");
  return ceil_log2(k + 1) + 1;
}

inline BigInt count_min_ground_proper(std::uint64_t k) {
  if (k < 1) throw DomainError("k must be at least 1");
  return binomial(pow2(ceil_log2(k + 1)) - 1, k);
}

}  // namespace sepfam
