#pragma once

// Brute-force ground truth on small ground sets.
//
// Families are enumerated as subsets of the bipartition pool. Each
// bipartition is reduced to the set of element pairs it cuts, as a bitmask
// over the C(n,2) pairs, so a family separates iff the OR of its pair masks
// is full. None of this goes through the closed forms in counting.hpp.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "sepfam/core.hpp"
#include "sepfam/counting.hpp"
#include "sepfam/tree.hpp"

namespace sepfam {

inline constexpr unsigned kMaxOracleGround = 5;

inline void check_oracle_ground(unsigned n) {
  if (n < 2 || n > kMaxOracleGround) {
    throw CapacityError("brute-force oracle supports 2 <= n <= " +
                        std::to_string(kMaxOracleGround) + ", got " + std::to_string(n));
  }
}

namespace detail {

using PairMask = std::uint32_t;

struct Pool {
  unsigned n;
  std::vector<Mask> coblocks;
  std::vector<PairMask> pair_masks;
  PairMask full;
};

inline Pool make_pool(unsigned n, bool proper_only) {
  Pool pool{n, {}, {}, 0};
  const unsigned pairs = n * (n - 1) / 2;
  pool.full = pairs == 32 ? ~PairMask{0} : (PairMask{1} << pairs) - 1;
  for (Mask m = proper_only ? 1 : 0; m < (Mask{1} << (n - 1)); ++m) {
    const Mask cob = m << 1;
    PairMask pm = 0;
    unsigned bit = 0;
    for (unsigned i = 0; i < n; ++i) {
      for (unsigned j = i + 1; j < n; ++j, ++bit) {
        const bool a = (cob >> i) & 1u;
        const bool b = (cob >> j) & 1u;
        if (a != b) pm |= PairMask{1} << bit;
      }
    }
    pool.coblocks.push_back(cob);
    pool.pair_masks.push_back(pm);
  }
  return pool;
}

inline PairMask cover(const Pool& pool, std::uint32_t subset) {
  PairMask acc = 0;
  for (std::uint32_t s = subset; s != 0; s &= s - 1) {
    acc |= pool.pair_masks[std::countr_zero(s)];
  }
  return acc;
}

inline bool minimal_cover(const Pool& pool, std::uint32_t subset) {
  if (cover(pool, subset) != pool.full) return false;
  for (std::uint32_t s = subset; s != 0; s &= s - 1) {
    if (cover(pool, subset & ~(s & -s)) == pool.full) return false;
  }
  return true;
}

// Calls fn on every k-subset of {0..size-1}, as a bitmask, in increasing
// numeric order (Gosper's hack).
template <class Fn>
void for_each_combination(unsigned size, unsigned k, Fn&& fn) {
  if (k > size) return;
  if (k == 0) {
    fn(std::uint32_t{0});
    return;
  }
  const std::uint64_t limit = std::uint64_t{1} << size;
  std::uint64_t s = (std::uint64_t{1} << k) - 1;
  while (s < limit) {
    fn(static_cast<std::uint32_t>(s));
    const std::uint64_t c = s & (~s + 1);
    const std::uint64_t r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
}

inline Family to_family(const Pool& pool, std::uint32_t subset) {
  std::vector<Mask> cobs;
  for (std::uint32_t s = subset; s != 0; s &= s - 1) {
    cobs.push_back(pool.coblocks[std::countr_zero(s)]);
  }
  return Family::from_coblocks(pool.n, cobs);
}

}  // namespace detail

// Number of k-subsets of the bipartition pool that separate {1..n}.
inline BigInt brute_count_separating(unsigned n, unsigned k, bool proper_only) {
  check_oracle_ground(n);
  const auto pool = detail::make_pool(n, proper_only);
  std::uint64_t count = 0;
  detail::for_each_combination(static_cast<unsigned>(pool.coblocks.size()), k,
                               [&](std::uint32_t s) {
                                 if (detail::cover(pool, s) == pool.full) ++count;
                               });
  return count;
}

// Separating k-subsets of the pool (optionally only the minimal ones), in
// canonical family order.
inline std::vector<Family> brute_separating_families(unsigned n, unsigned k, bool proper_only,
                                                     bool minimal_only) {
  check_oracle_ground(n);
  const auto pool = detail::make_pool(n, proper_only);
  std::vector<Family> out;
  detail::for_each_combination(
      static_cast<unsigned>(pool.coblocks.size()), k, [&](std::uint32_t s) {
        const bool keep = minimal_only ? detail::minimal_cover(pool, s)
                                       : detail::cover(pool, s) == pool.full;
        if (keep) out.push_back(detail::to_family(pool, s));
      });
  std::sort(out.begin(), out.end());
  return out;
}

// Every minimal separating family with n - 1 members, in canonical order.
inline std::vector<Family> brute_minimal_max_families(unsigned n) {
  check_oracle_ground(n);
  const auto pool = detail::make_pool(n, false);
  std::vector<Family> out;
  detail::for_each_combination(static_cast<unsigned>(pool.coblocks.size()), n - 1,
                               [&](std::uint32_t s) {
                                 if (detail::minimal_cover(pool, s)) {
                                   out.push_back(detail::to_family(pool, s));
                                 }
                               });
  std::sort(out.begin(), out.end());
  return out;
}

// Family size -> number of minimal separating families of that size.
inline std::map<unsigned, BigInt> brute_minimal_size_profile(unsigned n) {
  check_oracle_ground(n);
  const auto pool = detail::make_pool(n, false);
  const auto size = static_cast<unsigned>(pool.coblocks.size());
  std::map<unsigned, BigInt> profile;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << size); ++s) {
    const auto subset = static_cast<std::uint32_t>(s);
    if (detail::minimal_cover(pool, subset)) profile[std::popcount(subset)] += 1;
  }
  return profile;
}

inline constexpr unsigned kMaxBruteStirling = 9;

// Partitions of a k-set into i blocks, by walking restricted growth strings.
inline BigInt brute_stirling2(unsigned k, unsigned i) {
  if (k > kMaxBruteStirling) throw CapacityError("brute Stirling enumeration limited to k <= 9");
  if (k == 0) return i == 0 ? 1 : 0;
  std::vector<unsigned> a(k, 0), peak(k, 0);
  std::uint64_t count = 0;
  while (true) {
    if (peak[k - 1] + 1 == i) ++count;
    // advance to the next restricted growth string
    unsigned pos = k - 1;
    while (pos > 0 && a[pos] == peak[pos - 1] + 1) --pos;
    if (pos == 0) break;
    ++a[pos];
    peak[pos] = std::max(peak[pos - 1], a[pos]);
    for (unsigned q = pos + 1; q < k; ++q) {
      a[q] = 0;
      peak[q] = peak[q - 1];
    }
  }
  return count;
}

// Permutations of k elements with exactly i cycles.
inline BigInt brute_stirling1_unsigned(unsigned k, unsigned i) {
  if (k > kMaxBruteStirling) throw CapacityError("brute Stirling enumeration limited to k <= 9");
  std::vector<unsigned> perm(k);
  std::iota(perm.begin(), perm.end(), 0u);
  std::uint64_t count = 0;
  do {
    std::vector<bool> seen(k, false);
    unsigned cycles = 0;
    for (unsigned s = 0; s < k; ++s) {
      if (seen[s]) continue;
      ++cycles;
      for (unsigned x = s; !seen[x]; x = perm[x]) seen[x] = true;
    }
    if (cycles == i) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

// Length-k sequences over i symbols that use every symbol.
inline BigInt brute_surjective_sequences(unsigned k, unsigned i) {
  if (i == 0) return k == 0 ? 1 : 0;
  std::uint64_t total = 1;
  for (unsigned t = 0; t < k; ++t) total *= i;
  if (total > (std::uint64_t{1} << 24)) throw CapacityError("too many sequences to enumerate");
  std::uint64_t count = 0;
  for (std::uint64_t s = 0; s < total; ++s) {
    std::uint64_t x = s;
    std::uint64_t used = 0;
    for (unsigned t = 0; t < k; ++t) {
      used |= std::uint64_t{1} << (x % i);
      x /= i;
    }
    if (std::popcount(used) == static_cast<int>(i)) ++count;
  }
  return count;
}

struct CheckResult {
  std::string name;
  std::string params;
  bool passed;
  std::string expected;
  std::string actual;
};

struct ValidationReport {
  unsigned n_max = 0;
  unsigned k_max = 0;
  std::vector<std::string> warnings;
  std::vector<CheckResult> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
  }

  std::vector<const CheckResult*> failures() const {
    std::vector<const CheckResult*> out;
    for (const auto& c : checks) {
      if (!c.passed) out.push_back(&c);
    }
    return out;
  }
};

inline constexpr unsigned kMaxVerifyGround = 16;
inline constexpr unsigned kMaxVerifySize = 64;
inline constexpr unsigned kMaxVerifyTreeGround = 7;

inline unsigned verify_order(unsigned n_max, unsigned k_max) {
  return std::max(n_max, k_max) + 2;
}

// Runs every formula-vs-oracle, formula-vs-formula and identity check on the
// grid 2 <= n <= n_max, k <= k_max, using the Stirling tables in f. Oracle
// comparisons stop at n = 5. Failures are recorded, never thrown.
inline ValidationReport cross_validate(unsigned n_max, unsigned k_max, const Formulas& f) {
  ValidationReport report;
  if (n_max > kMaxVerifyGround) {
    report.warnings.push_back("n-max clamped from " + std::to_string(n_max) + " to " +
                              std::to_string(kMaxVerifyGround));
    n_max = kMaxVerifyGround;
  }
  if (k_max > kMaxVerifySize) {
    report.warnings.push_back("k-max clamped from " + std::to_string(k_max) + " to " +
                              std::to_string(kMaxVerifySize));
    k_max = kMaxVerifySize;
  }
  if (n_max > kMaxOracleGround) {
    report.warnings.push_back("brute-force comparisons limited to n <= " +
                              std::to_string(kMaxOracleGround));
  }
  report.n_max = n_max;
  report.k_max = k_max;

  auto record = [&](std::string name, std::string params, const BigInt& expected,
                    const BigInt& actual) {
    report.checks.push_back({std::move(name), std::move(params), expected == actual,
                             to_decimal(expected), to_decimal(actual)});
  };
  auto record_flag = [&](std::string name, std::string params, bool ok, std::string expected,
                         std::string actual) {
    report.checks.push_back(
        {std::move(name), std::move(params), ok, std::move(expected), std::move(actual)});
  };
  auto nk = [](std::uint64_t n, std::uint64_t k) {
    return "n=" + std::to_string(n) + ",k=" + std::to_string(k);
  };
  auto ki = [](std::uint64_t k, std::uint64_t i) {
    return "k=" + std::to_string(k) + ",i=" + std::to_string(i);
  };
  auto pool_size = [](unsigned n, bool proper) -> std::uint64_t {
    if (n - 1 >= 64) return ~std::uint64_t{0};
    return (std::uint64_t{1} << (n - 1)) - (proper ? 1 : 0);
  };
  auto check_count = [&](const char* tag, unsigned n, std::uint64_t k, const Count& c) {
    record_flag(std::string(tag) + "-divisibility", nk(n, k), c.exact(), "0",
                to_decimal(c.remainder));
    record_flag(std::string(tag) + "-nonnegative", nk(n, k), c.value >= 0, ">= 0",
                to_decimal(c.value));
  };

  // Stirling tables against enumeration.
  const unsigned small_k = std::min(k_max, 7u);
  for (unsigned k = 0; k <= small_k; ++k) {
    for (unsigned i = 0; i <= k; ++i) {
      record("stirling2-vs-enumeration", ki(k, i), brute_stirling2(k, i), f.stirling2(k, i));
      record("stirling1-vs-enumeration", ki(k, i), brute_stirling1_unsigned(k, i),
             f.stirling1_unsigned(k, i));
      if (k <= 6) {
        record("surjective-vs-enumeration", ki(k, i), brute_surjective_sequences(k, i),
               f.surjective_sequences(k, i));
      }
    }
  }

  // Closed forms against the oracle, and v1 against v2.
  for (unsigned n = 2; n <= n_max; ++n) {
    for (bool proper : {false, true}) {
      const char* v1 = proper ? "sigma_v1" : "tau_v1";
      const std::uint64_t last = std::min<std::uint64_t>(k_max, pool_size(n, proper));
      for (std::uint64_t k = 1; k <= last; ++k) {
        const Count c1 = proper ? f.sigma_v1(n, k) : f.tau_v1(n, k);
        check_count(v1, n, k, c1);
        if (n <= kMaxOracleGround) {
          record(std::string(v1) + "-vs-brute", nk(n, k),
                 brute_count_separating(n, static_cast<unsigned>(k), proper), c1.value);
        }
        const bool v2_domain = proper ? true : (k >= 2 && k < pool_size(n, false));
        if (v2_domain) {
          const Count c2 = proper ? f.sigma_v2(n, k) : f.tau_v2(n, k);
          record(std::string(proper ? "sigma_v2" : "tau_v2") + "-vs-" + v1, nk(n, k), c1.value,
                 c2.value);
        }
      }
    }
  }

  // Identities.
  for (unsigned n = 2; n <= n_max; ++n) {
    const std::uint64_t last = std::min<std::uint64_t>(k_max, pool_size(n, false));
    for (std::uint64_t k = 1; k <= last; ++k) {
      auto s = f.check_sum_identity(n, k);
      record("sum-identity", nk(n, k), s.rhs, s.lhs);
      if (k >= 2) {
        auto r = f.check_sigma_tau(n, k);
        record("sigma-tau-recurrence", nk(n, k), r.rhs, r.lhs);
        auto t = f.check_transpose_identity(n, k);
        record("transpose-identity", nk(n, k), t.rhs, t.lhs);
      }
    }
  }
  for (unsigned k = 0; k <= k_max; ++k) {
    for (unsigned i = 0; i <= k; ++i) {
      auto s = f.check_stirling1_identity(k, i);
      record("stirling1-identity", ki(k, i), s.rhs, s.lhs);
    }
  }

  // Minimum-size families.
  for (unsigned n = 2; n <= std::min(n_max, kMaxOracleGround); ++n) {
    const unsigned m = min_separating_size(n);
    const BigInt closed = count_min_size_families(n);
    record("min-size-count-vs-brute", "n=" + std::to_string(n),
           brute_count_separating(n, m, false), closed);
    record("min-size-count-vs-tau_v1", "n=" + std::to_string(n), f.tau_v1(n, m).value, closed);
    const auto profile = brute_minimal_size_profile(n);
    bool in_range = !profile.empty() && profile.begin()->first >= m &&
                    profile.rbegin()->first <= n - 1;
    record_flag("minimal-size-profile-support", "n=" + std::to_string(n), in_range,
                "[" + std::to_string(m) + "," + std::to_string(n - 1) + "]",
                "[" + std::to_string(profile.empty() ? 0 : profile.begin()->first) + "," +
                    std::to_string(profile.empty() ? 0 : profile.rbegin()->first) + "]");
    const auto at_min = profile.find(m);
    record("minimal-min-size-count", "n=" + std::to_string(n), closed,
           at_min == profile.end() ? BigInt(0) : at_min->second);
  }

  // Smallest ground sets for k bipartitions, searched by brute force.
  for (unsigned k = 1; k <= std::min(k_max, 7u); ++k) {
    for (bool proper : {false, true}) {
      if (!proper && k < 2) continue;
      unsigned n_found = 0;
      BigInt count = 0;
      for (unsigned n = 2; n <= kMaxOracleGround && n_found == 0; ++n) {
        if (k > pool_size(n, proper)) continue;
        count = brute_count_separating(n, k, proper);
        if (count != 0) n_found = n;
      }
      if (n_found == 0) continue;
      const std::string tag = proper ? "min-ground-proper" : "min-ground-arbitrary";
      const unsigned size = proper ? min_ground_size_proper(k) : min_ground_size_arbitrary(k);
      const BigInt closed = proper ? count_min_ground_proper(k) : count_min_ground_arbitrary(k);
      record(tag + "-size-vs-brute", "k=" + std::to_string(k), n_found, size);
      record(tag + "-count-vs-brute", "k=" + std::to_string(k), count, closed);
    }
  }

  // Trees and minimal families of maximum size.
  for (unsigned n = 2; n <= std::min(n_max, kMaxOracleGround); ++n) {
    const auto brute = brute_minimal_max_families(n);
    record("cayley-count-brute", "n=" + std::to_string(n), cayley_count(n), brute.size());
    std::vector<Family> via_trees;
    auto stream = enumerate_minimal_max_families(n);
    while (auto fam = stream.next()) via_trees.push_back(std::move(*fam));
    std::sort(via_trees.begin(), via_trees.end());
    const bool same = via_trees == brute;
    record_flag("prufer-families-equal-brute", "n=" + std::to_string(n), same, "equal sets",
                same ? "equal sets" : "different sets");
  }
  for (unsigned n = 2; n <= std::min(n_max, kMaxVerifyTreeGround); ++n) {
    SpanningTrees trees(n);
    std::uint64_t total = 0, bad = 0;
    std::set<std::vector<Mask>> seen;
    while (auto t = trees.next()) {
      ++total;
      const Family fam = phi_inverse(*t);
      std::vector<Mask> key;
      for (const auto& p : fam.members()) key.push_back(p.coblock());
      const bool ok = fam.size() == n - 1 && phi_forward(fam) == t->graph() &&
                      is_minimal_separating(fam) && prufer_encode(*t).seq.size() == n - 2 &&
                      prufer_decode(prufer_encode(*t)) == *t && seen.insert(key).second;
      if (!ok) ++bad;
    }
    record_flag("phi-roundtrip", "n=" + std::to_string(n), bad == 0 && total == cayley_count(n),
                std::to_string(cayley_count(n)) + " trees, 0 failures",
                std::to_string(total) + " trees, " + std::to_string(bad) + " failures");
  }
  return report;
}

inline ValidationReport cross_validate(unsigned n_max, unsigned k_max) {
  const unsigned n = std::min(n_max, kMaxVerifyGround);
  const unsigned k = std::min(k_max, kMaxVerifySize);
  return cross_validate(n_max, k_max, Formulas(verify_order(n, k)));
}

}  // namespace sepfam
