#pragma once

// Ground sets, canonical bipartitions and the separation predicates.
//
// Elements of a ground set of size n are the integers 1..n. A bipartition is
// stored as its coblock: the block that does not contain element 1, as a
// bitmask where bit (i-1) stands for element i. Bit 0 is therefore always
// clear, and the trivial bipartition {S} has an empty coblock.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sepfam/error.hpp"

namespace sepfam {

using Mask = std::uint64_t;

inline constexpr unsigned kMaxGroundSize = 64;
// all_bipartitions() refuses to materialize more than 2^23 bipartitions.
inline constexpr unsigned kMaxEnumerationGround = 24;

// Smallest m with 2^m >= x; 0 for x <= 1.
constexpr unsigned ceil_log2(std::uint64_t x) {
  return x <= 1 ? 0u : static_cast<unsigned>(std::bit_width(x - 1));
}

// Mask with bits for elements 1..n set.
constexpr Mask ground_mask(unsigned n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

constexpr Mask element_bit(unsigned i) { return Mask{1} << (i - 1); }

inline void check_ground_size(unsigned n) {
  if (n < 1 || n > kMaxGroundSize) {
    throw CapacityError("ground set size must lie in 1.." +
                        std::to_string(kMaxGroundSize) + ", got " +
                        std::to_string(n));
  }
}

class Bipartition {
 public:
  // coblock must be a subset of {2..n}.
  Bipartition(unsigned n, Mask coblock) : n_(n), coblock_(coblock) {
    check_ground_size(n);
    if ((coblock & element_bit(1)) != 0 || (coblock & ~ground_mask(n)) != 0) {
      throw StructuralError("coblock must be a subset of {2.." +
                            std::to_string(n) + "}");
    }
  }

  static Bipartition trivial(unsigned n) { return Bipartition(n, 0); }

  // Builds the bipartition {block, S \ block}; either side may contain 1.
  static Bipartition from_block(unsigned n, std::span<const unsigned> block) {
    check_ground_size(n);
    Mask m = 0;
    for (unsigned x : block) {
      if (x < 1 || x > n) {
        throw RangeError("element " + std::to_string(x) + " outside 1.." +
                         std::to_string(n));
      }
      m |= element_bit(x);
    }
    if (m & element_bit(1)) m = ground_mask(n) & ~m;
    return Bipartition(n, m);
  }

  unsigned n() const { return n_; }
  Mask coblock() const { return coblock_; }
  bool is_proper() const { return coblock_ != 0; }

  // Block containing element 1, as a mask.
  Mask main_block() const { return ground_mask(n_) & ~coblock_; }

  bool in_coblock(unsigned i) const { return (coblock_ & element_bit(i)) != 0; }

  // Both blocks as sorted element lists, the block containing 1 first. The
  // trivial bipartition yields a single block.
  std::vector<std::vector<unsigned>> blocks() const {
    std::vector<std::vector<unsigned>> out(is_proper() ? 2 : 1);
    for (unsigned i = 1; i <= n_; ++i) out[in_coblock(i) ? 1 : 0].push_back(i);
    return out;
  }

  friend bool operator==(const Bipartition&, const Bipartition&) = default;
  friend auto operator<=>(const Bipartition&, const Bipartition&) = default;

 private:
  unsigned n_;
  Mask coblock_;
};

inline void check_element(unsigned n, unsigned i) {
  if (i < 1 || i > n) {
    throw RangeError("element " + std::to_string(i) + " outside 1.." +
                     std::to_string(n));
  }
}

// True iff i and j lie in different blocks of p.
inline bool cuts(const Bipartition& p, unsigned i, unsigned j) {
  check_element(p.n(), i);
  check_element(p.n(), j);
  return p.in_coblock(i) != p.in_coblock(j);
}

// An unordered set of distinct bipartitions over one ground set, kept sorted
// by coblock.
class Family {
 public:
  explicit Family(unsigned n) : n_(n) { check_ground_size(n); }

  Family(unsigned n, std::vector<Bipartition> members)
      : n_(n), members_(std::move(members)) {
    check_ground_size(n);
    for (const auto& p : members_) {
      if (p.n() != n) {
        throw StructuralError("family member over ground set of size " +
                              std::to_string(p.n()) + ", expected " +
                              std::to_string(n));
      }
    }
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
      throw StructuralError("family contains a duplicate bipartition");
    }
  }

  static Family from_coblocks(unsigned n, std::span<const Mask> coblocks) {
    std::vector<Bipartition> members;
    members.reserve(coblocks.size());
    for (Mask m : coblocks) members.emplace_back(n, m);
    return Family(n, std::move(members));
  }

  unsigned n() const { return n_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  std::span<const Bipartition> members() const { return members_; }
  const Bipartition& operator[](std::size_t i) const { return members_[i]; }

  // Copy of this family with the member at position idx removed.
  Family without(std::size_t idx) const {
    Family out(n_);
    out.members_.reserve(members_.size() - 1);
    for (std::size_t i = 0; i < members_.size(); ++i) {
      if (i != idx) out.members_.push_back(members_[i]);
    }
    return out;
  }

  friend bool operator==(const Family&, const Family&) = default;
  friend auto operator<=>(const Family&, const Family&) = default;

 private:
  unsigned n_;
  std::vector<Bipartition> members_;
};

// An ordered list of bipartitions; repeats allowed.
class BipartitionTuple {
 public:
  explicit BipartitionTuple(unsigned n) : n_(n) { check_ground_size(n); }

  BipartitionTuple(unsigned n, std::vector<Bipartition> entries)
      : n_(n), entries_(std::move(entries)) {
    check_ground_size(n);
    for (const auto& p : entries_) {
      if (p.n() != n) {
        throw StructuralError("tuple entry over ground set of size " +
                              std::to_string(p.n()) + ", expected " +
                              std::to_string(n));
      }
    }
  }

  // Members of f in canonical order.
  static BipartitionTuple from_family(const Family& f) {
    return BipartitionTuple(
        f.n(), std::vector<Bipartition>(f.members().begin(), f.members().end()));
  }

  unsigned n() const { return n_; }
  std::size_t size() const { return entries_.size(); }
  std::span<const Bipartition> entries() const { return entries_; }
  const Bipartition& operator[](std::size_t i) const { return entries_[i]; }

  friend bool operator==(const BipartitionTuple&,
                         const BipartitionTuple&) = default;

 private:
  unsigned n_;
  std::vector<Bipartition> entries_;
};

// Plain O(k n^2) pair scan.
inline bool is_separating(const Family& f) {
  const unsigned n = f.n();
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = i + 1; j <= n; ++j) {
      bool cut = std::any_of(f.members().begin(), f.members().end(),
                             [&](const Bipartition& p) { return cuts(p, i, j); });
      if (!cut) return false;
    }
  }
  return true;
}

inline bool is_minimal_separating(const Family& f) {
  if (!is_separating(f)) return false;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (is_separating(f.without(i))) return false;
  }
  return true;
}

// Every bipartition of {1..n} in canonical order: 2^(n-1) of them, or
// 2^(n-1) - 1 when the trivial one is excluded.
inline std::vector<Bipartition> all_bipartitions(unsigned n, bool proper_only) {
  check_ground_size(n);
  if (n > kMaxEnumerationGround) {
    throw CapacityError("full bipartition enumeration is limited to n <= " +
                        std::to_string(kMaxEnumerationGround) + ", got " +
                        std::to_string(n));
  }
  const Mask count = Mask{1} << (n - 1);
  std::vector<Bipartition> out;
  out.reserve(count);
  for (Mask m = proper_only ? 1 : 0; m < count; ++m) {
    out.emplace_back(n, m << 1);
  }
  return out;
}

}  // namespace sepfam
