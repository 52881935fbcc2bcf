#pragma once

// Characteristic vectors and matrices of bipartition tuples.
//
// Column j of the n x k matrix of a tuple records, for every element i,
// whether the j-th bipartition cuts 1 from i. Row 1 is identically zero, and
// the map tuple -> matrix is a bijection onto such matrices. A family
// separates iff the rows of its matrix are pairwise distinct.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "sepfam/core.hpp"

namespace sepfam {

inline constexpr unsigned kMaxMatrixColumns = 64;

class CharMatrix {
 public:
  // rows[r] holds row r+1 with bit c standing for column c+1.
  CharMatrix(unsigned rows, unsigned cols, std::vector<Mask> row_bits)
      : rows_(rows), cols_(cols), bits_(std::move(row_bits)) {
    if (rows < 1 || rows > kMaxGroundSize) {
      throw CapacityError("matrix row count must lie in 1.." +
                          std::to_string(kMaxGroundSize));
    }
    if (cols > kMaxMatrixColumns) {
      throw CapacityError("matrix column count must not exceed " +
                          std::to_string(kMaxMatrixColumns));
    }
    if (bits_.size() != rows) {
      throw StructuralError("row data does not match the row count");
    }
    const Mask allowed = ground_mask(cols);
    for (Mask r : bits_) {
      if (r & ~allowed) throw StructuralError("row has bits beyond the last column");
    }
    if (bits_[0] != 0) {
      throw StructuralError("first row of a characteristic matrix must be zero");
    }
  }

  // Rows written as 0/1 strings of equal length, e.g. {"00", "01", "10"}.
  static CharMatrix from_strings(std::initializer_list<std::string_view> rows) {
    return from_strings(std::vector<std::string_view>(rows));
  }

  static CharMatrix from_strings(const std::vector<std::string_view>& rows) {
    if (rows.empty()) throw StructuralError("matrix needs at least one row");
    const auto cols = static_cast<unsigned>(rows.front().size());
    std::vector<Mask> bits;
    bits.reserve(rows.size());
    for (auto r : rows) {
      if (r.size() != cols) throw StructuralError("ragged matrix rows");
      Mask m = 0;
      for (unsigned c = 0; c < cols; ++c) {
        if (r[c] == '1') {
          m |= Mask{1} << c;
        } else if (r[c] != '0') {
          throw StructuralError("matrix entries must be 0 or 1");
        }
      }
      bits.push_back(m);
    }
    return CharMatrix(static_cast<unsigned>(rows.size()), cols, std::move(bits));
  }

  unsigned rows() const { return rows_; }
  unsigned cols() const { return cols_; }

  // Zero-based row and column.
  bool at(unsigned r, unsigned c) const { return (bits_[r] >> c) & 1u; }
  Mask row(unsigned r) const { return bits_[r]; }

  // Column c as an element mask (bit i-1 for row i).
  Mask column(unsigned c) const {
    Mask m = 0;
    for (unsigned r = 0; r < rows_; ++r) {
      if (at(r, c)) m |= Mask{1} << r;
    }
    return m;
  }

  std::vector<std::string> to_strings() const {
    std::vector<std::string> out;
    out.reserve(rows_);
    for (unsigned r = 0; r < rows_; ++r) {
      std::string s(cols_, '0');
      for (unsigned c = 0; c < cols_; ++c) {
        if (at(r, c)) s[c] = '1';
      }
      out.push_back(std::move(s));
    }
    return out;
  }

  friend bool operator==(const CharMatrix&, const CharMatrix&) = default;

 private:
  unsigned rows_;
  unsigned cols_;
  std::vector<Mask> bits_;
};

// Coordinate i is 1 iff p cuts 1 and i. This is exactly the coblock.
inline std::vector<std::uint8_t> b_vector(const Bipartition& p) {
  std::vector<std::uint8_t> v(p.n());
  for (unsigned i = 1; i <= p.n(); ++i) v[i - 1] = p.in_coblock(i) ? 1 : 0;
  return v;
}

inline CharMatrix encode(const BipartitionTuple& t) {
  if (t.size() > kMaxMatrixColumns) {
    throw CapacityError("tuple longer than " +
                        std::to_string(kMaxMatrixColumns) + " entries");
  }
  std::vector<Mask> rows(t.n(), 0);
  for (unsigned c = 0; c < t.size(); ++c) {
    const Mask cob = t[c].coblock();
    for (unsigned r = 0; r < t.n(); ++r) {
      if ((cob >> r) & 1u) rows[r] |= Mask{1} << c;
    }
  }
  return CharMatrix(t.n(), static_cast<unsigned>(t.size()), std::move(rows));
}

inline BipartitionTuple decode(const CharMatrix& m) {
  std::vector<Bipartition> entries;
  entries.reserve(m.cols());
  for (unsigned c = 0; c < m.cols(); ++c) entries.emplace_back(m.rows(), m.column(c));
  return BipartitionTuple(m.rows(), std::move(entries));
}

inline bool rows_all_distinct(const CharMatrix& m) {
  std::vector<Mask> rows;
  rows.reserve(m.rows());
  for (unsigned r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  std::sort(rows.begin(), rows.end());
  return std::adjacent_find(rows.begin(), rows.end()) == rows.end();
}

inline bool first_column_zero(const CharMatrix& m) {
  return m.cols() == 0 || m.column(0) == 0;
}

// Transpose of a matrix whose first row and first column are zero. The
// result has the same property and represents a tuple over a ground set of
// size m.cols() whose first entry is the trivial bipartition.
inline CharMatrix transpose_dual(const CharMatrix& m) {
  if (m.cols() == 0) {
    throw StructuralError("cannot transpose a matrix with no columns");
  }
  if (!first_column_zero(m)) {
    throw StructuralError(
        "transpose requires a zero first column (trivial first entry)");
  }
  if (m.cols() > kMaxGroundSize) {
    throw CapacityError("transposed row count exceeds " +
                        std::to_string(kMaxGroundSize));
  }
  std::vector<Mask> rows(m.cols(), 0);
  for (unsigned r = 0; r < m.rows(); ++r) {
    for (unsigned c = 0; c < m.cols(); ++c) {
      if (m.at(r, c)) rows[c] |= Mask{1} << r;
    }
  }
  return CharMatrix(m.cols(), m.rows(), std::move(rows));
}

}  // namespace sepfam
