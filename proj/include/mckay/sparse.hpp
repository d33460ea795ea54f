#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "mckay/scalar.hpp"

namespace mckay {

/// Sparse vector: (index, nonzero value) pairs sorted by index.
using SparseVec = std::vector<std::pair<int, Rational>>;

/// a + factor * b
SparseVec axpy(const SparseVec& a, const Rational& factor, const SparseVec& b);
SparseVec scaled(SparseVec v, const Rational& factor);
/// Accumulates (index, value) pairs into a canonical sparse vector.
SparseVec collect(std::map<int, Rational>& acc);

/// Incrementally built row echelon basis of a subspace of a coordinate space.
/// Each stored row has leading coefficient 1 at its pivot; rows only contain
/// columns at or after their pivot.
class SparseEchelon {
 public:
  /// Reduces v against the stored rows and stores the remainder if nonzero.
  /// Returns true if the rank grew.
  bool insert(SparseVec v);
  /// Reduces v modulo the span: the result has no pivot columns.
  SparseVec reduce(SparseVec v) const;
  std::size_t rank() const { return rows_.size(); }
  bool is_pivot(int col) const { return rows_.count(col) > 0; }
  const std::map<int, SparseVec>& rows() const { return rows_; }

 private:
  std::map<int, SparseVec> rows_;
};

}  // namespace mckay
