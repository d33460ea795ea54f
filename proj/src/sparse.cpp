#include "mckay/sparse.hpp"

namespace mckay {

SparseVec axpy(const SparseVec& a, const Rational& factor, const SparseVec& b) {
  SparseVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, factor * b[j].second);
      ++j;
    } else {
      Rational v = a[i].second + factor * b[j].second;
      if (!is_zero(v)) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVec scaled(SparseVec v, const Rational& factor) {
  if (is_zero(factor)) return {};
  for (auto& e : v) e.second *= factor;
  return v;
}

SparseVec collect(std::map<int, Rational>& acc) {
  SparseVec out;
  for (auto& [k, v] : acc)
    if (!is_zero(v)) out.emplace_back(k, v);
  return out;
}

bool SparseEchelon::insert(SparseVec v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  const Rational lead = v.front().second;
  v = scaled(std::move(v), 1 / lead);
  rows_.emplace(v.front().first, std::move(v));
  return true;
}

SparseVec SparseEchelon::reduce(SparseVec v) const {
  // Walk columns in increasing order; eliminating pivot c only touches columns > c.
  std::size_t pos = 0;
  while (pos < v.size()) {
    const auto it = rows_.find(v[pos].first);
    if (it == rows_.end()) {
      ++pos;
      continue;
    }
    const int col = v[pos].first;
    v = axpy(v, -v[pos].second, it->second);
    // entries before col are untouched; resume at the first index >= col
    pos = 0;
    while (pos < v.size() && v[pos].first < col) ++pos;
  }
  return v;
}

}  // namespace mckay
