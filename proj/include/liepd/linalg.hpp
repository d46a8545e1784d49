#ifndef LIEPD_LINALG_HPP
#define LIEPD_LINALG_HPP

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "scalar.hpp"

namespace liepd {

/// Sparse vector: basis key -> nonzero coefficient.
template <class Key, class F, class Compare = std::less<Key>>
using SparseVec = std::map<Key, F, Compare>;

template <class Key, class F, class Compare>
void axpy(SparseVec<Key, F, Compare> &y, const F &a, const SparseVec<Key, F, Compare> &x) {
  if (a.is_zero())
    return;
  for (const auto &[k, c] : x) {
    auto [it, inserted] = y.try_emplace(k, F::zero());
    it->second += a * c;
    if (it->second.is_zero())
      y.erase(it);
  }
}

/// Subspace of a coordinate space, held in reduced row echelon form. Each
/// row's pivot is its smallest key; pivots occur in exactly one row. The
/// row set is canonical, so two subspaces are equal iff their rows are.
template <class Key, class F, class Compare = std::less<Key>> class Subspace {
public:
  using Vec = SparseVec<Key, F, Compare>;

  Subspace() = default;

  static Subspace span(const std::vector<Vec> &vectors) {
    Subspace s;
    for (const auto &v : vectors)
      s.insert(v);
    return s;
  }

  std::size_t dim() const { return rows_.size(); }
  bool empty() const { return rows_.empty(); }

  /// Rows in pivot order.
  std::vector<Vec> basis() const {
    std::vector<Vec> out;
    out.reserve(rows_.size());
    for (const auto &[k, r] : rows_)
      out.push_back(r);
    return out;
  }
  const std::map<Key, Vec, Compare> &rows() const { return rows_; }

  Vec reduce(Vec v) const {
    if (rows_.empty())
      return v;
    // Reducing by the pivot at key k only touches keys > k, so a single
    // ascending sweep suffices.
    auto it = v.begin();
    while (it != v.end()) {
      auto row = rows_.find(it->first);
      if (row == rows_.end()) {
        ++it;
        continue;
      }
      const Key key = it->first;
      const F c = it->second;
      axpy(v, -c, row->second);
      it = v.upper_bound(key);
    }
    return v;
  }

  bool contains(const Vec &v) const { return reduce(v).empty(); }

  bool contains(const Subspace &other) const {
    for (const auto &[k, r] : other.rows_)
      if (!contains(r))
        return false;
    return true;
  }

  /// Returns true if the vector enlarged the subspace.
  bool insert(const Vec &v) {
    Vec r = reduce(v);
    if (r.empty())
      return false;
    const Key pivot = r.begin()->first;
    const F lead_inv = F::one() / r.begin()->second;
    for (auto &[k, c] : r)
      c *= lead_inv;
    for (auto &[k, row] : rows_) {
      auto hit = row.find(pivot);
      if (hit != row.end()) {
        const F c = hit->second;
        axpy(row, -c, r);
      }
    }
    rows_.emplace(pivot, std::move(r));
    return true;
  }

  friend bool operator==(const Subspace &a, const Subspace &b) { return a.rows_ == b.rows_; }

private:
  std::map<Key, Vec, Compare> rows_;
};

namespace detail {

/// Key of the doubled space used by Zassenhaus-style eliminations: tag 0
/// keys are eliminated before tag 1 keys.
template <class Key, class Compare> struct TaggedLess {
  bool operator()(const std::pair<int, Key> &a, const std::pair<int, Key> &b) const {
    if (a.first != b.first)
      return a.first < b.first;
    return Compare{}(a.second, b.second);
  }
};

} // namespace detail

/// U ∩ V by Zassenhaus elimination.
template <class Key, class F, class Compare>
Subspace<Key, F, Compare> intersect(const Subspace<Key, F, Compare> &u,
                                    const Subspace<Key, F, Compare> &v) {
  using TKey = std::pair<int, Key>;
  using TLess = detail::TaggedLess<Key, Compare>;
  Subspace<TKey, F, TLess> big;
  for (const auto &[k, row] : u.rows()) {
    SparseVec<TKey, F, TLess> t;
    for (const auto &[kk, c] : row) {
      t.emplace(TKey{0, kk}, c);
      t.emplace(TKey{1, kk}, c);
    }
    big.insert(t);
  }
  for (const auto &[k, row] : v.rows()) {
    SparseVec<TKey, F, TLess> t;
    for (const auto &[kk, c] : row)
      t.emplace(TKey{0, kk}, c);
    big.insert(t);
  }
  Subspace<Key, F, Compare> out;
  for (const auto &[pivot, row] : big.rows()) {
    if (pivot.first != 1)
      continue;
    SparseVec<Key, F, Compare> w;
    for (const auto &[tk, c] : row)
      w.emplace(tk.second, c);
    out.insert(w);
  }
  return out;
}

/// Span of the coordinate vectors e_k for the given keys.
template <class Key, class F, class Compare = std::less<Key>>
Subspace<Key, F, Compare> coordinate_span(const std::vector<Key> &keys) {
  Subspace<Key, F, Compare> s;
  for (const auto &k : keys) {
    SparseVec<Key, F, Compare> e;
    e.emplace(k, F::one());
    s.insert(e);
  }
  return s;
}

/// Kernel of the linear map sending each source key to its image vector.
/// Source keys absent from the list are not part of the domain.
template <class SrcKey, class SrcCompare, class DstKey, class DstCompare, class F>
Subspace<SrcKey, F, SrcCompare>
kernel_of(const std::vector<std::pair<SrcKey, SparseVec<DstKey, F, DstCompare>>> &images) {
  // Doubled space: image coordinates first (tag 0), then source coordinates.
  struct Both {
    int tag;
    DstKey dst;
    SrcKey src;
  };
  struct BothLess {
    bool operator()(const Both &a, const Both &b) const {
      if (a.tag != b.tag)
        return a.tag < b.tag;
      if (a.tag == 0)
        return DstCompare{}(a.dst, b.dst);
      return SrcCompare{}(a.src, b.src);
    }
  };
  Subspace<Both, F, BothLess> big;
  for (const auto &[src, img] : images) {
    SparseVec<Both, F, BothLess> row;
    for (const auto &[dk, c] : img)
      row.emplace(Both{0, dk, SrcKey{}}, c);
    row.emplace(Both{1, DstKey{}, src}, F::one());
    big.insert(row);
  }
  Subspace<SrcKey, F, SrcCompare> out;
  for (const auto &[pivot, row] : big.rows()) {
    if (pivot.tag != 1)
      continue;
    SparseVec<SrcKey, F, SrcCompare> w;
    for (const auto &[bk, c] : row)
      w.emplace(bk.src, c);
    out.insert(w);
  }
  return out;
}

/// Dense vector helpers for finite-dimensional targets.
template <class F> std::vector<F> zeros(std::size_t n) { return std::vector<F>(n, F::zero()); }

template <class F> bool all_zero(const std::vector<F> &v) {
  for (const auto &c : v)
    if (!c.is_zero())
      return false;
  return true;
}

template <class F> std::vector<F> &add_into(std::vector<F> &y, const F &a, const std::vector<F> &x) {
  for (std::size_t i = 0; i < y.size(); ++i)
    y[i] += a * x[i];
  return y;
}

} // namespace liepd

#endif
