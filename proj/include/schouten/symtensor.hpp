#pragma once

// Fully symmetric contravariant and covariant tensor fields on the torus,
// stored on sorted multi-indices (see multiindex.hpp for the multiplicity
// convention), plus their graded sums. The covariant side mirrors the
// contravariant one; on the flat torus index raising is the identity on
// components, so the two share an implementation behind distinct types.

#include <map>
#include <vector>

#include "schouten/multiindex.hpp"
#include "schouten/trigpoly.hpp"

namespace schouten {

template <class S, bool Covariant>
class SymTensorT {
 public:
  using CompMap = std::map<MultiIndex, TrigPoly<S>>;

  SymTensorT() : dim_(1), order_(0) {}
  SymTensorT(int dim, int order) : dim_(dim), order_(order) {
    detail::require(dim >= 1, "dim must be >= 1");
    detail::require(order >= 0, "order must be >= 0");
  }

  static SymTensorT zero(int dim, int order) { return SymTensorT(dim, order); }

  /// Order-0 tensors are plain scalar fields.
  static SymTensorT scalar(const TrigPoly<S>& f) {
    SymTensorT t(f.dim(), 0);
    t.set_component({}, f);
    return t;
  }

  int dim() const { return dim_; }
  int order() const { return order_; }
  bool is_zero() const { return comps_.empty(); }
  const CompMap& components() const { return comps_; }

  /// Component for an arbitrary index tuple; full symmetry makes the sorted
  /// entry canonical.
  TrigPoly<S> component(const MultiIndex& idx) const {
    detail::require(static_cast<int>(idx.size()) == order_, "index order mismatch");
    auto it = comps_.find(is_sorted_index(idx) ? idx : sorted(idx));
    return it == comps_.end() ? TrigPoly<S>::zero(dim_) : it->second;
  }

  void set_component(const MultiIndex& idx, const TrigPoly<S>& f) {
    check_index(idx);
    detail::require(f.dim() == dim_, "dimension mismatch");
    MultiIndex key = is_sorted_index(idx) ? idx : sorted(idx);
    if (f.is_zero())
      comps_.erase(key);
    else
      comps_[key] = f;
  }

  void add_component(const MultiIndex& idx, const TrigPoly<S>& f) {
    check_index(idx);
    detail::require(f.dim() == dim_, "dimension mismatch");
    if (f.is_zero()) return;
    MultiIndex key = is_sorted_index(idx) ? idx : sorted(idx);
    auto it = comps_.find(key);
    if (it == comps_.end()) {
      comps_.emplace(key, f);
      return;
    }
    it->second = it->second + f;
    if (it->second.is_zero()) comps_.erase(it);
  }

  SymTensorT operator+(const SymTensorT& o) const {
    check_compatible(o);
    SymTensorT out = *this;
    for (const auto& [idx, f] : o.comps_) out.add_component(idx, f);
    return out;
  }

  SymTensorT operator-(const SymTensorT& o) const { return *this + (-o); }

  SymTensorT operator-() const {
    SymTensorT out(dim_, order_);
    for (const auto& [idx, f] : comps_) out.comps_.emplace(idx, -f);
    return out;
  }

  SymTensorT scaled(const S& s) const {
    SymTensorT out(dim_, order_);
    for (const auto& [idx, f] : comps_) {
      TrigPoly<S> g = f.scaled(s);
      if (!g.is_zero()) out.comps_.emplace(idx, g);
    }
    return out;
  }

  SymTensorT bandlimited(int band) const {
    SymTensorT out(dim_, order_);
    for (const auto& [idx, f] : comps_) out.set_component(idx, f.bandlimited(band));
    return out;
  }

  int max_abs_freq() const {
    int m = 0;
    for (const auto& [idx, f] : comps_) m = std::max(m, f.max_abs_freq());
    return m;
  }

  bool operator==(const SymTensorT& o) const {
    return dim_ == o.dim_ && order_ == o.order_ && comps_ == o.comps_;
  }

 private:
  void check_index(const MultiIndex& idx) const {
    detail::require(static_cast<int>(idx.size()) == order_, "index order mismatch");
    for (int i : idx) detail::require(i >= 0 && i < dim_, "index axis out of range");
  }
  void check_compatible(const SymTensorT& o) const {
    detail::require(dim_ == o.dim_ && order_ == o.order_, "tensor shape mismatch");
  }

  int dim_;
  int order_;
  CompMap comps_;
};

template <class S>
using SymTensor = SymTensorT<S, false>;
template <class S>
using SymCoTensor = SymTensorT<S, true>;

/// Graded sum over tensor orders; absent grades are zero.
template <class S, bool Covariant>
class SymFieldT {
 public:
  using Tensor = SymTensorT<S, Covariant>;
  using GradeMap = std::map<int, Tensor>;

  SymFieldT() : dim_(1) {}
  explicit SymFieldT(int dim) : dim_(dim) { detail::require(dim >= 1, "dim must be >= 1"); }

  static SymFieldT zero(int dim) { return SymFieldT(dim); }

  static SymFieldT single(const Tensor& t) {
    SymFieldT f(t.dim());
    f.set_grade(t.order(), t);
    return f;
  }

  int dim() const { return dim_; }
  bool is_zero() const { return grades_.empty(); }
  const GradeMap& grades() const { return grades_; }

  int max_order() const { return grades_.empty() ? 0 : grades_.rbegin()->first; }

  Tensor grade(int k) const {
    auto it = grades_.find(k);
    return it == grades_.end() ? Tensor::zero(dim_, k) : it->second;
  }

  void set_grade(int k, const Tensor& t) {
    detail::require(t.dim() == dim_, "dimension mismatch");
    detail::require(t.order() == k, "grade does not match tensor order");
    if (t.is_zero())
      grades_.erase(k);
    else
      grades_[k] = t;
  }

  void add_grade(const Tensor& t) {
    detail::require(t.dim() == dim_, "dimension mismatch");
    if (t.is_zero()) return;
    auto it = grades_.find(t.order());
    if (it == grades_.end()) {
      grades_.emplace(t.order(), t);
      return;
    }
    it->second = it->second + t;
    if (it->second.is_zero()) grades_.erase(it);
  }

  SymFieldT operator+(const SymFieldT& o) const {
    check_same_dim(o);
    SymFieldT out = *this;
    for (const auto& [k, t] : o.grades_) out.add_grade(t);
    return out;
  }

  SymFieldT operator-(const SymFieldT& o) const { return *this + (-o); }

  SymFieldT operator-() const {
    SymFieldT out(dim_);
    for (const auto& [k, t] : grades_) out.grades_.emplace(k, -t);
    return out;
  }

  SymFieldT scaled(const S& s) const {
    SymFieldT out(dim_);
    for (const auto& [k, t] : grades_) {
      Tensor ts = t.scaled(s);
      if (!ts.is_zero()) out.grades_.emplace(k, ts);
    }
    return out;
  }

  /// Explicit grade truncation; nothing else in the library truncates.
  SymFieldT truncated(int max_grade) const {
    SymFieldT out(dim_);
    for (const auto& [k, t] : grades_)
      if (k <= max_grade) out.grades_.emplace(k, t);
    return out;
  }

  SymFieldT bandlimited(int band) const {
    SymFieldT out(dim_);
    for (const auto& [k, t] : grades_) out.set_grade(k, t.bandlimited(band));
    return out;
  }

  int max_abs_freq() const {
    int m = 0;
    for (const auto& [k, t] : grades_) m = std::max(m, t.max_abs_freq());
    return m;
  }

  bool operator==(const SymFieldT& o) const { return dim_ == o.dim_ && grades_ == o.grades_; }

 private:
  void check_same_dim(const SymFieldT& o) const {
    detail::require(dim_ == o.dim_, "dimension mismatch");
  }

  int dim_;
  GradeMap grades_;
};

template <class S>
using SymTensorField = SymFieldT<S, false>;
template <class S>
using SymCovField = SymFieldT<S, true>;

}  // namespace schouten
