#pragma once

// Seeded generation of random fields with small frequency support and low
// order, plus spanning sets of basis partners for pairing oracles. The
// integer draws are mapped by hand from the raw mt19937_64 stream so that a
// seed pins identical data on every platform.

#include <random>

#include "schouten/gccl.hpp"
#include "schouten/tensor_matched.hpp"

namespace schouten {

struct Rng {
  std::mt19937_64 eng;

  explicit Rng(std::uint64_t seed) : eng(seed) {}

  std::uint64_t next() { return eng(); }

  int uniform(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  bool chance(int num, int den) { return uniform(1, den) <= num; }

  /// Small nonzero amplitude, denominator 1 or 2.
  template <class S>
  S amplitude() {
    int num = 0;
    while (num == 0) num = uniform(-2, 2);
    return scalar_traits<S>::from_ratio(num, uniform(1, 2));
  }
};

template <class S>
TrigPoly<S> random_trig(Rng& rng, int dim, int max_freq, int terms) {
  TrigPoly<S> f(dim);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> k(dim);
    for (int i = 0; i < dim; ++i) k[i] = rng.uniform(-max_freq, max_freq);
    bool zero_freq = true;
    for (int ki : k) zero_freq = zero_freq && ki == 0;
    S amp = rng.template amplitude<S>();
    if (zero_freq)
      f = f + TrigPoly<S>::constant(dim, amp);
    else if (rng.chance(1, 2))
      f = f + TrigPoly<S>::harmonic_cos(dim, k, amp);
    else
      f = f + TrigPoly<S>::harmonic_sin(dim, k, amp);
  }
  return f;
}

template <class S>
SymTensor<S> random_tensor(Rng& rng, int dim, int order, int max_freq) {
  SymTensor<S> t(dim, order);
  for (const MultiIndex& idx : multisets(dim, order))
    if (rng.chance(2, 3)) t.add_component(idx, random_trig<S>(rng, dim, max_freq, 1));
  return t;
}

template <class S>
SymTensorField<S> random_field(Rng& rng, int dim, int min_order, int max_order, int max_freq) {
  SymTensorField<S> f(dim);
  for (int k = min_order; k <= max_order; ++k)
    if (rng.chance(3, 4)) f.add_grade(random_tensor<S>(rng, dim, k, max_freq));
  return f;
}

template <class S>
SymCoTensor<S> random_cotensor(Rng& rng, int dim, int order, int max_freq) {
  SymCoTensor<S> t(dim, order);
  for (const MultiIndex& idx : multisets(dim, order))
    if (rng.chance(2, 3)) t.add_component(idx, random_trig<S>(rng, dim, max_freq, 1));
  return t;
}

template <class S>
SymCovField<S> random_cov_field(Rng& rng, int dim, int min_order, int max_order, int max_freq) {
  SymCovField<S> f(dim);
  for (int k = min_order; k <= max_order; ++k)
    if (rng.chance(3, 4)) f.add_grade(random_cotensor<S>(rng, dim, k, max_freq));
  return f;
}

template <class S>
PhaseFunction<S> random_phase(Rng& rng, int dim, int max_pdeg, int max_freq) {
  PhaseFunction<S> f(dim);
  for (int total = 0; total <= max_pdeg; ++total) {
    for (const MultiIndex& idx : multisets(dim, total))
      if (rng.chance(1, 2))
        f.add_term(degree_vector(idx, dim), random_trig<S>(rng, dim, max_freq, 1));
  }
  return f;
}

template <class S>
GaussOneForm<S> random_gauss_form(Rng& rng, int dim, int max_pdeg, int max_freq) {
  GaussOneForm<S> Pi(dim);
  for (int i = 0; i < dim; ++i) {
    Pi.dq[i] = GaussWeighted<S>(random_phase<S>(rng, dim, max_pdeg, max_freq));
    Pi.dp[i] = GaussWeighted<S>(random_phase<S>(rng, dim, max_pdeg, max_freq));
  }
  return Pi;
}

/// True when the first nonzero entry is positive; picks one representative
/// of each +-k pair so cos/sin partners are not enumerated twice.
inline bool is_half_space(const std::vector<int>& k) {
  for (int v : k) {
    if (v > 0) return true;
    if (v < 0) return false;
  }
  return false;
}

inline void enumerate_freqs(int dim, int bound, std::vector<std::vector<int>>& out) {
  std::vector<int> k(dim, -bound);
  while (true) {
    out.push_back(k);
    int i = dim - 1;
    while (i >= 0 && k[i] == bound) {
      k[i] = -bound;
      --i;
    }
    if (i < 0) break;
    ++k[i];
  }
}

/// Basis fields spanning every single-grade tensor with the given grades and
/// frequency box: one cos and one sin partner per (grade, sorted index, k).
template <class S>
std::vector<SymTensorField<S>> partner_fields(int dim, const std::vector<int>& grades,
                                              int freq_bound) {
  std::vector<SymTensorField<S>> out;
  std::vector<std::vector<int>> freqs;
  enumerate_freqs(dim, freq_bound, freqs);
  S one = scalar_traits<S>::from_int(1);
  for (int g : grades) {
    for (const MultiIndex& idx : multisets(dim, g)) {
      for (const auto& k : freqs) {
        bool zero = true;
        for (int v : k) zero = zero && v == 0;
        if (zero) {
          SymTensor<S> t(dim, g);
          t.set_component(idx, TrigPoly<S>::constant(dim, one));
          out.push_back(SymTensorField<S>::single(t));
          continue;
        }
        if (!is_half_space(k)) continue;
        SymTensor<S> tc(dim, g);
        tc.set_component(idx, TrigPoly<S>::harmonic_cos(dim, k, one));
        out.push_back(SymTensorField<S>::single(tc));
        SymTensor<S> ts(dim, g);
        ts.set_component(idx, TrigPoly<S>::harmonic_sin(dim, k, one));
        out.push_back(SymTensorField<S>::single(ts));
      }
    }
  }
  return out;
}

/// Absolute-value mass of every stored coefficient; zero iff the object is.
template <class S>
S residual_of(const TrigPoly<S>& f) {
  S acc = scalar_traits<S>::from_int(0);
  for (const auto& [k, c] : f.terms())
    acc = acc + scalar_traits<S>::abs(c.re) + scalar_traits<S>::abs(c.im);
  return acc;
}

template <class S, bool Cov>
S residual_of(const SymTensorT<S, Cov>& t) {
  S acc = scalar_traits<S>::from_int(0);
  for (const auto& [idx, f] : t.components()) acc = acc + residual_of(f);
  return acc;
}

template <class S, bool Cov>
S residual_of(const SymFieldT<S, Cov>& f) {
  S acc = scalar_traits<S>::from_int(0);
  for (const auto& [k, t] : f.grades()) acc = acc + residual_of(t);
  return acc;
}

template <class S>
S residual_of(const PhaseFunction<S>& f) {
  S acc = scalar_traits<S>::from_int(0);
  for (const auto& [a, g] : f.terms()) acc = acc + residual_of(g);
  return acc;
}

template <class S>
S residual_of(const HamVF<S>& X) {
  S acc = scalar_traits<S>::from_int(0);
  for (const auto& f : X.dq) acc = acc + residual_of(f);
  for (const auto& f : X.dp) acc = acc + residual_of(f);
  return acc;
}

template <class S>
S residual_of(const GaussOneForm<S>& Pi) {
  S acc = scalar_traits<S>::from_int(0);
  for (const auto& f : Pi.dq) acc = acc + residual_of(f.poly);
  for (const auto& f : Pi.dp) acc = acc + residual_of(f.poly);
  return acc;
}

template <class S>
S residual_of(const IntegralValue<S>& v) {
  return scalar_traits<S>::abs(v.coeff);
}

}  // namespace schouten
