#pragma once

// Generic matched-pair machinery: a Lie algebra assembled from two
// subalgebras acting on each other by a left action (eta |> xi, valued in g)
// and a right action (eta <| xi, valued in h). Semidirect products are the
// degenerate cases with one action trivial.
//
// Everything is callback-based so the same code drives both the graded
// tensor-field instantiation and finite-dimensional smoke algebras. Carrier
// types must support +, binary - and unary -.

#include <functional>
#include <utility>

#include "schouten/scalar.hpp"

namespace schouten {

template <class G, class H>
struct MatchedElement {
  G g;
  H h;

  MatchedElement operator+(const MatchedElement& o) const { return {g + o.g, h + o.h}; }
  MatchedElement operator-(const MatchedElement& o) const { return {g - o.g, h - o.h}; }
  MatchedElement operator-() const { return {-g, -h}; }
  bool operator==(const MatchedElement& o) const { return g == o.g && h == o.h; }
};

template <class GD, class HD>
struct MatchedDual {
  GD g;
  HD h;

  MatchedDual operator+(const MatchedDual& o) const { return {g + o.g, h + o.h}; }
  MatchedDual operator-(const MatchedDual& o) const { return {g - o.g, h - o.h}; }
  MatchedDual operator-() const { return {-g, -h}; }
  bool operator==(const MatchedDual& o) const { return g == o.g && h == o.h; }
};

template <class G, class H>
struct MatchedActions {
  std::function<G(const G&, const G&)> bracket_g;
  std::function<H(const H&, const H&)> bracket_h;
  std::function<G(const H&, const G&)> left;   // eta |> xi
  std::function<H(const H&, const G&)> right;  // eta <| xi
};

/// [xi + eta, xi~ + eta~] =
///   ([xi,xi~] + eta |> xi~ - eta~ |> xi) + ([eta,eta~] + eta <| xi~ - eta~ <| xi)
template <class G, class H>
MatchedElement<G, H> matched_bracket(const MatchedActions<G, H>& acts,
                                     const MatchedElement<G, H>& a,
                                     const MatchedElement<G, H>& b) {
  G gpart = acts.bracket_g(a.g, b.g) + acts.left(a.h, b.g) - acts.left(b.h, a.g);
  H hpart = acts.bracket_h(a.h, b.h) + acts.right(a.h, b.g) - acts.right(b.h, a.g);
  return {std::move(gpart), std::move(hpart)};
}

/// Left-hand side minus right-hand side of the two compatibility conditions
/// that make the matched bracket satisfy Jacobi. Both residuals vanish
/// exactly for genuine mutual actions.
template <class G, class H>
std::pair<G, H> compatibility_residual(const MatchedActions<G, H>& acts, const H& eta,
                                       const H& eta2, const G& xi, const G& xi2) {
  G lhs_g = acts.left(eta, acts.bracket_g(xi, xi2));
  G rhs_g = acts.bracket_g(acts.left(eta, xi), xi2) + acts.bracket_g(xi, acts.left(eta, xi2)) +
            acts.left(acts.right(eta, xi), xi2) - acts.left(acts.right(eta, xi2), xi);

  H lhs_h = acts.right(acts.bracket_h(eta, eta2), xi);
  H rhs_h = acts.bracket_h(eta, acts.right(eta2, xi)) + acts.bracket_h(acts.right(eta, xi), eta2) +
            acts.right(eta, acts.left(eta2, xi)) - acts.right(eta2, acts.left(eta, xi));

  return {lhs_g - rhs_g, lhs_h - rhs_h};
}

/// Mutual actions recovered from an ambient bracket and complementary
/// projections: [eta, xi] splits as (eta |> xi) + (eta <| xi). The ambient
/// carrier K holds embedded copies of both subalgebras.
template <class K>
std::pair<K, K> derive_actions(const std::function<K(const K&, const K&)>& bracket,
                               const std::function<K(const K&)>& proj_g,
                               const std::function<K(const K&)>& proj_h, const K& eta,
                               const K& xi) {
  K b = bracket(eta, xi);
  K pg = proj_g(b);
  K ph = proj_h(b);
  detail::require(pg + ph == b, "projections are not complementary");
  return {std::move(pg), std::move(ph)};
}

template <class G, class H, class GD, class HD>
struct MatchedDualOps {
  std::function<GD(const G&, const GD&)> coad_g;    // subalgebra-level ad*_xi mu
  std::function<HD(const H&, const HD&)> coad_h;    // subalgebra-level ad*_eta nu
  std::function<GD(const GD&, const H&)> dual_left;   // mu <|* eta
  std::function<HD(const G&, const HD&)> dual_right;  // xi |>* nu
  std::function<GD(const H&, const HD&)> cross_a;     // a*_eta nu
  std::function<HD(const G&, const GD&)> cross_b;     // b*_xi mu
};

/// Coadjoint action of xi + eta on mu + nu:
///   (ad*_xi mu - mu <|* eta - a*_eta nu) + (ad*_eta nu + xi |>* nu + b*_xi mu)
/// with the convention <ad*_x mu, y> = <mu, [y, x]>.
template <class G, class H, class GD, class HD>
MatchedDual<GD, HD> coad_matched(const MatchedDualOps<G, H, GD, HD>& ops,
                                 const MatchedElement<G, H>& x, const MatchedDual<GD, HD>& mu) {
  GD gpart = ops.coad_g(x.g, mu.g) - ops.dual_left(mu.g, x.h) - ops.cross_a(x.h, mu.h);
  HD hpart = ops.coad_h(x.h, mu.h) + ops.dual_right(x.g, mu.h) + ops.cross_b(x.g, mu.g);
  return {std::move(gpart), std::move(hpart)};
}

}  // namespace schouten
