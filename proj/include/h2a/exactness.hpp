#pragma once

// Exactness checkers for trivialized sequences of 2-modules.
//
// Relative: given the window
//     X --L--> A --F--> B --G--> C --M--> D
// with trivializing cells alpha: F∘L ⇒ 0, phi: G∘F ⇒ 0, gamma: M∘G ⇒ 0,
// the sequence is relative 2-exact at B exactly when the cohomology of the
// five-entry complex vanishes at the middle entry (both invariants of the
// cohomology 2-module are zero). The cells must satisfy the two coherence
// equations
//     G_1·h_alpha ≡ h_phi·L_0      (mod C.deg1 relations)
//     M_1·h_phi   ≡ h_gamma·F_0    (mod D.deg1 relations);
// violations of these, of the chain-map equations, or of the cells' own
// 2-morphism equations throw input_error naming the offending argument.
// Taking M (not just gamma) as an argument keeps the window determined even
// when gamma is degenerate.
//
// Plain: (F, phi, G) is 2-exact at the middle when the canonical comparison
// from A into the kernel of G (the relative kernel along the zero
// continuation) is full and essentially surjective. This is a stronger
// condition at the boundary of a sequence than the relative one: the
// comparison does not see any map into A, so loops of the kernel must
// already be reached from A's own degree 1.
//
// Certificates carry re-checkable evidence. For the relative checker the
// evidence is the invariant pair of the local cohomology (also stored in
// full). For the plain checker it is the pair of defects
//     pi0 = coker(pi0 of the comparison)      (essential surjectivity)
//     pi1 = coker(A.deg1 -> fullness pairs)   (fullness)
// so that in both cases: verdict == evidence.is_zero().

#include <optional>

#include "h2a/cochain.hpp"
#include "h2a/cohomology.hpp"
#include "h2a/relkc.hpp"

namespace h2a {

struct ExactnessCertificate {
  long point = 0;  // index of the tested entry in the assembled window
  bool verdict = false;
  PiPair evidence;  // zero exactly when the verdict holds

  // Relative checker: the measured local cohomology.
  std::optional<CohomologyResult> local;
  // Plain checker: the comparison into the kernel and its two components.
  std::optional<OneMor> comparison;
  bool comparison_full = false;
  bool comparison_ess_surjective = false;
};

ExactnessCertificate check_relative_two_exact(const OneMor& l, const TwoMor& alpha,
                                              const OneMor& f, const TwoMor& phi,
                                              const OneMor& g, const TwoMor& gamma,
                                              const OneMor& m);

ExactnessCertificate check_two_exact(const OneMor& f, const TwoMor& phi, const OneMor& g);

}  // namespace h2a
