#pragma once

// Relative kernels and cokernels of a trivialized composite.
//
// The input is a sequence  A --F--> B --G--> C  together with a 2-morphism
// phi: G∘F ⇒ 0.
//
// The relative kernel Ker(F, phi) has objects the pairs (x ∈ A, m: F(x) → 0)
// whose trivializations agree with phi under G, and morphisms u: x → x'
// with m' = m − f1(u). Chain realization:
//     K₀ = { (x, m) ∈ A₀ ⊕ B₁ : f0(x) + ∂m = 0 and g1(m) = h_phi(x) }
//     K₁ = A₁,   ∂_K(a) = (∂a, −f1(a))
// with e: K → A the x-projection (faithful by construction) and
// eps: F∘e ⇒ 0 the m-projection.
//
// The relative cokernel Coker(phi, G) keeps the objects of C and adjoins
// morphism classes [y, c]: z → z + ∂c − g0(y) for y ∈ B₀, c ∈ C₁:
//     Q₀ = C₀,   Q₁ = (B₀ ⊕ C₁) / W,   ∂_Q[y, c] = ∂c − g0(y)
// where W is the image of (x, m) ↦ (f0(x) + ∂m, g1(m) − h_phi(x)); p: C → Q
// is the identity on objects (essentially surjective by construction) and
// piw: p∘G ⇒ 0 sends y to the class [y, 0].
//
// Plain kernels and cokernels are the special cases
//     kernel of F   = relative_kernel(F, 0: B → 0, 0)
//     cokernel of G = relative_cokernel(0: 0 → B, G, 0).

#include <utility>

#include "h2a/twomod.hpp"

namespace h2a {

struct RelKernelData {
  TwoMod ker;      // K
  OneMor e;        // K -> A
  TwoMor eps;      // F∘e ⇒ 0
  ModuleSum pair;  // A₀ ⊕ B₁, the coordinates of K₀
  ModuleHom incl;  // K₀ -> pair.sum
  OneMor f, g;     // the input sequence
  TwoMor phi;
};

struct RelCokernelData {
  TwoMod coker;    // Q; coker.deg1 is presented on the generators of pair.sum
  OneMor p;        // C -> Q
  TwoMor piw;      // p∘G ⇒ 0
  ModuleSum pair;  // B₀ ⊕ C₁, the generator layout of Q₁
  OneMor f, g;     // the input sequence
  TwoMor phi;
};

RelKernelData relative_kernel(const OneMor& f, const OneMor& g, const TwoMor& phi);
RelCokernelData relative_cokernel(const OneMor& f, const OneMor& g, const TwoMor& phi);

// The canonical trivialized sequence A --F--> B --0--> 0 (resp. 0 → B → C)
// realizing the plain kernel of F (resp. plain cokernel of G).
RelKernelData plain_kernel(const OneMor& f);
RelCokernelData plain_cokernel(const OneMor& g);

// Given H: C → D with psi: H∘G ⇒ 0 compatible with phi (psi whiskered by F
// equals H whiskered into phi), produce H': Q → D with iso: H'∘p ⇒ H.
std::pair<OneMor, TwoMor> factor_through_cokernel(const RelCokernelData& data,
                                                  const OneMor& h, const TwoMor& psi);

// Given T: D → A with t: F∘T ⇒ 0 compatible with phi (t whiskered by G
// equals phi whiskered by T), produce T': D → K with iso: e∘T' ⇒ T.
std::pair<OneMor, TwoMor> factor_through_kernel(const RelKernelData& data,
                                                const OneMor& t, const TwoMor& tc);

}  // namespace h2a
