#pragma once

// Cohomology 2-modules of a cochain complex of 2-modules.
//
// At degree n (computed on the complex padded with two zero entries on the
// left, so no degree is special):
//
//   K        the relative kernel of L_n over L_{n+1}, trivialized by alpha_n;
//   L'_{n-1} the factorization of L_{n-1} through K, witnessed by alpha_{n-1};
//   abar     the trivialization L'_{n-1}∘L_{n-2} ⇒ 0 obtained by reading the
//            cell of alpha_{n-2} in the kernel presentation (K keeps the
//            degree-1 module of A_n, so the same matrix applies; its
//            well-definedness is asserted during construction);
//   H^n      the relative cokernel of L'_{n-1} over L_{n-2}, trivialized
//            by abar.
//
// On complexes of discrete 2-modules this degenerates to
//   pi0(H^n) = ker(L_n)/im(L_{n-1})      (the classical H^n) and
//   pi1(H^n) = ker(L_{n-1})/im(L_{n-2})  (the classical H^{n-1}).
//
// A morphism of complexes (F, lambda) induces a morphism H^n(F): on kernel
// coordinates (x, m) it acts by (F_n x, F_{n+1} m − h_lambda_n x), and on
// the adjoined morphism classes [y, c] by [F_{n-1} y, F_n c + h_lambda_{n-1} y].
// Composition is preserved on the nose (up to the presentations' relations).
//
// A homotopy h between (F, lambda) and (G, mu) yields an explicit 2-morphism
// H^n(F) ⇒ H^n(G) with cell (x, m) ↦ [H_{n-1} x, h_tau_n x + H_n m]; its
// construction validates the 2-morphism equations, which is the machine
// content of homotopy invariance.

#include "h2a/cochain.hpp"
#include "h2a/relkc.hpp"

namespace h2a {

struct CohomologyResult {
  long n = 0;                // degree
  TwoMod H;                  // chain realization of the cohomology 2-module
  PiPair pis;                // invariants of H
  RelKernelData kernel;      // K, with e: K -> A_n and eps: L_n∘e ⇒ 0
  OneMor lifted;             // L'_{n-1}: A_{n-1} -> K
  TwoMor lifted_iso;         // e∘L'_{n-1} ⇒ L_{n-1}
  RelCokernelData cokernel;  // H = cokernel.coker
};

// Requires 0 <= n <= c.top() (throws input_error otherwise).
CohomologyResult cohomology(const CochainComplex& c, long n);

// The induced morphism H^n(source) -> H^n(target) of a valid complex
// morphism; throws input_error when the morphism fails validation or the
// degree is out of range.
OneMor induced_map(const ComplexMor& f, long n);

// The 2-morphism induced_map(h.from, n) ⇒ induced_map(h.to, n) of a valid
// homotopy; throws input_error when the homotopy fails validation or the
// degree is out of range.
TwoMor homotopy_witness(const CochainHomotopy& h, long n);

}  // namespace h2a
