#pragma once

// Brute-force element-level oracle.
//
// Over Z/n every finitely presented module is finite, so a 2-module can be
// realized literally: objects are the elements of deg0, morphisms x -> y the
// elements a of deg1 with y = x + ∂a. The verifiers below replay the
// element-level definitions of the categorical constructions exhaustively
// and compare them against the chain-level outputs; any disagreement is a
// defect in the chain-level formulas.
//
// Everything is capacity-capped (default 4096): enumerations whose size, or
// verifications whose total work, exceed the cap throw capacity_error, as
// does any enumeration over Z (out of scope even for finite modules).

#include <optional>
#include <string>
#include <vector>

#include "h2a/cohomology.hpp"
#include "h2a/relkc.hpp"
#include "h2a/twomod.hpp"

namespace h2a {

inline constexpr long oracle_default_cap = 4096;

// Element-level view of a finite module: element i is the mixed-radix tuple
// of i over the invariant factors, mapped through the canonicalization
// isomorphisms. Index arithmetic realizes the addition table.
struct EnumeratedModule {
  FpModule module;
  CanonicalizedModule can;
  std::vector<long> factors;
  long count = 1;

  IVec element(long i) const;          // presentation coordinates of element i
  long index_of(const IMat& x) const;  // index of the element any x represents
  long add(long i, long j) const;
  long neg(long i) const;
};

EnumeratedModule enumerate_module(const FpModule& m, long cap = oracle_default_cap);

// Element tables of a finite 2-module; |deg1|·|deg0| ≤ cap.
struct EnumeratedTwoMod {
  TwoMod a;
  EnumeratedModule deg1, deg0;
  std::vector<long> d_table;  // deg0 index of ∂(element i of deg1)

  long objects() const { return deg0.count; }
  long morphisms() const { return deg1.count; }
  // All morphisms x -> y, as deg1 element indices.
  std::vector<long> homset(long x, long y) const;
};

EnumeratedTwoMod enumerate_two_mod(const TwoMod& a, long cap = oracle_default_cap);

// The module of chain morphisms A -> B: pairs (f1, f0) with ∂f1 = f0∂,
// presented as the kernel of the square-defect map
// Hom(A₁,B₁) ⊕ Hom(A₀,B₀) -> Hom(A₁,B₀).
struct OneMorSpace {
  TwoMod a, b;
  HomModule h1, h0;
  ModuleSum hsum;     // h1.hom.module ⊕ h0.hom.module
  KernelData square;  // the space itself: square.ker.module

  OneMor materialize(const IMat& elt) const;  // elt in square.ker coordinates
};

OneMorSpace one_mor_space(const TwoMod& a, const TwoMod& b);

// Every 1-morphism A -> B (resp. every 2-morphism F ⇒ G), each exactly once
// up to equality of components, in a deterministic order.
std::vector<OneMor> all_one_mors(const TwoMod& a, const TwoMod& b,
                                 long cap = oracle_default_cap);
std::vector<TwoMor> all_two_mors(const OneMor& f, const OneMor& g,
                                 long cap = oracle_default_cap);

struct QuasiInverse {
  OneMor inv;     // G: B -> A
  TwoMor unit;    // id_A ⇒ G∘F
  TwoMor counit;  // F∘G ⇒ id_B
};

// Exhaustive search for a quasi-inverse; consistent with is_equivalence on
// every enumerable instance.
std::optional<QuasiInverse> find_quasi_inverse(const OneMor& f,
                                               long cap = oracle_default_cap);

struct VerifyReport {
  bool ok = true;
  long checks = 0;       // element-level facts confirmed
  std::string mismatch;  // description of the first failure, empty when ok

  void fail(const std::string& m) {
    if (ok) {
      ok = false;
      mismatch = m;
    }
  }
};

// Replays the element-level definition of the relative kernel: objects are
// pairs (x, m: F(x) -> 0) with G(m) = phi_x, morphisms u: (x, m) -> (x', m')
// those u: x -> x' with m' = m - f1(u). Certifies the bijection with the
// chain-level K on objects and on morphism targets.
VerifyReport verify_rel_kernel(const RelKernelData& data, long cap = oracle_default_cap);

// Replays the element-level definition of the relative cokernel: objects of
// C, morphism classes of pairs (y ∈ B, c: morphism of C) modulo the
// equivalence generated by (f0(x) + ∂m, g1(m) − h_phi(x)). Certifies class
// counts, the equivalence itself, boundaries, and object classes.
VerifyReport verify_rel_cokernel(const RelCokernelData& data, long cap = oracle_default_cap);

// Certifies that a biproduct's elements decompose componentwise: bijections
// in both degrees, additivity, boundary compatibility, and hom-set
// decomposition.
VerifyReport verify_biproduct(const TwoModSum& s, long cap = oracle_default_cap);

// Certifies a degree-n cohomology result against its element-level
// description: objects are the pairs (x, u: L_n(x) -> 0) compatible with
// alpha_n — replayed by verify_rel_kernel — and the adjoined morphism
// classes come from the relative cokernel along the factored L'_{n-1} —
// replayed by verify_rel_cokernel. Also certifies that the recorded stages
// are built from the complex's own differentials and cells, that the
// factorization identities glue the stages, and that the stored invariants
// match the result.
VerifyReport verify_cohomology_description(const CochainComplex& c, const CohomologyResult& res,
                                           long cap = oracle_default_cap);

// Element-level replay of relative 2-exactness at the middle of the window
// X --L--> A --F--> B --G--> C --M--> D with trivializing cells
// alpha: F∘L ⇒ 0, phi: G∘F ⇒ 0, gamma: M∘G ⇒ 0. G factors through the
// relative cokernel Q of (L, F, alpha) as G': Q -> C, and gamma is read on
// the objects of Q (which are those of B) as a trivialization of M∘G'. The
// verdict is the conjunction of
//   faithful: a loop class of Q carried to the zero morphism of C is the
//   zero class;
//   full onto compatible morphisms: whenever c: G'(q) -> G'(q') satisfies
//   M_1(c) + h_gamma(q') ≡ h_gamma(q), some u: q -> q' in Q has G'_1(u) = c.
// Incompatible trivializations throw input_error.
struct DirectExactness {
  bool verdict = false;
  bool faithful = false;
  bool compatible_full = false;
  long checks = 0;  // compatible morphisms and loop classes examined
};

DirectExactness direct_relative_two_exact(const OneMor& l, const TwoMor& alpha, const OneMor& f,
                                          const TwoMor& phi, const OneMor& g, const TwoMor& gamma,
                                          const OneMor& m, long cap = oracle_default_cap);

}  // namespace h2a
