#pragma once

// Bounded cochain complexes of 2-modules.
//
// A complex stores entries A_0..A_N, differentials L_n: A_n -> A_{n+1}, and
// chosen null-homotopies alpha_n: L_{n+1}∘L_n => 0 whose whiskerings agree:
//     (L_{n+2})_1 · h_{alpha_n}  ≡  h_{alpha_{n+1}} · (L_n)_0
// modulo the relations of (A_{n+3}).deg1. Outside the stored range every
// entry is the zero 2-module and every differential and cell is zero; the
// entry/diff/alpha accessors implement that convention so constructions near
// the ends need no special cases.
//
// A morphism of complexes carries square cells lambda_n: F_{n+1}∘L_n =>
// M_n∘F_n subject to the matching coherence with alpha and beta (the target
// complex's cells). A homotopy between parallel morphisms (F, lambda) and
// (G, mu) carries diagonal maps H_n: A_{n+1} -> B_n and cells
//     tau_n: F_n => M_{n-1}∘H_{n-1} + H_n∘L_n + G_n
// subject to the compatibility
//     h_{lambda_n} + (M_n)_1·h_{tau_n} + h_{beta_{n-1}}·(H_{n-1})_0
//       ≡  h_{tau_{n+1}}·(L_n)_0 + (H_{n+1})_1·h_{alpha_n} + h_{mu_n}
// modulo the relations of (B_{n+1}).deg1. On complexes of discrete
// 2-modules all cells vanish and these conditions degenerate to the
// classical cochain equations d² = 0, commuting squares, and
// g = f - (M·H + H·L).
//
// The `of` constructors check shapes only (mismatches throw input_error);
// the equations above are checked by the validators, which report every
// violated condition with its degree. An empty report means valid.

#include <string>
#include <vector>

#include "h2a/twomod.hpp"

namespace h2a {

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

struct CochainComplex {
  Ring ring;
  std::vector<TwoMod> entries;  // A_n, 0 <= n <= N
  std::vector<OneMor> diffs;    // L_n: A_n -> A_{n+1}, 0 <= n < N
  std::vector<TwoMor> alphas;   // alpha_n: L_{n+1}∘L_n => 0, 0 <= n < N-1

  static CochainComplex of(Ring ring, std::vector<TwoMod> entries,
                           std::vector<OneMor> diffs, std::vector<TwoMor> alphas);
  // The complex of discrete 2-modules induced by a classical complex of
  // modules (cells all zero); takes the maps d_n: M_n -> M_{n+1}.
  static CochainComplex discrete(const std::vector<ModuleHom>& maps);

  long top() const { return static_cast<long>(entries.size()) - 1; }
  TwoMod entry(long n) const;
  OneMor diff(long n) const;
  TwoMor alpha(long n) const;
  bool same_shape(const CochainComplex& o) const;
};

struct ComplexMor {
  CochainComplex source, target;  // equal top index
  std::vector<OneMor> maps;       // F_n: A_n -> B_n, 0 <= n <= N
  std::vector<TwoMor> lambdas;    // lambda_n: F_{n+1}∘L_n => M_n∘F_n, 0 <= n < N

  static ComplexMor of(CochainComplex source, CochainComplex target,
                       std::vector<OneMor> maps, std::vector<TwoMor> lambdas);
  static ComplexMor identity(const CochainComplex& c);
  static ComplexMor zero(const CochainComplex& source, const CochainComplex& target);

  long top() const { return source.top(); }
  OneMor map(long n) const;
  TwoMor lambda(long n) const;
};

struct CochainHomotopy {
  ComplexMor from, to;        // parallel morphisms
  std::vector<OneMor> hmaps;  // H_n: A_{n+1} -> B_n, 0 <= n < N
  std::vector<TwoMor> taus;   // tau_n, 0 <= n <= N

  static CochainHomotopy of(ComplexMor from, ComplexMor to, std::vector<OneMor> hmaps,
                            std::vector<TwoMor> taus);
  long top() const { return from.top(); }
  OneMor hmap(long n) const;
  TwoMor tau(long n) const;
};

// The morphism tau_n compares F_n against: M_{n-1}∘H_{n-1} + H_n∘L_n + G_n.
OneMor homotopy_flank(const CochainHomotopy& h, long n);

ValidationReport validate_complex(const CochainComplex& c);
ValidationReport validate_complex_mor(const ComplexMor& f);
ValidationReport check_homotopy(const CochainHomotopy& h);

// Composite of complex morphisms, `second` after `first`; the square cell of
// the composite at degree n is h_mu_n·(F_n)_0 + (G_{n+1})_1·h_lambda_n.
ComplexMor compose_complex_mor(const ComplexMor& first, const ComplexMor& second);

// Prepends `count` zero entries, shifting every stored index up by `count`.
// The default completes the complex with two zeros on the left, which is
// what bottom-degree cohomology constructions consume.
CochainComplex pad_left(const CochainComplex& c, long count = 2);

}  // namespace h2a
