#pragma once

// The strict 2-category of 2-modules over Z or Z/n.
//
// A 2-module is a two-term complex d: deg1 -> deg0 of finitely presented
// modules. Its objects are elements of deg0; a morphism x -> y is an element
// a of deg1 with y = x + d(a); composition is addition in deg1.
//
// A 1-morphism F: A -> B is a chain map (f1, f0) with f0·d_A = d_B·f1 up to
// B's relations. A 2-morphism h: F => G is a map h: A.deg0 -> B.deg1 with
//     d_B·h ≡ g0 - f0   (mod B.deg0 relations)
//     h·d_A ≡ g1 - f1   (mod B.deg1 relations);
// vertical composition adds the h's, and every 2-morphism is invertible.
//
// pi0 = coker(d) classifies objects up to isomorphism, pi1 = ker(d) is the
// module of automorphisms of 0. A 1-morphism is an equivalence exactly when
// it induces isomorphisms on both.

#include <optional>

#include "h2a/fpmodule.hpp"
#include "h2a/linprob.hpp"

namespace h2a {

struct TwoMod {
  Ring ring;
  FpModule deg1, deg0;
  IMat d;  // deg0.gens x deg1.gens

  static TwoMod of(FpModule deg1, FpModule deg0, IMat d);
  static TwoMod zero(Ring ring);
  static TwoMod discrete(FpModule m);  // 0 -> M: objects only
  static TwoMod shifted(FpModule m);   // M -> 0: automorphisms only

  ModuleHom d_hom() const { return ModuleHom::of(deg1, deg0, d); }
  bool same_shape(const TwoMod& o) const {
    return ring == o.ring && deg1.same_shape(o.deg1) && deg0.same_shape(o.deg0) &&
           imat_equal(d, o.d);
  }
};

struct OneMor {
  TwoMod src, dst;
  IMat f1, f0;

  static OneMor of(TwoMod src, TwoMod dst, IMat f1, IMat f0);
  static OneMor zero(TwoMod src, TwoMod dst);
  static OneMor identity(TwoMod a);

  ModuleHom f1_hom() const { return ModuleHom::of(src.deg1, dst.deg1, f1); }
  ModuleHom f0_hom() const { return ModuleHom::of(src.deg0, dst.deg0, f0); }
};

OneMor compose(const OneMor& g, const OneMor& f);  // g after f
OneMor mor_add(const OneMor& f, const OneMor& g);
OneMor mor_sub(const OneMor& f, const OneMor& g);
OneMor mor_neg(const OneMor& f);
bool one_mor_equal(const OneMor& f, const OneMor& g);  // componentwise mod relations
bool is_zero_mor(const OneMor& f);

struct TwoMor {
  OneMor from, to;
  IMat h;  // dst.deg1.gens x src.deg0.gens

  static TwoMor of(OneMor from, OneMor to, IMat h);
  static TwoMor identity(const OneMor& f);
  // The strict data check without constructing (used by validators).
  static bool valid(const OneMor& from, const OneMor& to, const IMat& h);
  // Search for a 2-morphism F => G; nullopt when none exists. A nonzero seed
  // picks a different representative when several exist.
  static std::optional<TwoMor> find(const OneMor& from, const OneMor& to,
                                    std::uint64_t seed = 0);

  ModuleHom h_hom() const { return ModuleHom::of(from.src.deg0, from.dst.deg1, h); }
};

TwoMor vcomp(const TwoMor& second, const TwoMor& first);  // second after first
TwoMor vinv(const TwoMor& t);
TwoMor whisker_left(const OneMor& k, const TwoMor& t);   // k∘F => k∘G
TwoMor whisker_right(const TwoMor& t, const OneMor& e);  // F∘e => G∘e
bool two_mor_equal(const TwoMor& s, const TwoMor& t);

struct PiPair {
  CanonicalForm pi0, pi1;
  bool operator==(const PiPair& o) const { return pi0 == o.pi0 && pi1 == o.pi1; }
  bool is_zero() const { return pi0.is_zero() && pi1.is_zero(); }
};

CokernelData pi0_data(const TwoMod& a);
KernelData pi1_data(const TwoMod& a);
PiPair pis(const TwoMod& a);

ModuleHom pi0_map(const OneMor& f);
ModuleHom pi1_map(const OneMor& f);

bool is_faithful(const OneMor& f);
bool is_full(const OneMor& f);
bool is_ess_surjective(const OneMor& f);
bool is_equivalence(const OneMor& f);

struct TwoModSum {
  TwoMod sum;
  OneMor inj1, inj2, proj1, proj2;
};
TwoModSum biproduct(const TwoMod& a, const TwoMod& b);

}  // namespace h2a
