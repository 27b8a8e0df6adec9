#include "h2a/relkc.hpp"

#include "h2a/error.hpp"

namespace h2a {

namespace {

// Shared validation of a trivialized sequence (F, G, phi: G∘F ⇒ 0).
void check_sequence(const OneMor& f, const OneMor& g, const TwoMor& phi) {
  require_input(f.dst.same_shape(g.src), "sequence does not compose: F's target is not G's source");
  require_input(one_mor_equal(phi.from, compose(g, f)), "phi does not start at G∘F");
  require_input(is_zero_mor(phi.to), "phi does not end at the zero morphism");
}

// The map (x, m) ↦ (f0(x) + ∂m, g1(m) − h_phi(x)) on A₀ ⊕ B₁, whose kernel
// carries the relative-kernel objects and whose image is the relative-
// cokernel quotient.
IMat mixed_map(const OneMor& f, const OneMor& g, const TwoMor& phi) {
  Ring ring = f.src.ring;
  return ring.reduce(
      block2x2(f.f0, f.dst.d, ring.reduce(IMat(-phi.h)), g.f1));
}

}  // namespace

RelKernelData relative_kernel(const OneMor& f, const OneMor& g, const TwoMor& phi) {
  check_sequence(f, g, phi);
  const TwoMod& a = f.src;
  const TwoMod& b = f.dst;
  const TwoMod& c = g.dst;
  Ring ring = a.ring;

  ModuleSum pair = direct_sum(a.deg0, b.deg1);
  ModuleSum target = direct_sum(b.deg0, c.deg1);
  ModuleHom theta = ModuleHom::of(pair.sum, target.sum, mixed_map(f, g, phi));
  KernelData kd = kernel(theta);

  // ∂_K(a) = (∂a, −f1(a)), expressed in the kernel's presentation.
  IMat raw = ring.reduce(vcat(a.d, IMat(-f.f1)));
  auto dk = preimage(kd.incl, raw);
  require_internal(dk.has_value(), "relative-kernel differential does not land in the kernel");
  TwoMod k = TwoMod::of(a.deg1, kd.ker.module, *dk);

  OneMor e = OneMor::of(k, a, imat_identity(a.deg1.gens),
                        ring.reduce(IMat(pair.proj1.mat * kd.incl.mat)));
  TwoMor eps = TwoMor::of(compose(f, e), OneMor::zero(k, b),
                          ring.reduce(IMat(pair.proj2.mat * kd.incl.mat)));
  return RelKernelData{k, e, eps, pair, kd.incl, f, g, phi};
}

RelCokernelData relative_cokernel(const OneMor& f, const OneMor& g, const TwoMor& phi) {
  check_sequence(f, g, phi);
  const TwoMod& b = f.dst;
  const TwoMod& c = g.dst;
  Ring ring = b.ring;

  ModuleSum pair = direct_sum(b.deg0, c.deg1);
  FpModule q1 = FpModule::presented(ring, pair.sum.gens,
                                    hcat(pair.sum.relations, mixed_map(f, g, phi)));
  IMat dq = hcat(ring.reduce(IMat(-g.f0)), c.d);
  TwoMod q = TwoMod::of(q1, c.deg0, dq);

  OneMor p = OneMor::of(c, q, pair.inj2.mat, imat_identity(c.deg0.gens));
  TwoMor piw = TwoMor::of(compose(p, g), OneMor::zero(b, q), pair.inj1.mat);
  return RelCokernelData{q, p, piw, pair, f, g, phi};
}

RelKernelData plain_kernel(const OneMor& f) {
  TwoMod zero = TwoMod::zero(f.src.ring);
  OneMor g = OneMor::zero(f.dst, zero);
  TwoMor phi = TwoMor::of(compose(g, f), OneMor::zero(f.src, zero),
                          IMat(0, f.src.deg0.gens));
  return relative_kernel(f, g, phi);
}

RelCokernelData plain_cokernel(const OneMor& g) {
  TwoMod zero = TwoMod::zero(g.src.ring);
  OneMor f = OneMor::zero(zero, g.src);
  TwoMor phi = TwoMor::of(compose(g, f), OneMor::zero(zero, g.dst),
                          IMat(g.dst.deg1.gens, 0));
  return relative_cokernel(f, g, phi);
}

std::pair<OneMor, TwoMor> factor_through_cokernel(const RelCokernelData& data,
                                                  const OneMor& h, const TwoMor& psi) {
  require_input(h.src.same_shape(data.g.dst), "H does not start at the sequence's end");
  require_input(one_mor_equal(psi.from, compose(h, data.g)), "psi does not start at H∘G");
  require_input(is_zero_mor(psi.to), "psi does not end at the zero morphism");
  require_input(two_mor_equal(whisker_right(psi, data.f), whisker_left(h, data.phi)),
                "incompatible trivializations: psi∘F differs from H∘phi on H∘G∘F");

  Ring ring = h.src.ring;
  // H'[y, c] = h_psi(y) + h1(c) in degree 1, H' = h0 in degree 0.
  OneMor hp = OneMor::of(data.coker, h.dst, ring.reduce(hcat(psi.h, h.f1)), h.f0);
  TwoMor iso = TwoMor::of(compose(hp, data.p), h,
                          imat_zero(h.dst.deg1.gens, h.src.deg0.gens));
  return {hp, iso};
}

std::pair<OneMor, TwoMor> factor_through_kernel(const RelKernelData& data,
                                                const OneMor& t, const TwoMor& tc) {
  require_input(t.dst.same_shape(data.f.src), "T does not end at the sequence's start");
  require_input(one_mor_equal(tc.from, compose(data.f, t)), "the cell does not start at F∘T");
  require_input(is_zero_mor(tc.to), "the cell does not end at the zero morphism");
  require_input(two_mor_equal(whisker_left(data.g, tc), whisker_right(data.phi, t)),
                "incompatible trivializations: G∘t differs from phi∘T on G∘F∘T");

  Ring ring = t.src.ring;
  // T'(x) = (t0(x), h_t(x)) in degree 0, T' = t1 in degree 1.
  auto t0 = preimage(data.incl, ring.reduce(vcat(t.f0, tc.h)));
  require_internal(t0.has_value(), "kernel factorization does not land in the kernel");
  OneMor tp = OneMor::of(t.src, data.ker, t.f1, *t0);
  TwoMor iso = TwoMor::of(compose(data.e, tp), t,
                          imat_zero(data.f.src.deg1.gens, t.src.deg0.gens));
  return {tp, iso};
}

}  // namespace h2a
