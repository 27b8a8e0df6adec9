#include "h2a/twomod.hpp"

namespace h2a {

TwoMod TwoMod::of(FpModule deg1, FpModule deg0, IMat d) {
  require_input(deg1.ring == deg0.ring, "2-module degrees over different rings");
  Ring ring = deg1.ring;
  TwoMod a{ring, std::move(deg1), std::move(deg0), ring.reduce(d)};
  require_input(a.d.rows() == a.deg0.gens && a.d.cols() == a.deg1.gens,
                "differential has wrong shape");
  require_input(well_defined(a.d_hom()), "differential is not a well-defined hom");
  return a;
}

TwoMod TwoMod::zero(Ring ring) {
  return TwoMod{ring, FpModule::zero_module(ring), FpModule::zero_module(ring), IMat(0, 0)};
}

TwoMod TwoMod::discrete(FpModule m) {
  Ring ring = m.ring;
  index_t gens = m.gens;
  return TwoMod{ring, FpModule::zero_module(ring), std::move(m), IMat(gens, 0)};
}

TwoMod TwoMod::shifted(FpModule m) {
  Ring ring = m.ring;
  index_t gens = m.gens;
  return TwoMod{ring, std::move(m), FpModule::zero_module(ring), IMat(0, gens)};
}

OneMor OneMor::of(TwoMod src, TwoMod dst, IMat f1, IMat f0) {
  require_input(src.ring == dst.ring, "morphism between different rings");
  Ring ring = src.ring;
  OneMor f{std::move(src), std::move(dst), ring.reduce(f1), ring.reduce(f0)};
  require_input(well_defined(f.f1_hom()), "degree-1 component not a well-defined hom");
  require_input(well_defined(f.f0_hom()), "degree-0 component not a well-defined hom");
  require_input(hom_equal(compose(f.f0_hom(), f.src.d_hom()),
                          compose(f.dst.d_hom(), f.f1_hom())),
                "morphism does not commute with the differentials");
  return f;
}

OneMor OneMor::zero(TwoMod src, TwoMod dst) {
  IMat z1 = imat_zero(dst.deg1.gens, src.deg1.gens);
  IMat z0 = imat_zero(dst.deg0.gens, src.deg0.gens);
  return OneMor{std::move(src), std::move(dst), std::move(z1), std::move(z0)};
}

OneMor OneMor::identity(TwoMod a) {
  IMat i1 = imat_identity(a.deg1.gens);
  IMat i0 = imat_identity(a.deg0.gens);
  return OneMor{a, a, std::move(i1), std::move(i0)};
}

OneMor compose(const OneMor& g, const OneMor& f) {
  require_input(f.dst.same_shape(g.src), "1-morphism composition endpoint mismatch");
  return OneMor{f.src, g.dst, f.src.ring.reduce(g.f1 * f.f1), f.src.ring.reduce(g.f0 * f.f0)};
}

OneMor mor_add(const OneMor& f, const OneMor& g) {
  require_input(f.src.same_shape(g.src) && f.dst.same_shape(g.dst), "1-morphism sum mismatch");
  return OneMor{f.src, f.dst, f.src.ring.reduce(f.f1 + g.f1), f.src.ring.reduce(f.f0 + g.f0)};
}

OneMor mor_sub(const OneMor& f, const OneMor& g) { return mor_add(f, mor_neg(g)); }

OneMor mor_neg(const OneMor& f) {
  return OneMor{f.src, f.dst, f.src.ring.reduce(-f.f1), f.src.ring.reduce(-f.f0)};
}

bool one_mor_equal(const OneMor& f, const OneMor& g) {
  require_input(f.src.same_shape(g.src) && f.dst.same_shape(g.dst),
                "1-morphism comparison endpoint mismatch");
  return hom_equal(f.f1_hom(), g.f1_hom()) && hom_equal(f.f0_hom(), g.f0_hom());
}

bool is_zero_mor(const OneMor& f) {
  return is_zero_hom(f.f1_hom()) && is_zero_hom(f.f0_hom());
}

bool TwoMor::valid(const OneMor& from, const OneMor& to, const IMat& h) {
  if (!from.src.same_shape(to.src) || !from.dst.same_shape(to.dst)) return false;
  const TwoMod& a = from.src;
  const TwoMod& b = from.dst;
  ModuleHom hh = ModuleHom::of(a.deg0, b.deg1, h);
  if (!well_defined(hh)) return false;
  bool deg0 = hom_equal(compose(b.d_hom(), hh), hom_sub(to.f0_hom(), from.f0_hom()));
  ModuleHom hd = ModuleHom::of(a.deg1, b.deg1, a.ring.reduce(h * a.d));
  bool deg1 = hom_equal(hd, hom_sub(to.f1_hom(), from.f1_hom()));
  return deg0 && deg1;
}

TwoMor TwoMor::of(OneMor from, OneMor to, IMat h) {
  IMat hr = from.src.ring.reduce(h);
  require_input(valid(from, to, hr), "2-morphism data does not satisfy its equations");
  return TwoMor{std::move(from), std::move(to), std::move(hr)};
}

TwoMor TwoMor::identity(const OneMor& f) {
  return TwoMor{f, f, imat_zero(f.dst.deg1.gens, f.src.deg0.gens)};
}

std::optional<TwoMor> TwoMor::find(const OneMor& from, const OneMor& to, std::uint64_t seed) {
  require_input(from.src.same_shape(to.src) && from.dst.same_shape(to.dst),
                "2-morphism endpoints mismatch");
  const TwoMod& a = from.src;
  const TwoMod& b = from.dst;
  LinearProblem p(a.ring);
  int h = p.add_unknown(b.deg1.gens, a.deg0.gens);
  int c0 = p.add_constraint(a.ring.reduce(from.f0 - to.f0), b.deg0.relations);
  p.add_term(c0, h, b.d, imat_identity(a.deg0.gens));
  int c1 = p.add_constraint(a.ring.reduce(from.f1 - to.f1), b.deg1.relations);
  p.add_term(c1, h, imat_identity(b.deg1.gens), a.d);
  if (a.deg0.relations.cols() > 0) {  // h must also be a well-defined hom
    int wd = p.add_constraint(imat_zero(b.deg1.gens, a.deg0.relations.cols()),
                              b.deg1.relations);
    p.add_term(wd, h, imat_identity(b.deg1.gens), a.deg0.relations);
  }
  auto sol = p.solve(seed);
  if (!sol) return std::nullopt;
  return TwoMor{from, to, (*sol)[0]};
}

TwoMor vcomp(const TwoMor& second, const TwoMor& first) {
  require_input(one_mor_equal(second.from, first.to),
                "vertical composition endpoint mismatch");
  return TwoMor{first.from, second.to, first.from.src.ring.reduce(first.h + second.h)};
}

TwoMor vinv(const TwoMor& t) {
  return TwoMor{t.to, t.from, t.from.src.ring.reduce(-t.h)};
}

TwoMor whisker_left(const OneMor& k, const TwoMor& t) {
  require_input(t.from.dst.same_shape(k.src), "left whisker endpoint mismatch");
  return TwoMor{compose(k, t.from), compose(k, t.to), k.src.ring.reduce(k.f1 * t.h)};
}

TwoMor whisker_right(const TwoMor& t, const OneMor& e) {
  require_input(e.dst.same_shape(t.from.src), "right whisker endpoint mismatch");
  return TwoMor{compose(t.from, e), compose(t.to, e), e.src.ring.reduce(t.h * e.f0)};
}

bool two_mor_equal(const TwoMor& s, const TwoMor& t) {
  require_input(s.from.src.same_shape(t.from.src) && s.from.dst.same_shape(t.from.dst),
                "2-morphism comparison endpoint mismatch");
  return hom_equal(s.h_hom(), t.h_hom());
}

CokernelData pi0_data(const TwoMod& a) { return cokernel(a.d_hom()); }

KernelData pi1_data(const TwoMod& a) { return kernel(a.d_hom()); }

PiPair pis(const TwoMod& a) {
  return PiPair{pi0_data(a).coker.form, pi1_data(a).ker.form};
}

ModuleHom pi0_map(const OneMor& f) {
  CokernelData cs = pi0_data(f.src), cd = pi0_data(f.dst);
  IMat m = cd.proj.mat * f.f0 * cs.coker.from_can.mat;
  return ModuleHom::of(cs.coker.module, cd.coker.module, m);
}

ModuleHom pi1_map(const OneMor& f) {
  KernelData ks = pi1_data(f.src), kd = pi1_data(f.dst);
  auto m = preimage(kd.incl, f.src.ring.reduce(f.f1 * ks.incl.mat));
  require_internal(m.has_value(), "degree-1 component does not preserve pi1");
  return ModuleHom::of(ks.ker.module, kd.ker.module, *m);
}

bool is_faithful(const OneMor& f) {
  KernelData ks = pi1_data(f.src);
  return is_injective_hom(compose(f.f1_hom(), ks.incl));
}

bool is_full(const OneMor& f) {
  // Fullness: every (u, b) with f0(u) = d_B(b) arises as (d_A(a), f1(a)).
  const TwoMod& a = f.src;
  const TwoMod& b = f.dst;
  ModuleSum s = direct_sum(a.deg0, b.deg1);
  ModuleHom theta = ModuleHom::of(s.sum, b.deg0, hcat(f.f0, a.ring.reduce(-b.d)));
  KernelData pairs = kernel(theta);
  IMat phi = vcat(a.d, f.f1);
  auto lift = preimage(pairs.incl, phi);
  require_internal(lift.has_value(), "chain square failed to land in the pair kernel");
  return is_surjective_hom(ModuleHom::of(a.deg1, pairs.ker.module, *lift));
}

bool is_ess_surjective(const OneMor& f) { return is_surjective_hom(pi0_map(f)); }

bool is_equivalence(const OneMor& f) {
  return is_iso_hom(pi0_map(f)) && is_iso_hom(pi1_map(f));
}

TwoModSum biproduct(const TwoMod& a, const TwoMod& b) {
  ModuleSum s1 = direct_sum(a.deg1, b.deg1);
  ModuleSum s0 = direct_sum(a.deg0, b.deg0);
  IMat d = block2x2(a.d, imat_zero(a.deg0.gens, b.deg1.gens),
                    imat_zero(b.deg0.gens, a.deg1.gens), b.d);
  TwoMod sum = TwoMod::of(s1.sum, s0.sum, d);
  return TwoModSum{
      sum,
      OneMor::of(a, sum, s1.inj1.mat, s0.inj1.mat),
      OneMor::of(b, sum, s1.inj2.mat, s0.inj2.mat),
      OneMor::of(sum, a, s1.proj1.mat, s0.proj1.mat),
      OneMor::of(sum, b, s1.proj2.mat, s0.proj2.mat),
  };
}

}  // namespace h2a
