#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "h2a/relkc.hpp"
#include "test_util.hpp"

using namespace h2a;
using namespace testutil;

namespace {

const Ring r2 = Ring::integers_mod(Int(2));
const Ring r4 = Ring::integers_mod(Int(4));

// The 2-module (Z/4 --2--> Z/4) over Z/4.
TwoMod two_step_r4() {
  return TwoMod::of(FpModule::free_module(r4, 1), FpModule::free_module(r4, 1), mat({{2}}));
}

// The trivializing 2-cell with zero component for a composite that is the
// zero morphism.
TwoMor zero_cell(const OneMor& g, const OneMor& f) {
  OneMor gf = compose(g, f);
  REQUIRE(is_zero_mor(gf));
  return TwoMor::of(gf, OneMor::zero(f.src, g.dst),
                    imat_zero(g.dst.deg1.gens, f.src.deg0.gens));
}

}  // namespace

TEST_CASE("worked relative kernels") {
  SUBCASE("kernel of the identity is trivial") {
    TwoMod t = two_step_r4();
    TwoMod zero = TwoMod::zero(r4);
    OneMor g = OneMor::zero(t, zero);
    RelKernelData kd = relative_kernel(OneMor::identity(t), g, zero_cell(g, OneMor::identity(t)));
    CHECK(pis(kd.ker).is_zero());
    CHECK(is_faithful(kd.e));
  }
  SUBCASE("automorphisms of the middle become objects of the kernel") {
    // 0 -> B -> 0 with B = (Z/2 -> 0): the kernel picks up the loops of B.
    TwoMod a = TwoMod::zero(r2);
    TwoMod b = TwoMod::shifted(FpModule::free_module(r2, 1));
    TwoMod c = TwoMod::zero(r2);
    OneMor f = OneMor::zero(a, b);
    OneMor g = OneMor::zero(b, c);
    RelKernelData kd = relative_kernel(f, g, zero_cell(g, f));
    CHECK(pis(kd.ker).pi0.name() == "Z/2");
    CHECK(pis(kd.ker).pi1.name() == "0");
  }
  SUBCASE("the second condition distinguishes the relative from the plain kernel") {
    // F = 0: A -> B with A discrete Z/2 and B = (Z/2 -> 0). Relative to
    // G = id_B the pairs (x, m) must have m = 0; plainly they need not.
    TwoMod a = TwoMod::discrete(FpModule::free_module(r2, 1));
    TwoMod b = TwoMod::shifted(FpModule::free_module(r2, 1));
    OneMor f = OneMor::zero(a, b);
    RelKernelData rel = relative_kernel(f, OneMor::identity(b), zero_cell(OneMor::identity(b), f));
    CHECK(pis(rel.ker).pi0.name() == "Z/2");
    CHECK(pis(rel.ker).pi1.name() == "0");
    RelKernelData plain = plain_kernel(f);
    CHECK(pis(plain.ker).pi0.name() == "Z/2 + Z/2");
    CHECK(pis(plain.ker).pi1.name() == "0");
  }
}

TEST_CASE("worked relative cokernels") {
  SUBCASE("cokernel of the identity is trivial") {
    TwoMod t = two_step_r4();
    TwoMod zero = TwoMod::zero(r4);
    OneMor g = OneMor::zero(t, zero);
    RelCokernelData cd = relative_cokernel(OneMor::identity(t), g, zero_cell(g, OneMor::identity(t)));
    CHECK(pis(cd.coker).is_zero());
    CHECK(is_ess_surjective(cd.p));
  }
  SUBCASE("objects of the source shift into morphisms of the cokernel") {
    // Coker(0: A -> 0) with A discrete Z/2.
    TwoMod a = TwoMod::discrete(FpModule::free_module(r2, 1));
    RelCokernelData cd = plain_cokernel(OneMor::zero(a, TwoMod::zero(r2)));
    CHECK(pis(cd.coker).pi0.name() == "0");
    CHECK(pis(cd.coker).pi1.name() == "Z/2");
  }
}

TEST_CASE("plain kernel and cokernel of discrete morphisms match the classical ones") {
  SUBCASE("multiplication by 2 on Z/4") {
    FpModule z4 = FpModule::free_module(r4, 1);
    OneMor f = OneMor::of(TwoMod::discrete(z4), TwoMod::discrete(z4), IMat(0, 0), mat({{2}}));
    PiPair k = pis(plain_kernel(f).ker);
    CHECK(k.pi0.name() == "Z/2");
    CHECK(k.pi1.name() == "0");
    PiPair q = pis(plain_cokernel(f).coker);
    CHECK(q.pi0.name() == "Z/2");
    // The cokernel complex also remembers the kernel, one degree up.
    CHECK(q.pi1.name() == "Z/2");
  }
  SUBCASE("an injective map has no loops in its cokernel") {
    FpModule z2 = FpModule::cyclic(r4, Int(2));
    FpModule z4 = FpModule::free_module(r4, 1);
    OneMor f = OneMor::of(TwoMod::discrete(z2), TwoMod::discrete(z4), IMat(0, 0), mat({{2}}));
    PiPair q = pis(plain_cokernel(f).coker);
    CHECK(q.pi0.name() == "Z/2");
    CHECK(q.pi1.name() == "0");
  }
  SUBCASE("random discrete morphisms") {
    std::mt19937 gen(2024);
    for (int iter = 0; iter < 40; ++iter) {
      Ring ring = (iter % 2) ? r4 : r2;
      FpModule m = random_module(gen, ring), n = random_module(gen, ring);
      ModuleHom h = random_hom(gen, m, n);
      OneMor f = OneMor::of(TwoMod::discrete(m), TwoMod::discrete(n), IMat(0, 0), h.mat);
      PiPair k = pis(plain_kernel(f).ker);
      CHECK(k.pi0 == kernel(h).ker.form);
      CHECK(k.pi1.is_zero());
      PiPair q = pis(plain_cokernel(f).coker);
      CHECK(q.pi0 == cokernel(h).coker.form);
      CHECK(q.pi1 == kernel(h).ker.form);
    }
  }
}

TEST_CASE("kernel and cokernel of the zero morphism") {
  // Ker(0: A -> B) has pi0 = pi0(A) + pi1(B) and pi1 = pi1(A);
  // Coker(0: B -> C) has pi0 = pi0(C) and pi1 = pi0(B) + pi1(C).
  TwoMod a = TwoMod::discrete(FpModule::free_module(r4, 1));  // pi = (Z/4, 0)
  TwoMod t = two_step_r4();                                   // pi = (Z/2, Z/2)
  PiPair k = pis(plain_kernel(OneMor::zero(a, t)).ker);
  CHECK(k.pi0.name() == "Z/2 + Z/4");
  CHECK(k.pi1.name() == "0");
  PiPair q = pis(plain_cokernel(OneMor::zero(a, t)).coker);
  CHECK(q.pi0.name() == "Z/2");
  CHECK(q.pi1.name() == "Z/2 + Z/4");
}

TEST_CASE("structural invariants of the universal data") {
  std::mt19937 gen(5150);
  for (int iter = 0; iter < 24; ++iter) {
    Ring ring = (iter % 2) ? r4 : r2;
    TwoMod a = random_two_mod(gen, ring), b = random_two_mod(gen, ring);
    OneMor f = random_one_mor(gen, a, b);

    // The kernel of f relative to its own cokernel projection.
    RelCokernelData cd = plain_cokernel(f);
    RelKernelData kd = relative_kernel(f, cd.p, cd.piw);
    CHECK(is_faithful(kd.e));
    CHECK(one_mor_equal(kd.eps.from, compose(f, kd.e)));
    CHECK(is_zero_mor(kd.eps.to));

    // The cokernel of g relative to its own kernel inclusion.
    TwoMod c = random_two_mod(gen, ring);
    OneMor g = random_one_mor(gen, b, c);
    RelKernelData gk = plain_kernel(g);
    RelCokernelData qc = relative_cokernel(gk.e, g, gk.eps);
    CHECK(is_ess_surjective(qc.p));
    CHECK(one_mor_equal(qc.piw.from, compose(qc.p, g)));
    CHECK(is_zero_mor(qc.piw.to));
  }
}

TEST_CASE("factoring through the cokernel") {
  SUBCASE("the projection factors as the identity") {
    std::mt19937 gen(31);
    for (int iter = 0; iter < 8; ++iter) {
      Ring ring = (iter % 2) ? r4 : r2;
      TwoMod a = random_two_mod(gen, ring), b = random_two_mod(gen, ring);
      OneMor f = random_one_mor(gen, a, b);
      RelCokernelData cd = plain_cokernel(f);
      auto [hp, iso] = factor_through_cokernel(cd, cd.p, cd.piw);
      CHECK(one_mor_equal(hp, OneMor::identity(cd.coker)));
      CHECK(one_mor_equal(iso.from, compose(hp, cd.p)));
      CHECK(one_mor_equal(iso.to, cd.p));
    }
  }
  SUBCASE("a zero target factors as zero") {
    TwoMod a = two_step_r4();
    RelCokernelData cd = plain_cokernel(OneMor::identity(a));
    TwoMod zero = TwoMod::zero(r4);
    OneMor h = OneMor::zero(a, zero);
    auto [hp, iso] = factor_through_cokernel(cd, h, zero_cell(h, OneMor::identity(a)));
    CHECK(is_zero_mor(hp));
    CHECK(one_mor_equal(iso.to, h));
  }
  SUBCASE("random compatible factorizations, unique up to a 2-morphism") {
    std::mt19937 gen(98);
    for (int iter = 0; iter < 16; ++iter) {
      Ring ring = (iter % 2) ? r4 : r2;
      TwoMod a = random_two_mod(gen, ring), b = random_two_mod(gen, ring);
      OneMor f = random_one_mor(gen, a, b);
      RelCokernelData cd = plain_cokernel(f);
      TwoMod d = random_two_mod(gen, ring);
      OneMor w = random_one_mor(gen, cd.coker, d);
      OneMor h = compose(w, cd.p);
      TwoMor psi = whisker_left(w, cd.piw);
      auto [hp, iso] = factor_through_cokernel(cd, h, psi);
      CHECK(one_mor_equal(iso.from, compose(hp, cd.p)));
      CHECK(one_mor_equal(iso.to, h));
      CHECK(TwoMor::find(hp, w).has_value());
    }
  }
  SUBCASE("an incompatible trivialization is rejected") {
    // F = id on discrete Z/2, G = 0 into shifted Z/2: the valid cells
    // H∘G ⇒ 0 form two classes and only one is compatible with phi = 0.
    TwoMod a = TwoMod::discrete(FpModule::free_module(r2, 1));
    TwoMod c = TwoMod::shifted(FpModule::free_module(r2, 1));
    OneMor f = OneMor::identity(a);
    OneMor g = OneMor::zero(a, c);
    RelCokernelData cd = relative_cokernel(f, g, zero_cell(g, f));
    OneMor h = OneMor::identity(c);
    OneMor hg = compose(h, g);
    TwoMor good = TwoMor::of(hg, OneMor::zero(a, c), mat({{0}}));
    CHECK_NOTHROW(factor_through_cokernel(cd, h, good));
    TwoMor bad = TwoMor::of(hg, OneMor::zero(a, c), mat({{1}}));
    CHECK_THROWS_AS(factor_through_cokernel(cd, h, bad), input_error);
  }
}

TEST_CASE("factoring through the kernel") {
  SUBCASE("the inclusion factors as the identity") {
    std::mt19937 gen(47);
    for (int iter = 0; iter < 8; ++iter) {
      Ring ring = (iter % 2) ? r4 : r2;
      TwoMod a = random_two_mod(gen, ring), b = random_two_mod(gen, ring);
      OneMor f = random_one_mor(gen, a, b);
      RelCokernelData cd = plain_cokernel(f);
      RelKernelData kd = relative_kernel(f, cd.p, cd.piw);
      auto [tp, iso] = factor_through_kernel(kd, kd.e, kd.eps);
      CHECK(one_mor_equal(tp, OneMor::identity(kd.ker)));
      CHECK(one_mor_equal(iso.from, compose(kd.e, tp)));
      CHECK(one_mor_equal(iso.to, kd.e));
    }
  }
  SUBCASE("a zero source factors as zero") {
    TwoMod a = two_step_r4();
    TwoMod zero = TwoMod::zero(r4);
    RelKernelData kd = plain_kernel(OneMor::identity(a));
    OneMor t = OneMor::zero(zero, a);
    auto [tp, iso] = factor_through_kernel(kd, t, zero_cell(OneMor::identity(a), t));
    CHECK(is_zero_mor(tp));
    CHECK(one_mor_equal(iso.to, t));
  }
  SUBCASE("random compatible factorizations, unique up to a 2-morphism") {
    std::mt19937 gen(202);
    for (int iter = 0; iter < 16; ++iter) {
      Ring ring = (iter % 2) ? r2 : r4;
      TwoMod a = random_two_mod(gen, ring), b = random_two_mod(gen, ring);
      OneMor f = random_one_mor(gen, a, b);
      RelCokernelData cd = plain_cokernel(f);
      RelKernelData kd = relative_kernel(f, cd.p, cd.piw);
      TwoMod d = random_two_mod(gen, ring);
      OneMor v = random_one_mor(gen, d, kd.ker);
      OneMor t = compose(kd.e, v);
      TwoMor tc = whisker_right(kd.eps, v);
      auto [tp, iso] = factor_through_kernel(kd, t, tc);
      CHECK(one_mor_equal(iso.from, compose(kd.e, tp)));
      CHECK(one_mor_equal(iso.to, t));
      CHECK(TwoMor::find(tp, v).has_value());
    }
  }
  SUBCASE("an incompatible trivialization is rejected") {
    // F = 0 from discrete Z/2 into shifted Z/2, G = id: the cells F∘T ⇒ 0
    // for T = id form two classes and only one satisfies the G-condition.
    TwoMod a = TwoMod::discrete(FpModule::free_module(r2, 1));
    TwoMod b = TwoMod::shifted(FpModule::free_module(r2, 1));
    OneMor f = OneMor::zero(a, b);
    RelKernelData kd = relative_kernel(f, OneMor::identity(b), zero_cell(OneMor::identity(b), f));
    OneMor t = OneMor::identity(a);
    OneMor ft = compose(f, t);
    TwoMor good = TwoMor::of(ft, OneMor::zero(a, b), mat({{0}}));
    CHECK_NOTHROW(factor_through_kernel(kd, t, good));
    TwoMor bad = TwoMor::of(ft, OneMor::zero(a, b), mat({{1}}));
    CHECK_THROWS_AS(factor_through_kernel(kd, t, bad), input_error);
  }
}
