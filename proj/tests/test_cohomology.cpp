#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "h2a/cohomology.hpp"
#include "h2a/error.hpp"
#include "test_util.hpp"

using namespace h2a;
using namespace testutil;

namespace {

Ring r2() { return Ring::integers_mod(Int(2)); }
Ring r4() { return Ring::integers_mod(Int(4)); }
Ring r8() { return Ring::integers_mod(Int(8)); }

ModuleHom times(const Ring& r, long k) {
  FpModule m = FpModule::free_module(r, 1);
  return ModuleHom::of(m, m, mat({{k}}));
}

// Independent check for complexes of discrete 2-modules: the classical
// cohomology ker(d_n)/im(d_{n-1}) of the underlying module complex, computed
// from kernel() and a preimage lift only.
CanonicalForm classical_cohomology(const CochainComplex& c, long n) {
  ModuleHom dn = c.diff(n).f0_hom();
  KernelData kd = kernel(dn);
  ModuleHom dprev = c.diff(n - 1).f0_hom();
  auto lift = preimage(kd.incl, dprev.mat);
  REQUIRE(lift.has_value());
  FpModule q = FpModule::presented(c.ring, kd.ker.module.gens,
                                   hcat(kd.ker.module.relations, *lift));
  return canonical_form(q);
}

void check_classical_agreement(const CochainComplex& c) {
  for (long n = 0; n <= c.top(); ++n) {
    CohomologyResult r = cohomology(c, n);
    CHECK(r.pis == pis(r.H));
    CHECK(r.pis.pi0 == classical_cohomology(c, n));
    CHECK(r.pis.pi1 == classical_cohomology(c, n - 1));
  }
}

// A scalar multiple of the identity on a complex of discrete 2-modules built
// from rank-one free modules (always a morphism of complexes).
ComplexMor scale_mor(const CochainComplex& a, long s) {
  std::vector<OneMor> maps;
  std::vector<TwoMor> lambdas;
  for (long k = 0; k <= a.top(); ++k)
    maps.push_back(OneMor::of(a.entries[k], a.entries[k], IMat(0, 0), mat({{s}})));
  for (long k = 0; k < a.top(); ++k)
    lambdas.push_back(TwoMor{compose(maps[k + 1], a.diffs[k]), compose(a.diffs[k], maps[k]),
                             imat_zero(0, 1)});
  return ComplexMor{a, a, std::move(maps), std::move(lambdas)};
}

}  // namespace

TEST_CASE("frozen cohomology of a discrete complex over Z/4") {
  Ring r = r4();
  CochainComplex c = CochainComplex::discrete({times(r, 2), times(r, 2)});

  CohomologyResult h0 = cohomology(c, 0);
  CHECK(h0.pis.pi0 == CanonicalForm{{Int(2)}, 0});
  CHECK(h0.pis.pi1.is_zero());

  CohomologyResult h1 = cohomology(c, 1);
  CHECK(h1.pis.pi0.is_zero());
  CHECK(h1.pis.pi1 == CanonicalForm{{Int(2)}, 0});

  CohomologyResult h2 = cohomology(c, 2);
  CHECK(h2.pis.pi0 == CanonicalForm{{Int(2)}, 0});
  CHECK(h2.pis.pi1.is_zero());

  check_classical_agreement(c);

  // Provenance: H is the relative cokernel, the lifted map factors the
  // differential through the kernel inclusion, and the recorded inputs are
  // the differentials near the degree.
  CHECK(h1.H.same_shape(h1.cokernel.coker));
  CHECK(h1.pis == pis(h1.H));
  CHECK(one_mor_equal(compose(h1.kernel.e, h1.lifted), c.diff(0)));
  CHECK(one_mor_equal(h1.kernel.f, c.diff(1)));
  CHECK(one_mor_equal(h1.cokernel.g, h1.lifted));
  CHECK(is_zero_mor(h1.lifted_iso.to) == is_zero_mor(compose(h1.kernel.e, h1.lifted)));

  CHECK_THROWS_AS(cohomology(c, -1), input_error);
  CHECK_THROWS_AS(cohomology(c, 3), input_error);
}

TEST_CASE("zero and exact discrete complexes have vanishing cohomology") {
  Ring r = r4();
  TwoMod z = TwoMod::zero(r);
  CochainComplex zero_complex = CochainComplex::of(
      r, {z, z, z}, {OneMor::zero(z, z), OneMor::zero(z, z)},
      {TwoMor::of(OneMor::zero(z, z), OneMor::zero(z, z), imat_zero(0, 0))});
  for (long n = 0; n <= 2; ++n) {
    CohomologyResult res = cohomology(zero_complex, n);
    CHECK(res.pis.pi0.is_zero());
    CHECK(res.pis.pi1.is_zero());
  }

  // 0 -> Z/2 -> Z/4 -> Z/2 -> 0 as a discrete complex: exact, so every
  // degree vanishes, including both ends.
  FpModule two = FpModule::cyclic(r, Int(2));
  FpModule four = FpModule::free_module(r, 1);
  ModuleHom d0 = ModuleHom::of(two, four, mat({{2}}));
  ModuleHom d1 = ModuleHom::of(four, two, mat({{1}}));
  CochainComplex ses = CochainComplex::discrete({d0, d1});
  REQUIRE(validate_complex(ses).ok());
  for (long n = 0; n <= 2; ++n) {
    CohomologyResult res = cohomology(ses, n);
    CHECK(res.pis.pi0.is_zero());
    CHECK(res.pis.pi1.is_zero());
  }
  check_classical_agreement(ses);
}

TEST_CASE("a one-entry complex reproduces its entry, including over Z") {
  Ring r = r4();
  FpModule m4 = FpModule::free_module(r, 1);
  TwoMod two_step = TwoMod::of(m4, m4, mat({{2}}));
  CochainComplex single = CochainComplex::of(r, {two_step}, {}, {});
  CohomologyResult res = cohomology(single, 0);
  CHECK(res.pis == pis(two_step));
  CHECK(res.pis.pi0 == CanonicalForm{{Int(2)}, 0});
  CHECK(res.pis.pi1 == CanonicalForm{{Int(2)}, 0});

  Ring z = Ring::integers();
  FpModule zfree = FpModule::free_module(z, 1);
  TwoMod zstep = TwoMod::of(zfree, zfree, mat({{2}}));
  CochainComplex zsingle = CochainComplex::of(z, {zstep}, {}, {});
  CohomologyResult zres = cohomology(zsingle, 0);
  CHECK(zres.pis == pis(zstep));
  CHECK(zres.pis.pi0 == CanonicalForm{{Int(2)}, 0});
  CHECK(zres.pis.pi1.is_zero());
}

TEST_CASE("identity and zero morphisms induce equivalences and zero maps") {
  Ring r = r4();
  CochainComplex c = CochainComplex::discrete({times(r, 2), times(r, 2)});
  ComplexMor id = ComplexMor::identity(c);
  ComplexMor zero = ComplexMor::zero(c, c);
  for (long n = 0; n <= 2; ++n) {
    OneMor ind_id = induced_map(id, n);
    CHECK(is_equivalence(ind_id));
    CHECK(hom_equal(pi0_map(ind_id), ModuleHom::identity(pi0_map(ind_id).src)));

    OneMor ind_zero = induced_map(zero, n);
    ModuleHom p0 = pi0_map(ind_zero);
    ModuleHom p1 = pi1_map(ind_zero);
    CHECK(hom_equal(p0, ModuleHom::zero(p0.src, p0.dst)));
    CHECK(hom_equal(p1, ModuleHom::zero(p1.src, p1.dst)));
  }

  // An invalid morphism (squares do not commute) is rejected.
  ComplexMor bad = scale_mor(c, 1);
  bad.maps[1] = OneMor::of(c.entries[1], c.entries[1], IMat(0, 0), mat({{2}}));
  for (long k = 0; k < c.top(); ++k)
    bad.lambdas[k] = TwoMor{compose(bad.maps[k + 1], c.diffs[k]),
                            compose(c.diffs[k], bad.maps[k]), imat_zero(0, 1)};
  REQUIRE(!validate_complex_mor(bad).ok());
  CHECK_THROWS_AS(induced_map(bad, 1), input_error);
  CHECK_THROWS_AS(induced_map(id, -1), input_error);
  CHECK_THROWS_AS(induced_map(id, 3), input_error);
}

TEST_CASE("a classical homotopy yields equal pi maps and a validating witness") {
  Ring r = r8();
  CochainComplex a = CochainComplex::discrete({times(r, 4)});
  ComplexMor f = scale_mor(a, 1);
  ComplexMor g = scale_mor(a, 5);
  OneMor h0 = OneMor::of(a.entries[1], a.entries[0], IMat(0, 0), mat({{1}}));
  std::vector<TwoMor> taus;
  CochainHomotopy partial{f, g, {h0}, {}};
  for (long k = 0; k <= 1; ++k)
    taus.push_back(TwoMor::of(f.maps[k], homotopy_flank(partial, k), imat_zero(0, 1)));
  CochainHomotopy h = CochainHomotopy::of(f, g, {h0}, taus);
  REQUIRE(check_homotopy(h).ok());

  for (long n = 0; n <= 1; ++n) {
    CHECK(hom_equal(pi0_map(induced_map(f, n)), pi0_map(induced_map(g, n))));
    CHECK(hom_equal(pi1_map(induced_map(f, n)), pi1_map(induced_map(g, n))));
    TwoMor w = homotopy_witness(h, n);
    CHECK(one_mor_equal(w.from, induced_map(f, n)));
    CHECK(one_mor_equal(w.to, induced_map(g, n)));
  }

  // In bottom degree the target has no room for a cell, so the witness is
  // forced to be zero; in top degree the witness cell is genuinely nonzero.
  TwoMor w0 = homotopy_witness(h, 0);
  CHECK(w0.h.rows() == 0);
  TwoMor w1 = homotopy_witness(h, 1);
  ModuleHom cell1 = ModuleHom::of(w1.from.src.deg0, w1.from.dst.deg1, w1.h);
  CHECK(!hom_equal(cell1, ModuleHom::zero(cell1.src, cell1.dst)));

  // The zero homotopy from a morphism to itself has the zero witness.
  std::vector<TwoMor> trivial_taus;
  CochainHomotopy trivial_partial{f, f, {OneMor::zero(a.entries[1], a.entries[0])}, {}};
  for (long k = 0; k <= 1; ++k)
    trivial_taus.push_back(
        TwoMor::of(f.maps[k], homotopy_flank(trivial_partial, k), imat_zero(0, 1)));
  CochainHomotopy trivial = CochainHomotopy::of(
      f, f, {OneMor::zero(a.entries[1], a.entries[0])}, trivial_taus);
  for (long n = 0; n <= 1; ++n) {
    TwoMor w = homotopy_witness(trivial, n);
    ModuleHom cell = ModuleHom::of(w.from.src.deg0, w.from.dst.deg1, w.h);
    CHECK(hom_equal(cell, ModuleHom::zero(cell.src, cell.dst)));
    CHECK(one_mor_equal(w.from, w.to));
  }

  CHECK_THROWS_AS(homotopy_witness(h, -1), input_error);
  CHECK_THROWS_AS(homotopy_witness(h, 2), input_error);
}

TEST_CASE("functoriality holds on the nose for random pairs over Z/4") {
  std::mt19937 gen(20260814);
  Ring r = r4();
  for (int it = 0; it < 50; ++it) {
    CochainComplex a = random_cochain_complex(gen, r, 2);
    CochainComplex b = random_cochain_complex(gen, r, 2);
    CochainComplex c = random_cochain_complex(gen, r, 2);
    ComplexMor f = random_complex_mor(gen, a, b);
    ComplexMor g = random_complex_mor(gen, b, c);
    ComplexMor gf = compose_complex_mor(f, g);
    for (long n = 0; n <= 2; ++n) {
      OneMor lhs = induced_map(gf, n);
      OneMor rhs = compose(induced_map(g, n), induced_map(f, n));
      CHECK(one_mor_equal(lhs, rhs));
      CHECK(hom_equal(pi0_map(lhs), pi0_map(rhs)));
      CHECK(hom_equal(pi1_map(lhs), pi1_map(rhs)));
    }
  }
}

TEST_CASE("random homotopies produce validating witnesses at every degree") {
  std::mt19937 gen(97531);
  for (int it = 0; it < 8; ++it) {
    Ring r = (it % 2 == 0) ? r4() : r2();
    long len = 2 + (it % 2);
    CochainComplex a = random_cochain_complex(gen, r, len);
    CochainComplex b = random_cochain_complex(gen, r, len);
    ComplexMor f = random_complex_mor(gen, a, b);
    CochainHomotopy h = random_deformation(gen, f);
    REQUIRE(check_homotopy(h).ok());
    for (long n = 0; n <= len; ++n) {
      TwoMor w = homotopy_witness(h, n);
      CHECK(one_mor_equal(w.from, induced_map(h.from, n)));
      CHECK(one_mor_equal(w.to, induced_map(h.to, n)));
      CHECK(TwoMor::valid(w.from, w.to, w.h));
    }
  }
}

TEST_CASE("random discrete complexes agree with the classical oracle") {
  std::mt19937 gen(424242);
  for (int it = 0; it < 10; ++it) {
    Ring r = (it % 2 == 0) ? r4() : r2();
    CochainComplex c = random_discrete_complex(gen, r, 2 + (it % 2));
    REQUIRE(validate_complex(c).ok());
    check_classical_agreement(c);
  }
}
