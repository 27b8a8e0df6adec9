#include "h2a/cohomology.hpp"

#include <string>
#include <utility>

#include "h2a/error.hpp"

namespace h2a {

namespace {

void require_valid(const ValidationReport& rep, const std::string& what) {
  if (!rep.ok()) throw input_error(what + ": " + rep.violations.front());
}

// The induced morphism between already-computed cohomology results of the
// endpoints of f at degree n. On kernel coordinates (x ∈ (A_n)₀,
// m ∈ (A_{n+1})₁) the degree-0 component is (F_n x, F_{n+1} m − h_lambda_n x),
// factored through the target's kernel inclusion; on the adjoined-morphism
// generators (y ∈ (A_{n-1})₀, c ∈ (A_n)₁) the degree-1 component is
// [F_{n-1} y, F_n c + h_lambda_{n-1} y].
OneMor induced_between(const ComplexMor& f, long n, const CohomologyResult& src,
                       const CohomologyResult& dst) {
  const Ring& ring = f.source.ring;

  const ModuleSum& ks = src.kernel.pair;
  const ModuleSum& kd = dst.kernel.pair;
  IMat t0 = kd.inj1.mat * f.map(n).f0 * ks.proj1.mat +
            kd.inj2.mat * (f.map(n + 1).f1 * ks.proj2.mat - f.lambda(n).h * ks.proj1.mat);
  auto deg0 = preimage(dst.kernel.incl, IMat(t0 * src.kernel.incl.mat));
  require_internal(deg0.has_value(), "induced_map: image misses the target kernel");

  const ModuleSum& qs = src.cokernel.pair;
  const ModuleSum& qd = dst.cokernel.pair;
  IMat deg1 = qd.inj1.mat * f.map(n - 1).f0 * qs.proj1.mat +
              qd.inj2.mat * (f.map(n).f1 * qs.proj2.mat + f.lambda(n - 1).h * qs.proj1.mat);
  return OneMor::of(src.H, dst.H, ring.reduce(deg1), ring.reduce(*deg0));
}

}  // namespace

CohomologyResult cohomology(const CochainComplex& c0, long n) {
  require_input(n >= 0 && n <= c0.top(), "cohomology: degree out of range");
  CochainComplex c = pad_left(c0, 2);
  long m = n + 2;

  RelKernelData kd = relative_kernel(c.diff(m), c.diff(m + 1), c.alpha(m));
  auto lifted = factor_through_kernel(kd, c.diff(m - 1), c.alpha(m - 1));

  // The cell of alpha_{n-2} lands in (A_n).deg1, which the kernel keeps as
  // its own degree-1 module, so the same matrix trivializes the composite
  // into the kernel; that this is a 2-morphism is asserted, not assumed.
  OneMor composite = compose(lifted.first, c.diff(m - 2));
  OneMor vanish = OneMor::zero(c.entry(m - 2), kd.ker);
  IMat cell = c.ring.reduce(c.alpha(m - 2).h);
  require_internal(TwoMor::valid(composite, vanish, cell),
                   "cohomology: trivializing cell fails to descend to the kernel");
  TwoMor abar{composite, vanish, cell};

  RelCokernelData qd = relative_cokernel(c.diff(m - 2), lifted.first, abar);
  TwoMod h = qd.coker;
  PiPair p = pis(h);
  return CohomologyResult{n,
                          std::move(h),
                          p,
                          std::move(kd),
                          std::move(lifted.first),
                          std::move(lifted.second),
                          std::move(qd)};
}

OneMor induced_map(const ComplexMor& f, long n) {
  require_input(n >= 0 && n <= f.top(), "induced_map: degree out of range");
  require_valid(validate_complex_mor(f), "induced_map");
  CohomologyResult src = cohomology(f.source, n);
  CohomologyResult dst = cohomology(f.target, n);
  return induced_between(f, n, src, dst);
}

TwoMor homotopy_witness(const CochainHomotopy& h, long n) {
  require_input(n >= 0 && n <= h.top(), "homotopy_witness: degree out of range");
  require_valid(check_homotopy(h), "homotopy_witness");

  CohomologyResult src = cohomology(h.from.source, n);
  CohomologyResult dst = cohomology(h.from.target, n);
  OneMor from = induced_between(h.from, n, src, dst);
  OneMor to = induced_between(h.to, n, src, dst);

  // Cell on kernel coordinates: (x, m) ↦ [H_{n-1} x, h_tau_n x + H_n m].
  const ModuleSum& ks = src.kernel.pair;
  const ModuleSum& qd = dst.cokernel.pair;
  IMat t = qd.inj1.mat * h.hmap(n - 1).f0 * ks.proj1.mat +
           qd.inj2.mat * (h.tau(n).h * ks.proj1.mat + h.hmap(n).f1 * ks.proj2.mat);
  IMat cell = h.from.source.ring.reduce(IMat(t * src.kernel.incl.mat));
  require_internal(TwoMor::valid(from, to, cell),
                   "homotopy_witness: cell fails the 2-morphism equations");
  return TwoMor{std::move(from), std::move(to), std::move(cell)};
}

}  // namespace h2a
