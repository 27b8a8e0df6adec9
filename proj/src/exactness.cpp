#include "h2a/exactness.hpp"

#include <string>

#include "h2a/error.hpp"

namespace h2a {

namespace {

// Rename the window validator's degree-indexed reports after the checker's
// own arguments (diffs L, F, G, M; cells alpha, phi, gamma).
std::string named_violation(const std::string& v) {
  static const char* diff_names[] = {"L", "F", "G", "M"};
  static const char* cell_names[] = {"alpha", "phi", "gamma"};
  if (v.rfind("diff[", 0) == 0 && v[5] >= '0' && v[5] <= '3')
    return std::string(diff_names[v[5] - '0']) + " is not a chain map";
  if (v.rfind("alpha[", 0) == 0 && v[6] >= '0' && v[6] <= '2')
    return std::string(cell_names[v[6] - '0']) + " is not a valid 2-morphism";
  if (v.rfind("cell coherence fails at ", 0) == 0)
    return v.back() == '0' ? "alpha is not compatible with phi"
                           : "phi is not compatible with gamma";
  return v;
}

// Check that `cell` trivializes after∘before and rebuild it on the literal
// composite, so the assembled window passes the constructor's shape checks.
TwoMor trivialization(const OneMor& after, const OneMor& before, const TwoMor& cell,
                      const char* what) {
  OneMor composite = compose(after, before);
  bool ok = cell.from.src.same_shape(composite.src) && cell.from.dst.same_shape(composite.dst) &&
            cell.to.src.same_shape(composite.src) && cell.to.dst.same_shape(composite.dst) &&
            cell.h.rows() == composite.dst.deg1.gens && cell.h.cols() == composite.src.deg0.gens &&
            one_mor_equal(cell.from, composite) && is_zero_mor(cell.to);
  require_input(ok, std::string("check_relative_two_exact: ") + what);
  return TwoMor{composite, OneMor::zero(composite.src, composite.dst),
                composite.src.ring.reduce(cell.h)};
}

}  // namespace

ExactnessCertificate check_relative_two_exact(const OneMor& l, const TwoMor& alpha,
                                              const OneMor& f, const TwoMor& phi,
                                              const OneMor& g, const TwoMor& gamma,
                                              const OneMor& m) {
  require_input(l.dst.same_shape(f.src), "check_relative_two_exact: F does not start where L ends");
  require_input(f.dst.same_shape(g.src), "check_relative_two_exact: G does not start where F ends");
  require_input(g.dst.same_shape(m.src), "check_relative_two_exact: M does not start where G ends");
  TwoMor aw = trivialization(f, l, alpha, "alpha is not a trivialization of F∘L");
  TwoMor pw = trivialization(g, f, phi, "phi is not a trivialization of G∘F");
  TwoMor gw = trivialization(m, g, gamma, "gamma is not a trivialization of M∘G");

  CochainComplex window = CochainComplex::of(l.src.ring, {l.src, f.src, g.src, m.src, m.dst},
                                             {l, f, g, m}, {aw, pw, gw});
  ValidationReport rep = validate_complex(window);
  if (!rep.ok())
    throw input_error("check_relative_two_exact: " + named_violation(rep.violations.front()));

  ExactnessCertificate cert;
  cert.point = 2;
  CohomologyResult local = cohomology(window, 2);
  cert.evidence = local.pis;
  cert.verdict = cert.evidence.is_zero();
  cert.local = std::move(local);
  return cert;
}

ExactnessCertificate check_two_exact(const OneMor& f, const TwoMor& phi, const OneMor& g) {
  require_input(f.dst.same_shape(g.src), "check_two_exact: G does not start where F ends");
  const Ring& ring = f.src.ring;
  OneMor gf = compose(g, f);
  IMat h = ring.reduce(phi.h);
  bool ok = phi.from.src.same_shape(gf.src) && phi.from.dst.same_shape(gf.dst) &&
            phi.to.src.same_shape(gf.src) && phi.to.dst.same_shape(gf.dst) &&
            h.rows() == gf.dst.deg1.gens && h.cols() == gf.src.deg0.gens &&
            one_mor_equal(phi.from, gf) && is_zero_mor(phi.to) &&
            TwoMor::valid(phi.from, phi.to, h);
  require_input(ok, "check_two_exact: phi is not a trivialization of G∘F");

  RelKernelData kd = plain_kernel(g);
  TwoMor tc{gf, OneMor::zero(gf.src, gf.dst), h};
  OneMor cmp = factor_through_kernel(kd, f, tc).first;

  ExactnessCertificate cert;
  cert.point = 1;
  cert.comparison_full = is_full(cmp);
  cert.comparison_ess_surjective = is_ess_surjective(cmp);
  cert.verdict = cert.comparison_full && cert.comparison_ess_surjective;

  // Defect evidence: essential surjectivity fails by coker(pi0), fullness by
  // the part of the pair module P = {(u, b): cmp0(u) = ∂b} missed from
  // degree 1 — the same pair module the fullness test lifts into.
  const TwoMod& a = cmp.src;
  const TwoMod& k = cmp.dst;
  ModuleSum s = direct_sum(a.deg0, k.deg1);
  ModuleHom theta = ModuleHom::of(s.sum, k.deg0, hcat(cmp.f0, ring.reduce(IMat(-k.d))));
  KernelData pairs = kernel(theta);
  auto lift = preimage(pairs.incl, IMat(vcat(a.d, cmp.f1)));
  require_internal(lift.has_value(), "check_two_exact: chain square missed the pair kernel");
  CanonicalForm full_defect =
      cokernel(ModuleHom::of(a.deg1, pairs.ker.module, *lift)).coker.form;
  CanonicalForm ess_defect = cokernel(pi0_map(cmp)).coker.form;
  cert.evidence = PiPair{std::move(ess_defect), std::move(full_defect)};
  require_internal(cert.verdict == cert.evidence.is_zero(),
                   "check_two_exact: verdict and defect evidence disagree");
  cert.comparison = std::move(cmp);
  return cert;
}

}  // namespace h2a
