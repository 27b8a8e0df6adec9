#include "h2a/oracle.hpp"

#include <set>
#include <string>
#include <utility>

namespace h2a {

namespace {

long to_long(const Int& v, const char* what) {
  require_internal(v.fits_slong_p(), std::string(what) + " exceeds machine range");
  return v.get_si();
}

// Element-level facts all draw on a budget proportional to the capacity
// bound; verifications too large to finish exhaustively are refused rather
// than silently truncated.
struct WorkBudget {
  long left;
  void spend(long units = 1) {
    left -= units;
    if (left < 0) throw capacity_error("verification work exceeds the capacity bound");
  }
};

constexpr long work_per_cap = 64;

}  // namespace

EnumeratedModule enumerate_module(const FpModule& m, long cap) {
  if (m.ring.is_integers())
    throw capacity_error("element enumeration is only available over Z/n");
  require_input(cap >= 1, "capacity bound must be positive");
  CanonicalizedModule can = canonicalize(m);
  Int total = can.form.order().value();
  if (total > cap)
    throw capacity_error("module has " + total.get_str() + " elements, above the cap of " +
                         std::to_string(cap));
  std::vector<long> factors;
  for (const Int& d : can.form.torsion) factors.push_back(to_long(d, "invariant factor"));
  long count = to_long(total, "element count");
  return EnumeratedModule{m, std::move(can), std::move(factors), count};
}

IVec EnumeratedModule::element(long i) const {
  require_input(0 <= i && i < count, "element index out of range");
  IVec digits(static_cast<index_t>(factors.size()));
  for (std::size_t k = 0; k < factors.size(); ++k) {
    digits(static_cast<index_t>(k)) = Int(i % factors[k]);
    i /= factors[k];
  }
  return IVec(module.ring.reduce(IMat(can.from_can.mat * digits)));
}

long EnumeratedModule::index_of(const IMat& x) const {
  require_input(x.rows() == module.gens && x.cols() == 1,
                "element representative has the wrong shape");
  IMat z = can.to_can.mat * x;
  long idx = 0;
  long stride = 1;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    Int digit = mod_floor(z(static_cast<index_t>(k), 0), Int(factors[k]));
    idx += stride * to_long(digit, "digit");
    stride *= factors[k];
  }
  return idx;
}

long EnumeratedModule::add(long i, long j) const {
  long idx = 0;
  long stride = 1;
  for (long f : factors) {
    idx += stride * ((i % f + j % f) % f);
    stride *= f;
    i /= f;
    j /= f;
  }
  return idx;
}

long EnumeratedModule::neg(long i) const {
  long idx = 0;
  long stride = 1;
  for (long f : factors) {
    long d = i % f;
    idx += stride * (d == 0 ? 0 : f - d);
    stride *= f;
    i /= f;
  }
  return idx;
}

std::vector<long> EnumeratedTwoMod::homset(long x, long y) const {
  std::vector<long> out;
  for (long i = 0; i < deg1.count; ++i)
    if (deg0.add(x, d_table[i]) == y) out.push_back(i);
  return out;
}

EnumeratedTwoMod enumerate_two_mod(const TwoMod& a, long cap) {
  if (a.ring.is_integers())
    throw capacity_error("element enumeration is only available over Z/n");
  Int pairs = canonical_form(a.deg1).order().value() * canonical_form(a.deg0).order().value();
  if (pairs > cap)
    throw capacity_error("2-module has " + pairs.get_str() +
                         " element pairs, above the cap of " + std::to_string(cap));
  EnumeratedModule deg1 = enumerate_module(a.deg1, cap);
  EnumeratedModule deg0 = enumerate_module(a.deg0, cap);
  std::vector<long> d_table(deg1.count);
  for (long i = 0; i < deg1.count; ++i)
    d_table[i] = deg0.index_of(a.ring.reduce(IMat(a.d * deg1.element(i))));
  return EnumeratedTwoMod{a, std::move(deg1), std::move(deg0), std::move(d_table)};
}

OneMorSpace one_mor_space(const TwoMod& a, const TwoMod& b) {
  require_input(a.ring == b.ring, "morphism space between 2-modules over different rings");
  HomModule h1 = hom_module(a.deg1, b.deg1);
  HomModule h0 = hom_module(a.deg0, b.deg0);
  HomModule mixed = hom_module(a.deg1, b.deg0);
  ModuleSum hsum = direct_sum(h1.hom.module, h0.hom.module);
  ModuleHom post = hom_postcompose(h1, mixed, b.d_hom());  // f1 ↦ ∂_B∘f1
  ModuleHom pre = hom_precompose(h0, mixed, a.d_hom());    // f0 ↦ f0∘∂_A
  IMat defect = a.ring.reduce(IMat(post.mat * hsum.proj1.mat - pre.mat * hsum.proj2.mat));
  KernelData square = kernel(ModuleHom::of(hsum.sum, mixed.hom.module, std::move(defect)));
  return OneMorSpace{a, b, std::move(h1), std::move(h0), std::move(hsum), std::move(square)};
}

OneMor OneMorSpace::materialize(const IMat& elt) const {
  IMat v = a.ring.reduce(IMat(square.incl.mat * elt));
  ModuleHom f1 = h1.hom_from_element(IVec(hsum.proj1.mat * v));
  ModuleHom f0 = h0.hom_from_element(IVec(hsum.proj2.mat * v));
  return OneMor::of(a, b, f1.mat, f0.mat);
}

std::vector<OneMor> all_one_mors(const TwoMod& a, const TwoMod& b, long cap) {
  OneMorSpace sp = one_mor_space(a, b);
  EnumeratedModule elems = enumerate_module(sp.square.ker.module, cap);
  std::vector<OneMor> out;
  out.reserve(static_cast<std::size_t>(elems.count));
  for (long i = 0; i < elems.count; ++i) out.push_back(sp.materialize(elems.element(i)));
  return out;
}

std::vector<TwoMor> all_two_mors(const OneMor& f, const OneMor& g, long cap) {
  require_input(f.src.same_shape(g.src) && f.dst.same_shape(g.dst),
                "2-morphism enumeration requires parallel 1-morphisms");
  std::optional<TwoMor> base = TwoMor::find(f, g);
  if (!base) return {};
  const TwoMod& a = f.src;
  const TwoMod& b = f.dst;
  Ring ring = a.ring;
  // Homogeneous cells: well-defined h: A₀ -> B₁ with ∂h ≡ 0 and h∂ ≡ 0,
  // the kernel of Hom(A₀,B₁) -> Hom(A₀,B₀) ⊕ Hom(A₁,B₁).
  HomModule cells = hom_module(a.deg0, b.deg1);
  HomModule lower = hom_module(a.deg0, b.deg0);
  HomModule upper = hom_module(a.deg1, b.deg1);
  ModuleHom post = hom_postcompose(cells, lower, b.d_hom());
  ModuleHom pre = hom_precompose(cells, upper, a.d_hom());
  ModuleSum tsum = direct_sum(lower.hom.module, upper.hom.module);
  IMat defect = ring.reduce(IMat(tsum.inj1.mat * post.mat + tsum.inj2.mat * pre.mat));
  KernelData homog = kernel(ModuleHom::of(cells.hom.module, tsum.sum, std::move(defect)));
  EnumeratedModule elems = enumerate_module(homog.ker.module, cap);
  std::vector<TwoMor> out;
  out.reserve(static_cast<std::size_t>(elems.count));
  for (long i = 0; i < elems.count; ++i) {
    ModuleHom h = cells.hom_from_element(IVec(homog.incl.mat * elems.element(i)));
    out.push_back(TwoMor::of(f, g, ring.reduce(IMat(base->h + h.mat))));
  }
  return out;
}

std::optional<QuasiInverse> find_quasi_inverse(const OneMor& f, long cap) {
  for (const OneMor& g : all_one_mors(f.dst, f.src, cap)) {
    std::optional<TwoMor> unit = TwoMor::find(OneMor::identity(f.src), compose(g, f));
    if (!unit) continue;
    std::optional<TwoMor> counit = TwoMor::find(compose(f, g), OneMor::identity(f.dst));
    if (!counit) continue;
    return QuasiInverse{g, std::move(*unit), std::move(*counit)};
  }
  return std::nullopt;
}

VerifyReport verify_rel_kernel(const RelKernelData& data, long cap) {
  VerifyReport r;
  WorkBudget budget{work_per_cap * cap};
  const TwoMod& a = data.f.src;
  const TwoMod& b = data.f.dst;
  const TwoMod& c = data.g.dst;
  const Ring ring = a.ring;
  EnumeratedModule a0 = enumerate_module(a.deg0, cap);
  EnumeratedModule a1 = enumerate_module(a.deg1, cap);
  EnumeratedModule b1 = enumerate_module(b.deg1, cap);
  EnumeratedModule k0 = enumerate_module(data.ker.deg0, cap);
  LinearSolver zero_b0(b.deg0.relations, ring);
  LinearSolver zero_c1(c.deg1.relations, ring);

  // Element-level objects: pairs (x, m) where m kills F(x) and G applied to
  // m recovers the trivializing cell at x.
  std::set<std::pair<long, long>> model;
  for (long x = 0; x < a0.count; ++x) {
    IMat xe = a0.element(x);
    IMat fx = ring.reduce(IMat(data.f.f0 * xe));
    IMat phix = ring.reduce(IMat(data.phi.h * xe));
    for (long m = 0; m < b1.count; ++m) {
      budget.spend();
      IMat me = b1.element(m);
      if (zero_b0.solvable(ring.reduce(IMat(fx + b.d * me))) &&
          zero_c1.solvable(ring.reduce(IMat(data.g.f1 * me - phix))))
        model.insert({x, m});
    }
  }

  // The chain-level kernel must hit exactly those pairs, once each.
  std::set<std::pair<long, long>> chain;
  std::vector<std::pair<long, long>> pair_of(static_cast<std::size_t>(k0.count));
  for (long k = 0; k < k0.count; ++k) {
    budget.spend();
    IMat v = ring.reduce(IMat(data.incl.mat * k0.element(k)));
    long x = a0.index_of(ring.reduce(IMat(data.pair.proj1.mat * v)));
    long m = b1.index_of(ring.reduce(IMat(data.pair.proj2.mat * v)));
    pair_of[static_cast<std::size_t>(k)] = {x, m};
    if (!model.count({x, m})) r.fail("a kernel element lies outside the element-level object set");
    if (!chain.insert({x, m}).second) r.fail("two kernel elements represent the same pair");
    ++r.checks;
  }
  if (chain != model) r.fail("kernel objects do not biject with the element-level pairs");
  ++r.checks;

  // Morphism action: u sends (x, m) to (x + ∂u, m − f1(u)); the kernel's
  // boundary must realize exactly that on every (element, morphism) pair.
  for (long k = 0; k < k0.count && r.ok; ++k) {
    auto [x, m] = pair_of[static_cast<std::size_t>(k)];
    for (long u = 0; u < a1.count; ++u) {
      budget.spend();
      IMat ue = a1.element(u);
      long kq = k0.add(k, k0.index_of(ring.reduce(IMat(data.ker.d * ue))));
      long xq = a0.add(x, a0.index_of(ring.reduce(IMat(a.d * ue))));
      long mq = b1.index_of(ring.reduce(IMat(b1.element(m) - data.f.f1 * ue)));
      if (pair_of[static_cast<std::size_t>(kq)] != std::make_pair(xq, mq)) {
        r.fail("the kernel boundary disagrees with the element-level morphism action");
        break;
      }
      ++r.checks;
    }
  }

  // The comparison morphism reads off x, its trivializing cell reads off m.
  for (long k = 0; k < k0.count && r.ok; ++k) {
    budget.spend();
    IMat ke = k0.element(k);
    if (a0.index_of(ring.reduce(IMat(data.e.f0 * ke))) != pair_of[static_cast<std::size_t>(k)].first)
      r.fail("the comparison morphism does not project to the first component");
    if (b1.index_of(ring.reduce(IMat(data.eps.h * ke))) != pair_of[static_cast<std::size_t>(k)].second)
      r.fail("the trivializing cell does not project to the second component");
    ++r.checks;
  }

  // Cross-check the invariants against element counts.
  if (r.ok) {
    std::set<long> boundaries;
    long loops = 0;
    for (long u = 0; u < a1.count; ++u) {
      budget.spend();
      long img = k0.index_of(ring.reduce(IMat(data.ker.d * a1.element(u))));
      boundaries.insert(img);
      if (img == 0) ++loops;
    }
    PiPair p = pis(data.ker);
    if (Int(k0.count / static_cast<long>(boundaries.size())) != p.pi0.order().value())
      r.fail("isomorphism-class count disagrees with the kernel's pi0");
    if (Int(loops) != p.pi1.order().value())
      r.fail("automorphism count of 0 disagrees with the kernel's pi1");
    r.checks += 2;
  }
  return r;
}

VerifyReport verify_rel_cokernel(const RelCokernelData& data, long cap) {
  VerifyReport r;
  WorkBudget budget{work_per_cap * cap};
  const TwoMod& a = data.f.src;
  const TwoMod& b = data.f.dst;
  const TwoMod& c = data.g.dst;
  const Ring ring = c.ring;
  EnumeratedModule a0 = enumerate_module(a.deg0, cap);
  EnumeratedModule b1 = enumerate_module(b.deg1, cap);
  EnumeratedModule b0 = enumerate_module(b.deg0, cap);
  EnumeratedModule c1 = enumerate_module(c.deg1, cap);
  EnumeratedModule c0 = enumerate_module(c.deg0, cap);
  EnumeratedModule q1 = enumerate_module(data.coker.deg1, cap);

  // Every pair (y, c) names a morphism class; the named classes must exhaust
  // the chain-level morphism module.
  const long npairs = b0.count * c1.count;
  budget.spend(npairs);
  std::vector<long> cls(static_cast<std::size_t>(npairs));
  std::set<long> named;
  for (long y = 0; y < b0.count; ++y)
    for (long cc = 0; cc < c1.count; ++cc) {
      IMat v = ring.reduce(
          IMat(data.pair.inj1.mat * b0.element(y) + data.pair.inj2.mat * c1.element(cc)));
      long q = q1.index_of(v);
      cls[static_cast<std::size_t>(y * c1.count + cc)] = q;
      named.insert(q);
    }
  if (static_cast<long>(named.size()) != q1.count)
    r.fail("pairs do not exhaust the chain-level morphism classes");
  ++r.checks;

  // Two pairs are equivalent when they differ by (f0(x) + ∂m, g1(m) − phi(x));
  // equivalence must coincide with equality of chain-level classes.
  auto equivalent = [&](long p1, long p2) {
    IMat dy = ring.reduce(
        IMat(b0.element(p1 / c1.count) - b0.element(p2 / c1.count)));
    IMat dc = ring.reduce(
        IMat(c1.element(p1 % c1.count) - c1.element(p2 % c1.count)));
    for (long x = 0; x < a0.count; ++x) {
      IMat xe = a0.element(x);
      for (long m = 0; m < b1.count; ++m) {
        budget.spend();
        IMat me = b1.element(m);
        if (b0.index_of(ring.reduce(IMat(dy - data.f.f0 * xe - b.d * me))) == 0 &&
            c1.index_of(ring.reduce(IMat(dc - data.g.f1 * me + data.phi.h * xe))) == 0)
          return true;
      }
    }
    return false;
  };
  for (long p1 = 0; p1 < npairs && r.ok; ++p1)
    for (long p2 = p1; p2 < npairs && r.ok; ++p2) {
      bool same = cls[static_cast<std::size_t>(p1)] == cls[static_cast<std::size_t>(p2)];
      if (same != equivalent(p1, p2))
        r.fail(same ? "inequivalent pairs fall in the same chain-level class"
                    : "equivalent pairs fall in distinct chain-level classes");
      ++r.checks;
    }

  // The boundary of the class of (y, c) is ∂c − g0(y).
  for (long p = 0; p < npairs && r.ok; ++p) {
    budget.spend();
    long y = p / c1.count;
    long cc = p % c1.count;
    IMat via_class = ring.reduce(IMat(data.coker.d * q1.element(cls[static_cast<std::size_t>(p)])));
    IMat direct = ring.reduce(IMat(c.d * c1.element(cc) - data.g.f0 * b0.element(y)));
    if (c0.index_of(via_class) != c0.index_of(direct))
      r.fail("the class boundary disagrees with the element-level boundary");
    ++r.checks;
  }

  // Reachability of objects: translations available through pairs and through
  // the chain-level boundary must coincide (this pins down pi0).
  if (r.ok) {
    std::set<long> model_b;
    for (long p = 0; p < npairs; ++p) {
      budget.spend();
      long y = p / c1.count;
      long cc = p % c1.count;
      model_b.insert(c0.index_of(ring.reduce(IMat(c.d * c1.element(cc) - data.g.f0 * b0.element(y)))));
    }
    std::set<long> chain_b;
    long loops = 0;
    for (long q = 0; q < q1.count; ++q) {
      budget.spend();
      long img = c0.index_of(ring.reduce(IMat(data.coker.d * q1.element(q))));
      chain_b.insert(img);
      if (img == 0) ++loops;
    }
    if (model_b != chain_b) r.fail("reachable object translations disagree");
    ++r.checks;
    PiPair p = pis(data.coker);
    if (Int(c0.count / static_cast<long>(chain_b.size())) != p.pi0.order().value())
      r.fail("isomorphism-class count disagrees with the cokernel's pi0");
    if (Int(loops) != p.pi1.order().value())
      r.fail("automorphism count of 0 disagrees with the cokernel's pi1");
    r.checks += 2;
  }
  return r;
}

VerifyReport verify_biproduct(const TwoModSum& s, long cap) {
  VerifyReport r;
  WorkBudget budget{work_per_cap * cap};
  const TwoMod& a = s.inj1.src;
  const TwoMod& b = s.inj2.src;
  const Ring ring = s.sum.ring;
  EnumeratedTwoMod ea = enumerate_two_mod(a, cap);
  EnumeratedTwoMod eb = enumerate_two_mod(b, cap);
  EnumeratedTwoMod es = enumerate_two_mod(s.sum, cap);

  // Degreewise: projections decompose bijectively, injections reassemble, and
  // addition is componentwise.
  std::vector<std::pair<long, long>> comp0, comp1;
  for (int degree : {0, 1}) {
    const EnumeratedModule& esum = degree ? es.deg1 : es.deg0;
    const EnumeratedModule& eax = degree ? ea.deg1 : ea.deg0;
    const EnumeratedModule& ebx = degree ? eb.deg1 : eb.deg0;
    const IMat& pa = degree ? s.proj1.f1 : s.proj1.f0;
    const IMat& pb = degree ? s.proj2.f1 : s.proj2.f0;
    const IMat& ia = degree ? s.inj1.f1 : s.inj1.f0;
    const IMat& ib = degree ? s.inj2.f1 : s.inj2.f0;
    std::vector<std::pair<long, long>>& comp = degree ? comp1 : comp0;
    if (esum.count != eax.count * ebx.count)
      r.fail("biproduct size is not the product of the component sizes");
    std::set<std::pair<long, long>> seen;
    for (long i = 0; i < esum.count; ++i) {
      budget.spend();
      IVec v = esum.element(i);
      long xa = eax.index_of(ring.reduce(IMat(pa * v)));
      long xb = ebx.index_of(ring.reduce(IMat(pb * v)));
      comp.push_back({xa, xb});
      seen.insert({xa, xb});
      long back = esum.index_of(ring.reduce(IMat(ia * eax.element(xa) + ib * ebx.element(xb))));
      if (back != i) r.fail("injections do not reassemble the components");
      ++r.checks;
    }
    if (static_cast<long>(seen.size()) != esum.count)
      r.fail("projections are not jointly injective");
    ++r.checks;
    for (long i = 0; i < esum.count && r.ok; ++i)
      for (long j = 0; j < esum.count; ++j) {
        budget.spend();
        auto [ija, ijb] = comp[static_cast<std::size_t>(esum.add(i, j))];
        if (ija != eax.add(comp[static_cast<std::size_t>(i)].first, comp[static_cast<std::size_t>(j)].first) ||
            ijb != ebx.add(comp[static_cast<std::size_t>(i)].second, comp[static_cast<std::size_t>(j)].second)) {
          r.fail("addition is not componentwise");
          break;
        }
        ++r.checks;
      }
  }

  // Boundaries act componentwise on every morphism.
  for (long u = 0; u < es.deg1.count && r.ok; ++u) {
    budget.spend();
    auto [ua, ub] = comp1[static_cast<std::size_t>(u)];
    auto [ta, tb] = comp0[static_cast<std::size_t>(es.d_table[u])];
    if (ta != ea.d_table[ua] || tb != eb.d_table[ub])
      r.fail("the boundary does not act componentwise");
    ++r.checks;
  }

  // Hom-sets decompose: a morphism (va, vb) out of any object lands on the
  // componentwise target.
  for (long xs = 0; xs < es.deg0.count && r.ok; ++xs) {
    auto [xa, xb] = comp0[static_cast<std::size_t>(xs)];
    for (long va = 0; va < ea.deg1.count && r.ok; ++va)
      for (long vb = 0; vb < eb.deg1.count; ++vb) {
        budget.spend();
        long u = es.deg1.index_of(ring.reduce(
            IMat(s.inj1.f1 * ea.deg1.element(va) + s.inj2.f1 * eb.deg1.element(vb))));
        auto [ta, tb] = comp0[static_cast<std::size_t>(es.deg0.add(xs, es.d_table[u]))];
        if (ta != ea.deg0.add(xa, ea.d_table[va]) || tb != eb.deg0.add(xb, eb.d_table[vb])) {
          r.fail("hom-sets do not decompose componentwise");
          break;
        }
        ++r.checks;
      }
  }
  return r;
}

VerifyReport verify_cohomology_description(const CochainComplex& c, const CohomologyResult& res,
                                           long cap) {
  VerifyReport r;
  if (res.n < 0 || res.n > c.top()) {
    r.fail("degree lies outside the complex");
    return r;
  }
  long n = res.n;
  auto cells_agree = [&](const IMat& x, const IMat& y, const FpModule& src, const FpModule& dst) {
    return hom_equal(ModuleHom::of(src, dst, x), ModuleHom::of(src, dst, y));
  };

  // The kernel stage is the relative kernel of the complex's own data at n.
  if (!one_mor_equal(res.kernel.f, c.diff(n)))
    r.fail("kernel stage input differs from the degree-n differential");
  if (!one_mor_equal(res.kernel.g, c.diff(n + 1)))
    r.fail("kernel stage continuation differs from the next differential");
  if (!cells_agree(res.kernel.phi.h, c.alpha(n).h, c.entry(n).deg0, c.entry(n + 2).deg1))
    r.fail("kernel stage trivialization differs from the complex's cell at n");
  r.checks += 3;

  // The previous differential factors: e∘L' = L_{n-1} with zero comparison
  // cell, and the kernel's trivialization transports back to alpha_{n-1}.
  OneMor through = compose(res.kernel.e, res.lifted);
  if (!one_mor_equal(through, c.diff(n - 1)))
    r.fail("the lifted map does not factor the previous differential");
  if (!one_mor_equal(res.lifted_iso.from, through) ||
      !one_mor_equal(res.lifted_iso.to, c.diff(n - 1)) ||
      !cells_agree(res.lifted_iso.h, imat_zero(res.lifted_iso.h.rows(), res.lifted_iso.h.cols()),
                   c.entry(n - 1).deg0, c.entry(n).deg1))
    r.fail("the factorization witness is not the zero comparison cell");
  if (!cells_agree(IMat(res.kernel.eps.h * res.lifted.f0), c.alpha(n - 1).h,
                   c.entry(n - 1).deg0, c.entry(n + 1).deg1))
    r.fail("the kernel trivialization does not transport to the cell at n-1");
  r.checks += 3;

  // The cokernel stage adjoins morphisms along the factored map, trivialized
  // by the cell at n-2 read in the kernel presentation.
  if (!one_mor_equal(res.cokernel.f, c.diff(n - 2)))
    r.fail("cokernel stage input differs from the differential at n-2");
  if (!one_mor_equal(res.cokernel.g, res.lifted))
    r.fail("cokernel stage is not taken along the lifted map");
  if (!cells_agree(res.cokernel.phi.h, c.alpha(n - 2).h, c.entry(n - 2).deg0,
                   res.kernel.ker.deg1))
    r.fail("cokernel stage trivialization differs from the complex's cell at n-2");
  if (!res.H.same_shape(res.cokernel.coker)) r.fail("the result is not the stage cokernel");
  if (!(res.pis == pis(res.H))) r.fail("recorded invariants differ from the result's");
  r.checks += 5;

  // Element-level replay of both stages.
  VerifyReport ker = verify_rel_kernel(res.kernel, cap);
  r.checks += ker.checks;
  if (!ker.ok) r.fail("kernel stage: " + ker.mismatch);
  VerifyReport coker = verify_rel_cokernel(res.cokernel, cap);
  r.checks += coker.checks;
  if (!coker.ok) r.fail("cokernel stage: " + coker.mismatch);
  return r;
}

DirectExactness direct_relative_two_exact(const OneMor& l, const TwoMor& alpha, const OneMor& f,
                                          const TwoMor& phi, const OneMor& g, const TwoMor& gamma,
                                          const OneMor& m, long cap) {
  require_input(g.dst.same_shape(m.src), "M does not start where G ends");
  WorkBudget budget{work_per_cap * cap};
  const Ring ring = f.src.ring;

  RelCokernelData q = relative_cokernel(l, f, alpha);
  OneMor gp = factor_through_cokernel(q, g, phi).first;
  TwoMor gbar{compose(m, gp), OneMor::zero(q.coker, m.dst), ring.reduce(gamma.h)};
  require_input(TwoMor::valid(gbar.from, gbar.to, gbar.h),
                "gamma does not descend to the relative cokernel");

  EnumeratedTwoMod eq = enumerate_two_mod(q.coker, cap);
  EnumeratedModule c1 = enumerate_module(g.dst.deg1, cap);
  EnumeratedModule c0 = enumerate_module(g.dst.deg0, cap);
  EnumeratedModule d1 = enumerate_module(m.dst.deg1, cap);

  DirectExactness r;
  r.faithful = true;
  r.compatible_full = true;

  // Classes of Q and where G' sends them; a nonzero loop class over the zero
  // morphism refutes faithfulness.
  std::set<std::pair<long, long>> reachable;  // (boundary in Q0, image in C1)
  for (long u = 0; u < eq.deg1.count; ++u) {
    budget.spend();
    long du = eq.d_table[u];
    long img = c1.index_of(IMat(gp.f1 * eq.deg1.element(u)));
    reachable.insert({du, img});
    if (du == 0 && img == 0 && u != 0) r.faithful = false;
    ++r.checks;
  }

  // Fullness onto compatible morphisms; by linearity only the difference
  // delta = q' - q matters, and h_gamma(q') - h_gamma(q) = h_gamma(delta).
  for (long delta = 0; delta < eq.deg0.count; ++delta) {
    IVec dv = eq.deg0.element(delta);
    long target0 = c0.index_of(IMat(gp.f0 * dv));
    long hshift = d1.index_of(IMat(gbar.h * dv));
    for (long c = 0; c < c1.count; ++c) {
      budget.spend();
      IVec cv = c1.element(c);
      if (c0.index_of(IMat(g.dst.d * cv)) != target0) continue;
      if (d1.add(d1.index_of(IMat(m.f1 * cv)), hshift) != 0) continue;
      ++r.checks;
      if (!reachable.count({delta, c})) r.compatible_full = false;
    }
  }

  r.verdict = r.faithful && r.compatible_full;
  return r;
}

}  // namespace h2a
