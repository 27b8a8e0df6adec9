#include "h2a/cochain.hpp"

#include <utility>

#include "h2a/error.hpp"
#include "h2a/snf.hpp"

namespace h2a {

namespace {

// Every column of m is zero in dst (i.e. lies in the span of its relations).
bool cols_vanish(const FpModule& dst, const IMat& m) {
  LinearSolver solver(dst.relations, dst.ring);
  for (index_t j = 0; j < m.cols(); ++j)
    if (!solver.solvable(IMat(m.col(j)))) return false;
  return true;
}

bool dims_match(const IMat& m, index_t rows, index_t cols) {
  return m.rows() == rows && m.cols() == cols;
}

// The two components form a well-defined chain map a -> b.
bool is_chain_map(const TwoMod& a, const TwoMod& b, const IMat& f1, const IMat& f0) {
  return cols_vanish(b.deg1, IMat(f1 * a.deg1.relations)) &&
         cols_vanish(b.deg0, IMat(f0 * a.deg0.relations)) &&
         cols_vanish(b.deg0, IMat(f0 * a.d - b.d * f1));
}

TwoMor zero_cell(OneMor from, OneMor to) {
  IMat h = imat_zero(from.dst.deg1.gens, from.src.deg0.gens);
  return TwoMor::of(std::move(from), std::move(to), std::move(h));
}

void check_complex_shape(const CochainComplex& c) {
  require_input(!c.entries.empty(), "cochain complex needs at least one entry");
  long n = c.top();
  require_input(static_cast<long>(c.diffs.size()) == n, "cochain complex: wrong number of differentials");
  require_input(static_cast<long>(c.alphas.size()) == std::max(0L, n - 1),
                "cochain complex: wrong number of cells");
  for (auto& a : c.entries) require_input(a.ring == c.ring, "cochain complex: ring mismatch");
  for (long k = 0; k < n; ++k) {
    const OneMor& d = c.diffs[k];
    require_input(d.src.same_shape(c.entries[k]) && d.dst.same_shape(c.entries[k + 1]),
                  "cochain complex: differential endpoints do not match the entries");
    require_input(dims_match(d.f1, d.dst.deg1.gens, d.src.deg1.gens) &&
                      dims_match(d.f0, d.dst.deg0.gens, d.src.deg0.gens),
                  "cochain complex: differential component shape mismatch");
  }
  for (long k = 0; k + 1 < n; ++k) {
    const TwoMor& a = c.alphas[k];
    require_input(a.from.src.same_shape(c.entries[k]) && a.from.dst.same_shape(c.entries[k + 2]),
                  "cochain complex: cell endpoints do not match the entries");
    require_input(dims_match(a.h, c.entries[k + 2].deg1.gens, c.entries[k].deg0.gens),
                  "cochain complex: cell shape mismatch");
    require_input(one_mor_equal(a.from, compose(c.diffs[k + 1], c.diffs[k])),
                  "cochain complex: cell source is not the composite differential");
    require_input(is_zero_mor(a.to), "cochain complex: cell target is not zero");
  }
}

void check_mor_shape(const ComplexMor& f) {
  check_complex_shape(f.source);
  check_complex_shape(f.target);
  require_input(f.source.ring == f.target.ring, "complex morphism: ring mismatch");
  long n = f.top();
  require_input(f.target.top() == n, "complex morphism: source and target lengths differ");
  require_input(static_cast<long>(f.maps.size()) == n + 1, "complex morphism: wrong number of maps");
  require_input(static_cast<long>(f.lambdas.size()) == n, "complex morphism: wrong number of cells");
  for (long k = 0; k <= n; ++k) {
    const OneMor& m = f.maps[k];
    require_input(m.src.same_shape(f.source.entries[k]) && m.dst.same_shape(f.target.entries[k]),
                  "complex morphism: map endpoints do not match the complexes");
    require_input(dims_match(m.f1, m.dst.deg1.gens, m.src.deg1.gens) &&
                      dims_match(m.f0, m.dst.deg0.gens, m.src.deg0.gens),
                  "complex morphism: map component shape mismatch");
  }
  for (long k = 0; k < n; ++k) {
    const TwoMor& l = f.lambdas[k];
    require_input(dims_match(l.h, f.target.entries[k + 1].deg1.gens, f.source.entries[k].deg0.gens),
                  "complex morphism: cell shape mismatch");
    require_input(one_mor_equal(l.from, compose(f.maps[k + 1], f.source.diffs[k])),
                  "complex morphism: cell source is not map∘differential");
    require_input(one_mor_equal(l.to, compose(f.target.diffs[k], f.maps[k])),
                  "complex morphism: cell target is not differential∘map");
  }
}

void check_homotopy_shape(const CochainHomotopy& h) {
  check_mor_shape(h.from);
  check_mor_shape(h.to);
  require_input(h.from.source.same_shape(h.to.source) && h.from.target.same_shape(h.to.target),
                "homotopy: the two morphisms are not parallel");
  long n = h.top();
  require_input(static_cast<long>(h.hmaps.size()) == n, "homotopy: wrong number of diagonal maps");
  require_input(static_cast<long>(h.taus.size()) == n + 1, "homotopy: wrong number of cells");
  for (long k = 0; k < n; ++k) {
    const OneMor& m = h.hmaps[k];
    require_input(
        m.src.same_shape(h.from.source.entries[k + 1]) && m.dst.same_shape(h.from.target.entries[k]),
        "homotopy: diagonal map endpoints do not match the complexes");
    require_input(dims_match(m.f1, m.dst.deg1.gens, m.src.deg1.gens) &&
                      dims_match(m.f0, m.dst.deg0.gens, m.src.deg0.gens),
                  "homotopy: diagonal map component shape mismatch");
  }
  for (long k = 0; k <= n; ++k) {
    const TwoMor& t = h.taus[k];
    require_input(
        dims_match(t.h, h.from.target.entries[k].deg1.gens, h.from.source.entries[k].deg0.gens),
        "homotopy: cell shape mismatch");
    require_input(one_mor_equal(t.from, h.from.maps[k]), "homotopy: cell source is not the first map");
    require_input(one_mor_equal(t.to, homotopy_flank(h, k)),
                  "homotopy: cell target is not the displaced second map");
  }
}

}  // namespace

CochainComplex CochainComplex::of(Ring ring, std::vector<TwoMod> entries,
                                  std::vector<OneMor> diffs, std::vector<TwoMor> alphas) {
  CochainComplex c{std::move(ring), std::move(entries), std::move(diffs), std::move(alphas)};
  check_complex_shape(c);
  return c;
}

CochainComplex CochainComplex::discrete(const std::vector<ModuleHom>& maps) {
  require_input(!maps.empty(), "discrete complex needs at least one map");
  Ring ring = maps[0].src.ring;
  std::vector<TwoMod> entries;
  entries.push_back(TwoMod::discrete(maps[0].src));
  for (size_t i = 0; i < maps.size(); ++i) {
    require_input(maps[i].src.same_shape(i ? maps[i - 1].dst : maps[0].src),
                  "discrete complex: consecutive maps do not compose");
    entries.push_back(TwoMod::discrete(maps[i].dst));
  }
  std::vector<OneMor> diffs;
  for (size_t i = 0; i < maps.size(); ++i)
    diffs.push_back(OneMor::of(entries[i], entries[i + 1], IMat(0, 0), maps[i].mat));
  // Build the cells directly: their validity is exactly d² = 0, which is
  // validate_complex's verdict to give, not a construction-time requirement.
  std::vector<TwoMor> alphas;
  for (size_t i = 0; i + 1 < maps.size(); ++i)
    alphas.push_back(TwoMor{compose(diffs[i + 1], diffs[i]),
                            OneMor::zero(entries[i], entries[i + 2]),
                            imat_zero(0, entries[i].deg0.gens)});
  CochainComplex c{std::move(ring), std::move(entries), std::move(diffs), std::move(alphas)};
  check_complex_shape(c);
  return c;
}

TwoMod CochainComplex::entry(long n) const {
  if (n >= 0 && n <= top()) return entries[n];
  return TwoMod::zero(ring);
}

OneMor CochainComplex::diff(long n) const {
  if (n >= 0 && n < top()) return diffs[n];
  return OneMor::zero(entry(n), entry(n + 1));
}

TwoMor CochainComplex::alpha(long n) const {
  if (n >= 0 && n + 1 < top()) return alphas[n];
  return zero_cell(compose(diff(n + 1), diff(n)), OneMor::zero(entry(n), entry(n + 2)));
}

bool CochainComplex::same_shape(const CochainComplex& o) const {
  if (ring != o.ring || entries.size() != o.entries.size()) return false;
  for (size_t i = 0; i < entries.size(); ++i)
    if (!entries[i].same_shape(o.entries[i])) return false;
  for (size_t i = 0; i < diffs.size(); ++i)
    if (!imat_equal(diffs[i].f1, o.diffs[i].f1) || !imat_equal(diffs[i].f0, o.diffs[i].f0))
      return false;
  for (size_t i = 0; i < alphas.size(); ++i)
    if (!imat_equal(alphas[i].h, o.alphas[i].h)) return false;
  return true;
}

ComplexMor ComplexMor::of(CochainComplex source, CochainComplex target, std::vector<OneMor> maps,
                          std::vector<TwoMor> lambdas) {
  ComplexMor f{std::move(source), std::move(target), std::move(maps), std::move(lambdas)};
  check_mor_shape(f);
  return f;
}

ComplexMor ComplexMor::identity(const CochainComplex& c) {
  std::vector<OneMor> maps;
  std::vector<TwoMor> lambdas;
  for (long n = 0; n <= c.top(); ++n) maps.push_back(OneMor::identity(c.entries[n]));
  for (long n = 0; n < c.top(); ++n)
    lambdas.push_back(zero_cell(compose(maps[n + 1], c.diffs[n]), compose(c.diffs[n], maps[n])));
  return ComplexMor{c, c, std::move(maps), std::move(lambdas)};
}

ComplexMor ComplexMor::zero(const CochainComplex& source, const CochainComplex& target) {
  require_input(source.top() == target.top() && source.ring == target.ring,
                "zero complex morphism: incompatible complexes");
  std::vector<OneMor> maps;
  std::vector<TwoMor> lambdas;
  for (long n = 0; n <= source.top(); ++n)
    maps.push_back(OneMor::zero(source.entries[n], target.entries[n]));
  for (long n = 0; n < source.top(); ++n)
    lambdas.push_back(
        zero_cell(compose(maps[n + 1], source.diffs[n]), compose(target.diffs[n], maps[n])));
  return ComplexMor{source, target, std::move(maps), std::move(lambdas)};
}

OneMor ComplexMor::map(long n) const {
  if (n >= 0 && n <= top()) return maps[n];
  return OneMor::zero(source.entry(n), target.entry(n));
}

TwoMor ComplexMor::lambda(long n) const {
  if (n >= 0 && n < top()) return lambdas[n];
  return zero_cell(compose(map(n + 1), source.diff(n)), compose(target.diff(n), map(n)));
}

CochainHomotopy CochainHomotopy::of(ComplexMor from, ComplexMor to, std::vector<OneMor> hmaps,
                                    std::vector<TwoMor> taus) {
  CochainHomotopy h{std::move(from), std::move(to), std::move(hmaps), std::move(taus)};
  check_homotopy_shape(h);
  return h;
}

OneMor CochainHomotopy::hmap(long n) const {
  if (n >= 0 && n < top()) return hmaps[n];
  return OneMor::zero(from.source.entry(n + 1), from.target.entry(n));
}

TwoMor CochainHomotopy::tau(long n) const {
  if (n >= 0 && n <= top()) return taus[n];
  return zero_cell(from.map(n), homotopy_flank(*this, n));
}

OneMor homotopy_flank(const CochainHomotopy& h, long n) {
  OneMor down = compose(h.from.target.diff(n - 1), h.hmap(n - 1));
  OneMor across = compose(h.hmap(n), h.from.source.diff(n));
  return mor_add(mor_add(down, across), h.to.map(n));
}

ValidationReport validate_complex(const CochainComplex& c) {
  check_complex_shape(c);
  ValidationReport report;
  long n = c.top();
  for (long k = 0; k < n; ++k)
    if (!is_chain_map(c.entries[k], c.entries[k + 1], c.diffs[k].f1, c.diffs[k].f0))
      report.violations.push_back("diff[" + std::to_string(k) + "] is not a chain map");
  for (long k = 0; k + 1 < n; ++k)
    if (!TwoMor::valid(compose(c.diffs[k + 1], c.diffs[k]),
                       OneMor::zero(c.entries[k], c.entries[k + 2]), c.alphas[k].h))
      report.violations.push_back("alpha[" + std::to_string(k) + "] is not a 2-morphism");
  for (long k = 0; k + 2 < n; ++k) {
    IMat lhs = c.diffs[k + 2].f1 * c.alphas[k].h;
    IMat rhs = c.alphas[k + 1].h * c.diffs[k].f0;
    if (!cols_vanish(c.entries[k + 3].deg1, IMat(lhs - rhs)))
      report.violations.push_back("cell coherence fails at " + std::to_string(k));
  }
  return report;
}

ValidationReport validate_complex_mor(const ComplexMor& f) {
  check_mor_shape(f);
  ValidationReport report;
  long n = f.top();
  for (long k = 0; k <= n; ++k)
    if (!is_chain_map(f.source.entries[k], f.target.entries[k], f.maps[k].f1, f.maps[k].f0))
      report.violations.push_back("map[" + std::to_string(k) + "] is not a chain map");
  for (long k = 0; k < n; ++k)
    if (!TwoMor::valid(compose(f.map(k + 1), f.source.diff(k)),
                       compose(f.target.diff(k), f.map(k)), f.lambdas[k].h))
      report.violations.push_back("lambda[" + std::to_string(k) + "] is not a 2-morphism");
  for (long k = 0; k + 1 < n; ++k) {
    IMat lhs = f.lambda(k + 1).h * f.source.diff(k).f0 + f.target.diff(k + 1).f1 * f.lambda(k).h +
               f.target.alpha(k).h * f.map(k).f0;
    IMat rhs = f.map(k + 2).f1 * f.source.alpha(k).h;
    if (!cols_vanish(f.target.entries[k + 2].deg1, IMat(lhs - rhs)))
      report.violations.push_back("square coherence fails at " + std::to_string(k));
  }
  return report;
}

ValidationReport check_homotopy(const CochainHomotopy& h) {
  check_homotopy_shape(h);
  ValidationReport report;
  long n = h.top();
  const CochainComplex& a = h.from.source;
  const CochainComplex& b = h.from.target;
  for (long k = 0; k < n; ++k)
    if (!is_chain_map(a.entries[k + 1], b.entries[k], h.hmaps[k].f1, h.hmaps[k].f0))
      report.violations.push_back("hmap[" + std::to_string(k) + "] is not a chain map");
  for (long k = 0; k <= n; ++k)
    if (!TwoMor::valid(h.from.maps[k], homotopy_flank(h, k), h.taus[k].h))
      report.violations.push_back("tau[" + std::to_string(k) + "] is not a 2-morphism");
  for (long k = 0; k < n; ++k) {
    IMat lhs = h.from.lambda(k).h + b.diff(k).f1 * h.tau(k).h + b.alpha(k - 1).h * h.hmap(k - 1).f0;
    IMat rhs = h.tau(k + 1).h * a.diff(k).f0 + h.hmap(k + 1).f1 * a.alpha(k).h + h.to.lambda(k).h;
    if (!cols_vanish(b.entries[k + 1].deg1, IMat(lhs - rhs)))
      report.violations.push_back("homotopy coherence fails at " + std::to_string(k));
  }
  return report;
}

ComplexMor compose_complex_mor(const ComplexMor& first, const ComplexMor& second) {
  check_mor_shape(first);
  check_mor_shape(second);
  require_input(first.target.same_shape(second.source),
                "compose_complex_mor: inner complexes do not match");
  Ring ring = first.source.ring;
  std::vector<OneMor> maps;
  std::vector<TwoMor> lambdas;
  for (long n = 0; n <= first.top(); ++n) maps.push_back(compose(second.maps[n], first.maps[n]));
  for (long n = 0; n < first.top(); ++n) {
    IMat h = ring.reduce(
        IMat(second.lambda(n).h * first.map(n).f0 + second.map(n + 1).f1 * first.lambda(n).h));
    lambdas.push_back(TwoMor::of(compose(maps[n + 1], first.source.diffs[n]),
                                 compose(second.target.diffs[n], maps[n]), std::move(h)));
  }
  return ComplexMor{first.source, second.target, std::move(maps), std::move(lambdas)};
}

CochainComplex pad_left(const CochainComplex& c, long count) {
  require_input(count >= 0, "pad_left: negative count");
  TwoMod zero = TwoMod::zero(c.ring);
  std::vector<TwoMod> entries(count, zero);
  entries.insert(entries.end(), c.entries.begin(), c.entries.end());
  std::vector<OneMor> diffs;
  for (long i = 0; i + 1 < count; ++i) diffs.push_back(OneMor::zero(zero, zero));
  if (count >= 1) diffs.push_back(OneMor::zero(zero, c.entries[0]));
  diffs.insert(diffs.end(), c.diffs.begin(), c.diffs.end());
  std::vector<TwoMor> alphas;
  for (long i = 0; i + 2 < static_cast<long>(entries.size()); ++i) {
    if (i < count)
      alphas.push_back(zero_cell(compose(diffs[i + 1], diffs[i]),
                                 OneMor::zero(entries[i], entries[i + 2])));
    else
      alphas.push_back(c.alphas[i - count]);
  }
  return CochainComplex{c.ring, std::move(entries), std::move(diffs), std::move(alphas)};
}

}  // namespace h2a
